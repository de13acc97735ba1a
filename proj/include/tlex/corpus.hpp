#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tlex/lexicon.hpp"

namespace tlex {

struct PostRecord {
    std::string user_id;
    long long time_seconds = 0;  // UTC epoch seconds; day resolution is what downstream consumes
    std::string text;
    std::optional<int> label;

    long long day() const { return time_seconds >= 0 ? time_seconds / 86400 : (time_seconds - 86399) / 86400; }
};

struct UserArchive {
    std::string user_id;
    std::optional<int> label;  // 0 completed suicide, 1 high risk, 2 low risk
    std::vector<PostRecord> posts;  // ascending by timestamp

    int span_days() const {
        if (posts.empty()) return 0;
        return static_cast<int>(posts.back().day() - posts.front().day()) + 1;
    }
};

using ArchiveMap = std::map<std::string, UserArchive>;  // ordered: canonical user order

struct IngestError {
    size_t record_index = 0;
    std::string reason;
};

struct IngestResult {
    ArchiveMap archives;
    std::vector<IngestError> errors;
};

// Timestamps: ISO-8601 date or date-time, optional trailing 'Z'.
long long parse_timestamp(std::string_view iso);
std::string format_timestamp(long long epoch_seconds);
long long parse_date(std::string_view iso);  // -> days since epoch

// Groups records by user, sorts posts by timestamp (stable), validates
// per record. Throws only when the stream had records but none were valid.
IngestResult ingest_posts(const std::vector<PostRecord>& records);

// JSON Lines: one object per line, keys user_id, timestamp, text, optional label.
IngestResult ingest_jsonl(const std::string& path);
void write_jsonl(const ArchiveMap& archives, const std::string& path);

ArchiveMap filter_users(const ArchiveMap& archives, int min_posts = 20,
                        int span_min = 50, int span_max = 1800);

// ---- synthetic cohorts ----

struct GroupSignal {
    double base = 0.0;       // events per word
    double amplitude = 0.0;  // events per word
    double phase = 0.0;      // radians
};

struct PlantedFeature {
    std::string feature_id;
    double period_days = 30.0;
    std::map<std::string, GroupSignal> groups;  // keys "0","1","2"
    // background users draw one component per user; key "null" means a flat
    // signal at the mean of the group bases
    std::vector<std::pair<std::string, double>> background_mixture;
    double phase_jitter_sd = 0.0;
    double rate_jitter_sd = 0.0;  // lognormal sigma on base and amplitude
};

struct ExposureModel {
    double mean_words_per_day = 150.0;
    double active_prob = 1.0;            // probability the user posts at all on a day
    double user_rate_jitter_sd = 0.0;    // lognormal sigma on the per-user word mean
};

struct CohortSpec {
    std::map<int, int> n_labeled;  // label -> user count
    int n_background = 0;
    int span_days = 120;
    std::string start_date = "2019-01-01";
    std::string mode = "series";  // "series" emits DailySeriesSet, "posts" emits text
    ExposureModel exposure;
    double default_base_rate = 0.01;  // rate for features without a planted signal
    std::vector<PlantedFeature> features;
    uint64_t seed = 0;

    void validate(const FeatureSchema& schema) const;
    static CohortSpec load(const std::string& path);
};

// Pure function of (spec, seed): same inputs give identical cohorts.
ArchiveMap synthesize_cohort_posts(const CohortSpec& spec, const FeatureSchema& schema,
                                   const CategoryDictionary& dict);
std::map<std::string, DailySeriesSet> synthesize_cohort_series(const CohortSpec& spec,
                                                               const FeatureSchema& schema);

}  // namespace tlex
