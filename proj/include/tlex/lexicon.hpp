#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tlex/common.hpp"

namespace tlex {

struct UserArchive;  // corpus.hpp

enum class FeatureKind { Category, Punctuation, Structural };
enum class Aggregation { Sum, Ratio };

struct FeatureDef {
    std::string id;
    FeatureKind kind = FeatureKind::Category;
    Aggregation aggregation = Aggregation::Sum;
    std::string chars;  // punctuation class members (UTF-8), empty otherwise
};

// Ordered feature list; the order fixes matrix row indices for every
// downstream artifact.
struct FeatureSchema {
    std::vector<FeatureDef> features;

    int index_of(std::string_view id) const;
    size_t size() const { return features.size(); }

    // Loads the schema file and enforces the shipped shape:
    // 102 features = 80 category + 11 punctuation + 11 structural.
    static FeatureSchema load(const std::string& path);

    void validate_full() const;
};

// Term lookup plus the punctuation character classes collected from the
// schema. Terms map to one or more category features (LIWC-style
// hierarchies overlap).
struct CategoryDictionary {
    std::unordered_map<std::string, std::vector<int>> terms;  // term -> feature indices
    std::unordered_map<uint32_t, int> punct_classes;          // codepoint -> feature index
    size_t max_term_codepoints = 1;

    // TSV, one line per term: term TAB comma-separated category ids.
    static CategoryDictionary load(const std::string& path, const FeatureSchema& schema);
    static CategoryDictionary from_schema(const FeatureSchema& schema);  // punctuation only

    void add_term(const std::string& term, const std::vector<int>& feature_indices);
};

enum class TokenClass { DictionaryTerm, LatinWord, Url, Number, Punctuation, Other };

struct Token {
    TokenClass cls = TokenClass::Other;
    std::string text;
    std::vector<int> categories;  // DictionaryTerm: schema feature indices
    int punct_feature = -1;       // Punctuation: schema feature index, -1 unclassed
};

// Precedence: URLs, latin runs, digit runs, greedy longest dictionary
// match, single-codepoint fallback. Whitespace separates and is dropped.
std::vector<Token> tokenize(std::string_view text, const CategoryDictionary& dict);

struct DailySeriesSet {
    std::string user_id;
    std::optional<int> label;
    long long start_day = 0;  // days since epoch of the first post
    int n_days = 0;
    std::vector<double> values;    // n_features x n_days, row-major
    std::vector<double> exposure;  // words posted per day, the Y(t) series

    double& at(size_t feature, size_t day) { return values[feature * n_days + day]; }
    double at(size_t feature, size_t day) const { return values[feature * n_days + day]; }
};

DailySeriesSet extract_daily(const UserArchive& archive, const FeatureSchema& schema,
                             const CategoryDictionary& dict);

// utf-8 iteration, shared with the corpus synthesizer
uint32_t decode_utf8(std::string_view s, size_t& pos);
std::string encode_utf8(uint32_t cp);
bool is_sentence_terminator(uint32_t cp);

}  // namespace tlex
