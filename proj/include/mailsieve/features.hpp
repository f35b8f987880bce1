#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mailsieve/corpus.hpp"
#include "mailsieve/exec.hpp"
#include "mailsieve/lexicon.hpp"

namespace mailsieve {

// Binary presence vector over a lexicon, ordered keywords, then suspicious
// indicators, then non-suspicious indicators.
struct FeatureVector {
    std::vector<std::uint8_t> bits;

    bool operator==(const FeatureVector&) const = default;
};

// Row-major binary matrix with one row per email and an aligned label vector.
struct FeatureMatrix {
    std::vector<std::string> attribute_names;  // unique, [A-Za-z0-9_]+
    std::vector<std::uint8_t> cells;           // n_rows * n_cols
    std::vector<Label> labels;

    std::size_t n_rows() const { return labels.size(); }
    std::size_t n_cols() const { return attribute_names.size(); }
    std::uint8_t at(std::size_t row, std::size_t col) const {
        return cells[row * n_cols() + col];
    }
    std::span<const std::uint8_t> row(std::size_t r) const {
        return {cells.data() + r * n_cols(), n_cols()};
    }

    bool operator==(const FeatureMatrix&) const = default;
};

// Attribute names derived from a lexicon: kw_<term>, si_<term>, ni_<term>.
std::vector<std::string> attribute_names(const Lexicon& lex);

// Presence bits over tokenize(subject + " " + body). Multiword terms match as
// consecutive token runs; repeated occurrences do not change the vector.
FeatureVector extract_features(const Email& email, const Lexicon& lex);

// Yes iff at least one keyword bit and at least one suspicious-indicator bit
// are set. Keywords alone, or keywords with only neutralizing indicators,
// stay No.
Label rule_label(const FeatureVector& fv, const Lexicon& lex);

// One row per corpus email, labels copied, columns in lexicon order.
FeatureMatrix build_matrix(const LabeledCorpus& corpus, const Lexicon& lex,
                           ExecPolicy policy = ExecPolicy::Serial);

// Column projection. Indices must be strictly increasing and in range.
FeatureMatrix restrict_columns(const FeatureMatrix& m, std::span<const std::size_t> indices);

// FNV-1a over shape, names, cells and labels; stable across runs.
std::uint64_t fingerprint(const FeatureMatrix& m);

}  // namespace mailsieve
