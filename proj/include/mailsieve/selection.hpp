#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "mailsieve/exec.hpp"
#include "mailsieve/features.hpp"

namespace mailsieve {

enum class Evaluator { None, CFS, Consistency, InfoGain, GainRatio, ChiSquare };
enum class SearchMethod { None, BestFirst, GreedyStepwise, RankSearch, Ranker };

// One of the ten evaluator+search pairs. Only these ten are constructible.
struct SelectionScheme {
    int label;  // 1..10
    Evaluator evaluator;
    SearchMethod search;
    const char* method_name;  // report row title
    const char* mnemonic;     // CLI spelling

    static const std::array<SelectionScheme, 10>& all();
    static const SelectionScheme& from_label(int label);
    static const SelectionScheme* from_mnemonic(std::string_view mnemonic);

    bool operator==(const SelectionScheme& o) const { return label == o.label; }
};

// Strictly increasing attribute indices into a FeatureMatrix.
struct FeatureSubset {
    std::vector<std::size_t> indices;

    std::size_t size() const { return indices.size(); }
    bool operator==(const FeatureSubset&) const = default;
};

// All attributes ordered by score descending, ties by index ascending.
struct RankedList {
    std::vector<std::pair<std::size_t, double>> entries;
};

// Merit comparisons everywhere use this tolerance; ties break towards the
// lowest attribute index so parallel and serial searches return the same
// subset.
inline constexpr double kMeritTolerance = 1e-10;

// --- single-attribute evaluators (scores are >= 0) ---

// Information gain IG(C;A) = H(C) - H(C|A), in bits.
double eval_infogain(const FeatureMatrix& m, std::size_t attr);
// IG(C;A) / H(A); 0 for a constant attribute.
double eval_gainratio(const FeatureMatrix& m, std::size_t attr);
// Pearson chi-squared over the 2x2 attribute/class contingency table; cells
// with expected count 0 contribute 0.
double eval_chisquare(const FeatureMatrix& m, std::size_t attr);
double eval_attribute(const FeatureMatrix& m, std::size_t attr, Evaluator kind);

// --- subset evaluators ---

// Hall's correlation-based merit: k*mean(SU(A,C)) / sqrt(k + k(k-1)*mean(SU(A,A'))),
// with SU(X,Y) = 2*IG(X;Y)/(H(X)+H(Y)) and SU = 0 when both entropies vanish.
// Empty subset -> 0.
double cfs_merit(const FeatureMatrix& m, const FeatureSubset& subset);
// 1 - inconsistency rate of the subset projection (Liu-Setiono). The empty
// subset collapses every row into one pattern, giving majority/N.
double consistency_merit(const FeatureMatrix& m, const FeatureSubset& subset);
double subset_merit(const FeatureMatrix& m, const FeatureSubset& subset, Evaluator kind);

// --- searches ---

// Forward selection from the empty set; adds the best-improving attribute
// until no addition improves the merit. If nothing beats the empty-set
// baseline, falls back to the single best-merit attribute.
FeatureSubset search_greedy_stepwise(const FeatureMatrix& m, Evaluator subset_eval,
                                     ExecPolicy policy = ExecPolicy::Serial);

// Forward best-first with backtracking; stops after `stale_limit` consecutive
// expansions that fail to improve the best merit seen. Falls back like the
// greedy search when nothing beats the empty set.
FeatureSubset search_bestfirst(const FeatureMatrix& m, Evaluator subset_eval,
                               ExecPolicy policy = ExecPolicy::Serial,
                               std::size_t stale_limit = 5);

// Scores every attribute and keeps all of them (threshold is -infinity);
// rank-only schemes therefore leave the feature set membership untouched.
RankedList search_ranker(const FeatureMatrix& m, Evaluator attr_eval,
                         ExecPolicy policy = ExecPolicy::Serial);

// Ranks attributes (information gain by default), evaluates the nested rank
// prefixes with the subset evaluator, returns the shortest maximal prefix.
FeatureSubset search_rank_search(const FeatureMatrix& m, Evaluator subset_eval,
                                 ExecPolicy policy = ExecPolicy::Serial,
                                 Evaluator ranking_eval = Evaluator::InfoGain);

struct SelectionOutcome {
    FeatureSubset subset;               // canonical ascending indices
    std::optional<RankedList> ranking;  // present for ranker schemes
    std::optional<double> merit;        // present for subset-evaluator schemes
};

SelectionOutcome select(const SelectionScheme& scheme, const FeatureMatrix& m,
                        ExecPolicy policy = ExecPolicy::Serial);

}  // namespace mailsieve
