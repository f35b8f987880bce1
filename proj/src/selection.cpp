#include "mailsieve/selection.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace mailsieve {

const std::array<SelectionScheme, 10>& SelectionScheme::all() {
    static const std::array<SelectionScheme, 10> schemes = {{
        {1, Evaluator::None, SearchMethod::None, "Without Feature Selection", "wfs"},
        {2, Evaluator::CFS, SearchMethod::BestFirst, "CfsSubsetEval, BestFirst Search", "cfs-bfs"},
        {3, Evaluator::CFS, SearchMethod::GreedyStepwise, "CfsSubsetEval, GreedyStepwise Search",
         "cfs-gss"},
        {4, Evaluator::CFS, SearchMethod::RankSearch, "CfsSubsetEval, RankSearch", "cfs-rs"},
        {5, Evaluator::Consistency, SearchMethod::BestFirst,
         "ConsistencySubsetEval, BestFirst Search", "cse-bfs"},
        {6, Evaluator::Consistency, SearchMethod::GreedyStepwise,
         "ConsistencySubsetEval, GreedyStepwise Search", "cse-gss"},
        {7, Evaluator::Consistency, SearchMethod::RankSearch, "ConsistencySubsetEval, Rank Search",
         "cse-rs"},
        {8, Evaluator::GainRatio, SearchMethod::Ranker, "GainRatio, Ranker Search", "gr-r"},
        {9, Evaluator::InfoGain, SearchMethod::Ranker, "InfoGain, Ranker Search", "ig-r"},
        {10, Evaluator::ChiSquare, SearchMethod::Ranker, "ChiSquare, Ranker Search", "chi-r"},
    }};
    return schemes;
}

const SelectionScheme& SelectionScheme::from_label(int label) {
    if (label < 1 || label > 10)
        throw std::invalid_argument("selection scheme label must be 1..10");
    return all()[static_cast<std::size_t>(label - 1)];
}

const SelectionScheme* SelectionScheme::from_mnemonic(std::string_view mnemonic) {
    for (const auto& s : all())
        if (mnemonic == s.mnemonic) return &s;
    return nullptr;
}

namespace {

double entropy2(std::size_t a, std::size_t b) {
    const double n = static_cast<double>(a + b);
    if (a == 0 || b == 0) return 0.0;
    const double pa = static_cast<double>(a) / n;
    const double pb = static_cast<double>(b) / n;
    return -pa * std::log2(pa) - pb * std::log2(pb);
}

struct AttrCounts {
    std::size_t n = 0, n1 = 0, nyes = 0, n1yes = 0;
    std::size_t n0() const { return n - n1; }
    std::size_t n0yes() const { return nyes - n1yes; }
};

AttrCounts count_attr(const FeatureMatrix& m, std::size_t attr) {
    AttrCounts c;
    c.n = m.n_rows();
    for (std::size_t r = 0; r < m.n_rows(); ++r) {
        const bool one = m.at(r, attr) != 0;
        const bool yes = m.labels[r] == Label::Yes;
        c.n1 += one;
        c.nyes += yes;
        c.n1yes += one && yes;
    }
    return c;
}

// Mutual information of two binary columns, in bits. `get` maps a row index
// to the (x, y) bit pair.
template <typename Get>
double binary_mi_and_entropies(std::size_t n, Get get, double& hx, double& hy) {
    std::size_t c[2][2] = {{0, 0}, {0, 0}};
    for (std::size_t r = 0; r < n; ++r) {
        auto [x, y] = get(r);
        ++c[x][y];
    }
    const std::size_t x1 = c[1][0] + c[1][1];
    const std::size_t y1 = c[0][1] + c[1][1];
    hx = entropy2(n - x1, x1);
    hy = entropy2(n - y1, y1);
    double joint = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (c[i][j]) {
                const double p = static_cast<double>(c[i][j]) / static_cast<double>(n);
                joint -= p * std::log2(p);
            }
    return std::max(0.0, hx + hy - joint);
}

// Symmetric uncertainty between attribute columns, or an attribute and the
// class when `b` is npos.
double symmetric_uncertainty(const FeatureMatrix& m, std::size_t a, std::size_t b) {
    double hx = 0.0, hy = 0.0;
    double mi;
    if (b == static_cast<std::size_t>(-1)) {
        mi = binary_mi_and_entropies(m.n_rows(), [&](std::size_t r) {
            return std::pair<int, int>(m.at(r, a) != 0, m.labels[r] == Label::Yes);
        }, hx, hy);
    } else {
        mi = binary_mi_and_entropies(m.n_rows(), [&](std::size_t r) {
            return std::pair<int, int>(m.at(r, a) != 0, m.at(r, b) != 0);
        }, hx, hy);
    }
    const double denom = hx + hy;
    if (denom == 0.0) return 0.0;
    return 2.0 * mi / denom;
}

void require_attrs(const FeatureMatrix& m) {
    if (m.n_cols() == 0) throw std::invalid_argument("matrix has no attributes");
    if (m.n_rows() == 0) throw std::invalid_argument("matrix has no rows");
}

}  // namespace

double eval_infogain(const FeatureMatrix& m, std::size_t attr) {
    const AttrCounts c = count_attr(m, attr);
    const double n = static_cast<double>(c.n);
    const double h_class = entropy2(c.nyes, c.n - c.nyes);
    double h_cond = 0.0;
    if (c.n1 > 0)
        h_cond += (static_cast<double>(c.n1) / n) * entropy2(c.n1yes, c.n1 - c.n1yes);
    if (c.n0() > 0)
        h_cond += (static_cast<double>(c.n0()) / n) * entropy2(c.n0yes(), c.n0() - c.n0yes());
    return std::max(0.0, h_class - h_cond);
}

double eval_gainratio(const FeatureMatrix& m, std::size_t attr) {
    const AttrCounts c = count_attr(m, attr);
    if (c.n1 == 0 || c.n1 == c.n) return 0.0;  // constant attribute
    return eval_infogain(m, attr) / entropy2(c.n1, c.n - c.n1);
}

double eval_chisquare(const FeatureMatrix& m, std::size_t attr) {
    const AttrCounts c = count_attr(m, attr);
    const double n = static_cast<double>(c.n);
    const double observed[2][2] = {
        {static_cast<double>(c.n0yes()), static_cast<double>(c.n0() - c.n0yes())},
        {static_cast<double>(c.n1yes), static_cast<double>(c.n1 - c.n1yes)},
    };
    const double row[2] = {static_cast<double>(c.n0()), static_cast<double>(c.n1)};
    const double col[2] = {static_cast<double>(c.nyes), static_cast<double>(c.n - c.nyes)};
    double chi = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const double expected = row[i] * col[j] / n;
            if (expected > 0.0) {
                const double diff = observed[i][j] - expected;
                chi += diff * diff / expected;
            }
        }
    return chi;
}

double eval_attribute(const FeatureMatrix& m, std::size_t attr, Evaluator kind) {
    switch (kind) {
        case Evaluator::InfoGain: return eval_infogain(m, attr);
        case Evaluator::GainRatio: return eval_gainratio(m, attr);
        case Evaluator::ChiSquare: return eval_chisquare(m, attr);
        default: throw std::invalid_argument("not a single-attribute evaluator");
    }
}

double cfs_merit(const FeatureMatrix& m, const FeatureSubset& subset) {
    const std::size_t k = subset.size();
    if (k == 0) return 0.0;
    double sum_cf = 0.0;
    for (std::size_t i : subset.indices)
        sum_cf += symmetric_uncertainty(m, i, static_cast<std::size_t>(-1));
    double sum_ff = 0.0;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            sum_ff += symmetric_uncertainty(m, subset.indices[a], subset.indices[b]);

    const double kd = static_cast<double>(k);
    const double mean_cf = sum_cf / kd;
    const double mean_ff = k < 2 ? 0.0 : sum_ff / (kd * (kd - 1.0) / 2.0);
    return kd * mean_cf / std::sqrt(kd + kd * (kd - 1.0) * mean_ff);
}

double consistency_merit(const FeatureMatrix& m, const FeatureSubset& subset) {
    const std::size_t n = m.n_rows();
    // (total count, yes count) per distinct projected pattern
    std::unordered_map<std::string, std::pair<std::size_t, std::size_t>> patterns;
    std::string key;
    key.reserve(subset.size());
    for (std::size_t r = 0; r < n; ++r) {
        key.clear();
        for (std::size_t idx : subset.indices) key.push_back(m.at(r, idx) ? '1' : '0');
        auto& slot = patterns[key];
        ++slot.first;
        slot.second += m.labels[r] == Label::Yes;
    }
    std::size_t inconsistent = 0;
    for (const auto& [_, slot] : patterns)
        inconsistent += slot.first - std::max(slot.second, slot.first - slot.second);
    return 1.0 - static_cast<double>(inconsistent) / static_cast<double>(n);
}

double subset_merit(const FeatureMatrix& m, const FeatureSubset& subset, Evaluator kind) {
    switch (kind) {
        case Evaluator::CFS: return cfs_merit(m, subset);
        case Evaluator::Consistency: return consistency_merit(m, subset);
        default: throw std::invalid_argument("not a subset evaluator");
    }
}

namespace {

// Shared scoring context for the searches. For CFS the pairwise SU values are
// precomputed once so concurrent candidate evaluations only read.
class SubsetScorer {
  public:
    SubsetScorer(Evaluator kind, const FeatureMatrix& m) : kind_(kind), m_(m) {
        if (kind != Evaluator::CFS && kind != Evaluator::Consistency)
            throw std::invalid_argument("not a subset evaluator");
        if (kind == Evaluator::CFS) {
            const std::size_t d = m.n_cols();
            su_class_.resize(d);
            su_pair_.assign(d * d, 0.0);
            for (std::size_t i = 0; i < d; ++i)
                su_class_[i] = symmetric_uncertainty(m, i, static_cast<std::size_t>(-1));
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = i + 1; j < d; ++j) {
                    const double su = symmetric_uncertainty(m, i, j);
                    su_pair_[i * d + j] = su;
                    su_pair_[j * d + i] = su;
                }
        }
    }

    double merit(const FeatureSubset& subset) const {
        if (kind_ == Evaluator::Consistency) return consistency_merit(m_, subset);
        const std::size_t k = subset.size();
        if (k == 0) return 0.0;
        const std::size_t d = m_.n_cols();
        double sum_cf = 0.0, sum_ff = 0.0;
        for (std::size_t a = 0; a < k; ++a) {
            sum_cf += su_class_[subset.indices[a]];
            for (std::size_t b = a + 1; b < k; ++b)
                sum_ff += su_pair_[subset.indices[a] * d + subset.indices[b]];
        }
        const double kd = static_cast<double>(k);
        const double mean_cf = sum_cf / kd;
        const double mean_ff = k < 2 ? 0.0 : sum_ff / (kd * (kd - 1.0) / 2.0);
        return kd * mean_cf / std::sqrt(kd + kd * (kd - 1.0) * mean_ff);
    }

  private:
    Evaluator kind_;
    const FeatureMatrix& m_;
    std::vector<double> su_class_;
    std::vector<double> su_pair_;
};

std::vector<std::size_t> with_attr(const std::vector<std::size_t>& sorted, std::size_t a) {
    std::vector<std::size_t> out;
    out.reserve(sorted.size() + 1);
    auto it = std::lower_bound(sorted.begin(), sorted.end(), a);
    out.insert(out.end(), sorted.begin(), it);
    out.push_back(a);
    out.insert(out.end(), it, sorted.end());
    return out;
}

// Evaluates one candidate merit per slot; the caller merges serially so
// winner selection is identical for both policies.
void score_candidates(const SubsetScorer& scorer,
                      const std::vector<std::vector<std::size_t>>& candidates,
                      std::vector<double>& merits, ExecPolicy policy) {
    merits.assign(candidates.size(), 0.0);
    if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(candidates.size()); ++i)
            merits[static_cast<std::size_t>(i)] =
                scorer.merit(FeatureSubset{candidates[static_cast<std::size_t>(i)]});
    } else {
        for (std::size_t i = 0; i < candidates.size(); ++i)
            merits[i] = scorer.merit(FeatureSubset{candidates[i]});
    }
}

std::size_t best_single_attribute(const SubsetScorer& scorer, std::size_t d, ExecPolicy policy) {
    std::vector<std::vector<std::size_t>> singles(d);
    for (std::size_t a = 0; a < d; ++a) singles[a] = {a};
    std::vector<double> merits;
    score_candidates(scorer, singles, merits, policy);
    std::size_t best = 0;
    for (std::size_t a = 1; a < d; ++a)
        if (merits[a] > merits[best] + kMeritTolerance) best = a;
    return best;
}

}  // namespace

FeatureSubset search_greedy_stepwise(const FeatureMatrix& m, Evaluator subset_eval,
                                     ExecPolicy policy) {
    require_attrs(m);
    const SubsetScorer scorer(subset_eval, m);
    const std::size_t d = m.n_cols();

    std::vector<std::size_t> current;
    double current_merit = scorer.merit(FeatureSubset{current});
    std::vector<bool> in_subset(d, false);

    while (current.size() < d) {
        std::vector<std::vector<std::size_t>> candidates;
        std::vector<std::size_t> added;
        for (std::size_t a = 0; a < d; ++a) {
            if (in_subset[a]) continue;
            candidates.push_back(with_attr(current, a));
            added.push_back(a);
        }
        std::vector<double> merits;
        score_candidates(scorer, candidates, merits, policy);

        std::size_t best = 0;
        for (std::size_t i = 1; i < merits.size(); ++i)
            if (merits[i] > merits[best] + kMeritTolerance) best = i;

        if (merits[best] > current_merit + kMeritTolerance) {
            current = std::move(candidates[best]);
            current_merit = merits[best];
            in_subset[added[best]] = true;
            continue;
        }
        if (current.empty()) {
            // Nothing beats the empty-set baseline; fall back to the single
            // best-merit attribute so the result is never empty.
            return FeatureSubset{{added[best]}};
        }
        break;
    }
    return FeatureSubset{std::move(current)};
}

namespace {

struct OpenNode {
    double merit;
    std::vector<std::size_t> subset;

    // max-heap by merit; exact-equal merits break towards the
    // lexicographically smaller subset
    bool operator<(const OpenNode& o) const {
        if (merit != o.merit) return merit < o.merit;
        return subset > o.subset;
    }
};

struct VecHash {
    std::size_t operator()(const std::vector<std::size_t>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (std::size_t x : v) {
            h ^= x + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace

FeatureSubset search_bestfirst(const FeatureMatrix& m, Evaluator subset_eval, ExecPolicy policy,
                               std::size_t stale_limit) {
    require_attrs(m);
    const SubsetScorer scorer(subset_eval, m);
    const std::size_t d = m.n_cols();

    std::vector<std::size_t> best_subset;
    double best_merit = scorer.merit(FeatureSubset{best_subset});

    std::priority_queue<OpenNode> open;
    open.push({best_merit, {}});
    std::unordered_set<std::vector<std::size_t>, VecHash> visited;
    visited.insert({});

    std::size_t stale = 0;
    while (!open.empty() && stale < stale_limit) {
        const OpenNode node = open.top();
        open.pop();

        std::vector<std::vector<std::size_t>> children;
        std::size_t next = 0;
        for (std::size_t a = 0; a < d; ++a) {
            if (next < node.subset.size() && node.subset[next] == a) {
                ++next;
                continue;
            }
            auto child = with_attr(node.subset, a);
            if (visited.insert(child).second) children.push_back(std::move(child));
        }
        std::vector<double> merits;
        score_candidates(scorer, children, merits, policy);

        bool improved = false;
        for (std::size_t i = 0; i < children.size(); ++i) {
            if (merits[i] > best_merit + kMeritTolerance) {
                best_merit = merits[i];
                best_subset = children[i];
                improved = true;
            }
            open.push({merits[i], std::move(children[i])});
        }
        stale = improved ? 0 : stale + 1;
    }

    if (best_subset.empty())
        return FeatureSubset{{best_single_attribute(scorer, d, policy)}};
    return FeatureSubset{std::move(best_subset)};
}

RankedList search_ranker(const FeatureMatrix& m, Evaluator attr_eval, ExecPolicy policy) {
    require_attrs(m);
    const std::size_t d = m.n_cols();
    std::vector<double> scores(d);
    if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(static)
        for (long long a = 0; a < static_cast<long long>(d); ++a)
            scores[static_cast<std::size_t>(a)] =
                eval_attribute(m, static_cast<std::size_t>(a), attr_eval);
    } else {
        for (std::size_t a = 0; a < d; ++a) scores[a] = eval_attribute(m, a, attr_eval);
    }

    RankedList ranked;
    ranked.entries.reserve(d);
    for (std::size_t a = 0; a < d; ++a) ranked.entries.emplace_back(a, scores[a]);
    std::sort(ranked.entries.begin(), ranked.entries.end(), [](const auto& x, const auto& y) {
        if (x.second != y.second) return x.second > y.second;
        return x.first < y.first;
    });
    return ranked;
}

FeatureSubset search_rank_search(const FeatureMatrix& m, Evaluator subset_eval, ExecPolicy policy,
                                 Evaluator ranking_eval) {
    require_attrs(m);
    const SubsetScorer scorer(subset_eval, m);
    const RankedList ranked = search_ranker(m, ranking_eval, policy);
    const std::size_t d = m.n_cols();

    std::vector<std::vector<std::size_t>> prefixes(d);
    std::vector<std::size_t> prefix;
    for (std::size_t len = 1; len <= d; ++len) {
        prefix.insert(std::lower_bound(prefix.begin(), prefix.end(), ranked.entries[len - 1].first),
                      ranked.entries[len - 1].first);
        prefixes[len - 1] = prefix;
    }
    std::vector<double> merits;
    score_candidates(scorer, prefixes, merits, policy);

    std::size_t best = 0;  // ties keep the shortest prefix
    for (std::size_t i = 1; i < d; ++i)
        if (merits[i] > merits[best] + kMeritTolerance) best = i;
    return FeatureSubset{std::move(prefixes[best])};
}

SelectionOutcome select(const SelectionScheme& scheme, const FeatureMatrix& m, ExecPolicy policy) {
    require_attrs(m);
    SelectionOutcome out;

    const auto full_set = [&m] {
        FeatureSubset s;
        s.indices.resize(m.n_cols());
        for (std::size_t i = 0; i < m.n_cols(); ++i) s.indices[i] = i;
        return s;
    };

    switch (scheme.search) {
        case SearchMethod::None:
            out.subset = full_set();
            return out;
        case SearchMethod::Ranker:
            // Ranking reorders but never drops attributes, so membership-wise
            // these schemes coincide with no selection at all.
            out.ranking = search_ranker(m, scheme.evaluator, policy);
            out.subset = full_set();
            return out;
        case SearchMethod::GreedyStepwise:
            out.subset = search_greedy_stepwise(m, scheme.evaluator, policy);
            break;
        case SearchMethod::BestFirst:
            out.subset = search_bestfirst(m, scheme.evaluator, policy);
            break;
        case SearchMethod::RankSearch:
            out.subset = search_rank_search(m, scheme.evaluator, policy);
            break;
    }
    out.merit = subset_merit(m, out.subset, scheme.evaluator);
    return out;
}

}  // namespace mailsieve
