#include "mailsieve/features.hpp"

#include <stdexcept>
#include <unordered_set>

namespace mailsieve {

std::vector<std::string> attribute_names(const Lexicon& lex) {
    std::vector<std::string> names;
    names.reserve(lex.size());
    for (const auto& t : lex.keywords) names.push_back("kw_" + t);
    for (const auto& t : lex.suspicious) names.push_back("si_" + t);
    for (const auto& t : lex.nonsuspicious) names.push_back("ni_" + t);
    return names;
}

namespace {

bool term_present(const std::string& term, const std::vector<std::string>& tokens,
                  const std::unordered_set<std::string_view>& token_set) {
    if (term.find('_') == std::string::npos) return token_set.count(term) > 0;

    // Multiword term: match its parts as a consecutive token run.
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    auto sv = std::string_view(term);
    while (true) {
        auto us = sv.find('_', start);
        if (us == std::string_view::npos) {
            parts.push_back(sv.substr(start));
            break;
        }
        parts.push_back(sv.substr(start, us - start));
        start = us + 1;
    }
    if (parts.size() > tokens.size()) return false;
    for (std::size_t i = 0; i + parts.size() <= tokens.size(); ++i) {
        bool match = true;
        for (std::size_t j = 0; j < parts.size(); ++j) {
            if (tokens[i + j] != parts[j]) {
                match = false;
                break;
            }
        }
        if (match) return true;
    }
    return false;
}

}  // namespace

FeatureVector extract_features(const Email& email, const Lexicon& lex) {
    std::string text;
    if (email.subject) {
        text = *email.subject;
        text += ' ';
    }
    text += email.body;

    const auto tokens = tokenize(text);
    std::unordered_set<std::string_view> token_set(tokens.begin(), tokens.end());

    FeatureVector fv;
    fv.bits.reserve(lex.size());
    for (const auto* section : {&lex.keywords, &lex.suspicious, &lex.nonsuspicious})
        for (const auto& term : *section)
            fv.bits.push_back(term_present(term, tokens, token_set) ? 1 : 0);
    return fv;
}

Label rule_label(const FeatureVector& fv, const Lexicon& lex) {
    if (fv.bits.size() != lex.size())
        throw std::invalid_argument("feature vector does not match lexicon");
    const std::size_t nk = lex.keywords.size();
    const std::size_t ns = lex.suspicious.size();
    bool any_kw = false, any_si = false;
    for (std::size_t i = 0; i < nk; ++i) any_kw |= fv.bits[i] != 0;
    for (std::size_t i = nk; i < nk + ns; ++i) any_si |= fv.bits[i] != 0;
    return (any_kw && any_si) ? Label::Yes : Label::No;
}

FeatureMatrix build_matrix(const LabeledCorpus& corpus, const Lexicon& lex, ExecPolicy policy) {
    FeatureMatrix m;
    m.attribute_names = attribute_names(lex);
    const std::size_t n = corpus.size();
    const std::size_t d = m.attribute_names.size();
    m.cells.assign(n * d, 0);
    m.labels.resize(n);

    const auto fill_row = [&](std::size_t i) {
        const FeatureVector fv = extract_features(corpus.emails[i], lex);
        std::copy(fv.bits.begin(), fv.bits.end(), m.cells.begin() + i * d);
        m.labels[i] = *corpus.emails[i].label;
    };

    if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            fill_row(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < n; ++i) fill_row(i);
    }
    return m;
}

FeatureMatrix restrict_columns(const FeatureMatrix& m, std::span<const std::size_t> indices) {
    FeatureMatrix out;
    out.attribute_names.reserve(indices.size());
    std::size_t prev = 0;
    bool first = true;
    for (std::size_t idx : indices) {
        if (idx >= m.n_cols()) throw std::out_of_range("column index out of range");
        if (!first && idx <= prev) throw std::invalid_argument("column indices must increase");
        prev = idx;
        first = false;
        out.attribute_names.push_back(m.attribute_names[idx]);
    }
    out.labels = m.labels;
    out.cells.reserve(m.n_rows() * indices.size());
    for (std::size_t r = 0; r < m.n_rows(); ++r)
        for (std::size_t idx : indices) out.cells.push_back(m.at(r, idx));
    return out;
}

std::uint64_t fingerprint(const FeatureMatrix& m) {
    std::uint64_t h = 1469598103934665603ull;
    const auto mix = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    const auto mix_bytes = [&h](std::string_view s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
    };
    mix(m.n_rows());
    mix(m.n_cols());
    for (const auto& name : m.attribute_names) {
        mix_bytes(name);
        mix_bytes("\x1f");
    }
    for (auto c : m.cells) {
        h ^= c;
        h *= 1099511628211ull;
    }
    for (auto l : m.labels) {
        h ^= static_cast<std::uint8_t>(l);
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace mailsieve
