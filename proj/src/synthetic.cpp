#include "mailsieve/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_set>

#include "mailsieve/features.hpp"

namespace mailsieve {

namespace {

const std::vector<std::string>& curated_noise_words() {
    static const std::vector<std::string> words = {
        "garden",   "football", "recipe",  "sunshine", "holiday",  "birthday", "coffee",
        "library",  "bicycle",  "mountain", "river",   "painting", "guitar",   "harvest",
        "winter",   "summer",   "autumn",  "spring",   "market",   "bakery",   "concert",
        "museum",   "picnic",   "weather", "traffic",  "lunch",    "dinner",   "breakfast",
        "cricket",  "tennis",   "garage",  "kitchen",  "window",   "curtain",  "carpet",
        "puppy",    "kitten",   "orchard", "village",  "castle",   "bridge",   "lantern",
        "compass",  "notebook", "pencil",  "sweater",  "umbrella", "teapot"};
    return words;
}

std::string spell_out(const std::string& term) {
    std::string s = term;
    std::replace(s.begin(), s.end(), '_', ' ');
    return s;
}

template <typename T>
const T& pick(const std::vector<T>& pool, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
    return pool[d(rng)];
}

}  // namespace

std::vector<std::string> noise_vocabulary(std::size_t count) {
    std::vector<std::string> vocab;
    vocab.reserve(count);
    const auto& curated = curated_noise_words();
    for (std::size_t i = 0; i < count; ++i) {
        if (i < curated.size())
            vocab.push_back(curated[i]);
        else
            vocab.push_back("filler" + std::to_string(i));
    }
    return vocab;
}

Lexicon with_noise_keywords(const Lexicon& lex, std::size_t noise_terms) {
    std::unordered_set<std::string> existing;
    for (const auto* section : {&lex.keywords, &lex.suspicious, &lex.nonsuspicious})
        existing.insert(section->begin(), section->end());

    std::vector<std::string> keywords = lex.keywords;
    for (auto& term : noise_vocabulary(noise_terms))
        if (!existing.count(term)) keywords.push_back(std::move(term));
    return Lexicon::make(std::move(keywords), lex.suspicious, lex.nonsuspicious);
}

LabeledCorpus generate_synthetic_corpus(std::size_t n, double positive_ratio,
                                        const Lexicon& lex, std::size_t noise_terms,
                                        std::uint64_t seed) {
    if (n < 10) throw DataError("n too small (need at least 10 emails)");
    if (!(positive_ratio > 0.0 && positive_ratio < 1.0))
        throw DataError("positive_ratio must lie strictly between 0 and 1");
    if (lex.keywords.empty() || lex.suspicious.empty() || lex.nonsuspicious.empty())
        throw DataError("generator needs a lexicon with all three sections populated");
    const auto n_pos = static_cast<std::size_t>(std::llround(static_cast<double>(n) * positive_ratio));
    if (n_pos == 0 || n_pos >= n) throw DataError("positive_ratio yields an empty class");

    std::mt19937_64 rng(seed);
    std::vector<Label> plan(n, Label::No);
    std::fill(plan.begin(), plan.begin() + static_cast<std::ptrdiff_t>(n_pos), Label::Yes);
    std::shuffle(plan.begin(), plan.end(), rng);

    const auto noise = noise_vocabulary(noise_terms);

    static const std::vector<std::string> subjects = {"hello", "greetings", "update",
                                                      "schedule", "note"};
    static const std::vector<std::string> openers = {"Dear brother,", "Dear friend,",
                                                     "Brothers,", "Salam,"};
    static const std::vector<std::string> closers = {"Regards,\nOmar", "Best,\nAnne",
                                                     "Take care,\nSara", "Yours,\nJohn"};
    static const std::vector<std::string> pos_cores = {
        "The {kw} {si} exactly as agreed.",
        "Our {si} for the {kw} is complete. Do not speak of it.",
        "Keep ready for the {kw}. Remember that {si} remains the signal.",
        "Everything is arranged. The {kw} {si} and nothing can stop it."};
    static const std::vector<std::string> pos_extra_si = {
        "Also remember: {si} matters more than anything.",
        "Stay quiet until {si}."};
    static const std::vector<std::string> pos_ni = {
        "Forget the sad past.", "Let them condemn us later.",
        "No more talk of peace."};
    static const std::vector<std::string> neg_a_cores = {
        "Thanks for your message about the {x}.",
        "The {x} went well last week, everyone enjoyed it.",
        "See you at the {x} soon, it has been too long.",
        "Hope this finds you well. How was the {x}?"};
    static const std::vector<std::string> neg_b_cores = {
        "We all condemn the {kw} without reservation.",
        "Our thoughts are with the victims of the {kw}.",
        "We pray for peace after the terrible {kw}.",
        "The news of the {kw} made everyone so sad."};

    const auto fill = [](std::string text, const std::string& slot, const std::string& value) {
        for (auto pos = text.find(slot); pos != std::string::npos; pos = text.find(slot))
            text.replace(pos, slot.size(), value);
        return text;
    };

    std::vector<Email> emails;
    emails.reserve(n);
    std::size_t pos_counter = 0, neg_counter = 0;
    std::size_t id_width = std::to_string(n).size();
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    for (std::size_t i = 0; i < n; ++i) {
        const Label label = plan[i];
        Email email;
        std::string idx = std::to_string(i + 1);
        email.id = "msg" + std::string(id_width - idx.size(), '0') + idx;
        email.label = label;
        if (coin(rng) < 0.3) email.subject = pick(subjects, rng);

        // Cycled picks guarantee that every lexicon term shows up in the
        // corpus; random extras vary the co-occurrence patterns.
        const std::size_t ordinal = label == Label::Yes ? pos_counter++ : neg_counter++;
        const std::string cycled_kw = lex.keywords[ordinal % lex.keywords.size()];
        const std::string cycled_si = lex.suspicious[ordinal % lex.suspicious.size()];
        const std::size_t neg_core_idx = ordinal % neg_b_cores.size();

        bool ok = false;
        for (int attempt = 0; attempt < 32 && !ok; ++attempt) {
            std::string body = pick(openers, rng);
            body += "\n\n";
            if (label == Label::Yes) {
                std::string core = fill(pick(pos_cores, rng), "{kw}", spell_out(cycled_kw));
                core = fill(core, "{si}", spell_out(cycled_si));
                body += core;
                if (coin(rng) < 0.35) {
                    body += ' ';
                    body += fill(pick(pos_extra_si, rng), "{si}",
                                 spell_out(pick(lex.suspicious, rng)));
                }
                if (coin(rng) < 0.25) {
                    body += ' ';
                    body += pick(pos_ni, rng);
                }
            } else if (ordinal % 2 == 0) {
                // keyword + neutralizing indicator
                body += fill(neg_b_cores[neg_core_idx], "{kw}", spell_out(cycled_kw));
            } else {
                body += fill(pick(neg_a_cores, rng), "{x}", pick(noise.empty() ? subjects : noise, rng));
            }

            if (!noise.empty()) {
                std::uniform_int_distribution<std::size_t> cnt(2, 5);
                std::size_t k = std::min(cnt(rng), noise.size());
                std::vector<std::size_t> picks(noise.size());
                for (std::size_t j = 0; j < picks.size(); ++j) picks[j] = j;
                std::shuffle(picks.begin(), picks.end(), rng);
                body += " P.S. do not forget";
                for (std::size_t j = 0; j < k; ++j)
                    body += " the " + noise[picks[j]] + (j + 1 < k ? "," : ".");
            }
            body += "\n\n";
            body += pick(closers, rng);

            email.body = body;
            const FeatureVector fv = extract_features(email, lex);
            const std::size_t nk = lex.keywords.size();
            const std::size_t ns = lex.suspicious.size();
            bool any_si = false;
            for (std::size_t b = nk; b < nk + ns; ++b) any_si |= fv.bits[b] != 0;
            ok = rule_label(fv, lex) == label && (label == Label::Yes || !any_si);
        }
        if (!ok)
            throw DataError("synthetic generator failed to satisfy the labeling rule for " +
                            email.id);
        emails.push_back(std::move(email));
    }

    return LabeledCorpus::make(std::move(emails));
}

}  // namespace mailsieve
