#pragma once

#include <cstdint>
#include <vector>

#include "mailsieve/corpus.hpp"
#include "mailsieve/lexicon.hpp"

namespace mailsieve {

// Deterministic filler vocabulary, disjoint from the default lexicon and from
// the generator's template wording. Salted into generated emails so the
// feature matrix carries class-irrelevant attributes for selection to prune.
std::vector<std::string> noise_vocabulary(std::size_t count);

// Lexicon with the noise vocabulary appended to the keyword section, so the
// salted filler terms become matrix columns. Terms already present anywhere
// in the lexicon are skipped. Indicator sections are untouched, which keeps
// the labeling rule's verdict unchanged on every email.
Lexicon with_noise_keywords(const Lexicon& lex, std::size_t noise_terms);

// Seeded dummy-email generator. Exactly round(n * positive_ratio) emails are
// positive; every positive contains at least one keyword and one suspicious
// indicator, negatives contain no suspicious indicator (either no keywords at
// all, or keywords together with a neutralizing indicator). Each body is
// salted with filler terms. Every email's label agrees with the labeling rule
// applied to its extracted features; generation is deterministic in the seed.
LabeledCorpus generate_synthetic_corpus(std::size_t n, double positive_ratio,
                                        const Lexicon& lex, std::size_t noise_terms,
                                        std::uint64_t seed);

}  // namespace mailsieve
