#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mailsieve/types.hpp"

namespace mailsieve {

// The term vocabulary driving feature extraction: plain keywords plus two
// kinds of context indicators. The three sections are pairwise disjoint and
// every term is a lowercase token or an underscore-joined token sequence
// ("will_be" matches the consecutive tokens [will, be]).
struct Lexicon {
    std::vector<std::string> keywords;
    std::vector<std::string> suspicious;     // indicators that mark content suspicious
    std::vector<std::string> nonsuspicious;  // indicators that neutralize keywords

    std::size_t size() const { return keywords.size() + suspicious.size() + nonsuspicious.size(); }

    // Validates terms (lowercases them first) and section disjointness.
    static Lexicon make(std::vector<std::string> keywords,
                        std::vector<std::string> suspicious,
                        std::vector<std::string> nonsuspicious);
};

// Built-in vocabulary used when no lexicon file is given. Illustrative: the
// terms were chosen to cover the bundled fixture emails, not derived from any
// published indicator list.
const Lexicon& default_lexicon();

// File format: three sections headed [keywords], [suspicious], [nonsuspicious],
// one term per line, '#' starts a comment.
Lexicon load_lexicon(const std::filesystem::path& path);
void save_lexicon(const Lexicon& lex, const std::filesystem::path& path);

// Lowercases, splits on any non-alphanumeric byte, drops empty tokens.
// No stemming.
std::vector<std::string> tokenize(std::string_view text);

}  // namespace mailsieve
