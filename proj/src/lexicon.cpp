#include "mailsieve/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace mailsieve {

std::optional<Label> label_from_string(std::string_view s) {
    std::string t(s);
    std::transform(t.begin(), t.end(), t.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (t == "yes") return Label::Yes;
    if (t == "no") return Label::No;
    return std::nullopt;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (unsigned char c : text) {
        if (std::isalnum(c)) {
            cur.push_back(static_cast<char>(std::tolower(c)));
        } else if (!cur.empty()) {
            tokens.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

namespace {

std::string normalize_term(const std::string& raw) {
    std::string t;
    for (unsigned char c : raw) t.push_back(static_cast<char>(std::tolower(c)));
    if (t.empty()) throw DataError("lexicon term is empty");
    bool prev_us = true;  // also rejects a leading underscore
    for (unsigned char c : t) {
        if (c == '_') {
            if (prev_us) throw DataError("malformed lexicon term: '" + raw + "'");
            prev_us = true;
        } else if (std::isalnum(c)) {
            prev_us = false;
        } else {
            throw DataError("lexicon term has unsupported character: '" + raw + "'");
        }
    }
    if (prev_us) throw DataError("malformed lexicon term: '" + raw + "'");
    return t;
}

void normalize_section(std::vector<std::string>& section, std::unordered_set<std::string>& seen) {
    for (auto& term : section) {
        term = normalize_term(term);
        if (!seen.insert(term).second)
            throw DataError("duplicate lexicon term: '" + term + "'");
    }
}

}  // namespace

Lexicon Lexicon::make(std::vector<std::string> keywords,
                      std::vector<std::string> suspicious,
                      std::vector<std::string> nonsuspicious) {
    Lexicon lex{std::move(keywords), std::move(suspicious), std::move(nonsuspicious)};
    std::unordered_set<std::string> seen;
    normalize_section(lex.keywords, seen);
    normalize_section(lex.suspicious, seen);
    normalize_section(lex.nonsuspicious, seen);
    return lex;
}

const Lexicon& default_lexicon() {
    static const Lexicon lex = Lexicon::make(
        {"attack", "blast", "bomb", "kill", "disaster", "target"},
        {"plan", "prepare", "meet", "tonight", "today", "will_be", "going_to_be", "shall",
         "avenged"},
        {"condemn", "victims", "peace", "sad"});
    return lex;
}

Lexicon load_lexicon(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open lexicon file: " + path.string());

    std::vector<std::string> kw, si, ni;
    std::vector<std::string>* section = nullptr;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // trim
        auto b = line.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t");
        line = line.substr(b, e - b + 1);

        if (line == "[keywords]") {
            section = &kw;
        } else if (line == "[suspicious]") {
            section = &si;
        } else if (line == "[nonsuspicious]") {
            section = &ni;
        } else if (line.front() == '[') {
            throw DataError("unknown lexicon section: " + line);
        } else {
            if (!section) throw DataError("lexicon term before any section header: " + line);
            section->push_back(line);
        }
    }
    return Lexicon::make(std::move(kw), std::move(si), std::move(ni));
}

void save_lexicon(const Lexicon& lex, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write lexicon file: " + path.string());
    out << "[keywords]\n";
    for (const auto& t : lex.keywords) out << t << "\n";
    out << "[suspicious]\n";
    for (const auto& t : lex.suspicious) out << t << "\n";
    out << "[nonsuspicious]\n";
    for (const auto& t : lex.nonsuspicious) out << t << "\n";
    if (!out) throw DataError("I/O failure writing " + path.string());
}

}  // namespace mailsieve
