#include "mailsieve/corpus.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace mailsieve {

namespace {

std::string normalize_newlines(std::string_view raw) {
    std::string s;
    s.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] == '\r') {
            if (i + 1 < raw.size() && raw[i + 1] == '\n') continue;
            s.push_back('\n');
        } else {
            s.push_back(raw[i]);
        }
    }
    return s;
}

bool is_blank(std::string_view s) {
    return s.find_first_not_of(" \t") == std::string_view::npos;
}

// "Name: value" with a letter-initial token before the colon.
bool looks_like_header(std::string_view line) {
    std::size_t i = 0;
    if (i >= line.size() || !std::isalpha(static_cast<unsigned char>(line[i]))) return false;
    while (i < line.size() &&
           (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '-'))
        ++i;
    if (i >= line.size() || line[i] != ':') return false;
    ++i;
    return i == line.size() || line[i] == ' ' || line[i] == '\t';
}

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    return true;
}

}  // namespace

Email parse_email(std::string_view raw) {
    std::string text = normalize_newlines(raw);
    if (is_blank(text)) throw DataError("empty message");

    Email email;
    std::size_t first_eol = text.find('\n');
    std::string_view first_line =
        std::string_view(text).substr(0, first_eol == std::string::npos ? text.size() : first_eol);

    if (!looks_like_header(first_line)) {
        email.body = text;
        return email;
    }

    // Header block runs until the first blank line; unknown headers are dropped.
    std::istringstream in(text);
    std::string line;
    bool in_headers = true;
    std::string body;
    while (std::getline(in, line)) {
        if (in_headers) {
            if (is_blank(line)) {
                in_headers = false;
                continue;
            }
            if (looks_like_header(line)) {
                auto colon = line.find(':');
                std::string name = line.substr(0, colon);
                std::string value = trim(std::string_view(line).substr(colon + 1));
                if (iequals(name, "Subject") && !value.empty()) email.subject = value;
            }
            continue;
        }
        body += line;
        body += '\n';
    }
    if (!body.empty() && body.back() == '\n' && text.back() != '\n') body.pop_back();
    if (is_blank(body)) throw DataError("empty message");
    email.body = body;
    return email;
}

LabeledCorpus LabeledCorpus::make(std::vector<Email> emails) {
    if (emails.empty()) throw DataError("empty corpus");
    LabeledCorpus corpus;
    std::unordered_set<std::string> ids;
    for (const auto& e : emails) {
        if (!e.label) throw DataError("unlabeled email: " + e.id);
        if (e.body.empty()) throw DataError("email with empty body: " + e.id);
        if (!ids.insert(e.id).second) throw DataError("duplicate id: " + e.id);
        if (*e.label == Label::Yes)
            ++corpus.positive_count;
        else
            ++corpus.negative_count;
    }
    corpus.emails = std::move(emails);
    return corpus;
}

namespace {

std::string unescape_inline(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '\\' && i + 1 < s.size()) {
            char c = s[++i];
            if (c == 'n')
                out.push_back('\n');
            else if (c == 't')
                out.push_back('\t');
            else if (c == '\\')
                out.push_back('\\');
            else {
                out.push_back('\\');
                out.push_back(c);
            }
        } else {
            out.push_back(s[i]);
        }
    }
    return out;
}

std::string escape_inline(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '\n')
            out += "\\n";
        else if (c == '\t')
            out += "\\t";
        else if (c == '\\')
            out += "\\\\";
        else
            out.push_back(c);
    }
    return out;
}

}  // namespace

LabeledCorpus load_corpus(const std::filesystem::path& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in) throw DataError("cannot open manifest: " + manifest_path.string());
    const auto base_dir = manifest_path.has_parent_path()
                              ? manifest_path.parent_path()
                              : std::filesystem::path(".");

    std::vector<Email> emails;
    std::string line;
    std::size_t record = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        ++record;

        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw DataError("manifest record " + std::to_string(record) +
                            ": expected <label>\\t<path-or-inline>");
        auto label = label_from_string(std::string_view(line).substr(0, tab));
        if (!label)
            throw DataError("manifest record " + std::to_string(record) +
                            ": unknown label '" + line.substr(0, tab) + "'");

        std::string_view payload = std::string_view(line).substr(tab + 1);
        Email email;
        if (payload.rfind("inline:", 0) == 0) {
            email = parse_email(unescape_inline(payload.substr(7)));
            email.id = "inline:" + std::to_string(record);
        } else {
            std::filesystem::path p(payload);
            if (p.is_relative()) p = base_dir / p;
            std::ifstream f(p, std::ios::binary);
            if (!f) throw DataError("missing email file: " + std::string(payload));
            std::ostringstream buf;
            buf << f.rdbuf();
            email = parse_email(buf.str());
            email.id = std::string(payload);
        }
        email.label = *label;
        emails.push_back(std::move(email));
    }
    if (emails.empty()) throw DataError("empty corpus");
    return LabeledCorpus::make(std::move(emails));
}

void save_corpus(const LabeledCorpus& corpus, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write corpus file: " + path.string());
    for (const auto& e : corpus.emails) {
        std::string raw;
        if (e.subject) raw = "Subject: " + *e.subject + "\n\n";
        raw += e.body;
        out << to_string(*e.label) << '\t' << "inline:" << escape_inline(raw) << '\n';
    }
    if (!out) throw DataError("I/O failure writing " + path.string());
}

}  // namespace mailsieve
