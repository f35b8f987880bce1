#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mailsieve/types.hpp"

namespace mailsieve {

struct Email {
    std::string id;
    std::optional<std::string> subject;
    std::string body;  // non-empty after parsing
    std::optional<Label> label;
};

// An ordered training set in which every email carries a label.
struct LabeledCorpus {
    std::vector<Email> emails;
    std::size_t positive_count = 0;
    std::size_t negative_count = 0;

    std::size_t size() const { return emails.size(); }

    // Validates: at least one email, every email labeled with non-empty body,
    // ids unique. Caches the class tallies.
    static LabeledCorpus make(std::vector<Email> emails);
};

// Accepts either bare body text or a simple header-prefixed message
// ("Header: value" lines, blank line, body). Only the Subject header is kept;
// To/Cc/Bcc/Date and everything else structural is dropped. Content analysis
// works on subject+body alone.
Email parse_email(std::string_view raw);

// Manifest: one record per line, "<label>\t<path>" or "<label>\tinline:<text>",
// '#' lines ignored. Labels are Yes/No, case-insensitive. Paths resolve
// relative to the manifest location. An inline payload may use \n, \t and \\
// escapes so a multi-line body fits on one record line.
LabeledCorpus load_corpus(const std::filesystem::path& manifest_path);

// Writes a self-contained manifest (all records inline). load_corpus on the
// result restores the same ordered bodies, subjects and labels.
void save_corpus(const LabeledCorpus& corpus, const std::filesystem::path& path);

}  // namespace mailsieve
