#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mailsieve {

enum class Label : std::uint8_t { No = 0, Yes = 1 };

inline const char* to_string(Label l) { return l == Label::Yes ? "Yes" : "No"; }

// Case-insensitive; accepts only "yes"/"no".
std::optional<Label> label_from_string(std::string_view s);

// Malformed or inconsistent input data (bad manifest, bad ARFF, bad model
// file, ...). The CLI maps this to exit code 3.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mailsieve
