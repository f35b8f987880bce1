#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "mailsieve/features.hpp"

namespace mailsieve {

// Serialized grammar (exact, LF line endings):
//   @relation <name>
//   @attribute <name> {0,1}            one per feature column
//   @attribute class {Yes,No}
//   @data
//   0|1,...,Yes|No                     one row per instance
// Names are restricted to [A-Za-z0-9_]+.
std::string arff_to_string(const FeatureMatrix& m, const std::string& relation_name);
void export_arff(const FeatureMatrix& m, const std::string& relation_name,
                 const std::filesystem::path& out);

// Strict inverse of export_arff on its own output.
FeatureMatrix import_arff(std::istream& in);
FeatureMatrix import_arff(const std::filesystem::path& path);

}  // namespace mailsieve
