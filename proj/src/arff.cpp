#include "mailsieve/arff.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace mailsieve {

namespace {

bool valid_name(std::string_view s) {
    if (s.empty()) return false;
    for (unsigned char c : s)
        if (!std::isalnum(c) && c != '_') return false;
    return true;
}

}  // namespace

std::string arff_to_string(const FeatureMatrix& m, const std::string& relation_name) {
    if (m.n_rows() == 0 || m.n_cols() == 0) throw DataError("cannot export an empty matrix");
    if (!valid_name(relation_name))
        throw DataError("invalid relation name: '" + relation_name + "'");
    for (const auto& name : m.attribute_names)
        if (!valid_name(name) || name == "class")
            throw DataError("invalid attribute name: '" + name + "'");

    std::string out;
    out += "@relation " + relation_name + "\n";
    for (const auto& name : m.attribute_names) out += "@attribute " + name + " {0,1}\n";
    out += "@attribute class {Yes,No}\n";
    out += "@data\n";
    for (std::size_t r = 0; r < m.n_rows(); ++r) {
        for (std::size_t c = 0; c < m.n_cols(); ++c) {
            out += m.at(r, c) ? '1' : '0';
            out += ',';
        }
        out += to_string(m.labels[r]);
        out += '\n';
    }
    return out;
}

void export_arff(const FeatureMatrix& m, const std::string& relation_name,
                 const std::filesystem::path& out_path) {
    const std::string doc = arff_to_string(m, relation_name);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw DataError("cannot write ARFF file: " + out_path.string());
    out << doc;
    if (!out) throw DataError("I/O failure writing " + out_path.string());
}

FeatureMatrix import_arff(std::istream& in) {
    FeatureMatrix m;
    std::string line;
    bool saw_relation = false, saw_class = false, in_data = false;
    std::size_t row_no = 0;

    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() && !in_data) continue;

        if (!in_data) {
            if (line.rfind("@relation ", 0) == 0) {
                if (saw_relation) throw DataError("ARFF: duplicate @relation");
                if (!valid_name(line.substr(10)))
                    throw DataError("ARFF: invalid relation name");
                saw_relation = true;
            } else if (line.rfind("@attribute ", 0) == 0) {
                if (!saw_relation) throw DataError("ARFF: @attribute before @relation");
                if (saw_class) throw DataError("ARFF: attribute after the class attribute");
                std::string rest = line.substr(11);
                auto space = rest.find(' ');
                if (space == std::string::npos) throw DataError("ARFF: malformed @attribute");
                std::string name = rest.substr(0, space);
                std::string domain = rest.substr(space + 1);
                if (name == "class") {
                    if (domain != "{Yes,No}")
                        throw DataError("ARFF: class attribute must be {Yes,No}");
                    saw_class = true;
                } else {
                    if (!valid_name(name)) throw DataError("ARFF: invalid attribute name");
                    if (domain != "{0,1}")
                        throw DataError("ARFF: attribute '" + name + "' is not binary {0,1}");
                    m.attribute_names.push_back(name);
                }
            } else if (line == "@data") {
                if (!saw_class) throw DataError("ARFF: missing class attribute before @data");
                if (m.attribute_names.empty())
                    throw DataError("ARFF: no feature attributes declared");
                in_data = true;
            } else {
                throw DataError("ARFF: unexpected header line: " + line);
            }
            continue;
        }

        if (line.empty()) continue;
        ++row_no;
        // d binary values then the class token, comma separated
        std::size_t pos = 0;
        for (std::size_t c = 0; c < m.attribute_names.size(); ++c) {
            if (pos + 1 >= line.size() || (line[pos] != '0' && line[pos] != '1') ||
                line[pos + 1] != ',')
                throw DataError("ARFF: malformed data row " + std::to_string(row_no));
            m.cells.push_back(line[pos] == '1' ? 1 : 0);
            pos += 2;
        }
        std::string_view cls = std::string_view(line).substr(pos);
        if (cls == "Yes")
            m.labels.push_back(Label::Yes);
        else if (cls == "No")
            m.labels.push_back(Label::No);
        else
            throw DataError("ARFF: unknown class token '" + std::string(cls) + "' in row " +
                            std::to_string(row_no));
    }

    if (!in_data) throw DataError("ARFF: missing @data section");
    if (m.labels.empty()) throw DataError("ARFF: empty data section");
    return m;
}

FeatureMatrix import_arff(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open ARFF file: " + path.string());
    return import_arff(in);
}

}  // namespace mailsieve
