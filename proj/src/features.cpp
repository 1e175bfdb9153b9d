#include "cvens/features.hpp"

#include "cvens/error.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace cvens {

FeatureTable::FeatureTable(std::vector<std::string> ids, std::size_t dim,
                           std::vector<double> values)
    : ids_(std::move(ids)), dim_(dim), values_(std::move(values)) {
    if (values_.size() != ids_.size() * dim_) {
        throw UserError("feature matrix shape mismatch: " + std::to_string(ids_.size()) +
                        " ids x " + std::to_string(dim_) + " dims vs " +
                        std::to_string(values_.size()) + " values");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) throw UserError("non-finite feature value");
    }
    index_.reserve(ids_.size());
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        if (!index_.emplace(ids_[i], i).second) {
            throw UserError("duplicate id '" + ids_[i] + "' in feature table");
        }
    }
}

std::size_t FeatureTable::position_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw UserError("no feature row for id '" + id + "'");
    return it->second;
}

FeatureTable FeatureTable::select(const std::vector<std::string>& ids) const {
    std::vector<double> values;
    values.reserve(ids.size() * dim_);
    for (const std::string& id : ids) {
        auto r = row(position_of(id));
        values.insert(values.end(), r.begin(), r.end());
    }
    return FeatureTable(ids, dim_, std::move(values));
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

}  // namespace

FeatureTable load_features(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw UserError("cannot open feature file '" + path.string() + "'");

    std::string line;
    if (!std::getline(in, line)) throw UserError("feature file '" + path.string() + "' is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto header = split_csv_line(line);
    if (header.empty() || header[0] != "id") {
        throw UserError("feature file '" + path.string() + "' must start with an `id,...` header");
    }
    const std::size_t dim = header.size() - 1;

    std::vector<std::string> ids;
    std::vector<double> values;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != dim + 1) {
            throw UserError("line " + std::to_string(line_no) + ": expected " +
                            std::to_string(dim + 1) + " fields, got " +
                            std::to_string(fields.size()));
        }
        ids.push_back(fields[0]);
        for (std::size_t c = 1; c < fields.size(); ++c) {
            double v = 0.0;
            const auto [ptr, ec] =
                std::from_chars(fields[c].data(), fields[c].data() + fields[c].size(), v);
            if (ec != std::errc{} || ptr != fields[c].data() + fields[c].size()) {
                throw UserError("line " + std::to_string(line_no) + ": bad numeric field '" +
                                fields[c] + "'");
            }
            values.push_back(v);
        }
    }
    return FeatureTable(std::move(ids), dim, std::move(values));
}

void save_features(const FeatureTable& table, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw UserError("cannot write feature file '" + path.string() + "'");
    out << "id";
    for (std::size_t c = 0; c < table.dim(); ++c) out << ",f" << c;
    out << '\n';
    out.precision(17);
    for (std::size_t i = 0; i < table.size(); ++i) {
        out << table.ids()[i];
        for (double v : table.row(i)) out << ',' << v;
        out << '\n';
    }
    if (!out) throw UserError("failed writing feature file '" + path.string() + "'");
}

}  // namespace cvens
