#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace cvens {

// Dense numeric matrix keyed by record id, row-major.
class FeatureTable {
public:
    FeatureTable() = default;
    FeatureTable(std::vector<std::string> ids, std::size_t dim, std::vector<double> values);

    std::size_t size() const { return ids_.size(); }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& ids() const { return ids_; }

    std::span<const double> row(std::size_t i) const {
        return {values_.data() + i * dim_, dim_};
    }
    bool contains(const std::string& id) const { return index_.count(id) != 0; }
    std::size_t position_of(const std::string& id) const;

    // Rows for the given ids, in the given order; missing ids are an error.
    FeatureTable select(const std::vector<std::string>& ids) const;

private:
    std::vector<std::string> ids_;
    std::size_t dim_ = 0;
    std::vector<double> values_;
    std::unordered_map<std::string, std::size_t> index_;
};

// CSV with a header line `id,<name>,<name>,...`; one row per record, the
// leading column is the id, the rest parse as finite doubles.
FeatureTable load_features(const std::filesystem::path& path);
void save_features(const FeatureTable& table, const std::filesystem::path& path);

}  // namespace cvens
