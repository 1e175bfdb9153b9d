#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace cvens {

// One dataset row: a meme-style record with an id, an image reference, the
// overlaid text, and an optional binary label (1 = hateful, 0 = non-hateful).
struct MemeRecord {
    std::string id;
    std::string image_ref;
    std::string text;
    std::optional<int> label;

    bool labeled() const { return label.has_value(); }
};

class Dataset {
public:
    Dataset() = default;
    explicit Dataset(std::vector<MemeRecord> records);

    const std::vector<MemeRecord>& records() const { return records_; }
    std::size_t size() const { return records_.size(); }
    bool empty() const { return records_.empty(); }

    const MemeRecord& at(std::size_t pos) const { return records_.at(pos); }
    bool contains(const std::string& id) const { return id_index_.count(id) != 0; }
    std::size_t position_of(const std::string& id) const;
    const MemeRecord& by_id(const std::string& id) const { return records_[position_of(id)]; }

    // Counts of label==1 / label==0 records; unlabeled rows count in neither.
    std::size_t count_positive() const;
    std::size_t count_negative() const;

private:
    std::vector<MemeRecord> records_;
    std::unordered_map<std::string, std::size_t> id_index_;
};

enum class ConfounderKind { TextConfounder, ImageConfounder };

const char* to_string(ConfounderKind kind);
ConfounderKind confounder_kind_from_string(const std::string& s);

// Undirected link between two records with opposite labels that share either
// normalized text (TextConfounder) or the image reference (ImageConfounder).
// Endpoints are stored with a_id < b_id.
struct ConfounderLink {
    std::string a_id;
    std::string b_id;
    ConfounderKind kind;

    bool operator==(const ConfounderLink& o) const = default;
};

class ConfounderGraph {
public:
    ConfounderGraph() = default;
    explicit ConfounderGraph(std::vector<ConfounderLink> links);

    const std::vector<ConfounderLink>& links() const { return links_; }
    // Connected components over the links; each group sorted, groups ordered
    // by their smallest id. Partition of exactly the linked ids.
    const std::vector<std::vector<std::string>>& groups() const { return groups_; }

    bool in_group(const std::string& id) const { return group_index_.count(id) != 0; }
    // Index into groups() or npos when the id is in no link.
    std::size_t group_of(const std::string& id) const;

    // Ids linked to `id` by a TextConfounder link, sorted.
    std::vector<std::string> text_confounders_of(const std::string& id) const;
    // True when the id is an endpoint of at least one TextConfounder link.
    bool has_text_link(const std::string& id) const { return text_linked_.count(id) != 0; }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::vector<ConfounderLink> links_;
    std::vector<std::vector<std::string>> groups_;
    std::unordered_map<std::string, std::size_t> group_index_;
    std::unordered_map<std::string, std::vector<std::string>> text_neighbors_;
    std::unordered_map<std::string, bool> text_linked_;
};

// Reads a line-delimited dataset: one JSON object per line with string "id"
// (integers accepted and stringified), string "img", string "text" and an
// optional integer "label" in {0,1}. Blank lines are skipped.
Dataset load_dataset(const std::filesystem::path& path);

// Writes the same line-delimited format; load_dataset(save_dataset(ds)) == ds.
void save_dataset(const Dataset& ds, const std::filesystem::path& path);

// Scans for confounder pairs: equal normalized text + different image + opposite
// labels (text confounder), or equal image + different normalized text + opposite
// labels (image confounder). All records must be labeled.
ConfounderGraph detect_confounders(const Dataset& ds);

// Graph export/import: JSON document listing links as (a_id, b_id, kind).
void save_confounder_graph(const ConfounderGraph& graph, const std::filesystem::path& path);
ConfounderGraph load_confounder_graph(const std::filesystem::path& path);

// Concatenates datasets, rejecting duplicate ids across the parts.
Dataset merge_datasets(const std::vector<const Dataset*>& parts);

}  // namespace cvens
