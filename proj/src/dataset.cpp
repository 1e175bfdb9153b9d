#include "cvens/dataset.hpp"

#include "cvens/error.hpp"
#include "cvens/text_norm.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace cvens {

using nlohmann::json;

Dataset::Dataset(std::vector<MemeRecord> records) : records_(std::move(records)) {
    id_index_.reserve(records_.size());
    for (std::size_t i = 0; i < records_.size(); ++i) {
        const MemeRecord& rec = records_[i];
        if (rec.id.empty()) {
            throw UserError("record at position " + std::to_string(i) + " has an empty id");
        }
        if (rec.label && *rec.label != 0 && *rec.label != 1) {
            throw UserError("record '" + rec.id + "' has label " + std::to_string(*rec.label) +
                            " outside {0,1}");
        }
        if (rec.text.empty() && rec.image_ref.empty()) {
            throw UserError("record '" + rec.id + "' has neither text nor an image reference");
        }
        auto [it, inserted] = id_index_.emplace(rec.id, i);
        if (!inserted) {
            throw UserError("duplicate id '" + rec.id + "' at positions " +
                            std::to_string(it->second) + " and " + std::to_string(i));
        }
    }
}

std::size_t Dataset::position_of(const std::string& id) const {
    auto it = id_index_.find(id);
    if (it == id_index_.end()) throw UserError("unknown record id '" + id + "'");
    return it->second;
}

std::size_t Dataset::count_positive() const {
    return static_cast<std::size_t>(std::count_if(
        records_.begin(), records_.end(),
        [](const MemeRecord& r) { return r.label && *r.label == 1; }));
}

std::size_t Dataset::count_negative() const {
    return static_cast<std::size_t>(std::count_if(
        records_.begin(), records_.end(),
        [](const MemeRecord& r) { return r.label && *r.label == 0; }));
}

const char* to_string(ConfounderKind kind) {
    return kind == ConfounderKind::TextConfounder ? "text" : "image";
}

ConfounderKind confounder_kind_from_string(const std::string& s) {
    if (s == "text") return ConfounderKind::TextConfounder;
    if (s == "image") return ConfounderKind::ImageConfounder;
    throw UserError("unknown confounder kind '" + s + "'");
}

namespace {

// Union-find over link endpoints.
class DisjointSets {
public:
    std::size_t index_of(const std::string& id) {
        auto [it, inserted] = index_.emplace(id, parent_.size());
        if (inserted) {
            parent_.push_back(it->second);
            ids_.push_back(id);
        }
        return it->second;
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

    std::vector<std::vector<std::string>> components() {
        std::map<std::size_t, std::vector<std::string>> by_root;
        for (std::size_t i = 0; i < parent_.size(); ++i) {
            by_root[find(i)].push_back(ids_[i]);
        }
        std::vector<std::vector<std::string>> out;
        out.reserve(by_root.size());
        for (auto& [root, members] : by_root) {
            std::sort(members.begin(), members.end());
            out.push_back(std::move(members));
        }
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        return out;
    }

private:
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::size_t> parent_;
    std::vector<std::string> ids_;
};

}  // namespace

ConfounderGraph::ConfounderGraph(std::vector<ConfounderLink> links) {
    for (auto& link : links) {
        if (link.a_id == link.b_id) {
            throw UserError("confounder link from '" + link.a_id + "' to itself");
        }
        if (link.b_id < link.a_id) std::swap(link.a_id, link.b_id);
    }
    std::sort(links.begin(), links.end(), [](const ConfounderLink& x, const ConfounderLink& y) {
        return std::tie(x.a_id, x.b_id, x.kind) < std::tie(y.a_id, y.b_id, y.kind);
    });
    links.erase(std::unique(links.begin(), links.end()), links.end());
    links_ = std::move(links);

    DisjointSets sets;
    for (const ConfounderLink& link : links_) {
        sets.unite(sets.index_of(link.a_id), sets.index_of(link.b_id));
        if (link.kind == ConfounderKind::TextConfounder) {
            text_neighbors_[link.a_id].push_back(link.b_id);
            text_neighbors_[link.b_id].push_back(link.a_id);
            text_linked_[link.a_id] = true;
            text_linked_[link.b_id] = true;
        }
    }
    for (auto& [id, neighbors] : text_neighbors_) {
        std::sort(neighbors.begin(), neighbors.end());
        neighbors.erase(std::unique(neighbors.begin(), neighbors.end()), neighbors.end());
    }
    groups_ = sets.components();
    for (std::size_t g = 0; g < groups_.size(); ++g) {
        for (const std::string& id : groups_[g]) group_index_[id] = g;
    }
}

std::size_t ConfounderGraph::group_of(const std::string& id) const {
    auto it = group_index_.find(id);
    return it == group_index_.end() ? npos : it->second;
}

std::vector<std::string> ConfounderGraph::text_confounders_of(const std::string& id) const {
    auto it = text_neighbors_.find(id);
    return it == text_neighbors_.end() ? std::vector<std::string>{} : it->second;
}

namespace {

std::string json_id_field(const json& j, std::size_t line_no) {
    if (!j.contains("id")) {
        throw UserError("line " + std::to_string(line_no) + ": missing \"id\" field");
    }
    const json& id = j.at("id");
    if (id.is_string()) return id.get<std::string>();
    if (id.is_number_integer()) return std::to_string(id.get<long long>());
    throw UserError("line " + std::to_string(line_no) + ": \"id\" must be a string or integer");
}

}  // namespace

Dataset load_dataset(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw UserError("cannot open dataset file '" + path.string() + "'");

    std::vector<MemeRecord> records;
    std::unordered_map<std::string, std::size_t> first_line_of;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            throw UserError("line " + std::to_string(line_no) + ": malformed record: " + e.what());
        }
        if (!j.is_object()) {
            throw UserError("line " + std::to_string(line_no) + ": record is not an object");
        }

        MemeRecord rec;
        rec.id = json_id_field(j, line_no);
        if (j.contains("img")) {
            if (!j.at("img").is_string()) {
                throw UserError("line " + std::to_string(line_no) + ": \"img\" must be a string");
            }
            rec.image_ref = j.at("img").get<std::string>();
        }
        if (j.contains("text")) {
            if (!j.at("text").is_string()) {
                throw UserError("line " + std::to_string(line_no) + ": \"text\" must be a string");
            }
            rec.text = j.at("text").get<std::string>();
        }
        if (j.contains("label") && !j.at("label").is_null()) {
            if (!j.at("label").is_number_integer()) {
                throw UserError("line " + std::to_string(line_no) +
                                ": \"label\" must be an integer");
            }
            const long long label = j.at("label").get<long long>();
            if (label != 0 && label != 1) {
                throw UserError("line " + std::to_string(line_no) + ": label " +
                                std::to_string(label) + " outside {0,1}");
            }
            rec.label = static_cast<int>(label);
        }
        if (rec.text.empty() && rec.image_ref.empty()) {
            throw UserError("line " + std::to_string(line_no) + ": record '" + rec.id +
                            "' has neither text nor an image reference");
        }

        auto [it, inserted] = first_line_of.emplace(rec.id, line_no);
        if (!inserted) {
            throw UserError("duplicate id '" + rec.id + "' on lines " +
                            std::to_string(it->second) + " and " + std::to_string(line_no));
        }
        records.push_back(std::move(rec));
    }
    return Dataset(std::move(records));
}

void save_dataset(const Dataset& ds, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw UserError("cannot write dataset file '" + path.string() + "'");
    for (const MemeRecord& rec : ds.records()) {
        json j;
        j["id"] = rec.id;
        j["img"] = rec.image_ref;
        j["text"] = rec.text;
        if (rec.label) j["label"] = *rec.label;
        out << j.dump() << '\n';
    }
    if (!out) throw UserError("failed writing dataset file '" + path.string() + "'");
}

ConfounderGraph detect_confounders(const Dataset& ds) {
    for (const MemeRecord& rec : ds.records()) {
        if (!rec.labeled()) {
            throw UserError("record '" + rec.id + "' is unlabeled; confounder detection needs labels");
        }
    }

    std::vector<std::string> norm_text(ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) norm_text[i] = normalize_text(ds.at(i).text);

    std::unordered_map<std::string, std::vector<std::size_t>> by_text;
    std::unordered_map<std::string, std::vector<std::size_t>> by_image;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (!norm_text[i].empty()) by_text[norm_text[i]].push_back(i);
        if (!ds.at(i).image_ref.empty()) by_image[ds.at(i).image_ref].push_back(i);
    }

    std::vector<ConfounderLink> links;
    for (const auto& [text, members] : by_text) {
        for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                const MemeRecord& ra = ds.at(members[a]);
                const MemeRecord& rb = ds.at(members[b]);
                if (*ra.label != *rb.label && ra.image_ref != rb.image_ref) {
                    links.push_back({ra.id, rb.id, ConfounderKind::TextConfounder});
                }
            }
        }
    }
    for (const auto& [image, members] : by_image) {
        for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                const MemeRecord& ra = ds.at(members[a]);
                const MemeRecord& rb = ds.at(members[b]);
                if (*ra.label != *rb.label && norm_text[members[a]] != norm_text[members[b]]) {
                    links.push_back({ra.id, rb.id, ConfounderKind::ImageConfounder});
                }
            }
        }
    }
    return ConfounderGraph(std::move(links));
}

void save_confounder_graph(const ConfounderGraph& graph, const std::filesystem::path& path) {
    json j;
    j["links"] = json::array();
    for (const ConfounderLink& link : graph.links()) {
        j["links"].push_back({{"a", link.a_id}, {"b", link.b_id}, {"kind", to_string(link.kind)}});
    }
    j["groups"] = graph.groups();
    std::ofstream out(path);
    if (!out) throw UserError("cannot write graph file '" + path.string() + "'");
    out << j.dump(2) << '\n';
}

ConfounderGraph load_confounder_graph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw UserError("cannot open graph file '" + path.string() + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw UserError("malformed graph file '" + path.string() + "': " + e.what());
    }
    std::vector<ConfounderLink> links;
    for (const json& l : j.at("links")) {
        links.push_back({l.at("a").get<std::string>(), l.at("b").get<std::string>(),
                         confounder_kind_from_string(l.at("kind").get<std::string>())});
    }
    return ConfounderGraph(std::move(links));
}

Dataset merge_datasets(const std::vector<const Dataset*>& parts) {
    std::vector<MemeRecord> records;
    std::size_t total = 0;
    for (const Dataset* part : parts) total += part->size();
    records.reserve(total);
    for (const Dataset* part : parts) {
        for (const MemeRecord& rec : part->records()) records.push_back(rec);
    }
    return Dataset(std::move(records));
}

}  // namespace cvens
