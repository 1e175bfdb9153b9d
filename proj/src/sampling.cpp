#include "cvens/sampling.hpp"

#include "cvens/error.hpp"

#include <algorithm>
#include <unordered_map>

namespace cvens {

SamplingWeights::SamplingWeights(std::vector<std::string> ids, std::vector<double> raw_weights)
    : ids_(std::move(ids)), raw_(std::move(raw_weights)) {
    if (ids_.size() != raw_.size()) {
        throw UserError("sampling weights: id/weight length mismatch");
    }
    if (ids_.empty()) throw UserError("sampling weights: empty weight table");

    double total = 0.0;
    for (std::size_t i = 0; i < raw_.size(); ++i) {
        if (!(raw_[i] > 0.0)) {
            throw UserError("sampling weight for '" + ids_[i] + "' is not positive");
        }
        total += raw_[i];
    }
    prob_.resize(raw_.size());
    cumulative_.resize(raw_.size());
    double run = 0.0;
    for (std::size_t i = 0; i < raw_.size(); ++i) {
        prob_[i] = raw_[i] / total;
        run += raw_[i];
        cumulative_[i] = run / total;
    }
    cumulative_.back() = 1.0;
}

double SamplingWeights::probability_of(const std::string& id) const {
    auto it = std::find(ids_.begin(), ids_.end(), id);
    if (it == ids_.end()) throw UserError("no sampling weight for id '" + id + "'");
    return prob_[static_cast<std::size_t>(it - ids_.begin())];
}

std::size_t SamplingWeights::sample_index(Rng& rng) const {
    const double u = rng.uniform01();
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    return std::min<std::size_t>(static_cast<std::size_t>(it - cumulative_.begin()),
                                 cumulative_.size() - 1);
}

SamplingWeights upsample_weights(const Dataset& ds, const ConfounderGraph& graph, double factor) {
    if (factor < 1.0) throw UserError("upsample factor must be >= 1");
    std::vector<std::string> ids;
    std::vector<double> raw;
    ids.reserve(ds.size());
    raw.reserve(ds.size());
    for (const MemeRecord& rec : ds.records()) {
        ids.push_back(rec.id);
        raw.push_back(graph.has_text_link(rec.id) ? factor : 1.0);
    }
    return SamplingWeights(std::move(ids), std::move(raw));
}

std::vector<std::string> draw_batch(const SamplingWeights& weights, std::size_t batch_size,
                                    Rng& rng) {
    if (batch_size == 0) throw UserError("batch size must be >= 1");
    std::vector<std::string> batch;
    batch.reserve(batch_size);
    for (std::size_t i = 0; i < batch_size; ++i) {
        batch.push_back(weights.ids()[weights.sample_index(rng)]);
    }
    return batch;
}

std::vector<PairedExample> pair_for_ranking(const std::vector<std::string>& ids,
                                            const std::vector<int>& labels,
                                            const ConfounderGraph& graph, Rng& rng) {
    if (ids.size() != labels.size()) throw UserError("pairing: id/label length mismatch");

    std::unordered_map<std::string, int> label_of;
    std::vector<std::string> positives, negatives;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (labels[i] != 0 && labels[i] != 1) {
            throw UserError("label " + std::to_string(labels[i]) + " outside {0,1}");
        }
        label_of[ids[i]] = labels[i];
        (labels[i] == 1 ? positives : negatives).push_back(ids[i]);
    }
    if (positives.empty() || negatives.empty()) {
        throw UserError("pairing needs both classes; got " + std::to_string(positives.size()) +
                        " positives and " + std::to_string(negatives.size()) + " negatives");
    }

    std::vector<PairedExample> out;
    out.reserve(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const std::string& id = ids[i];
        // Text confounders that are actually present in this id set.
        std::vector<std::string> candidates;
        for (const std::string& c : graph.text_confounders_of(id)) {
            if (label_of.count(c)) candidates.push_back(c);
        }
        std::string partner;
        if (!candidates.empty()) {
            partner = candidates[rng.uniform_index(candidates.size())];
        } else {
            const auto& pool = labels[i] == 1 ? negatives : positives;
            partner = pool[rng.uniform_index(pool.size())];
        }
        out.push_back({id, partner, labels[i] == 1 ? +1 : -1});
    }
    return out;
}

std::vector<PairedExample> pair_for_ranking(const Dataset& ds, const ConfounderGraph& graph,
                                            Rng& rng) {
    std::vector<std::string> ids;
    std::vector<int> labels;
    for (const MemeRecord& rec : ds.records()) {
        if (!rec.labeled()) continue;
        ids.push_back(rec.id);
        labels.push_back(*rec.label);
    }
    return pair_for_ranking(ids, labels, graph, rng);
}

}  // namespace cvens
