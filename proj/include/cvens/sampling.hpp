#pragma once

#include "cvens/dataset.hpp"
#include "cvens/rng.hpp"

#include <string>
#include <vector>

namespace cvens {

// Per-record sampling distribution for batch construction.
class SamplingWeights {
public:
    SamplingWeights(std::vector<std::string> ids, std::vector<double> raw_weights);

    std::size_t size() const { return ids_.size(); }
    const std::vector<std::string>& ids() const { return ids_; }
    const std::vector<double>& raw_weights() const { return raw_; }
    const std::vector<double>& probabilities() const { return prob_; }
    double probability_of(const std::string& id) const;

    // One draw from the distribution (inverse CDF over the cumulative sums).
    std::size_t sample_index(Rng& rng) const;

private:
    std::vector<std::string> ids_;
    std::vector<double> raw_;
    std::vector<double> prob_;
    std::vector<double> cumulative_;
};

// A record paired with an opposite-label partner for margin ranking:
// the partner is a text confounder of the record when one exists, otherwise
// a random record of the opposite label. y_rank = +1 iff the record is hateful.
struct PairedExample {
    std::string x_id;
    std::string pair_id;
    int y_rank;
};

// Raw weight `factor` for every id that is an endpoint of a text-confounder
// link, 1 otherwise (image-only confounders are not upsampled). factor >= 1.
SamplingWeights upsample_weights(const Dataset& ds, const ConfounderGraph& graph,
                                 double factor = 3.0);

// batch_size ids drawn independently with replacement.
std::vector<std::string> draw_batch(const SamplingWeights& weights, std::size_t batch_size,
                                    Rng& rng);

// One PairedExample per labeled record, in input order. Both labels must be
// present among the labeled records.
std::vector<PairedExample> pair_for_ranking(const Dataset& ds, const ConfounderGraph& graph,
                                            Rng& rng);
std::vector<PairedExample> pair_for_ranking(const std::vector<std::string>& ids,
                                            const std::vector<int>& labels,
                                            const ConfounderGraph& graph, Rng& rng);

}  // namespace cvens
