#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace cvens {

// Parallel score/label vectors for metric evaluation.
struct ScoredLabels {
    std::vector<double> scores;
    std::vector<int> labels;

    std::size_t size() const { return scores.size(); }
};

// Area under the ROC curve as the Mann-Whitney statistic: the fraction of
// (positive, negative) pairs where the positive scores higher, ties counted
// as 1/2. Computed via mid-rank sums in O(n log n). Both classes required.
double auroc(const ScoredLabels& s);

// Fraction of labels matching indicator(score >= threshold). A score equal
// to the threshold predicts positive.
double accuracy(const ScoredLabels& s, double threshold = 0.5);

}  // namespace cvens
