#include "cvens/metrics.hpp"

#include "cvens/error.hpp"

#include <algorithm>
#include <numeric>

namespace cvens {

namespace {

void check_scored(const ScoredLabels& s) {
    if (s.scores.size() != s.labels.size()) {
        throw UserError("scores and labels differ in length (" +
                        std::to_string(s.scores.size()) + " vs " +
                        std::to_string(s.labels.size()) + ")");
    }
    for (int y : s.labels) {
        if (y != 0 && y != 1) throw UserError("label " + std::to_string(y) + " outside {0,1}");
    }
}

}  // namespace

double auroc(const ScoredLabels& s) {
    check_scored(s);
    const std::size_t n = s.size();
    if (n < 2) throw UserError("AUROC needs at least two examples");

    const std::size_t n_pos = static_cast<std::size_t>(
        std::count(s.labels.begin(), s.labels.end(), 1));
    const std::size_t n_neg = n - n_pos;
    if (n_pos == 0 || n_neg == 0) {
        throw UserError("AUROC undefined on single-class input (" + std::to_string(n_pos) +
                        " positives, " + std::to_string(n_neg) + " negatives)");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return s.scores[a] < s.scores[b]; });

    // Mid-rank sum over positives; ties share the average of their rank block.
    double pos_rank_sum = 0.0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && s.scores[order[j]] == s.scores[order[i]]) ++j;
        const double mid_rank = 0.5 * static_cast<double>(i + 1 + j);  // ranks i+1 .. j
        for (std::size_t t = i; t < j; ++t) {
            if (s.labels[order[t]] == 1) pos_rank_sum += mid_rank;
        }
        i = j;
    }

    const double u = pos_rank_sum -
                     0.5 * static_cast<double>(n_pos) * static_cast<double>(n_pos + 1);
    return u / (static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

double accuracy(const ScoredLabels& s, double threshold) {
    check_scored(s);
    if (s.size() == 0) throw UserError("accuracy undefined on empty input");
    std::size_t hits = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const int predicted = s.scores[i] >= threshold ? 1 : 0;
        if (predicted == s.labels[i]) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(s.size());
}

}  // namespace cvens
