#include "rcnn/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

namespace rcnn {

GrayHistogram GrayHistogram::of(const Grid<uint8_t>& image) {
    GrayHistogram h;
    for (uint8_t v : image)
        h.add(v);
    return h;
}

int otsu_threshold(const GrayHistogram& hist) {
    if (hist.total == 0)
        throw DegenerateInput("empty histogram");
    int distinct = 0;
    for (uint64_t c : hist.counts)
        distinct += c > 0;
    if (distinct < 2)
        throw DegenerateInput("histogram has a single gray level");

    const double total = static_cast<double>(hist.total);
    double mean_total = 0.0;
    for (int i = 0; i < 256; ++i)
        mean_total += i * (hist.counts[i] / total);

    int best_t = -1;
    double best_sigma = -1.0;
    double p1 = 0.0, mean1_mass = 0.0;
    for (int t = 0; t < 255; ++t) {
        p1 += hist.counts[t] / total;
        mean1_mass += t * (hist.counts[t] / total);
        double p2 = 1.0 - p1;
        if (p1 <= 0.0 || p2 <= 0.0)
            continue;
        double mu1 = mean1_mass / p1;
        double mu2 = (mean_total - mean1_mass) / p2;
        double sigma = p1 * p2 * (mu1 - mu2) * (mu1 - mu2);
        if (sigma > best_sigma) {
            best_sigma = sigma;
            best_t = t;
        }
    }
    if (best_t < 0)
        throw DegenerateInput("no valid threshold split");
    return best_t;
}

int32_t kapur_threshold(const Grid<int32_t>& map) {
    std::map<int32_t, uint64_t> hist;
    for (int32_t v : map)
        ++hist[v];
    if (hist.size() < 2)
        throw DegenerateInput("map has a single value");

    std::vector<int32_t> values;
    std::vector<double> probs;
    const double total = static_cast<double>(map.size());
    for (auto [value, count] : hist) {
        values.push_back(value);
        probs.push_back(count / total);
    }

    // Candidate thresholds keep at least one value on each side.
    int32_t best_t = 0;
    double best_entropy = -1.0;
    double p_below = 0.0, h_below_mass = 0.0;
    double h_total_mass = 0.0;
    for (double p : probs)
        h_total_mass -= p * std::log(p);
    for (size_t k = 0; k + 1 < values.size(); ++k) {
        p_below += probs[k];
        h_below_mass -= probs[k] * std::log(probs[k]);
        double p_above = 1.0 - p_below;
        if (p_below <= 0.0 || p_above <= 0.0)
            continue;
        // H(class) = log P - (sum p log p) / P for the class mass.
        double h_below = std::log(p_below) + h_below_mass / p_below;
        double h_above = std::log(p_above) + (h_total_mass - h_below_mass) / p_above;
        double entropy = h_below + h_above;
        if (entropy > best_entropy) {
            best_entropy = entropy;
            best_t = values[k];
        }
    }
    return best_t;
}

}  // namespace rcnn
