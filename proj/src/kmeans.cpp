#include "rcnn/kmeans.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

namespace rcnn {

KmeansResult kmeans_cluster(const Grid<uint8_t>& image, int k, int max_iter) {
    if (k < 2)
        throw InvalidParameter("k must be >= 2");
    if (max_iter < 1)
        throw InvalidParameter("max_iter must be >= 1");
    std::set<uint8_t> distinct(image.begin(), image.end());
    if (static_cast<int>(distinct.size()) < k)
        throw DegenerateInput("fewer distinct gray values than clusters");

    std::vector<uint8_t> sorted(image.begin(), image.end());
    std::sort(sorted.begin(), sorted.end());

    std::vector<double> centers(k);
    for (int c = 0; c < k; ++c) {
        double pos = (c + 0.5) * static_cast<double>(sorted.size()) / k;
        size_t idx = std::min(sorted.size() - 1, static_cast<size_t>(pos));
        centers[c] = sorted[idx];
    }

    // Assignments depend only on the gray value, so iterate over the 256
    // levels instead of every pixel.
    std::array<uint8_t, 256> level_label{};
    std::array<uint64_t, 256> level_count{};
    for (uint8_t v : image)
        ++level_count[v];

    KmeansResult result;
    for (int iter = 0; iter < max_iter; ++iter) {
        bool changed = iter == 0;
        for (int v = 0; v < 256; ++v) {
            if (level_count[v] == 0)
                continue;
            int best = 0;
            double best_d = std::abs(v - centers[0]);
            for (int c = 1; c < k; ++c) {
                double d = std::abs(v - centers[c]);
                if (d < best_d) {
                    best_d = d;
                    best = c;
                }
            }
            if (level_label[v] != best) {
                level_label[v] = static_cast<uint8_t>(best);
                changed = true;
            }
        }
        result.iterations = iter + 1;

        double objective = 0.0;
        for (int v = 0; v < 256; ++v) {
            if (level_count[v] == 0)
                continue;
            double d = v - centers[level_label[v]];
            objective += d * d * level_count[v];
        }
        result.objective_trace.push_back(objective);
        if (!changed)
            break;

        std::vector<double> mass(k, 0.0);
        std::vector<uint64_t> count(k, 0);
        for (int v = 0; v < 256; ++v) {
            if (level_count[v] == 0)
                continue;
            mass[level_label[v]] += static_cast<double>(v) * level_count[v];
            count[level_label[v]] += level_count[v];
        }
        for (int c = 0; c < k; ++c)
            if (count[c] > 0)
                centers[c] = mass[c] / count[c];
    }

    result.labels = Grid<uint8_t>(image.width(), image.height(), 0);
    for (size_t i = 0; i < image.size(); ++i)
        result.labels[i] = level_label[image[i]];
    result.centers = centers;
    return result;
}

Grid<uint8_t> kmeans_segment(const Grid<uint8_t>& image, int max_iter) {
    KmeansResult r = kmeans_cluster(image, 2, max_iter);
    uint8_t fg = r.centers[1] >= r.centers[0] ? 1 : 0;
    Grid<uint8_t> mask(image.width(), image.height());
    for (size_t i = 0; i < image.size(); ++i)
        mask[i] = r.labels[i] == fg ? 1 : 0;
    return mask;
}

}  // namespace rcnn
