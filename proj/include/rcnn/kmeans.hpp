#pragma once

#include <cstdint>
#include <vector>

#include "rcnn/grid.hpp"

namespace rcnn {

struct KmeansResult {
    Grid<uint8_t> labels;                 // cluster index per pixel
    std::vector<double> centers;          // ascending
    std::vector<double> objective_trace;  // within-cluster sum of squares per sweep
    int iterations = 0;
};

/// 1-D k-means on gray values. Centers start at evenly spaced quantiles of
/// the sorted values, so runs are reproducible. Stops when no pixel changes
/// cluster or after max_iter sweeps.
KmeansResult kmeans_cluster(const Grid<uint8_t>& image, int k, int max_iter = 100);

/// k = 2 convenience: the cluster with the larger center is foreground.
Grid<uint8_t> kmeans_segment(const Grid<uint8_t>& image, int max_iter = 100);

}  // namespace rcnn
