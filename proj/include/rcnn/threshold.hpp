#pragma once

#include <array>
#include <cstdint>

#include "rcnn/grid.hpp"

namespace rcnn {

struct GrayHistogram {
    std::array<uint64_t, 256> counts{};
    uint64_t total = 0;

    static GrayHistogram of(const Grid<uint8_t>& image);
    void add(uint8_t value) {
        ++counts[value];
        ++total;
    }
};

/// Between-class-variance maximizer. Returns the largest gray level assigned
/// to the lower class; ties resolve to the smallest threshold, and splits
/// that leave either class empty are skipped.
int otsu_threshold(const GrayHistogram& hist);

/// Maximum-entropy split of an ignition map: the threshold maximizing the sum
/// of the two classes' Shannon entropies. Same tie and empty-class rules.
int32_t kapur_threshold(const Grid<int32_t>& map);

}  // namespace rcnn
