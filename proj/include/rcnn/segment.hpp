#pragma once

#include <cstdint>

#include "rcnn/network.hpp"
#include "rcnn/threshold.hpp"

namespace rcnn {

/// 0/1 foreground mask with the source image's dimensions.
using BinaryMask = Grid<uint8_t>;

struct SegmentationScores {
    double pa = 0.0;
    double iou = 0.0;
    double dice = 0.0;
};

struct RcnnSegmentation {
    BinaryMask mask;
    Grid<int32_t> ignition_map;
    int32_t threshold = 0;
    bool polarity_flipped = false;
};

/// Ignition map -> maximum-entropy split -> foreground where counts exceed
/// the threshold. The mask is flipped when the selected foreground is darker
/// than the background, so bright objects always report as 1.
RcnnSegmentation rcnn_segment_detail(const Grid<uint8_t>& image, const RcnnParams& params);
BinaryMask rcnn_segment(const Grid<uint8_t>& image, const RcnnParams& params);

/// Otsu baseline; foreground = gray above the threshold.
BinaryMask otsu_segment(const Grid<uint8_t>& image);

SegmentationScores segmentation_metrics(const BinaryMask& pred, const BinaryMask& truth);

}  // namespace rcnn
