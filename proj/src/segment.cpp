#include "rcnn/segment.hpp"

namespace rcnn {

RcnnSegmentation rcnn_segment_detail(const Grid<uint8_t>& image, const RcnnParams& params) {
    StimulusField stimulus = stimulus_from_gray(image);
    RunResult run = run_rcnn(stimulus, params);

    RcnnSegmentation seg;
    seg.threshold = kapur_threshold(run.ignition_map);
    seg.mask = BinaryMask(image.width(), image.height());
    for (size_t i = 0; i < image.size(); ++i)
        seg.mask[i] = run.ignition_map[i] > seg.threshold ? 1 : 0;

    double fg_mass = 0.0, bg_mass = 0.0;
    uint64_t fg_n = 0, bg_n = 0;
    for (size_t i = 0; i < image.size(); ++i) {
        if (seg.mask[i]) {
            fg_mass += image[i];
            ++fg_n;
        } else {
            bg_mass += image[i];
            ++bg_n;
        }
    }
    if (fg_n > 0 && bg_n > 0 && fg_mass / fg_n < bg_mass / bg_n) {
        for (auto& v : seg.mask)
            v ^= 1;
        seg.polarity_flipped = true;
    }
    seg.ignition_map = std::move(run.ignition_map);
    return seg;
}

BinaryMask rcnn_segment(const Grid<uint8_t>& image, const RcnnParams& params) {
    return rcnn_segment_detail(image, params).mask;
}

BinaryMask otsu_segment(const Grid<uint8_t>& image) {
    int t = otsu_threshold(GrayHistogram::of(image));
    BinaryMask mask(image.width(), image.height());
    for (size_t i = 0; i < image.size(); ++i)
        mask[i] = image[i] > t ? 1 : 0;
    return mask;
}

SegmentationScores segmentation_metrics(const BinaryMask& pred, const BinaryMask& truth) {
    require_same_shape(pred, truth, "prediction and truth shapes differ");
    uint64_t tp = 0, tn = 0, fp = 0, fn = 0;
    for (size_t i = 0; i < pred.size(); ++i) {
        bool p = pred[i] != 0, t = truth[i] != 0;
        if (p && t)
            ++tp;
        else if (p && !t)
            ++fp;
        else if (!p && t)
            ++fn;
        else
            ++tn;
    }
    SegmentationScores s;
    double n = static_cast<double>(pred.size());
    s.pa = (tp + tn) / n;
    uint64_t uni = tp + fp + fn;
    s.iou = uni == 0 ? 1.0 : static_cast<double>(tp) / uni;
    uint64_t dice_denom = 2 * tp + fp + fn;
    s.dice = dice_denom == 0 ? 1.0 : 2.0 * static_cast<double>(tp) / dice_denom;
    return s;
}

}  // namespace rcnn
