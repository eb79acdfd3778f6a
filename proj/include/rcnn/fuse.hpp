#pragma once

#include <vector>

#include "rcnn/network.hpp"
#include "rcnn/pyramid.hpp"

namespace rcnn {

/// Per-pixel winner-take-all: emit the coefficient from the source whose
/// ignition count is maximal; ties go to the lowest source index.
Grid<double> fuse_subbands(const std::vector<Grid<double>>& bands,
                           const std::vector<Grid<int32_t>>& ignition_maps);

/// Multiscale fusion of 2-3 grayscale images in [0,1]: decompose each source,
/// run the network on every sub-band (coefficients rescaled by a shared
/// per-band maximum), select coefficients by ignition count, reconstruct.
Grid<double> rcnn_fuse(const std::vector<Grid<double>>& images, const RcnnParams& params,
                       int level_count);

}  // namespace rcnn
