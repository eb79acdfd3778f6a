#pragma once

#include <vector>

#include "rcnn/grid.hpp"

namespace rcnn {

/// Band-pass levels stored coarse-to-fine plus the low-pass residual.
/// Reconstructing an unmodified pyramid reproduces the source to within
/// floating-point round-off.
struct Pyramid {
    std::vector<Grid<double>> bands;
    Grid<double> residual;
};

/// Blur/decimate chain with a 5-tap binomial filter; each band is the
/// difference between a level and the upsampled next-coarser level.
Pyramid pyramid_decompose(const Grid<double>& image, int level_count);

/// Sums the residual and bands fine-ward; output clamped to [0,1].
Grid<double> pyramid_reconstruct(const Pyramid& pyr);

// Building blocks, shared with the reconstruction path.
Grid<double> binomial_blur(const Grid<double>& image);
Grid<double> downsample2(const Grid<double>& image);
Grid<double> upsample2(const Grid<double>& image, int target_width, int target_height);

}  // namespace rcnn
