#pragma once

#include <vector>

#include "rcnn/grid.hpp"

namespace rcnn {

/// Objective fusion criteria. Images are gray in [0,1]; SF uses the 0-255
/// scale, everything else the [0,1] scale. H and FF are in bits.
struct FusionReport {
    double es = 0.0;    // mean Sobel gradient magnitude
    double h = 0.0;     // Shannon entropy of the 256-bin histogram
    double sd = 0.0;    // standard deviation
    double sf = 0.0;    // spatial frequency, sqrt(RF^2 + CF^2)
    double ff = 0.0;    // sum of mutual information with each source
    double ssim = 0.0;  // mean structural similarity against the sources
};

FusionReport fusion_metrics(const Grid<double>& fused, const std::vector<Grid<double>>& sources);

double shannon_entropy_bits(const Grid<double>& image);
double image_standard_deviation(const Grid<double>& image);
double spatial_frequency(const Grid<double>& image);
double edge_strength(const Grid<double>& image);
double mutual_information_bits(const Grid<double>& a, const Grid<double>& b);

/// Standard single-scale SSIM: 11x11 Gaussian window (sigma 1.5), K1 = 0.01,
/// K2 = 0.03, dynamic range 1.
double ssim_index(const Grid<double>& a, const Grid<double>& b);

}  // namespace rcnn
