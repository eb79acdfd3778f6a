#pragma once

#include <vector>

#include "rcnn/network.hpp"
#include "rcnn/pulse.hpp"

namespace rcnn {

/// Integration window for the ignition-map factor, in samples after the peak.
struct PsdWindow {
    int delay = 20;
    int width = 200;
};

/// Runs the network over the pulse treated as a 1xL lattice and returns the
/// ignition mass inside [peak+delay, peak+delay+width) divided by the total
/// ignition mass.
double rcnn_discrimination_factor(const PulseRecord& pulse, const RcnnParams& params,
                                  PsdWindow window = {});

/// Q_slow / Q_total with trapezoidal integration; gates anchored at the peak.
double charge_comparison_factor(const PulseRecord& pulse, int short_gate = 25,
                                int long_gate = 250);

/// Time from the 10%-rise point to the zero crossing of a bipolar-shaped
/// copy of the pulse (double lag-40 difference of the cumulative sum).
double zero_crossing_factor(const PulseRecord& pulse);

/// Absolute slope between the 90% and 10% amplitudes of the falling edge.
double feps_factor(const PulseRecord& pulse);

struct GaussianComponent {
    double amplitude = 0.0;
    double mean = 0.0;
    double sigma = 0.0;
};

struct DiscriminationResult {
    std::vector<double> factors;
    std::vector<double> bin_centers;
    std::vector<double> bin_counts;
    GaussianComponent g1, g2;  // g1.mean < g2.mean
    double fom = 0.0;
};

/// Histograms the factors, fits a two-Gaussian model seeded from the two
/// strongest separated peaks, and reports
///   FOM = |mu2 - mu1| / (FWHM1 + FWHM2).
DiscriminationResult fit_fom(const std::vector<double>& factors, int bins = 100);

}  // namespace rcnn
