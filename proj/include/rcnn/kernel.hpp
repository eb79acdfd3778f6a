#pragma once

#include <cstdint>
#include <vector>

#include "rcnn/error.hpp"

namespace rcnn {

/// Link-weight matrix. Square (2R+1)x(2R+1) for image lattices, 1x(2R+1) for
/// pulse (1-D) lattices. The centre weight is always zero: a neuron does not
/// stimulate itself.
struct Kernel {
    int rows = 0;
    int cols = 0;
    std::vector<double> w;  // row-major

    double at(int r, int c) const { return w[static_cast<size_t>(r) * cols + c]; }
    double& at(int r, int c) { return w[static_cast<size_t>(r) * cols + c]; }
    int radius_x() const { return cols / 2; }
    int radius_y() const { return rows / 2; }
    double sum() const;
};

/// Gaussian weights evaluated on the integer offsets around the centre,
/// unnormalized; the overall link gain is carried by beta * V_U.
Kernel build_gaussian_kernel(int radius, double sigma);
Kernel build_gaussian_kernel_1d(int radius, double sigma);

/// The classical fixed 3x3 link matrix (inverse squared distance).
Kernel spcnn_link_weights();

enum class InactivationMode {
    DistanceIncreasing,  // channels far from the centre close more often
    RawGaussian,         // closing probability peaks at the centre
};

/// Per-channel closing probabilities for the random inactivation draw.
struct InactivationProfile {
    int rows = 0;
    int cols = 0;
    std::vector<double> closing_prob;  // row-major, each in [0,1]
    InactivationMode mode = InactivationMode::DistanceIncreasing;

    double at(int r, int c) const { return closing_prob[static_cast<size_t>(r) * cols + c]; }

    /// All channels permanently open; turns the random model into its
    /// deterministic ancestor.
    static InactivationProfile none(int rows, int cols);
};

InactivationProfile build_inactivation_profile(
    int radius, double sigma_d, InactivationMode mode = InactivationMode::DistanceIncreasing);
InactivationProfile build_inactivation_profile_1d(
    int radius, double sigma_d, InactivationMode mode = InactivationMode::DistanceIncreasing);

/// One realisation of open/closed channels. open[i] is 0 or 1.
struct InactivationMask {
    int rows = 0;
    int cols = 0;
    std::vector<uint8_t> open;

    uint8_t at(int r, int c) const { return open[static_cast<size_t>(r) * cols + c]; }
};

/// Draws the per-iteration mask. Channel c closes iff closing_prob[c] exceeds
/// a uniform deviate addressed by (seed, iteration, c), so the draw is
/// independent of evaluation order and shared by the whole lattice.
InactivationMask sample_inactivation_mask(const InactivationProfile& profile, uint64_t seed,
                                          uint64_t iteration);

/// Hadamard product of weights and mask.
Kernel effective_weights(const Kernel& kernel, const InactivationMask& mask);

}  // namespace rcnn
