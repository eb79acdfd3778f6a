#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rcnn/grid.hpp"
#include "rcnn/kernel.hpp"

namespace rcnn {

/// Floor applied when mapping gray values to stimuli; a zero stimulus can
/// never fire, so dark pixels are lifted to this level instead.
inline constexpr double kStimulusFloor = 1e-3;

using StimulusField = Grid<double>;

/// g -> max(g/255, floor).
StimulusField stimulus_from_gray(const Grid<uint8_t>& gray);

/// Rescales arbitrary non-negative values into [floor, 1] given a shared
/// scale (pass the max over everything that must stay comparable).
StimulusField stimulus_from_scaled(const Grid<double>& values, double scale);

/// Pipeline-entry check: finite values within [floor, 1].
void validate_stimulus(const StimulusField& field);

struct RcnnParams {
    double beta = 0.4;
    double v_u = 1.0;
    double alpha_u = 0.5;
    double alpha_theta = 0.2;
    double v_theta = 20.0;
    int kernel_radius = 4;
    double sigma_g = 4.0;
    double sigma_d = 5.0;
    int iterations = 40;
    uint64_t seed = 0;
    InactivationMode inactivation_mode = InactivationMode::DistanceIncreasing;

    void validate() const;
};

struct PcnnParams {
    double beta = 0.4;
    double v_f = 0.1;
    double v_l = 1.0;
    double v_theta = 20.0;
    double alpha_f = 0.3;
    double alpha_l = 0.5;
    double alpha_theta = 0.2;
    int iterations = 40;
    Kernel feed_kernel = spcnn_link_weights();
    Kernel link_kernel = spcnn_link_weights();

    void validate() const;
};

/// Coupled fields over the lattice at one iteration. f and l stay empty for
/// the simplified models.
struct NeuronState {
    Grid<double> u;
    Grid<double> theta;
    Grid<uint8_t> y;
    Grid<double> f;
    Grid<double> l;
    int iteration = 0;
};

struct RunResult {
    Grid<int32_t> ignition_map;
    int iterations_run = 0;
    // Full spike record, one byte per neuron per iteration, iteration-major.
    // Empty unless requested.
    std::vector<uint8_t> raster;

    bool raster_recorded() const { return !raster.empty(); }
    /// Spike of neuron (row, col) at iteration n in [1, iterations_run].
    uint8_t spike_at(int n, int row, int col) const {
        size_t pixels = ignition_map.size();
        return raster[(static_cast<size_t>(n) - 1) * pixels +
                      static_cast<size_t>(row) * ignition_map.width() + col];
    }
};

/// Weighted sum of the previous spikes around each neuron: discrete 2D
/// cross-correlation with zero padding outside the lattice.
Grid<double> link_field(const Grid<uint8_t>& y_prev, const Kernel& weights);

/// One iteration of the random-coupled recurrence. `weights` must already
/// carry this iteration's inactivation. theta is refreshed from the previous
/// spike before the comparison.
void rcnn_step(NeuronState& state, const StimulusField& stimulus, const Kernel& weights,
               const RcnnParams& params);

RunResult run_rcnn(const StimulusField& stimulus, const RcnnParams& params,
                   bool record_raster = false);

/// Variant with caller-supplied weights and inactivation profile (1-D pulse
/// lattices, equivalence checks against the fixed-weight ancestor).
RunResult run_rcnn(const StimulusField& stimulus, const RcnnParams& params, const Kernel& kernel,
                   const InactivationProfile& profile, bool record_raster = false);

/// Time-varying stimulus: frame k drives iteration k+1.
RunResult run_rcnn_video(std::span<const StimulusField> frames, const RcnnParams& params,
                         bool record_raster = false);

/// Fixed 3x3 weights, no inactivation.
RunResult run_spcnn(const StimulusField& stimulus, const RcnnParams& params,
                    bool record_raster = false);

/// Full five-field recurrence with separate feedback and link inputs.
RunResult run_pcnn(const StimulusField& stimulus, const PcnnParams& params,
                   bool record_raster = false);

}  // namespace rcnn
