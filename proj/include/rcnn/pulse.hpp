#pragma once

#include <cstdint>
#include <vector>

#include "rcnn/error.hpp"

namespace rcnn {

enum class PulseLabel { Unknown, Neutron, Gamma };

/// One digitized detector pulse. Samples are peak-normalized amplitudes.
struct PulseRecord {
    std::vector<double> samples;
    double sample_period = 1e-9;  // seconds
    PulseLabel label = PulseLabel::Unknown;
};

/// Zeroes every DFT bin above cutoff_fraction of the sampling rate and
/// transforms back. cutoff_fraction in (0, 0.5].
PulseRecord fourier_lowpass(const PulseRecord& pulse, double cutoff_fraction);

/// Balanced synthetic neutron/gamma set. Shape model:
///   v(t) = (1-f) * (exp(-t/tau_fall) - exp(-t/tau_rise)) + f * exp(-t/tau_slow)
/// with tau_rise 5 ns, tau_fall 30 ns, tau_slow 270 ns and slow fraction f of
/// 0.10 (gamma) or 0.25 (neutron). Amplitude is uniform in [0.5, 1], Gaussian
/// noise is added, then each pulse is normalized back to peak 1. 600 samples
/// at 1 ns.
std::vector<PulseRecord> synth_pulse_dataset(int n, double noise_sigma, uint64_t seed);

/// The noiseless shape model above, peak-unnormalized.
double pulse_shape_model(double t_ns, double slow_fraction);

}  // namespace rcnn
