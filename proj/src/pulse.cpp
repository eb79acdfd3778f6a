#include "rcnn/pulse.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>

#include "rcnn/philox.hpp"

namespace rcnn {

namespace {

constexpr double kTauRise = 5.0;
constexpr double kTauFall = 30.0;
constexpr double kTauSlow = 270.0;
constexpr int kSamples = 600;

// FFTW planning is not thread-safe; execution of a ready plan is.
std::mutex g_fftw_mutex;

}  // namespace

double pulse_shape_model(double t_ns, double slow_fraction) {
    if (t_ns < 0.0)
        return 0.0;
    double fast = std::exp(-t_ns / kTauFall) - std::exp(-t_ns / kTauRise);
    double slow = std::exp(-t_ns / kTauSlow);
    return (1.0 - slow_fraction) * fast + slow_fraction * slow;
}

PulseRecord fourier_lowpass(const PulseRecord& pulse, double cutoff_fraction) {
    if (!(cutoff_fraction > 0.0) || cutoff_fraction > 0.5)
        throw InvalidParameter("cutoff fraction must be in (0, 0.5]");
    const int n = static_cast<int>(pulse.samples.size());
    if (n < 2)
        throw InvalidParameter("pulse too short to filter");

    std::vector<double> in = pulse.samples;
    std::vector<fftw_complex> spectrum(static_cast<size_t>(n) / 2 + 1);
    std::vector<double> out(n);
    {
        std::lock_guard<std::mutex> lock(g_fftw_mutex);
        fftw_plan fwd =
            fftw_plan_dft_r2c_1d(n, in.data(), spectrum.data(), FFTW_ESTIMATE);
        fftw_execute(fwd);
        fftw_destroy_plan(fwd);

        int last_kept = static_cast<int>(cutoff_fraction * n);
        for (size_t k = 0; k < spectrum.size(); ++k) {
            if (static_cast<int>(k) > last_kept) {
                spectrum[k][0] = 0.0;
                spectrum[k][1] = 0.0;
            }
        }

        fftw_plan bwd =
            fftw_plan_dft_c2r_1d(n, spectrum.data(), out.data(), FFTW_ESTIMATE);
        fftw_execute(bwd);
        fftw_destroy_plan(bwd);
    }

    PulseRecord filtered = pulse;
    for (int i = 0; i < n; ++i)
        filtered.samples[i] = out[i] / n;
    return filtered;
}

std::vector<PulseRecord> synth_pulse_dataset(int n, double noise_sigma, uint64_t seed) {
    if (n < 2)
        throw InvalidParameter("dataset needs at least two pulses");
    if (noise_sigma < 0.0)
        throw InvalidParameter("noise sigma must be >= 0");

    std::vector<PulseRecord> out;
    out.reserve(n);
    for (int p = 0; p < n; ++p) {
        bool neutron = p % 2 == 1;
        double slow_fraction = neutron ? 0.25 : 0.10;

        CounterRng rng(derive_key(seed, static_cast<uint64_t>(p)));
        double amplitude = rng.uniform(0.5, 1.0);

        PulseRecord rec;
        rec.label = neutron ? PulseLabel::Neutron : PulseLabel::Gamma;
        rec.samples.resize(kSamples);
        double model_peak = 0.0;
        for (int i = 0; i < kSamples; ++i)
            model_peak = std::max(model_peak, pulse_shape_model(i, slow_fraction));
        double peak = 0.0;
        for (int i = 0; i < kSamples; ++i) {
            double v = amplitude * pulse_shape_model(i, slow_fraction) / model_peak;
            if (noise_sigma > 0.0)
                v += noise_sigma * rng.normal();
            rec.samples[i] = v;
            peak = std::max(peak, v);
        }
        if (peak > 0.0)
            for (double& v : rec.samples)
                v /= peak;
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace rcnn
