#include "rcnn/network.hpp"

#include <atomic>
#include <cmath>
#include <cstring>

#include "rcnn/parallel.hpp"

namespace rcnn {

StimulusField stimulus_from_gray(const Grid<uint8_t>& gray) {
    StimulusField out(gray.width(), gray.height());
    for (size_t i = 0; i < gray.size(); ++i)
        out[i] = std::max(gray[i] / 255.0, kStimulusFloor);
    return out;
}

StimulusField stimulus_from_scaled(const Grid<double>& values, double scale) {
    StimulusField out(values.width(), values.height());
    for (size_t i = 0; i < values.size(); ++i) {
        double v = scale > 0.0 ? values[i] / scale : 0.0;
        out[i] = std::clamp(v, kStimulusFloor, 1.0);
    }
    return out;
}

void validate_stimulus(const StimulusField& field) {
    for (double v : field) {
        if (!std::isfinite(v) || v < kStimulusFloor || v > 1.0)
            throw InvalidParameter("stimulus values must be finite and within [1e-3, 1]");
    }
}

void RcnnParams::validate() const {
    if (beta < 0.0 || v_u < 0.0)
        throw InvalidParameter("beta and v_u must be >= 0");
    if (!(alpha_u > 0.0) || !(alpha_theta > 0.0))
        throw InvalidParameter("decay coefficients must be > 0");
    if (!(v_theta > 0.0))
        throw InvalidParameter("v_theta must be > 0");
    if (kernel_radius < 1 || kernel_radius > 20)
        throw InvalidParameter("kernel radius must be within [1, 20]");
    if (!(sigma_g > 0.0) || !(sigma_d > 0.0))
        throw InvalidParameter("sigma_g and sigma_d must be > 0");
    if (iterations < 1)
        throw InvalidParameter("iterations must be >= 1");
}

void PcnnParams::validate() const {
    if (beta < 0.0 || v_f < 0.0 || v_l < 0.0)
        throw InvalidParameter("beta, v_f and v_l must be >= 0");
    if (!(alpha_f > 0.0) || !(alpha_l > 0.0) || !(alpha_theta > 0.0))
        throw InvalidParameter("decay coefficients must be > 0");
    if (!(v_theta > 0.0))
        throw InvalidParameter("v_theta must be > 0");
    if (iterations < 1)
        throw InvalidParameter("iterations must be >= 1");
    for (const Kernel* k : {&feed_kernel, &link_kernel}) {
        if (k->rows % 2 == 0 || k->cols % 2 == 0 || k->w.empty())
            throw InvalidParameter("kernels must have odd dimensions");
    }
}

Grid<double> link_field(const Grid<uint8_t>& y_prev, const Kernel& weights) {
    const int w = y_prev.width(), h = y_prev.height();
    const int ry = weights.radius_y(), rx = weights.radius_x();
    Grid<double> out(w, h, 0.0);
    parallel_for(0, h, [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i) {
            double* orow = &out(i, 0);
            for (int kr = 0; kr < weights.rows; ++kr) {
                int yy = i + kr - ry;
                if (yy < 0 || yy >= h)
                    continue;
                const uint8_t* yrow = &y_prev(yy, 0);
                for (int kc = 0; kc < weights.cols; ++kc) {
                    double wv = weights.at(kr, kc);
                    int off = kc - rx;
                    int j0 = std::max(0, -off);
                    int j1 = std::min(w, w - off);
                    for (int j = j0; j < j1; ++j)
                        orow[j] += wv * yrow[j + off];
                }
            }
        }
    });
    return out;
}

void rcnn_step(NeuronState& state, const StimulusField& stimulus, const Kernel& weights,
               const RcnnParams& params) {
    require_same_shape(state.u, stimulus, "state and stimulus shapes differ");
    Grid<double> link = link_field(state.y, weights);

    const double decay_u = std::exp(-params.alpha_u);
    const double decay_theta = std::exp(-params.alpha_theta);
    const double gain = params.beta * params.v_u;
    const double v_theta = params.v_theta;

    std::atomic<bool> bad{false};
    const int h = state.u.height(), w = state.u.width();
    parallel_for(0, h, [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i) {
            for (int j = 0; j < w; ++j) {
                double u = stimulus(i, j) * (1.0 + gain * link(i, j)) + decay_u * state.u(i, j);
                double theta = decay_theta * state.theta(i, j) + v_theta * state.y(i, j);
                state.u(i, j) = u;
                state.theta(i, j) = theta;
                state.y(i, j) = u > theta ? 1 : 0;
                if (!std::isfinite(u) || !std::isfinite(theta))
                    bad.store(true, std::memory_order_relaxed);
            }
        }
    });
    if (bad.load())
        throw NumericError("non-finite internal activity");
    ++state.iteration;
}

namespace {

NeuronState zero_state(int w, int h, bool with_feed_link) {
    NeuronState s;
    s.u = Grid<double>(w, h, 0.0);
    s.theta = Grid<double>(w, h, 0.0);
    s.y = Grid<uint8_t>(w, h, 0);
    if (with_feed_link) {
        s.f = Grid<double>(w, h, 0.0);
        s.l = Grid<double>(w, h, 0.0);
    }
    return s;
}

void record_iteration(RunResult& result, const Grid<uint8_t>& y, int iteration, bool record_raster) {
    for (size_t i = 0; i < y.size(); ++i)
        result.ignition_map[i] += y[i];
    if (record_raster)
        std::memcpy(result.raster.data() + (static_cast<size_t>(iteration) - 1) * y.size(),
                    y.data(), y.size());
}

RunResult run_random_coupled(std::span<const StimulusField> frames, const RcnnParams& params,
                             const Kernel& kernel, const InactivationProfile& profile,
                             bool record_raster) {
    params.validate();
    if (frames.empty())
        throw InvalidParameter("at least one stimulus frame required");
    if (static_cast<int>(frames.size()) != 1 &&
        static_cast<int>(frames.size()) < params.iterations)
        throw InvalidParameter("fewer stimulus frames than iterations");
    if (kernel.rows != profile.rows || kernel.cols != profile.cols)
        throw DimensionError("kernel and inactivation profile shapes differ");

    const int w = frames[0].width(), h = frames[0].height();
    for (const auto& f : frames)
        require_same_shape(frames[0], f, "stimulus frames must share dimensions");

    NeuronState state = zero_state(w, h, false);
    RunResult result;
    result.ignition_map = Grid<int32_t>(w, h, 0);
    result.iterations_run = params.iterations;
    if (record_raster)
        result.raster.resize(static_cast<size_t>(params.iterations) * w * h);

    for (int n = 1; n <= params.iterations; ++n) {
        InactivationMask mask = sample_inactivation_mask(profile, params.seed, n);
        Kernel effective = effective_weights(kernel, mask);
        const StimulusField& stimulus = frames.size() == 1 ? frames[0] : frames[n - 1];
        rcnn_step(state, stimulus, effective, params);
        record_iteration(result, state.y, n, record_raster);
    }
    return result;
}

}  // namespace

RunResult run_rcnn(const StimulusField& stimulus, const RcnnParams& params, bool record_raster) {
    Kernel kernel = build_gaussian_kernel(params.kernel_radius, params.sigma_g);
    InactivationProfile profile =
        build_inactivation_profile(params.kernel_radius, params.sigma_d, params.inactivation_mode);
    return run_random_coupled({&stimulus, 1}, params, kernel, profile, record_raster);
}

RunResult run_rcnn(const StimulusField& stimulus, const RcnnParams& params, const Kernel& kernel,
                   const InactivationProfile& profile, bool record_raster) {
    return run_random_coupled({&stimulus, 1}, params, kernel, profile, record_raster);
}

RunResult run_rcnn_video(std::span<const StimulusField> frames, const RcnnParams& params,
                         bool record_raster) {
    Kernel kernel = build_gaussian_kernel(params.kernel_radius, params.sigma_g);
    InactivationProfile profile =
        build_inactivation_profile(params.kernel_radius, params.sigma_d, params.inactivation_mode);
    return run_random_coupled(frames, params, kernel, profile, record_raster);
}

RunResult run_spcnn(const StimulusField& stimulus, const RcnnParams& params, bool record_raster) {
    params.validate();
    Kernel weights = spcnn_link_weights();

    const int w = stimulus.width(), h = stimulus.height();
    NeuronState state = zero_state(w, h, false);
    RunResult result;
    result.ignition_map = Grid<int32_t>(w, h, 0);
    result.iterations_run = params.iterations;
    if (record_raster)
        result.raster.resize(static_cast<size_t>(params.iterations) * w * h);

    for (int n = 1; n <= params.iterations; ++n) {
        rcnn_step(state, stimulus, weights, params);
        record_iteration(result, state.y, n, record_raster);
    }
    return result;
}

RunResult run_pcnn(const StimulusField& stimulus, const PcnnParams& params, bool record_raster) {
    params.validate();
    const int w = stimulus.width(), h = stimulus.height();
    NeuronState state = zero_state(w, h, true);
    RunResult result;
    result.ignition_map = Grid<int32_t>(w, h, 0);
    result.iterations_run = params.iterations;
    if (record_raster)
        result.raster.resize(static_cast<size_t>(params.iterations) * w * h);

    const double decay_f = std::exp(-params.alpha_f);
    const double decay_l = std::exp(-params.alpha_l);
    const double decay_theta = std::exp(-params.alpha_theta);

    for (int n = 1; n <= params.iterations; ++n) {
        Grid<double> feed = link_field(state.y, params.feed_kernel);
        Grid<double> link = link_field(state.y, params.link_kernel);
        std::atomic<bool> bad{false};
        parallel_for(0, h, [&](int lo, int hi) {
            for (int i = lo; i < hi; ++i) {
                for (int j = 0; j < w; ++j) {
                    double f = params.v_f * feed(i, j) + stimulus(i, j) + decay_f * state.f(i, j);
                    double l = decay_l * state.l(i, j) + params.v_l * link(i, j);
                    double u = f * (1.0 + params.beta * l);
                    double theta =
                        decay_theta * state.theta(i, j) + params.v_theta * state.y(i, j);
                    state.f(i, j) = f;
                    state.l(i, j) = l;
                    state.u(i, j) = u;
                    state.theta(i, j) = theta;
                    state.y(i, j) = u > theta ? 1 : 0;
                    if (!std::isfinite(u) || !std::isfinite(theta))
                        bad.store(true, std::memory_order_relaxed);
                }
            }
        });
        if (bad.load())
            throw NumericError("non-finite internal activity");
        ++state.iteration;
        record_iteration(result, state.y, n, record_raster);
    }
    return result;
}

}  // namespace rcnn
