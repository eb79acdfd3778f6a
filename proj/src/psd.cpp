#include "rcnn/psd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rcnn {

namespace {

size_t peak_index(const std::vector<double>& samples) {
    return std::distance(samples.begin(), std::max_element(samples.begin(), samples.end()));
}

void require_live_pulse(const PulseRecord& pulse) {
    if (pulse.samples.empty())
        throw DegenerateInput("empty pulse");
    double peak = *std::max_element(pulse.samples.begin(), pulse.samples.end());
    if (!(peak > 0.0))
        throw DegenerateInput("pulse carries no signal");
}

/// Time where the linear segment from (i-1, a) to (i, b) crosses `level`.
double crossing_time(int i, double a, double b, double level) {
    if (a == b)
        return i;
    return (i - 1) + (a - level) / (a - b);
}

}  // namespace

double rcnn_discrimination_factor(const PulseRecord& pulse, const RcnnParams& params,
                                  PsdWindow window) {
    require_live_pulse(pulse);
    if (window.delay < 0 || window.width < 0)
        throw InvalidParameter("window delay and width must be >= 0");
    const int n = static_cast<int>(pulse.samples.size());
    const int peak = static_cast<int>(peak_index(pulse.samples));
    if (peak + window.delay + window.width > n)
        throw InvalidParameter("integration window exceeds the record");

    StimulusField stimulus(n, 1);
    for (int i = 0; i < n; ++i)
        stimulus[i] = std::clamp(pulse.samples[i], kStimulusFloor, 1.0);

    Kernel kernel = build_gaussian_kernel_1d(params.kernel_radius, params.sigma_g);
    InactivationProfile profile = build_inactivation_profile_1d(
        params.kernel_radius, params.sigma_d, params.inactivation_mode);
    RunResult run = run_rcnn(stimulus, params, kernel, profile);

    int64_t window_mass = 0, total_mass = 0;
    for (int i = 0; i < n; ++i)
        total_mass += run.ignition_map[i];
    for (int i = peak + window.delay; i < peak + window.delay + window.width; ++i)
        window_mass += run.ignition_map[i];
    return total_mass > 0 ? static_cast<double>(window_mass) / total_mass : 0.0;
}

double charge_comparison_factor(const PulseRecord& pulse, int short_gate, int long_gate) {
    require_live_pulse(pulse);
    if (short_gate < 0 || long_gate <= 0 || short_gate > long_gate)
        throw InvalidParameter("gates must satisfy 0 <= short <= long");
    const int n = static_cast<int>(pulse.samples.size());
    const int peak = static_cast<int>(peak_index(pulse.samples));
    if (peak + long_gate >= n)
        throw InvalidParameter("long gate exceeds the record");

    auto trapezoid = [&](int from, int to) {
        double q = 0.0;
        for (int i = from; i < to; ++i)
            q += 0.5 * (pulse.samples[i] + pulse.samples[i + 1]);
        return q;
    };
    double q_total = trapezoid(peak, peak + long_gate);
    double q_slow = trapezoid(peak + short_gate, peak + long_gate);
    if (!(q_total > 0.0))
        throw DegenerateInput("non-positive total charge");
    return q_slow / q_total;
}

double zero_crossing_factor(const PulseRecord& pulse) {
    require_live_pulse(pulse);
    const int n = static_cast<int>(pulse.samples.size());
    const int lag = 40;

    // Double lag differencing of the running sum: the difference of two
    // adjacent moving-window integrals, a bipolar pulse shape.
    std::vector<double> cumsum(n + 1, 0.0);
    for (int i = 0; i < n; ++i)
        cumsum[i + 1] = cumsum[i] + pulse.samples[i];
    std::vector<double> shaped(n);
    for (int i = 0; i < n; ++i) {
        double first = cumsum[i + 1] - cumsum[std::max(0, i + 1 - lag)];
        int j = i - lag;
        double second = j < 0 ? 0.0 : cumsum[j + 1] - cumsum[std::max(0, j + 1 - lag)];
        shaped[i] = first - second;
    }

    // 10%-rise point on the raw pulse.
    const int peak = static_cast<int>(peak_index(pulse.samples));
    const double level = 0.1 * pulse.samples[peak];
    int rise = -1;
    for (int i = 0; i <= peak; ++i)
        if (pulse.samples[i] >= level) {
            rise = i;
            break;
        }
    if (rise < 0)
        throw DegenerateInput("no rise point found");
    double t_rise = rise == 0 ? 0.0
                              : crossing_time(rise, pulse.samples[rise - 1],
                                              pulse.samples[rise], level);

    const int shaped_peak =
        static_cast<int>(std::distance(shaped.begin(),
                                       std::max_element(shaped.begin(), shaped.end())));
    for (int i = shaped_peak + 1; i < n; ++i) {
        if (shaped[i] <= 0.0) {
            double t_zc = crossing_time(i, shaped[i - 1], shaped[i], 0.0);
            return t_zc - t_rise;
        }
    }
    throw DegenerateInput("no zero crossing found");
}

double feps_factor(const PulseRecord& pulse) {
    require_live_pulse(pulse);
    const int n = static_cast<int>(pulse.samples.size());
    const int peak = static_cast<int>(peak_index(pulse.samples));
    const double vp = pulse.samples[peak];

    double t90 = -1.0, t10 = -1.0;
    for (int i = peak + 1; i < n; ++i) {
        if (t90 < 0.0 && pulse.samples[i] <= 0.9 * vp)
            t90 = crossing_time(i, pulse.samples[i - 1], pulse.samples[i], 0.9 * vp);
        if (pulse.samples[i] <= 0.1 * vp) {
            t10 = crossing_time(i, pulse.samples[i - 1], pulse.samples[i], 0.1 * vp);
            break;
        }
    }
    if (t90 < 0.0 || t10 < 0.0)
        throw DegenerateInput("falling edge never reaches 10% of the peak");
    return 0.8 * vp / (t10 - t90);
}

namespace {

struct FitPoint {
    double x, y;
};

double gauss(double x, double a, double mu, double sigma) {
    double z = (x - mu) / sigma;
    return a * std::exp(-0.5 * z * z);
}

/// Solves a 6x6 linear system in place; returns false when singular.
bool solve6(double m[6][7]) {
    for (int col = 0; col < 6; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 6; ++r)
            if (std::abs(m[r][col]) > std::abs(m[pivot][col]))
                pivot = r;
        if (std::abs(m[pivot][col]) < 1e-300)
            return false;
        std::swap(m[pivot], m[col]);
        for (int r = 0; r < 6; ++r) {
            if (r == col)
                continue;
            double f = m[r][col] / m[col][col];
            for (int c = col; c < 7; ++c)
                m[r][c] -= f * m[col][c];
        }
    }
    for (int r = 0; r < 6; ++r)
        m[r][6] /= m[r][r];
    return true;
}

double sse_of(const std::vector<FitPoint>& pts, const double p[6]) {
    double sse = 0.0;
    for (const auto& pt : pts) {
        double r = pt.y - gauss(pt.x, p[0], p[1], p[2]) - gauss(pt.x, p[3], p[4], p[5]);
        sse += r * r;
    }
    return sse;
}

/// Levenberg-Marquardt for the two-Gaussian model with analytic Jacobian.
bool fit_two_gaussians(const std::vector<FitPoint>& pts, double p[6]) {
    double lambda = 1e-3;
    double sse = sse_of(pts, p);
    for (int iter = 0; iter < 200; ++iter) {
        double jtj[6][6] = {};
        double jtr[6] = {};
        for (const auto& pt : pts) {
            double g1 = gauss(pt.x, p[0], p[1], p[2]);
            double g2 = gauss(pt.x, p[3], p[4], p[5]);
            double r = pt.y - g1 - g2;
            double j[6];
            j[0] = p[0] != 0.0 ? g1 / p[0] : std::exp(-0.5 * std::pow((pt.x - p[1]) / p[2], 2));
            j[1] = g1 * (pt.x - p[1]) / (p[2] * p[2]);
            j[2] = g1 * (pt.x - p[1]) * (pt.x - p[1]) / (p[2] * p[2] * p[2]);
            j[3] = p[3] != 0.0 ? g2 / p[3] : std::exp(-0.5 * std::pow((pt.x - p[4]) / p[5], 2));
            j[4] = g2 * (pt.x - p[4]) / (p[5] * p[5]);
            j[5] = g2 * (pt.x - p[4]) * (pt.x - p[4]) / (p[5] * p[5] * p[5]);
            for (int a = 0; a < 6; ++a) {
                jtr[a] += j[a] * r;
                for (int b = 0; b < 6; ++b)
                    jtj[a][b] += j[a] * j[b];
            }
        }

        bool accepted = false;
        for (int attempt = 0; attempt < 12; ++attempt) {
            double m[6][7];
            for (int a = 0; a < 6; ++a) {
                for (int b = 0; b < 6; ++b)
                    m[a][b] = jtj[a][b] + (a == b ? lambda * (jtj[a][a] + 1e-12) : 0.0);
                m[a][6] = jtr[a];
            }
            if (!solve6(m)) {
                lambda *= 10.0;
                continue;
            }
            double trial[6];
            for (int a = 0; a < 6; ++a)
                trial[a] = p[a] + m[a][6];
            trial[2] = std::abs(trial[2]);
            trial[5] = std::abs(trial[5]);
            if (trial[2] < 1e-12 || trial[5] < 1e-12) {
                lambda *= 10.0;
                continue;
            }
            double trial_sse = sse_of(pts, trial);
            if (trial_sse <= sse) {
                double improvement = sse - trial_sse;
                std::copy(trial, trial + 6, p);
                sse = trial_sse;
                lambda = std::max(lambda / 3.0, 1e-12);
                accepted = true;
                if (improvement <= 1e-12 * (sse + 1e-300))
                    return true;
                break;
            }
            lambda *= 10.0;
        }
        if (!accepted)
            return iter > 0;  // stalled; accept if we made any progress
    }
    return true;
}

}  // namespace

DiscriminationResult fit_fom(const std::vector<double>& factors, int bins) {
    if (static_cast<int>(factors.size()) < 50)
        throw InvalidParameter("need at least 50 factors");
    if (bins < 8)
        throw InvalidParameter("need at least 8 bins");
    for (double f : factors)
        if (!std::isfinite(f))
            throw NumericError("non-finite discrimination factor");

    auto [lo_it, hi_it] = std::minmax_element(factors.begin(), factors.end());
    double lo = *lo_it, hi = *hi_it;
    if (!(hi > lo))
        throw FitFailure("all factors identical");

    DiscriminationResult result;
    result.factors = factors;
    result.bin_centers.resize(bins);
    result.bin_counts.assign(bins, 0.0);
    const double width = (hi - lo) / bins;
    for (int b = 0; b < bins; ++b)
        result.bin_centers[b] = lo + (b + 0.5) * width;
    for (double f : factors) {
        int b = std::min(bins - 1, static_cast<int>((f - lo) / width));
        result.bin_counts[b] += 1.0;
    }

    // Peak seeding on a lightly smoothed histogram.
    std::vector<double> smooth(bins);
    for (int b = 0; b < bins; ++b) {
        double acc = 0.0;
        int cnt = 0;
        for (int t = -1; t <= 1; ++t) {
            int i = b + t;
            if (i >= 0 && i < bins) {
                acc += result.bin_counts[i];
                ++cnt;
            }
        }
        smooth[b] = acc / cnt;
    }
    std::vector<int> maxima;
    for (int b = 0; b < bins; ++b) {
        double left = b > 0 ? smooth[b - 1] : -1.0;
        double right = b + 1 < bins ? smooth[b + 1] : -1.0;
        if (smooth[b] > left && smooth[b] >= right && smooth[b] > 0.0)
            maxima.push_back(b);
    }
    std::sort(maxima.begin(), maxima.end(),
              [&](int a, int b) { return smooth[a] > smooth[b]; });
    const int min_sep = std::max(3, bins / 10);
    int peak1 = maxima.empty() ? -1 : maxima[0];
    int peak2 = -1;
    for (size_t i = 1; i < maxima.size(); ++i) {
        if (std::abs(maxima[i] - peak1) >= min_sep) {
            peak2 = maxima[i];
            break;
        }
    }
    if (peak1 < 0 || peak2 < 0)
        throw FitFailure("histogram does not expose two separated peaks");
    if (peak1 > peak2)
        std::swap(peak1, peak2);

    double sep = (peak2 - peak1) * width;
    double p[6] = {result.bin_counts[peak1], result.bin_centers[peak1], sep / 6.0,
                   result.bin_counts[peak2], result.bin_centers[peak2], sep / 6.0};

    std::vector<FitPoint> pts(bins);
    for (int b = 0; b < bins; ++b)
        pts[b] = {result.bin_centers[b], result.bin_counts[b]};
    if (!fit_two_gaussians(pts, p))
        throw FitFailure("two-Gaussian fit did not converge");

    GaussianComponent c1{p[0], p[1], std::abs(p[2])};
    GaussianComponent c2{p[3], p[4], std::abs(p[5])};
    if (c1.mean > c2.mean)
        std::swap(c1, c2);
    if (!(c1.sigma > 0.0) || !(c2.sigma > 0.0))
        throw FitFailure("fitted width collapsed");
    if (std::abs(c2.mean - c1.mean) < 1e-12)
        throw FitFailure("fitted peaks coincide");
    for (double v : {c1.amplitude, c1.mean, c1.sigma, c2.amplitude, c2.mean, c2.sigma})
        if (!std::isfinite(v))
            throw FitFailure("fit produced non-finite parameters");

    result.g1 = c1;
    result.g2 = c2;
    const double fwhm_factor = 2.0 * std::sqrt(2.0 * std::log(2.0));
    result.fom = std::abs(c2.mean - c1.mean) / (fwhm_factor * (c1.sigma + c2.sigma));
    return result;
}

}  // namespace rcnn
