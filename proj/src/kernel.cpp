#include "rcnn/kernel.hpp"

#include <cmath>
#include <numeric>

#include "rcnn/philox.hpp"

namespace rcnn {

double Kernel::sum() const { return std::accumulate(w.begin(), w.end(), 0.0); }

namespace {

double gauss2d(double x, double y, double sigma) {
    double norm = 1.0 / (2.0 * M_PI * sigma * sigma);
    return norm * std::exp(-(x * x + y * y) / (2.0 * sigma * sigma));
}

void check_kernel_args(int radius, double sigma) {
    if (radius < 1)
        throw InvalidParameter("kernel radius must be >= 1");
    if (!(sigma > 0.0))
        throw InvalidParameter("kernel sigma must be > 0");
}

}  // namespace

Kernel build_gaussian_kernel(int radius, double sigma) {
    check_kernel_args(radius, sigma);
    int n = 2 * radius + 1;
    Kernel k{n, n, std::vector<double>(static_cast<size_t>(n) * n)};
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            k.at(r, c) = gauss2d(r - radius, c - radius, sigma);
    k.at(radius, radius) = 0.0;
    return k;
}

Kernel build_gaussian_kernel_1d(int radius, double sigma) {
    check_kernel_args(radius, sigma);
    int n = 2 * radius + 1;
    Kernel k{1, n, std::vector<double>(n)};
    double norm = 1.0 / (std::sqrt(2.0 * M_PI) * sigma);
    for (int c = 0; c < n; ++c) {
        double x = c - radius;
        k.at(0, c) = norm * std::exp(-x * x / (2.0 * sigma * sigma));
    }
    k.at(0, radius) = 0.0;
    return k;
}

Kernel spcnn_link_weights() {
    Kernel k{3, 3, {0.5, 1.0, 0.5, 1.0, 0.0, 1.0, 0.5, 1.0, 0.5}};
    return k;
}

InactivationProfile InactivationProfile::none(int rows, int cols) {
    InactivationProfile p;
    p.rows = rows;
    p.cols = cols;
    p.closing_prob.assign(static_cast<size_t>(rows) * cols, 0.0);
    return p;
}

namespace {

InactivationProfile make_profile(int rows, int cols, double sigma_d, InactivationMode mode) {
    InactivationProfile p;
    p.rows = rows;
    p.cols = cols;
    p.mode = mode;
    p.closing_prob.resize(static_cast<size_t>(rows) * cols);
    int ry = rows / 2, rx = cols / 2;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            double dy = r - ry, dx = c - rx;
            // Gaussian shape normalized to peak 1 at the centre.
            double g = std::exp(-(dx * dx + dy * dy) / (2.0 * sigma_d * sigma_d));
            double prob = mode == InactivationMode::DistanceIncreasing ? 1.0 - g : g;
            p.closing_prob[static_cast<size_t>(r) * cols + c] = prob;
        }
    }
    return p;
}

}  // namespace

InactivationProfile build_inactivation_profile(int radius, double sigma_d, InactivationMode mode) {
    check_kernel_args(radius, sigma_d);
    return make_profile(2 * radius + 1, 2 * radius + 1, sigma_d, mode);
}

InactivationProfile build_inactivation_profile_1d(int radius, double sigma_d,
                                                  InactivationMode mode) {
    check_kernel_args(radius, sigma_d);
    return make_profile(1, 2 * radius + 1, sigma_d, mode);
}

InactivationMask sample_inactivation_mask(const InactivationProfile& profile, uint64_t seed,
                                          uint64_t iteration) {
    InactivationMask mask;
    mask.rows = profile.rows;
    mask.cols = profile.cols;
    size_t n = profile.closing_prob.size();
    mask.open.resize(n);
    for (size_t channel = 0; channel < n; ++channel) {
        double u = uniform_at(seed, iteration, channel);
        mask.open[channel] = profile.closing_prob[channel] > u ? 0 : 1;
    }
    return mask;
}

Kernel effective_weights(const Kernel& kernel, const InactivationMask& mask) {
    if (kernel.rows != mask.rows || kernel.cols != mask.cols)
        throw DimensionError("kernel and inactivation mask shapes differ");
    Kernel out = kernel;
    for (size_t i = 0; i < out.w.size(); ++i)
        out.w[i] *= mask.open[i];
    return out;
}

}  // namespace rcnn
