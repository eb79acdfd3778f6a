#include "rcnn/fusion_metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace rcnn {

namespace {

int bin_of(double v) {
    return std::clamp(static_cast<int>(std::lround(v * 255.0)), 0, 255);
}

std::array<double, 256> histogram01(const Grid<double>& image) {
    std::array<double, 256> h{};
    for (double v : image)
        h[bin_of(v)] += 1.0;
    for (double& p : h)
        p /= static_cast<double>(image.size());
    return h;
}

int clampi(int v, int hi) { return std::clamp(v, 0, hi); }

Grid<double> gauss_filter(const Grid<double>& image, const std::vector<double>& taps) {
    const int w = image.width(), h = image.height();
    const int r = static_cast<int>(taps.size()) / 2;
    Grid<double> horiz(w, h), out(w, h);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < w; ++j) {
            double acc = 0.0;
            for (int t = -r; t <= r; ++t)
                acc += taps[t + r] * image(i, clampi(j + t, w - 1));
            horiz(i, j) = acc;
        }
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < w; ++j) {
            double acc = 0.0;
            for (int t = -r; t <= r; ++t)
                acc += taps[t + r] * horiz(clampi(i + t, h - 1), j);
            out(i, j) = acc;
        }
    return out;
}

std::vector<double> gauss_taps(int radius, double sigma) {
    std::vector<double> taps(2 * radius + 1);
    double sum = 0.0;
    for (int t = -radius; t <= radius; ++t) {
        taps[t + radius] = std::exp(-t * t / (2.0 * sigma * sigma));
        sum += taps[t + radius];
    }
    for (double& v : taps)
        v /= sum;
    return taps;
}

}  // namespace

double shannon_entropy_bits(const Grid<double>& image) {
    auto h = histogram01(image);
    double bits = 0.0;
    for (double p : h)
        if (p > 0.0)
            bits -= p * std::log2(p);
    return bits;
}

double image_standard_deviation(const Grid<double>& image) {
    double mean = 0.0;
    for (double v : image)
        mean += v;
    mean /= static_cast<double>(image.size());
    double var = 0.0;
    for (double v : image)
        var += (v - mean) * (v - mean);
    return std::sqrt(var / static_cast<double>(image.size()));
}

double spatial_frequency(const Grid<double>& image) {
    const int w = image.width(), h = image.height();
    double rf = 0.0, cf = 0.0;
    int rn = 0, cn = 0;
    for (int i = 0; i < h; ++i)
        for (int j = 1; j < w; ++j) {
            double d = 255.0 * (image(i, j) - image(i, j - 1));
            rf += d * d;
            ++rn;
        }
    for (int i = 1; i < h; ++i)
        for (int j = 0; j < w; ++j) {
            double d = 255.0 * (image(i, j) - image(i - 1, j));
            cf += d * d;
            ++cn;
        }
    rf = rn > 0 ? rf / rn : 0.0;
    cf = cn > 0 ? cf / cn : 0.0;
    return std::sqrt(rf + cf);
}

double edge_strength(const Grid<double>& image) {
    const int w = image.width(), h = image.height();
    double total = 0.0;
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < w; ++j) {
            auto px = [&](int r, int c) { return image(clampi(r, h - 1), clampi(c, w - 1)); };
            double gx = px(i - 1, j + 1) + 2.0 * px(i, j + 1) + px(i + 1, j + 1) -
                        px(i - 1, j - 1) - 2.0 * px(i, j - 1) - px(i + 1, j - 1);
            double gy = px(i + 1, j - 1) + 2.0 * px(i + 1, j) + px(i + 1, j + 1) -
                        px(i - 1, j - 1) - 2.0 * px(i - 1, j) - px(i - 1, j + 1);
            total += std::sqrt(gx * gx + gy * gy);
        }
    return total / static_cast<double>(image.size());
}

double mutual_information_bits(const Grid<double>& a, const Grid<double>& b) {
    require_same_shape(a, b, "images must share dimensions");
    std::vector<double> joint(256 * 256, 0.0);
    std::array<double, 256> pa{}, pb{};
    const double n = static_cast<double>(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        int ba = bin_of(a[i]), bb = bin_of(b[i]);
        joint[ba * 256 + bb] += 1.0;
        pa[ba] += 1.0;
        pb[bb] += 1.0;
    }
    double mi = 0.0;
    for (int x = 0; x < 256; ++x) {
        if (pa[x] == 0.0)
            continue;
        for (int y = 0; y < 256; ++y) {
            double pxy = joint[x * 256 + y];
            if (pxy == 0.0 || pb[y] == 0.0)
                continue;
            mi += (pxy / n) * std::log2(n * pxy / (pa[x] * pb[y]));
        }
    }
    return mi;
}

double ssim_index(const Grid<double>& a, const Grid<double>& b) {
    require_same_shape(a, b, "images must share dimensions");
    const double c1 = 0.01 * 0.01, c2 = 0.03 * 0.03;
    auto taps = gauss_taps(5, 1.5);

    Grid<double> aa(a.width(), a.height()), bb(a.width(), a.height()),
        ab(a.width(), a.height());
    for (size_t i = 0; i < a.size(); ++i) {
        aa[i] = a[i] * a[i];
        bb[i] = b[i] * b[i];
        ab[i] = a[i] * b[i];
    }
    Grid<double> mu_a = gauss_filter(a, taps);
    Grid<double> mu_b = gauss_filter(b, taps);
    Grid<double> m_aa = gauss_filter(aa, taps);
    Grid<double> m_bb = gauss_filter(bb, taps);
    Grid<double> m_ab = gauss_filter(ab, taps);

    double total = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        double va = m_aa[i] - mu_a[i] * mu_a[i];
        double vb = m_bb[i] - mu_b[i] * mu_b[i];
        double cov = m_ab[i] - mu_a[i] * mu_b[i];
        double num = (2.0 * mu_a[i] * mu_b[i] + c1) * (2.0 * cov + c2);
        double den = (mu_a[i] * mu_a[i] + mu_b[i] * mu_b[i] + c1) * (va + vb + c2);
        total += num / den;
    }
    return total / static_cast<double>(a.size());
}

FusionReport fusion_metrics(const Grid<double>& fused, const std::vector<Grid<double>>& sources) {
    for (const auto& s : sources)
        require_same_shape(fused, s, "fused image and sources must share dimensions");
    FusionReport r;
    r.h = shannon_entropy_bits(fused);
    r.sd = image_standard_deviation(fused);
    r.sf = spatial_frequency(fused);
    r.es = edge_strength(fused);
    for (const auto& s : sources) {
        r.ff += mutual_information_bits(s, fused);
        r.ssim += ssim_index(fused, s);
    }
    if (!sources.empty())
        r.ssim /= static_cast<double>(sources.size());
    return r;
}

}  // namespace rcnn
