#include "rcnn/pyramid.hpp"

#include <algorithm>

namespace rcnn {

namespace {

// 5-tap binomial [1 4 6 4 1]/16, separable, edge-replicated.
const double kTap[5] = {1.0 / 16, 4.0 / 16, 6.0 / 16, 4.0 / 16, 1.0 / 16};

int clampi(int v, int hi) { return std::clamp(v, 0, hi); }

}  // namespace

Grid<double> binomial_blur(const Grid<double>& image) {
    const int w = image.width(), h = image.height();
    Grid<double> horiz(w, h);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < w; ++j) {
            double acc = 0.0;
            for (int t = -2; t <= 2; ++t)
                acc += kTap[t + 2] * image(i, clampi(j + t, w - 1));
            horiz(i, j) = acc;
        }
    Grid<double> out(w, h);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < w; ++j) {
            double acc = 0.0;
            for (int t = -2; t <= 2; ++t)
                acc += kTap[t + 2] * horiz(clampi(i + t, h - 1), j);
            out(i, j) = acc;
        }
    return out;
}

Grid<double> downsample2(const Grid<double>& image) {
    Grid<double> blurred = binomial_blur(image);
    int w = (image.width() + 1) / 2, h = (image.height() + 1) / 2;
    Grid<double> out(w, h);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < w; ++j)
            out(i, j) = blurred(2 * i, 2 * j);
    return out;
}

Grid<double> upsample2(const Grid<double>& image, int target_width, int target_height) {
    if ((target_width + 1) / 2 != image.width() || (target_height + 1) / 2 != image.height())
        throw DimensionError("upsample target does not match source level");
    Grid<double> expanded(target_width, target_height);
    for (int i = 0; i < target_height; ++i)
        for (int j = 0; j < target_width; ++j)
            expanded(i, j) = image(i / 2, j / 2);
    return binomial_blur(expanded);
}

Pyramid pyramid_decompose(const Grid<double>& image, int level_count) {
    if (level_count < 1)
        throw InvalidParameter("level count must be >= 1");
    if (std::min(image.width(), image.height()) < (1 << level_count))
        throw InvalidParameter("image too small for requested pyramid depth");

    Pyramid pyr;
    std::vector<Grid<double>> fine_to_coarse;
    Grid<double> current = image;
    for (int level = 0; level < level_count; ++level) {
        Grid<double> next = downsample2(current);
        Grid<double> up = upsample2(next, current.width(), current.height());
        Grid<double> band(current.width(), current.height());
        for (size_t i = 0; i < band.size(); ++i)
            band[i] = current[i] - up[i];
        fine_to_coarse.push_back(std::move(band));
        current = std::move(next);
    }
    pyr.residual = std::move(current);
    pyr.bands.assign(fine_to_coarse.rbegin(), fine_to_coarse.rend());
    return pyr;
}

Grid<double> pyramid_reconstruct(const Pyramid& pyr) {
    if (pyr.bands.empty())
        throw InvalidParameter("pyramid has no band levels");
    Grid<double> current = pyr.residual;
    for (const Grid<double>& band : pyr.bands) {
        Grid<double> up = upsample2(current, band.width(), band.height());
        Grid<double> sum(band.width(), band.height());
        for (size_t i = 0; i < sum.size(); ++i)
            sum[i] = up[i] + band[i];
        current = std::move(sum);
    }
    for (auto& v : current)
        v = std::clamp(v, 0.0, 1.0);
    return current;
}

}  // namespace rcnn
