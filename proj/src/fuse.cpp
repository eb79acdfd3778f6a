#include "rcnn/fuse.hpp"

#include <cmath>

#include "rcnn/philox.hpp"

namespace rcnn {

Grid<double> fuse_subbands(const std::vector<Grid<double>>& bands,
                           const std::vector<Grid<int32_t>>& ignition_maps) {
    if (bands.size() < 2)
        throw InvalidParameter("at least two sources required");
    if (ignition_maps.size() != bands.size())
        throw DimensionError("one ignition map per source required");
    for (size_t s = 0; s < bands.size(); ++s) {
        require_same_shape(bands[0], bands[s], "source bands must share dimensions");
        require_same_shape(bands[0], ignition_maps[s], "ignition maps must match bands");
    }
    Grid<double> out(bands[0].width(), bands[0].height());
    for (size_t i = 0; i < out.size(); ++i) {
        size_t winner = 0;
        int32_t best = ignition_maps[0][i];
        for (size_t s = 1; s < bands.size(); ++s) {
            if (ignition_maps[s][i] > best) {
                best = ignition_maps[s][i];
                winner = s;
            }
        }
        out[i] = bands[winner][i];
    }
    return out;
}

Grid<double> rcnn_fuse(const std::vector<Grid<double>>& images, const RcnnParams& params,
                       int level_count) {
    if (images.size() < 2 || images.size() > 3)
        throw InvalidParameter("fusion expects two or three source images");
    for (const auto& img : images)
        require_same_shape(images[0], img, "source images must share dimensions");
    params.validate();

    std::vector<Pyramid> pyramids;
    pyramids.reserve(images.size());
    for (const auto& img : images)
        pyramids.push_back(pyramid_decompose(img, level_count));

    // Band index: 0..level_count-1 are band-pass levels, level_count is the
    // low-pass residual, fused by the same rule.
    auto fuse_one = [&](int band_index) {
        std::vector<Grid<double>> coeffs;
        for (const auto& pyr : pyramids)
            coeffs.push_back(band_index < level_count ? pyr.bands[band_index]
                                                      : pyr.residual);
        double scale = 0.0;
        for (const auto& g : coeffs)
            for (double v : g)
                scale = std::max(scale, std::abs(v));

        std::vector<Grid<int32_t>> maps;
        for (size_t s = 0; s < coeffs.size(); ++s) {
            Grid<double> mag(coeffs[s].width(), coeffs[s].height());
            for (size_t i = 0; i < mag.size(); ++i)
                mag[i] = std::abs(coeffs[s][i]);
            RcnnParams band_params = params;
            band_params.seed = derive_key(params.seed, static_cast<uint64_t>(band_index), s);
            StimulusField stim = stimulus_from_scaled(mag, scale);
            maps.push_back(run_rcnn(stim, band_params).ignition_map);
        }
        return fuse_subbands(coeffs, maps);
    };

    Pyramid fused;
    fused.bands.reserve(level_count);
    for (int b = 0; b < level_count; ++b)
        fused.bands.push_back(fuse_one(b));
    fused.residual = fuse_one(level_count);
    return pyramid_reconstruct(fused);
}

}  // namespace rcnn
