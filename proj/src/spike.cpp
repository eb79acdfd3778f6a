#include "rcnn/spike.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace rcnn {

SpikeTrain spike_train(const RunResult& result, int row, int col) {
    if (!result.raster_recorded())
        throw InvalidParameter("run result carries no spike raster");
    SpikeTrain train;
    for (int n = 1; n <= result.iterations_run; ++n)
        if (result.spike_at(n, row, col))
            train.fires.push_back(n);
    return train;
}

IsiStats isi_statistics(const SpikeTrain& train, int burn_in) {
    std::vector<int> fires;
    for (int t : train.fires)
        if (t > burn_in)
            fires.push_back(t);
    if (fires.size() < 3)
        throw DegenerateInput("too few spikes after burn-in");

    IsiStats stats;
    stats.intervals.reserve(fires.size() - 1);
    for (size_t i = 1; i < fires.size(); ++i)
        stats.intervals.push_back(fires[i] - fires[i - 1]);

    double sum = 0.0;
    for (int v : stats.intervals)
        sum += v;
    stats.mean = sum / stats.intervals.size();

    double var = 0.0;
    for (int v : stats.intervals) {
        double d = v - stats.mean;
        var += d * d;
    }
    var /= stats.intervals.size();
    stats.cv = stats.mean > 0.0 ? std::sqrt(var) / stats.mean : 0.0;

    std::map<int, int> counts;
    for (int v : stats.intervals)
        ++counts[v];
    int best = 0;
    for (auto [value, count] : counts)
        if (count > best) {
            best = count;
            stats.dominant_period = value;
        }
    return stats;
}

Encoding classify_encoding(const IsiStats& stats, double cv_threshold) {
    return stats.cv <= cv_threshold ? Encoding::Periodic : Encoding::Chaotic;
}

Grid<uint8_t> corner_gradient(int size) {
    if (size < 2)
        throw InvalidParameter("gradient size must be >= 2");
    Grid<uint8_t> out(size, size);
    double span = 2.0 * (size - 1);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
            out(i, j) = static_cast<uint8_t>(std::lround(255.0 * (i + j) / span));
    return out;
}

std::vector<StimulusField> synth_video_stimulus(int size, int frames) {
    if (size < 8)
        throw InvalidParameter("video stimulus size must be >= 8");
    if (frames < 1)
        throw InvalidParameter("frame count must be >= 1");

    StimulusField base = stimulus_from_gray(corner_gradient(size));
    int patch0 = (size - 6) / 2;

    std::vector<StimulusField> out;
    out.reserve(frames);
    for (int n = 0; n < frames; ++n) {
        StimulusField frame = base;
        double gray = 100.0 + std::sin(n * M_PI / 50.0);
        double s = std::max(gray / 255.0, kStimulusFloor);
        for (int i = patch0; i < patch0 + 6; ++i)
            for (int j = patch0; j < patch0 + 6; ++j)
                frame(i, j) = s;
        out.push_back(std::move(frame));
    }
    return out;
}

}  // namespace rcnn
