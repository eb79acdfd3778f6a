#pragma once

#include <vector>

#include "rcnn/network.hpp"

namespace rcnn {

/// Iteration indices (1-based, strictly increasing) at which one neuron fired.
struct SpikeTrain {
    std::vector<int> fires;
};

/// Requires a recorded raster.
SpikeTrain spike_train(const RunResult& result, int row, int col);

struct IsiStats {
    std::vector<int> intervals;
    double mean = 0.0;
    double cv = 0.0;          // stdev / mean; 0 iff all intervals equal
    int dominant_period = 0;  // mode of the intervals, smallest on ties
};

/// Inter-spike intervals after discarding fires at or before burn_in.
/// Needs at least three remaining spikes.
IsiStats isi_statistics(const SpikeTrain& train, int burn_in);

enum class Encoding { Periodic, Chaotic };

Encoding classify_encoding(const IsiStats& stats, double cv_threshold = 0.1);

/// Diagonal gray ramp: 0 at the upper-left corner, 255 at the lower-right.
Grid<uint8_t> corner_gradient(int size);

/// Stimulus frames with a dynamic 6x6 centre patch over the fixed corner
/// gradient. Frame n carries the central gray value 100 + sin(n*pi/50).
std::vector<StimulusField> synth_video_stimulus(int size, int frames);

}  // namespace rcnn
