#pragma once

#include <functional>

namespace rcnn {

/// Worker threads used by parallel_for. 0 selects the hardware count.
/// Results never depend on this setting: work items write disjoint outputs.
void set_thread_count(int n);
int thread_count();

/// Runs body(begin, end) over contiguous chunks of [begin, end).
void parallel_for(int begin, int end, const std::function<void(int, int)>& body);

}  // namespace rcnn
