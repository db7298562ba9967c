#pragma once

#include <cstddef>
#include <functional>

namespace yukawa {

/// Worker count used by parallel_for. Defaults to 1.
void set_thread_count(int n);
int thread_count();

/// Runs body(i) for i in [0, count), splitting the range into contiguous
/// blocks across worker threads. Nested calls run serially. Results must be
/// written to caller-owned slots indexed by i; any reduction happens after
/// return, in index order.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace yukawa
