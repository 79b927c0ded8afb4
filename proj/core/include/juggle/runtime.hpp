#pragma once

#include <functional>

namespace juggle {

/// Worker threads available to internally parallel operations (matrix
/// multiplication row blocks). Default 1; results never depend on it.
void set_max_threads(int n);
int max_threads();

/// Runs fn(lo, hi) over a partition of [0, rows), on the calling thread
/// unless max_threads() > 1 and the range is worth splitting.
void parallel_rows(int rows, const std::function<void(int, int)>& fn);

}  // namespace juggle
