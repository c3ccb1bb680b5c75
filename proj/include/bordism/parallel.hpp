#pragma once

#include <functional>

namespace bordism {

int max_threads();
void set_threads(int n);

/// Run fn(i) for i in [0, n). `parallel = false` selects the plain serial
/// reference loop. Results must be written to index-addressed storage; the
/// work items must be independent.
void parallel_for(long n, bool parallel, const std::function<void(long)>& fn);

} // namespace bordism
