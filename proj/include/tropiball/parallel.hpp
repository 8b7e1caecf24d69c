#pragma once

// Worker-thread cap shared by all OpenMP kernels. TROPIBALL_THREADS, when set
// to a positive integer, bounds the number of threads; results never depend
// on the thread count (reductions are schedule-invariant by construction).

namespace tropiball {

int max_worker_threads();

} // namespace tropiball
