#include "tropiball/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef TROPIBALL_HAVE_OPENMP
#include <omp.h>
#endif

namespace tropiball {

int max_worker_threads() {
    int hw = 1;
#ifdef TROPIBALL_HAVE_OPENMP
    hw = omp_get_max_threads();
#endif
    if (const char* env = std::getenv("TROPIBALL_THREADS")) {
        try {
            const int cap = std::stoi(env);
            if (cap >= 1 && cap < hw) hw = cap;
        } catch (...) {
            // ignore malformed values
        }
    }
    return hw < 1 ? 1 : hw;
}

} // namespace tropiball
