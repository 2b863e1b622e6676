#include "zcx/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace zcx {

int default_threads()
{
    if (const char* env = std::getenv("ZCX_THREADS")) {
        try {
            const int v = std::stoi(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
            // ignore malformed values
        }
    }
    return omp_get_max_threads();
}

int resolve_threads(int requested)
{
    return requested > 0 ? requested : default_threads();
}

}  // namespace zcx
