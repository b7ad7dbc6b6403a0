#include "puviz/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

#include "puviz/errors.hpp"

namespace puviz {

int worker_count() {
    const int hardware = omp_get_max_threads();
    const char* env = std::getenv("PUVIZ_THREADS");
    if (env == nullptr || *env == '\0') return hardware;
    char* end = nullptr;
    const long requested = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || requested < 0)
        throw InvalidInputError("PUVIZ_THREADS must be a non-negative integer, got '" + std::string(env) + "'");
    if (requested == 0) return hardware;
    return static_cast<int>(std::min<long>(requested, hardware));
}

} // namespace puviz
