#include "preschwarz/parallel.hpp"

#include "preschwarz/errors.hpp"

#include <cstdlib>
#include <string>

namespace preschwarz {

std::size_t configured_thread_count()
{
    const char* env = std::getenv("PRESCHWARZ_THREADS");
    if (env == nullptr || *env == '\0') {
        return std::max(1u, std::thread::hardware_concurrency());
    }
    const std::string text(env);
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || value < 1) {
        throw ParameterError("PRESCHWARZ_THREADS must be a positive integer, got '" + text + "'");
    }
    return static_cast<std::size_t>(value);
}

} // namespace preschwarz
