#include "piecework/caps.hpp"

#include <cstdlib>

namespace piecework {

int cap_with_override(int default_cap) {
    if (const char* env = std::getenv("PIECEWORK_MAX_N")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return default_cap;
}

void require_cap(const std::string& op, int value, int default_cap) {
    int cap = cap_with_override(default_cap);
    if (value > cap) {
        throw CapExceeded(op + ": " + std::to_string(value) + " exceeds cap " +
                          std::to_string(cap) + " (override with PIECEWORK_MAX_N)");
    }
}

} // namespace piecework
