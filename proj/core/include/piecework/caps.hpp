#pragma once

#include <stdexcept>
#include <string>

namespace piecework {

// Thrown when a size parameter exceeds its enumeration cap.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Effective cap: the PIECEWORK_MAX_N environment variable, when set,
// replaces every default cap.
int cap_with_override(int default_cap);

// Throws CapExceeded naming the operation, the offending value and the cap.
void require_cap(const std::string& op, int value, int default_cap);

} // namespace piecework
