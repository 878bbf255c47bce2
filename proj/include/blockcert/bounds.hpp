#pragma once

#include <cstdint>
#include <string>

#include "blockcert/errors.hpp"

namespace blockcert {

inline void check_genus(std::int64_t g) {
    if (g < 2) throw PreconditionError("g must be >= 2, got " + std::to_string(g));
}

/// n(n-1)g - n + 2: monomials of at least this degree lie in the block ideal.
inline std::int64_t vanishing_bound(std::int64_t n, std::int64_t g) {
    if (n < 2) throw GroundTooSmall("vanishing bound needs n >= 2, got " + std::to_string(n));
    check_genus(g);
    return n * (n - 1) * g - n + 2;
}

} // namespace blockcert
