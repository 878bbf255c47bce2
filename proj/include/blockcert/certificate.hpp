#pragma once

#include <cstdint>
#include <vector>

#include "blockcert/block.hpp"
#include "blockcert/polynomial.hpp"

namespace blockcert {

struct CertificateEntry {
    Block block;
    Polynomial cofactor;

    friend bool operator==(const CertificateEntry&, const CertificateEntry&) = default;
};

/// Claims input == sum of cofactor * prod_{(i,j) in block} x_ij^{2g} modulo I.
struct Certificate {
    IndexSet ground;
    std::int64_t g = 2;
    Monomial input;
    std::vector<CertificateEntry> entries;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

} // namespace blockcert
