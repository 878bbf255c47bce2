#pragma once

#include <set>

#include "blockcert/bounds.hpp"
#include "blockcert/certificate.hpp"
#include "blockcert/normal_form.hpp"

namespace blockcert {

/// Throws MalformedCertificate on structural problems (bad ground, foreign
/// variables, repeated or improper blocks).
inline void check_certificate_structure(const Certificate& cert) {
    if (cert.ground.size() < 2) throw MalformedCertificate("ground set must have at least two labels");
    if (cert.g < 2) throw MalformedCertificate("g must be >= 2");
    if (sgn(cert.input.coeff) == 0) throw MalformedCertificate("input monomial has zero coefficient");
    try {
        cert.input.check_over(cert.ground);
    } catch (const PreconditionError& e) {
        throw MalformedCertificate(std::string("input: ") + e.what());
    }
    std::set<IndexSet> seen;
    for (const CertificateEntry& e : cert.entries) {
        const IndexSet& left = e.block.left();
        if (e.block.ground() != cert.ground)
            throw MalformedCertificate("entry block over " + e.block.ground().to_string() + ", certificate over " +
                                       cert.ground.to_string());
        if (left.empty() || left.size() >= cert.ground.size() || !left.is_subset_of(cert.ground))
            throw MalformedCertificate("left set " + left.to_string() + " is not a proper nonempty subset");
        if (!seen.insert(left).second) throw MalformedCertificate("repeated block " + left.to_string());
        if (e.cofactor.ground() != cert.ground)
            throw MalformedCertificate("cofactor over " + e.cofactor.ground().to_string());
    }
}

/// Checks the certificate's claim directly: each entry is homogeneous of the right
/// degree, and the input and the weighted sum of block monomials have equal normal
/// forms. Normal forms multiply termwise because the normal form is a ring map into
/// the free polynomial ring on the base variables.
inline bool verify_certificate(const Certificate& cert) {
    check_certificate_structure(cert);
    const IndexSet& ground = cert.ground;
    const auto block_exp = static_cast<Exponent>(2 * cert.g);
    const std::uint64_t target = cert.input.degree();

    PolyAccumulator rhs(ground);
    for (const CertificateEntry& e : cert.entries) {
        const IndexSet& left = e.block.left();
        const IndexSet right = ground.set_difference(left);
        const std::uint64_t block_degree = std::uint64_t{block_exp} * left.size() * right.size();

        if (e.cofactor.is_zero() || !e.cofactor.is_homogeneous() || *e.cofactor.degree() + block_degree != target)
            return false;

        std::vector<Power> powers;
        for (Label i : left)
            for (Label j : right) powers.push_back({{i, j}, block_exp});
        const Polynomial block_mono(ground, Monomial(Rational(1), Exponents(std::move(powers))));
        rhs.add(normal_form(e.cofactor) * normal_form(block_mono));
    }
    const Polynomial lhs = normal_form(Polynomial(ground, cert.input));
    return lhs == std::move(rhs).finish();
}

} // namespace blockcert
