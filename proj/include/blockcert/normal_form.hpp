#pragma once

#include "blockcert/polynomial.hpp"

namespace blockcert {

/// (x_zj - x_zi)^d expanded binomially.
inline Polynomial base_difference_power(Label z, Label i, Label j, Exponent d, const IndexSet& ground) {
    PolyAccumulator acc(ground);
    for (Exponent k = 0; k <= d; ++k) {
        Integer c;
        mpz_bin_uiui(c.get_mpz_t(), d, k);
        if ((d - k) % 2) c = -c;
        acc.add(Exponents({Power{{z, j}, k}, Power{{z, i}, d - k}}), Rational(c));
    }
    return std::move(acc).finish();
}

/// Rewrites a monomial as a homogeneous polynomial of the same degree in the base
/// variables x_zj only, equal to it modulo the relations x_ij + x_ji and
/// x_ij + x_jk + x_ki. Substitutes x_iz -> -x_zi and x_ij -> -x_zi + x_zj.
inline Polynomial rewrite_to_base(const Monomial& xi, Label z, const IndexSet& ground) {
    if (!ground.contains(z))
        throw PreconditionError("base label " + std::to_string(z) + " not in " + ground.to_string());
    xi.check_over(ground);

    Rational coeff = xi.coeff;
    std::vector<Power> direct;
    std::vector<Power> mixed;
    for (const Power& p : xi.exps.powers()) {
        if (p.var.i == z) {
            direct.push_back(p);
        } else if (p.var.j == z) {
            if (p.exp % 2) coeff = -coeff;
            direct.push_back({{z, p.var.i}, p.exp});
        } else {
            mixed.push_back(p);
        }
    }

    Polynomial out(ground, Monomial(coeff, Exponents(std::move(direct))));
    for (const Power& p : mixed) out = out * base_difference_power(z, p.var.i, p.var.j, p.exp, ground);
    return out;
}

/// Canonical representative modulo I: every term rewritten over z = min(ground).
/// Two polynomials are congruent iff their normal forms are equal; nf(p) = 0 iff p is in I.
inline Polynomial normal_form(const Polynomial& p) {
    const IndexSet& ground = p.ground();
    if (ground.size() < 2) {
        if (p.is_zero()) return p;
        throw GroundTooSmall("normal form needs a ground set of size >= 2");
    }
    const Label z = ground.min();
    PolyAccumulator acc(ground);
    for (const Monomial& m : p.terms()) acc.add(rewrite_to_base(m, z, ground));
    return std::move(acc).finish();
}

/// Checks `p` is over `ground` first.
inline Polynomial normal_form(const Polynomial& p, const IndexSet& ground) {
    if (p.ground() != ground)
        throw GroundMismatch("polynomial over " + p.ground().to_string() + ", expected " + ground.to_string());
    return normal_form(p);
}

inline bool eq_mod_I(const Polynomial& p, const Polynomial& q, const IndexSet& ground) {
    return normal_form(p - q, ground).is_zero();
}

} // namespace blockcert
