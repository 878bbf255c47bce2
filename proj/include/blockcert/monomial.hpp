#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "blockcert/index_set.hpp"
#include "blockcert/rational.hpp"

namespace blockcert {

using Exponent = std::uint32_t;

struct Power {
    VarPair var;
    Exponent exp = 0;

    friend bool operator==(const Power&, const Power&) = default;
};

/// Sparse exponent map, sorted by variable, no zero entries.
class Exponents {
public:
    Exponents() = default;

    /// Accepts any order and repeated variables (exponents are summed); drops zeros.
    explicit Exponents(std::vector<Power> powers) : powers_(std::move(powers)) {
        std::sort(powers_.begin(), powers_.end(),
                  [](const Power& a, const Power& b) { return a.var < b.var; });
        std::vector<Power> merged;
        merged.reserve(powers_.size());
        for (const Power& p : powers_) {
            if (p.exp == 0) continue;
            if (!merged.empty() && merged.back().var == p.var)
                merged.back().exp += p.exp;
            else
                merged.push_back(p);
        }
        powers_ = std::move(merged);
        for (const Power& p : powers_) degree_ += p.exp;
    }

    const std::vector<Power>& powers() const noexcept { return powers_; }
    std::uint64_t degree() const noexcept { return degree_; }
    bool is_one() const noexcept { return powers_.empty(); }

    Exponent of(const VarPair& v) const {
        auto it = std::lower_bound(powers_.begin(), powers_.end(), v,
                                   [](const Power& p, const VarPair& x) { return p.var < x; });
        return (it != powers_.end() && it->var == v) ? it->exp : 0;
    }

    friend Exponents operator*(const Exponents& a, const Exponents& b) {
        Exponents out;
        out.powers_.reserve(a.powers_.size() + b.powers_.size());
        auto x = a.powers_.begin();
        auto y = b.powers_.begin();
        while (x != a.powers_.end() || y != b.powers_.end()) {
            if (y == b.powers_.end() || (x != a.powers_.end() && x->var < y->var)) {
                out.powers_.push_back(*x++);
            } else if (x == a.powers_.end() || y->var < x->var) {
                out.powers_.push_back(*y++);
            } else {
                out.powers_.push_back({x->var, x->exp + y->exp});
                ++x;
                ++y;
            }
        }
        out.degree_ = a.degree_ + b.degree_;
        return out;
    }

    friend bool operator==(const Exponents& a, const Exponents& b) { return a.powers_ == b.powers_; }

    /// Graded lexicographic order: total degree first, then the dense exponent
    /// vector compared lexicographically with variables in ascending VarPair order.
    friend std::strong_ordering operator<=>(const Exponents& a, const Exponents& b) {
        if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
        auto x = a.powers_.begin();
        auto y = b.powers_.begin();
        for (; x != a.powers_.end() && y != b.powers_.end(); ++x, ++y) {
            if (x->var != y->var)
                // The side holding the earlier variable has the positive entry there.
                return x->var < y->var ? std::strong_ordering::greater : std::strong_ordering::less;
            if (x->exp != y->exp) return x->exp <=> y->exp;
        }
        if (x != a.powers_.end()) return std::strong_ordering::greater;
        if (y != b.powers_.end()) return std::strong_ordering::less;
        return std::strong_ordering::equal;
    }

private:
    std::vector<Power> powers_;
    std::uint64_t degree_ = 0;
};

/// Coefficient times a power product.
struct Monomial {
    Rational coeff{1};
    Exponents exps;

    Monomial() = default;
    // gmpxx does not reduce mpq_class(num, den); every stored coefficient is canonical.
    Monomial(Rational c, Exponents e) : coeff(std::move(c)), exps(std::move(e)) { coeff.canonicalize(); }
    Monomial(Rational c, std::vector<Power> powers) : coeff(std::move(c)), exps(std::move(powers)) {
        coeff.canonicalize();
    }

    static Monomial variable(VarPair v, Exponent e = 1) { return Monomial(Rational(1), {Power{v, e}}); }

    std::uint64_t degree() const noexcept { return exps.degree(); }

    /// Every variable is a valid pair over `ground`.
    void check_over(const IndexSet& ground) const {
        for (const Power& p : exps.powers()) check_pair(p.var, ground);
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        return Monomial(a.coeff * b.coeff, a.exps * b.exps);
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.coeff == b.coeff && a.exps == b.exps;
    }
};

} // namespace blockcert
