#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "blockcert/monomial.hpp"

namespace blockcert {

class Polynomial;

/// Collects terms, merging like ones; `finish` yields a canonical Polynomial.
class PolyAccumulator {
public:
    explicit PolyAccumulator(IndexSet ground) : ground_(std::move(ground)) {}

    void add(const Exponents& e, const Rational& c) {
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (inserted) it->second.canonicalize();
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }
    void add(const Monomial& m) { add(m.exps, m.coeff); }
    void add(const Polynomial& p);
    /// this += a * b
    void add_product(const Polynomial& a, const Polynomial& b);

    const IndexSet& ground() const noexcept { return ground_; }
    bool empty() const noexcept { return terms_.empty(); }

    Polynomial finish() &&;

private:
    IndexSet ground_;
    std::map<Exponents, Rational, std::greater<>> terms_;
};

/// Sparse polynomial over Q in the variables x_ij, i != j in `ground`.
/// Terms are kept merged, nonzero, and sorted leading-first (descending graded lex).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(IndexSet ground) : ground_(std::move(ground)) {}

    /// Canonicalizes arbitrary terms; every variable must be a valid pair over `ground`.
    Polynomial(IndexSet ground, std::vector<Monomial> terms) : ground_(std::move(ground)) {
        PolyAccumulator acc(ground_);
        for (const Monomial& m : terms) {
            m.check_over(ground_);
            acc.add(m);
        }
        *this = std::move(acc).finish();
    }

    Polynomial(IndexSet ground, Monomial m) : Polynomial(std::move(ground), std::vector<Monomial>{std::move(m)}) {}

    static Polynomial constant(IndexSet ground, const Rational& c) {
        return Polynomial(std::move(ground), Monomial(c, Exponents{}));
    }

    const IndexSet& ground() const noexcept { return ground_; }
    const std::vector<Monomial>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    /// Highest term degree; std::nullopt stands for the degree of 0 (minus infinity).
    std::optional<std::uint64_t> degree() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.front().degree();
    }

    /// True for 0 and for polynomials whose terms all share one degree.
    bool is_homogeneous() const {
        for (const Monomial& m : terms_)
            if (m.degree() != terms_.front().degree()) return false;
        return true;
    }

    /// Same polynomial viewed over a superset of the ground set.
    Polynomial with_ground(const IndexSet& larger) const {
        if (!ground_.is_subset_of(larger))
            throw GroundMismatch("cannot move polynomial over " + ground_.to_string() + " to " + larger.to_string());
        Polynomial out = *this;
        out.ground_ = larger;
        return out;
    }

    /// Same polynomial over a different ground set; every variable must lie in it.
    Polynomial restricted_to(const IndexSet& ground) const {
        for (const Monomial& m : terms_) m.check_over(ground);
        Polynomial out = *this;
        out.ground_ = ground;
        return out;
    }

    Polynomial operator-() const {
        Polynomial out = *this;
        for (Monomial& m : out.terms_) m.coeff = -m.coeff;
        return out;
    }

    Polynomial scaled(const Rational& c) const {
        if (sgn(c) == 0) return Polynomial(ground_);
        Polynomial out = *this;
        for (Monomial& m : out.terms_) m.coeff *= c;
        return out;
    }

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
        check_same_ground(p, q);
        PolyAccumulator acc(p.ground_);
        acc.add(p);
        acc.add(q);
        return std::move(acc).finish();
    }

    friend Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

    friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
        check_same_ground(p, q);
        PolyAccumulator acc(p.ground_);
        acc.add_product(p, q);
        return std::move(acc).finish();
    }

    Polynomial& operator+=(const Polynomial& q) { return *this = *this + q; }
    Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

    /// Structural equality: same ground set and same canonical term list.
    friend bool operator==(const Polynomial& p, const Polynomial& q) {
        return p.ground_ == q.ground_ && p.terms_ == q.terms_;
    }

private:
    friend class PolyAccumulator;

    static void check_same_ground(const Polynomial& p, const Polynomial& q) {
        if (p.ground_ != q.ground_)
            throw GroundMismatch("polynomials over " + p.ground_.to_string() + " and " + q.ground_.to_string());
    }

    IndexSet ground_;
    std::vector<Monomial> terms_;
};

inline void PolyAccumulator::add(const Polynomial& p) {
    for (const Monomial& m : p.terms()) add(m);
}

inline void PolyAccumulator::add_product(const Polynomial& a, const Polynomial& b) {
    for (const Monomial& x : a.terms())
        for (const Monomial& y : b.terms()) add(x.exps * y.exps, x.coeff * y.coeff);
}

inline Polynomial PolyAccumulator::finish() && {
    Polynomial out(std::move(ground_));
    out.terms_.reserve(terms_.size());
    for (auto& [e, c] : terms_) out.terms_.emplace_back(std::move(c), e);
    terms_.clear();
    return out;
}

} // namespace blockcert
