#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "blockcert/block.hpp"
#include "blockcert/bounds.hpp"
#include "blockcert/normal_form.hpp"

namespace blockcert {

/// Exact C(top, k); throws SizeLimitExceeded if it does not fit in 64 bits.
inline std::uint64_t binomial(std::uint64_t top, std::uint64_t k) {
    if (k > top) return 0;
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), top, k);
    if (!c.fits_ulong_p()) throw SizeLimitExceeded("binomial coefficient overflows 64 bits");
    return c.get_ui();
}

/// dim R_d = number of degree-d monomials in the n - 1 base variables.
inline std::uint64_t dim_R_graded(std::int64_t n, std::int64_t d) {
    if (n < 2) throw GroundTooSmall("dim_R_graded needs n >= 2");
    if (d < 0) throw PreconditionError("degree must be >= 0");
    return binomial(static_cast<std::uint64_t>(d + n - 2), static_cast<std::uint64_t>(n - 2));
}

/// Row echelon basis over Z, built by fraction-free elimination: each incoming row
/// is cleared against existing pivots by cross-multiplication and reduced to
/// content 1, so no fractions ever appear.
class RowSpace {
public:
    explicit RowSpace(std::size_t columns) : columns_(columns) {}

    std::size_t columns() const noexcept { return columns_; }
    std::size_t rank() const noexcept { return pivots_.size(); }
    bool full() const noexcept { return pivots_.size() == columns_; }

    /// Adds a row; returns true if the rank grew.
    bool insert(const std::vector<Rational>& row) {
        auto r = reduce(to_integral(row));
        if (!r) return false;
        const std::size_t lead = leading(*r);
        pivots_.emplace(lead, std::move(*r));
        return true;
    }

    bool contains(const std::vector<Rational>& row) const { return !reduce(to_integral(row)).has_value(); }

private:
    using Row = std::vector<Integer>;

    std::vector<Integer> to_integral(const std::vector<Rational>& row) const {
        if (row.size() != columns_) throw PreconditionError("row length mismatch");
        Integer den = 1;
        for (const Rational& q : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
        Row out(columns_);
        for (std::size_t c = 0; c < columns_; ++c) out[c] = row[c].get_num() * (den / row[c].get_den());
        make_primitive(out);
        return out;
    }

    static void make_primitive(Row& r) {
        Integer content = 0;
        for (const Integer& x : r) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
        if (content > 1)
            for (Integer& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
    }

    std::size_t leading(const Row& r) const {
        for (std::size_t c = 0; c < columns_; ++c)
            if (sgn(r[c]) != 0) return c;
        return columns_;
    }

    /// Fully reduced remainder, or nullopt if the row lies in the span.
    std::optional<Row> reduce(Row r) const {
        for (std::size_t lead = leading(r); lead < columns_; lead = leading(r)) {
            auto it = pivots_.find(lead);
            if (it == pivots_.end()) return r;
            const Row& p = it->second;
            const Integer a = p[lead];
            const Integer b = r[lead];
            for (std::size_t c = lead; c < columns_; ++c) r[c] = a * r[c] - b * p[c];
            make_primitive(r);
        }
        return std::nullopt;
    }

    std::size_t columns_;
    std::map<std::size_t, Row> pivots_;
};

/// Hard cap on spanning-set rows assembled for one graded piece.
inline constexpr std::uint64_t max_spanning_rows = 100000;

/// Degree-d slice of the block ideal J_g inside R, as a row space over the
/// degree-d monomials of the base variables x_zj, z = min(X).
class IdealSlice {
public:
    IdealSlice(IndexSet ground, std::int64_t g, std::int64_t degree)
        : ground_(std::move(ground)), g_(g), degree_(degree), space_(0) {
        const auto n = static_cast<std::int64_t>(ground_.size());
        if (n < 2 || n > 4) throw PreconditionError("graded dimensions supported for 2 <= |X| <= 4");
        if (g_ < 2 || g_ > 3) throw PreconditionError("graded dimensions supported for g in {2, 3}");
        if (degree_ < 0) throw PreconditionError("degree must be >= 0");

        const std::vector<VarPair> vars = all_pairs(ground_);
        const std::vector<Block> blocks = enumerate_blocks(ground_);
        std::uint64_t rows = 0;
        for (const Block& b : blocks) {
            const std::int64_t k = degree_ - 2 * g_ * static_cast<std::int64_t>(b.pair_count());
            if (k >= 0) rows += binomial(static_cast<std::uint64_t>(k) + vars.size() - 1, vars.size() - 1);
            if (rows > max_spanning_rows)
                throw SizeLimitExceeded("spanning set for degree " + std::to_string(degree_) + " exceeds " +
                                        std::to_string(max_spanning_rows) + " rows");
        }

        index_columns();
        space_ = RowSpace(columns_.size());

        std::vector<Polynomial> var_nf;
        for (const VarPair& v : vars) var_nf.push_back(normal_form(Polynomial(ground_, Monomial::variable(v))));

        for (const Block& b : blocks) {
            const std::int64_t k = degree_ - 2 * g_ * static_cast<std::int64_t>(b.pair_count());
            if (k < 0) continue;
            const Polynomial start =
                normal_form(Polynomial(ground_, b.monomial(static_cast<Exponent>(2 * g_))));
            span_products(start, var_nf, 0, k);
            if (space_.full()) break;
        }
    }

    const IndexSet& ground() const noexcept { return ground_; }
    std::int64_t degree() const noexcept { return degree_; }
    std::uint64_t dim_R() const noexcept { return columns_.size(); }
    std::uint64_t dim_J() const noexcept { return space_.rank(); }
    std::uint64_t dim_quotient() const noexcept { return dim_R() - dim_J(); }

    /// Whether the class of `p` (homogeneous of this degree) lies in J_g.
    bool contains(const Polynomial& p) const { return space_.contains(to_row(normal_form(p, ground_))); }

private:
    void index_columns() {
        const Label z = ground_.min();
        const IndexSet others = ground_.without(z);
        std::vector<Exponent> e(others.size(), 0);
        auto rec = [&](auto&& self, std::size_t pos, std::int64_t left) -> void {
            if (pos + 1 == others.size()) {
                e[pos] = static_cast<Exponent>(left);
                std::vector<Power> powers;
                for (std::size_t k = 0; k < others.size(); ++k) powers.push_back({{z, others[k]}, e[k]});
                const auto col = columns_.size();
                columns_.emplace(Exponents(std::move(powers)), col);
                return;
            }
            for (std::int64_t x = left; x >= 0; --x) {
                e[pos] = static_cast<Exponent>(x);
                self(self, pos + 1, left - x);
            }
        };
        rec(rec, 0, degree_);
    }

    std::vector<Rational> to_row(const Polynomial& base) const {
        std::vector<Rational> row(columns_.size());
        for (const Monomial& m : base.terms()) {
            auto it = columns_.find(m.exps);
            if (it == columns_.end()) throw PreconditionError("polynomial is not homogeneous of degree " + std::to_string(degree_));
            row[it->second] = m.coeff;
        }
        return row;
    }

    /// Multiplies `acc` by every degree-`k` monomial in variables var_nf[from..].
    void span_products(const Polynomial& acc, const std::vector<Polynomial>& var_nf, std::size_t from, std::int64_t k) {
        if (space_.full()) return;
        if (k == 0) {
            space_.insert(to_row(acc));
            return;
        }
        for (std::size_t v = from; v < var_nf.size(); ++v) span_products(acc * var_nf[v], var_nf, v, k - 1);
    }

    IndexSet ground_;
    std::int64_t g_;
    std::int64_t degree_;
    std::map<Exponents, std::size_t> columns_;
    RowSpace space_;
};

inline std::uint64_t dim_quotient_graded(const IndexSet& ground, std::int64_t g, std::int64_t d) {
    return IdealSlice(ground, g, d).dim_quotient();
}

struct GradedRow {
    std::int64_t degree;
    std::uint64_t dim_R;
    std::uint64_t dim_J;
    std::uint64_t dim_quotient;

    friend bool operator==(const GradedRow&, const GradedRow&) = default;
};

struct GradedReport {
    IndexSet ground;
    std::int64_t g;
    std::vector<GradedRow> rows;
};

inline GradedReport graded_report(const IndexSet& ground, std::int64_t g, std::int64_t from, std::int64_t to) {
    GradedReport out{ground, g, {}};
    for (std::int64_t d = from; d <= to; ++d) {
        const IdealSlice s(ground, g, d);
        out.rows.push_back({d, s.dim_R(), s.dim_J(), s.dim_quotient()});
    }
    return out;
}

} // namespace blockcert
