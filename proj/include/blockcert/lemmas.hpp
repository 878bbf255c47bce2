#pragma once

#include <cstdint>
#include <stdexcept>
#include <map>
#include <utility>

#include "blockcert/block.hpp"
#include "blockcert/bounds.hpp"

namespace blockcert {

/// Fiber sizes of a map Y -> X^(2), keyed by unordered pairs {i < j}.
class PairCountTable {
public:
    explicit PairCountTable(IndexSet ground) : ground_(std::move(ground)) {}

    /// counts({i,j}) = d_ij + d_ji
    static PairCountTable from_monomial(const Monomial& m, const IndexSet& ground) {
        m.check_over(ground);
        PairCountTable t(ground);
        for (const Power& p : m.exps.powers()) t.add(p.var.i, p.var.j, p.exp);
        return t;
    }

    void add(Label a, Label b, std::uint64_t c) {
        auto key = ordered(a, b);
        counts_[key] += c;
    }
    void set(Label a, Label b, std::uint64_t c) { counts_[ordered(a, b)] = c; }

    std::uint64_t count(Label a, Label b) const {
        auto it = counts_.find(ordered(a, b));
        return it == counts_.end() ? 0 : it->second;
    }

    const IndexSet& ground() const noexcept { return ground_; }

    std::uint64_t total() const {
        std::uint64_t s = 0;
        for (const auto& [k, c] : counts_) s += c;
        return s;
    }

    /// Total over 2-subsets of ground \ {z}.
    std::uint64_t total_avoiding(Label z) const {
        std::uint64_t s = 0;
        for (const auto& [k, c] : counts_)
            if (k.first != z && k.second != z) s += c;
        return s;
    }

private:
    std::pair<Label, Label> ordered(Label a, Label b) const {
        if (a == b || !ground_.contains(a) || !ground_.contains(b))
            throw PreconditionError("{" + std::to_string(a) + "," + std::to_string(b) + "} is not a 2-subset of " +
                                    ground_.to_string());
        return a < b ? std::pair{a, b} : std::pair{b, a};
    }

    IndexSet ground_;
    std::map<std::pair<Label, Label>, std::uint64_t> counts_;
};

/// (n-1)(n-2)g - n + 3, the restricted total select_z guarantees.
inline std::int64_t restricted_threshold(std::int64_t n, std::int64_t g) { return (n - 1) * (n - 2) * g - n + 3; }

/// Smallest z whose complement carries a restricted total >= (n-1)(n-2)g - n + 3.
/// Needs n >= 3, g >= 2 and total >= n(n-1)g - n + 2; one always exists then.
inline Label select_z(const PairCountTable& table, std::int64_t g) {
    const auto n = static_cast<std::int64_t>(table.ground().size());
    if (n < 3) throw GroundTooSmall("pivot selection needs n >= 3, got " + std::to_string(n));
    const std::int64_t bound = vanishing_bound(n, g);
    const auto total = static_cast<std::int64_t>(table.total());
    if (total < bound)
        throw DegreeBelowBound("pair-count total " + std::to_string(total) + " below bound " + std::to_string(bound));

    const std::int64_t need = restricted_threshold(n, g);
    for (Label z : table.ground())
        if (static_cast<std::int64_t>(table.total_avoiding(z)) >= need) return z;
    throw std::logic_error("no pivot found although the total meets the bound");
}

struct ZSplit {
    Monomial q;  ///< factors x_iz, x_zi; carries the coefficient
    Monomial r;  ///< factors avoiding z; coefficient 1
};

inline ZSplit split_at_z(const Monomial& zeta, Label z, const IndexSet& ground) {
    if (!ground.contains(z)) throw PreconditionError("label " + std::to_string(z) + " not in " + ground.to_string());
    zeta.check_over(ground);
    std::vector<Power> touching;
    std::vector<Power> avoiding;
    for (const Power& p : zeta.exps.powers()) (p.var.involves(z) ? touching : avoiding).push_back(p);
    return {Monomial(zeta.coeff, Exponents(std::move(touching))), Monomial(Rational(1), Exponents(std::move(avoiding)))};
}

enum class Branch { H, W };

inline const char* to_string(Branch b) { return b == Branch::H ? "H" : "W"; }

struct BranchChoice {
    Branch branch;
    Monomial p_h;            ///< factors x_ze, e in left; carries the coefficient
    Monomial p_w;            ///< factors x_zf, f in right; coefficient 1
    std::int64_t sub_bound;  ///< degree the chosen side is certified to reach
};

/// gk(k+1) - k + 1, the bound for a side of size k (equals vanishing_bound(k+1, g)).
inline std::int64_t side_threshold(std::int64_t k, std::int64_t g) { return g * k * (k + 1) - k + 1; }

/// Splits a base monomial by the partition {left, right} of ground \ {z} and picks a
/// side whose degree reaches its threshold; H wins ties.
inline BranchChoice branch_of_split(const Monomial& p, Label z, const IndexSet& left, const IndexSet& right,
                                    std::int64_t g) {
    check_genus(g);
    if (left.empty() || right.empty()) throw PreconditionError("both sides of the partition must be nonempty");
    if (!left.disjoint_from(right) || left.contains(z) || right.contains(z))
        throw PreconditionError("left, right and {z} must be pairwise disjoint");

    const auto h = static_cast<std::int64_t>(left.size());
    const auto w = static_cast<std::int64_t>(right.size());
    std::vector<Power> ph;
    std::vector<Power> pw;
    for (const Power& f : p.exps.powers()) {
        if (f.var.i != z)
            throw PreconditionError("branch split expects base variables x[" + std::to_string(z) + ",j] only");
        if (left.contains(f.var.j))
            ph.push_back(f);
        else if (right.contains(f.var.j))
            pw.push_back(f);
        else
            throw PreconditionError("variable index " + std::to_string(f.var.j) + " outside the partition");
    }

    const std::int64_t need = vanishing_bound(h + w + 1, g) - 2 * g * w * h;
    if (static_cast<std::int64_t>(p.degree()) < need)
        throw DegreeBelowBound("base monomial degree " + std::to_string(p.degree()) + " below " + std::to_string(need));

    BranchChoice out{Branch::H, Monomial(p.coeff, Exponents(std::move(ph))), Monomial(Rational(1), Exponents(std::move(pw))),
                     side_threshold(h, g)};
    if (static_cast<std::int64_t>(out.p_h.degree()) >= out.sub_bound) return out;

    out.branch = Branch::W;
    out.sub_bound = side_threshold(w, g);
    if (static_cast<std::int64_t>(out.p_w.degree()) < out.sub_bound)
        throw std::logic_error("neither side of the split reaches its threshold");
    return out;
}

} // namespace blockcert
