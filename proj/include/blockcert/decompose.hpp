#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "blockcert/bounds.hpp"
#include "blockcert/certificate.hpp"
#include "blockcert/lemmas.hpp"
#include "blockcert/normal_form.hpp"

namespace blockcert {

/// Orientation used in certificates: min(ground) sits in the left part.
/// Transposing is free modulo I because the block exponent 2g is even.
inline Block canonical_orientation(const Block& b) {
    return b.left().contains(b.ground().min()) ? b : b.transposed();
}

/// Closed form on a two-element ground {u < v}:
/// c x_uv^a x_vu^b == c (-1)^b x_uv^{a+b-2g} * x_uv^{2g}.
inline Certificate base_case(const Monomial& zeta, const IndexSet& ground, std::int64_t g) {
    check_genus(g);
    if (ground.size() != 2) throw PreconditionError("base case needs a two-element ground, got " + ground.to_string());
    zeta.check_over(ground);
    if (sgn(zeta.coeff) == 0) throw PreconditionError("zero monomial");

    const Label u = ground[0];
    const Label v = ground[1];
    const Exponent a = zeta.exps.of({u, v});
    const Exponent b = zeta.exps.of({v, u});
    const auto two_g = static_cast<Exponent>(2 * g);
    if (a + b < two_g)
        throw DegreeBelowBound("degree " + std::to_string(a + b) + " below " + std::to_string(two_g));

    Rational c = zeta.coeff;
    if (b % 2) c = -c;
    Polynomial cofactor(ground, Monomial(c, {Power{{u, v}, a + b - two_g}}));
    return Certificate{ground, g, zeta, {CertificateEntry{Block(ground, IndexSet{u}), std::move(cofactor)}}};
}

struct MergeResult {
    Block merged;
    std::vector<VarPair> leftover;  ///< (C u D) \ merged, ascending
    bool transposed_inner = false;  ///< D had to be flipped to put z on the required side
};

/// Combines a block C of X \ {z} with a block D of (C.left + z) for branch H or
/// (C.right + z) for branch W into a block E of X with E contained in C u D.
/// H: z is moved to D's right part, E = D.left x (X \ D.left).
/// W: z is moved to D's left part, E = (X \ D.right) x D.right.
inline MergeResult merge_blocks(const Block& outer, const Block& inner, const IndexSet& ground, Branch branch) {
    const IndexSet extra = ground.set_difference(outer.ground());
    if (extra.size() != 1 || !outer.ground().is_subset_of(ground))
        throw PreconditionError("outer block ground " + outer.ground().to_string() + " is not " + ground.to_string() +
                                " minus one label");
    const Label z = extra[0];
    const IndexSet& side = branch == Branch::H ? outer.left() : outer.right();
    if (inner.ground() != side.with(z))
        throw PreconditionError("inner block ground " + inner.ground().to_string() + " should be " +
                                side.with(z).to_string());

    MergeResult out{Block(ground, IndexSet{z}), {}, false};
    Block d = inner;
    if (branch == Branch::H) {
        if (d.left().contains(z)) {
            d = d.transposed();
            out.transposed_inner = true;
        }
        out.merged = Block(ground, d.left());
    } else {
        if (d.right().contains(z)) {
            d = d.transposed();
            out.transposed_inner = true;
        }
        out.merged = Block(ground, ground.set_difference(d.right()));
    }

    for (const VarPair& v : out.merged.pairs())
        if (!outer.contains(v) && !d.contains(v))
            throw std::logic_error("merged block " + out.merged.to_string() + " not covered by " + outer.to_string() +
                                   " and " + d.to_string());
    for (const Block* b : std::initializer_list<const Block*>{&outer, &d})
        for (const VarPair& v : b->pairs())
            if (!out.merged.contains(v)) out.leftover.push_back(v);
    std::sort(out.leftover.begin(), out.leftover.end());
    out.leftover.erase(std::unique(out.leftover.begin(), out.leftover.end()), out.leftover.end());
    return out;
}

namespace detail {

/// Sums cofactors per canonical block of one ground set.
class EntryAggregator {
public:
    explicit EntryAggregator(IndexSet ground) : ground_(std::move(ground)) {}

    void add(const Block& b, const Polynomial& cofactor) {
        const Block c = canonical_orientation(b);
        auto it = sums_.try_emplace(c.mask(), ground_).first;
        it->second.add(cofactor);
    }

    std::vector<CertificateEntry> finish() && {
        std::vector<CertificateEntry> out;
        for (auto& [mask, acc] : sums_) {
            Polynomial p = std::move(acc).finish();
            if (!p.is_zero()) out.push_back({Block(ground_, subset_from_mask(ground_, mask)), std::move(p)});
        }
        return out;
    }

private:
    IndexSet ground_;
    std::map<std::uint64_t, PolyAccumulator> sums_;
};

inline std::vector<CertificateEntry> decompose_entries(const Monomial& zeta, const IndexSet& ground, std::int64_t g) {
    if (ground.size() == 2) return base_case(zeta, ground, g).entries;

    const auto two_g = static_cast<Exponent>(2 * g);
    const Label z = select_z(PairCountTable::from_monomial(zeta, ground), g);
    const ZSplit split = split_at_z(zeta, z, ground);
    const IndexSet rest = ground.without(z);

    EntryAggregator agg(ground);
    for (const CertificateEntry& sub : decompose_entries(split.r, rest, g)) {
        const Block& outer = sub.block;
        PolyAccumulator lifted(ground);
        for (const Monomial& t : sub.cofactor.terms()) lifted.add(rewrite_to_base(split.q * t, z, ground));
        const Polynomial base = std::move(lifted).finish();

        for (const Monomial& p : base.terms()) {
            const BranchChoice choice = branch_of_split(p, z, outer.left(), outer.right(), g);
            const bool h_side = choice.branch == Branch::H;
            const IndexSet sub_ground = (h_side ? outer.left() : outer.right()).with(z);
            const Monomial recursed = h_side ? choice.p_h : Monomial(p.coeff, choice.p_w.exps);
            const Monomial unused = h_side ? choice.p_w : Monomial(Rational(1), choice.p_h.exps);

            if (static_cast<std::int64_t>(recursed.degree()) < vanishing_bound(static_cast<std::int64_t>(sub_ground.size()), g))
                throw std::logic_error("recursed side misses its sub-bound");

            for (const CertificateEntry& leaf : decompose_entries(recursed, sub_ground, g)) {
                const MergeResult m = merge_blocks(outer, leaf.block, ground, choice.branch);
                std::vector<Power> extra = unused.exps.powers();
                for (const VarPair& v : m.leftover) extra.push_back({v, two_g});
                const Polynomial factor(ground, Monomial(unused.coeff, Exponents(std::move(extra))));
                agg.add(m.merged, leaf.cofactor.with_ground(ground) * factor);
            }
        }
    }
    return std::move(agg).finish();
}

} // namespace detail

/// Builds a block certificate for a monomial of degree >= vanishing_bound(|X|, g)
/// by the recursive pivot/split/merge construction. Entries are aggregated per
/// canonical block and listed in binary left-set order.
inline Certificate decompose(const Monomial& zeta, const IndexSet& ground, std::int64_t g) {
    check_genus(g);
    if (ground.size() < 2) throw GroundTooSmall("decompose needs |X| >= 2");
    if (ground.size() > max_enumerable_ground) throw SizeLimitExceeded("ground set too large");
    zeta.check_over(ground);
    if (sgn(zeta.coeff) == 0) throw PreconditionError("zero monomial");
    const std::int64_t bound = vanishing_bound(static_cast<std::int64_t>(ground.size()), g);
    if (static_cast<std::int64_t>(zeta.degree()) < bound)
        throw DegreeBelowBound("degree " + std::to_string(zeta.degree()) + " below vanishing bound " +
                               std::to_string(bound));
    return Certificate{ground, g, zeta, detail::decompose_entries(zeta, ground, g)};
}

} // namespace blockcert
