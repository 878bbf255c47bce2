#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blockcert/monomial.hpp"

namespace blockcert {

/// The oriented pair set left x (ground \ left) for a proper nonempty `left`.
class Block {
public:
    Block(IndexSet ground, IndexSet left) : ground_(std::move(ground)), left_(std::move(left)) {
        if (left_.empty() || left_.size() >= ground_.size() || !left_.is_subset_of(ground_))
            throw PreconditionError("block left set " + left_.to_string() + " is not a proper nonempty subset of " +
                                    ground_.to_string());
        right_ = ground_.set_difference(left_);
    }

    const IndexSet& ground() const noexcept { return ground_; }
    const IndexSet& left() const noexcept { return left_; }
    const IndexSet& right() const noexcept { return right_; }
    std::size_t height() const noexcept { return left_.size(); }
    std::size_t width() const noexcept { return right_.size(); }
    std::size_t pair_count() const noexcept { return left_.size() * right_.size(); }

    Block transposed() const { return Block(ground_, right_); }

    bool contains(const VarPair& v) const { return left_.contains(v.i) && right_.contains(v.j); }

    /// Ascending list of (i, j) with i in left, j in right.
    std::vector<VarPair> pairs() const {
        std::vector<VarPair> out;
        out.reserve(pair_count());
        for (Label i : left_)
            for (Label j : right_) out.push_back({i, j});
        return out;
    }

    /// prod over the block of x_ij^exp
    Monomial monomial(Exponent exp) const {
        std::vector<Power> powers;
        for (const VarPair& v : pairs()) powers.push_back({v, exp});
        return Monomial(Rational(1), Exponents(std::move(powers)));
    }

    /// Bitmask of `left` over positions in `ground` (bit k = k-th smallest label).
    std::uint64_t mask() const {
        std::uint64_t m = 0;
        for (Label x : left_) m |= std::uint64_t{1} << ground_.position(x);
        return m;
    }

    std::string to_string() const { return left_.to_string() + "x" + right_.to_string(); }

    friend bool operator==(const Block& a, const Block& b) { return a.ground_ == b.ground_ && a.left_ == b.left_; }

private:
    IndexSet ground_;
    IndexSet left_;
    IndexSet right_;
};

inline constexpr std::size_t max_enumerable_ground = 20;

/// Left set whose bit pattern over ground positions is `mask`.
inline IndexSet subset_from_mask(const IndexSet& ground, std::uint64_t mask) {
    std::vector<Label> out;
    for (std::size_t k = 0; k < ground.size(); ++k)
        if (mask >> k & 1) out.push_back(ground[k]);
    return IndexSet(std::move(out));
}

/// All 2^n - 2 oriented blocks, left sets in binary subset order.
inline std::vector<Block> enumerate_blocks(const IndexSet& ground) {
    if (ground.size() < 2) throw GroundTooSmall("blocks need a ground set of size >= 2");
    if (ground.size() > max_enumerable_ground)
        throw SizeLimitExceeded("refusing to enumerate blocks of a ground set larger than " +
                                std::to_string(max_enumerable_ground));
    const std::uint64_t full = (std::uint64_t{1} << ground.size()) - 1;
    std::vector<Block> out;
    out.reserve(full - 1);
    for (std::uint64_t mask = 1; mask < full; ++mask) out.emplace_back(ground, subset_from_mask(ground, mask));
    return out;
}

} // namespace blockcert
