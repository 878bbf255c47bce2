#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "blockcert/lemmas.hpp"

namespace blockcert {

/// Outcome of a batch check over many generated cases.
struct SuiteResult {
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::string first_failure;

    bool passed() const noexcept { return failures == 0 && checked > 0; }

    void fail(const std::string& why) {
        if (failures++ == 0) first_failure = why;
    }
};

/// Uniformly random composition of `total` into `parts` nonnegative parts
/// (stars and bars: a uniform choice of parts-1 bar positions).
template <class Rng>
std::vector<std::uint64_t> random_composition(std::uint64_t total, std::size_t parts, Rng& rng) {
    std::vector<std::uint64_t> slots(total + parts - 1);
    std::iota(slots.begin(), slots.end(), std::uint64_t{0});
    std::vector<std::uint64_t> bars;
    std::sample(slots.begin(), slots.end(), std::back_inserter(bars), parts - 1, rng);
    std::vector<std::uint64_t> out;
    std::uint64_t prev = 0;
    for (std::uint64_t b : bars) {
        out.push_back(b - prev);
        prev = b + 1;
    }
    out.push_back(total + parts - 1 - prev);
    return out;
}

/// Calls `visit` on every composition of `total` into `parts` nonnegative parts.
template <class Visit>
void for_each_composition(std::uint64_t total, std::size_t parts, Visit&& visit) {
    std::vector<std::uint64_t> c(parts, 0);
    auto rec = [&](auto&& self, std::size_t pos, std::uint64_t left) -> void {
        if (pos + 1 == parts) {
            c[pos] = left;
            visit(static_cast<const std::vector<std::uint64_t>&>(c));
            return;
        }
        for (std::uint64_t x = 0; x <= left; ++x) {
            c[pos] = x;
            self(self, pos + 1, left - x);
        }
    };
    if (parts > 0) rec(rec, 0, total);
}

namespace detail {

inline std::vector<std::pair<Label, Label>> two_subsets(const IndexSet& ground) {
    std::vector<std::pair<Label, Label>> out;
    for (std::size_t a = 0; a < ground.size(); ++a)
        for (std::size_t b = a + 1; b < ground.size(); ++b) out.emplace_back(ground[a], ground[b]);
    return out;
}

inline void check_one_table(const IndexSet& ground, const std::vector<std::pair<Label, Label>>& keys,
                            const std::vector<std::uint64_t>& counts, std::int64_t g, SuiteResult& result) {
    PairCountTable table(ground);
    for (std::size_t k = 0; k < keys.size(); ++k) table.set(keys[k].first, keys[k].second, counts[k]);
    ++result.checked;
    const std::int64_t need = restricted_threshold(static_cast<std::int64_t>(ground.size()), g);
    try {
        const Label z = select_z(table, g);
        if (static_cast<std::int64_t>(table.total_avoiding(z)) < need) {
            result.fail("pivot " + std::to_string(z) + " misses the restricted threshold");
            return;
        }
        for (Label y : ground) {
            if (y == z) break;
            if (static_cast<std::int64_t>(table.total_avoiding(y)) >= need) {
                result.fail("pivot " + std::to_string(z) + " is not the smallest qualifying label");
                return;
            }
        }
    } catch (const std::exception& e) {
        result.fail(e.what());
    }
}

} // namespace detail

/// Every pair-count table with total exactly n(n-1)g - n + 2: select_z must succeed
/// and return the smallest label meeting the restricted threshold.
inline SuiteResult check_pivot_lemma_exhaustive(const IndexSet& ground, std::int64_t g) {
    const auto keys = detail::two_subsets(ground);
    const auto total = static_cast<std::uint64_t>(vanishing_bound(static_cast<std::int64_t>(ground.size()), g));
    SuiteResult result;
    for_each_composition(total, keys.size(),
                         [&](const std::vector<std::uint64_t>& c) { detail::check_one_table(ground, keys, c, g, result); });
    return result;
}

/// Same check on `samples` uniformly drawn compositions.
inline SuiteResult check_pivot_lemma_sampled(const IndexSet& ground, std::int64_t g, std::uint64_t samples,
                                             std::uint64_t seed) {
    const auto keys = detail::two_subsets(ground);
    const auto total = static_cast<std::uint64_t>(vanishing_bound(static_cast<std::int64_t>(ground.size()), g));
    std::mt19937_64 rng(seed);
    SuiteResult result;
    for (std::uint64_t s = 0; s < samples; ++s)
        detail::check_one_table(ground, keys, random_composition(total, keys.size(), rng), g, result);
    return result;
}

/// For every (h, w) with h + w = n - 1 and every split a + b of the exact degree
/// bound, checks the threshold dichotomy directly and checks that branch_of_split
/// on x_{z,e}^a x_{z,f}^b picks H exactly when a reaches the H threshold.
inline SuiteResult check_partition_lemma(const IndexSet& ground, std::int64_t g) {
    const auto n = static_cast<std::int64_t>(ground.size());
    if (n < 3) throw GroundTooSmall("partition lemma needs n >= 3");
    const Label z = ground.min();
    const IndexSet others = ground.without(z);
    SuiteResult result;
    for (std::int64_t h = 1; h <= n - 2; ++h) {
        const std::int64_t w = n - 1 - h;
        const IndexSet left(std::vector<Label>(others.begin(), others.begin() + h));
        const IndexSet right = others.set_difference(left);
        const std::int64_t bound = vanishing_bound(n, g) - 2 * g * w * h;
        const std::int64_t th = side_threshold(h, g);
        const std::int64_t tw = side_threshold(w, g);
        for (std::int64_t a = 0; a <= bound; ++a) {
            const std::int64_t b = bound - a;
            ++result.checked;
            const std::string tag = "h=" + std::to_string(h) + " a=" + std::to_string(a) + " b=" + std::to_string(b);
            if (a < th && b < tw) {
                result.fail("dichotomy fails at " + tag);
                continue;
            }
            try {
                const Monomial p(Rational(1), {Power{{z, left[0]}, static_cast<Exponent>(a)},
                                              Power{{z, right[0]}, static_cast<Exponent>(b)}});
                const BranchChoice c = branch_of_split(p, z, left, right, g);
                const Branch expected = a >= th ? Branch::H : Branch::W;
                if (c.branch != expected) result.fail("unexpected branch at " + tag);
            } catch (const std::exception& e) {
                result.fail(tag + ": " + e.what());
            }
        }
    }
    return result;
}

} // namespace blockcert
