#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

#include "blockcert/errors.hpp"

namespace blockcert {

using Label = std::uint32_t;

/// Finite set of labels, stored strictly ascending.
class IndexSet {
public:
    IndexSet() = default;
    IndexSet(std::initializer_list<Label> labels) : IndexSet(std::vector<Label>(labels)) {}

    /// Sorts the input; duplicate labels are a precondition error.
    explicit IndexSet(std::vector<Label> labels) : elems_(std::move(labels)) {
        std::sort(elems_.begin(), elems_.end());
        if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end())
            throw PreconditionError("duplicate label in index set");
    }

    /// {first, ..., first + n - 1}
    static IndexSet range(Label first, std::size_t n) {
        std::vector<Label> v(n);
        for (std::size_t k = 0; k < n; ++k) v[k] = first + static_cast<Label>(k);
        return IndexSet(std::move(v));
    }

    const std::vector<Label>& elements() const noexcept { return elems_; }
    std::size_t size() const noexcept { return elems_.size(); }
    bool empty() const noexcept { return elems_.empty(); }
    auto begin() const noexcept { return elems_.begin(); }
    auto end() const noexcept { return elems_.end(); }
    Label operator[](std::size_t k) const { return elems_[k]; }

    Label min() const {
        if (elems_.empty()) throw PreconditionError("min of empty index set");
        return elems_.front();
    }

    bool contains(Label x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }

    /// Position of `x` in ascending order; `x` must be a member.
    std::size_t position(Label x) const {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
        if (it == elems_.end() || *it != x)
            throw PreconditionError("label " + std::to_string(x) + " not in index set");
        return static_cast<std::size_t>(it - elems_.begin());
    }

    IndexSet without(Label x) const {
        IndexSet out;
        out.elems_.reserve(elems_.size());
        for (Label e : elems_)
            if (e != x) out.elems_.push_back(e);
        return out;
    }

    IndexSet with(Label x) const {
        IndexSet out = *this;
        auto it = std::lower_bound(out.elems_.begin(), out.elems_.end(), x);
        if (it == out.elems_.end() || *it != x) out.elems_.insert(it, x);
        return out;
    }

    IndexSet set_union(const IndexSet& other) const {
        IndexSet out;
        std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out.elems_));
        return out;
    }

    IndexSet set_difference(const IndexSet& other) const {
        IndexSet out;
        std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out.elems_));
        return out;
    }

    bool is_subset_of(const IndexSet& other) const {
        return std::includes(other.begin(), other.end(), begin(), end());
    }

    bool disjoint_from(const IndexSet& other) const {
        auto a = begin();
        auto b = other.begin();
        while (a != end() && b != other.end()) {
            if (*a == *b) return false;
            if (*a < *b) ++a; else ++b;
        }
        return true;
    }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t k = 0; k < elems_.size(); ++k) {
            if (k) s += ',';
            s += std::to_string(elems_[k]);
        }
        return s + "}";
    }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;
    friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

private:
    std::vector<Label> elems_;
};

/// Ordered pair (i, j), i != j, naming the variable x_ij.
struct VarPair {
    Label i = 0;
    Label j = 0;

    VarPair transposed() const { return {j, i}; }
    bool involves(Label x) const { return i == x || j == x; }

    friend bool operator==(const VarPair&, const VarPair&) = default;
    friend auto operator<=>(const VarPair&, const VarPair&) = default;
};

inline void check_pair(const VarPair& v, const IndexSet& ground) {
    if (v.i == v.j)
        throw PreconditionError("variable x[" + std::to_string(v.i) + "," + std::to_string(v.j) +
                                "] has equal indices");
    if (!ground.contains(v.i) || !ground.contains(v.j))
        throw PreconditionError("variable x[" + std::to_string(v.i) + "," + std::to_string(v.j) +
                                "] outside ground set " + ground.to_string());
}

/// All ordered pairs of distinct elements, ascending.
inline std::vector<VarPair> all_pairs(const IndexSet& ground) {
    std::vector<VarPair> out;
    out.reserve(ground.size() * (ground.size() - (ground.empty() ? 0 : 1)));
    for (Label i : ground)
        for (Label j : ground)
            if (i != j) out.push_back({i, j});
    return out;
}

} // namespace blockcert
