#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace nuspec {

/// A lattice index k in Z^d.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> components);
    MultiIndex(std::initializer_list<int> components);

    int dim() const { return static_cast<int>(k_.size()); }
    int operator[](int axis) const { return k_[static_cast<std::size_t>(axis)]; }
    const std::vector<int>& components() const { return k_; }

    bool is_zero() const;

    MultiIndex operator-() const;
    friend MultiIndex operator-(const MultiIndex& a, const MultiIndex& b);

    // Lexicographic order on the component vector.
    auto operator<=>(const MultiIndex&) const = default;

    /// Comma-joined components, e.g. "1,-1,0". Used as the canonical
    /// serialization key.
    std::string to_key() const;
    static MultiIndex from_key(const std::string& key, int expected_dim = -1);

    static MultiIndex zero(int dim);

private:
    std::vector<int> k_;
};

/// True if the first nonzero component of k is positive (or k = 0).
bool is_canonical(const MultiIndex& k);

/// The canonical representative of the pair {k, -k}.
MultiIndex canonical_representative(const MultiIndex& k);

/// A finite index set Lambda in Z^d: contains 0, symmetric about the
/// origin, duplicate-free. Indices are kept in lexicographic order.
class IndexSet {
public:
    IndexSet() = default;

    /// Validates the invariants; throws InvalidInputError on violation.
    explicit IndexSet(std::vector<MultiIndex> indices);

    int dim() const { return d_; }
    std::size_t size() const { return indices_.size(); }
    const MultiIndex& operator[](std::size_t i) const { return indices_[i]; }
    const std::vector<MultiIndex>& indices() const { return indices_; }
    bool contains(const MultiIndex& k) const;

    auto begin() const { return indices_.begin(); }
    auto end() const { return indices_.end(); }

    bool operator==(const IndexSet&) const = default;

private:
    int d_ = 0;
    std::vector<MultiIndex> indices_;
};

/// Ordered canonical half of an IndexSet: the zero index first, then one
/// representative per {k, -k} pair in lexicographic order.
class HalfIndexSet {
public:
    HalfIndexSet() = default;

    int dim() const { return d_; }
    /// Number of representatives including the zero index.
    std::size_t size() const { return reps_.size(); }
    /// Number of {k,-k} pairs (size() - 1).
    std::size_t pair_count() const { return reps_.size() - 1; }
    const MultiIndex& rep(std::size_t i) const { return reps_[i]; }
    const std::vector<MultiIndex>& reps() const { return reps_; }

    /// Position of canonical_representative(k) in the ordering, or -1.
    std::ptrdiff_t find(const MultiIndex& k) const;

    /// Reconstructs the full symmetric set {0} u {+-k}.
    IndexSet full_set() const;

    bool operator==(const HalfIndexSet&) const = default;

    friend HalfIndexSet half_index_set(const IndexSet& lambda);

private:
    int d_ = 0;
    std::vector<MultiIndex> reps_;
};

/// The difference set {x - y : x, y in lambda_plus}, deduplicated.
/// lambda_plus must be non-empty, of uniform dimension, and contain 0.
IndexSet build_difference_set(std::span<const MultiIndex> lambda_plus);

/// Splits a symmetric index set into its canonical ordered half.
HalfIndexSet half_index_set(const IndexSet& lambda);

} // namespace nuspec
