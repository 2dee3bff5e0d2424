#include "nuspec/index_set.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "nuspec/errors.hpp"

namespace nuspec {

MultiIndex::MultiIndex(std::vector<int> components) : k_(std::move(components)) {
    if (k_.empty()) {
        throw InvalidInputError("MultiIndex: dimension must be at least 1");
    }
}

MultiIndex::MultiIndex(std::initializer_list<int> components)
    : MultiIndex(std::vector<int>(components)) {}

bool MultiIndex::is_zero() const {
    return std::all_of(k_.begin(), k_.end(), [](int v) { return v == 0; });
}

MultiIndex MultiIndex::operator-() const {
    std::vector<int> neg(k_.size());
    for (std::size_t i = 0; i < k_.size(); ++i) neg[i] = -k_[i];
    return MultiIndex(std::move(neg));
}

MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
    if (a.dim() != b.dim()) {
        throw InvalidInputError("MultiIndex: dimension mismatch in subtraction");
    }
    std::vector<int> diff(a.k_.size());
    for (std::size_t i = 0; i < a.k_.size(); ++i) diff[i] = a.k_[i] - b.k_[i];
    return MultiIndex(std::move(diff));
}

std::string MultiIndex::to_key() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < k_.size(); ++i) {
        if (i > 0) os << ',';
        os << k_[i];
    }
    return os.str();
}

MultiIndex MultiIndex::from_key(const std::string& key, int expected_dim) {
    std::vector<int> comps;
    const char* p = key.data();
    const char* end = key.data() + key.size();
    while (p < end) {
        int v = 0;
        auto [next, ec] = std::from_chars(p, end, v);
        if (ec != std::errc()) {
            throw InvalidInputError("MultiIndex: unparsable key '" + key + "'");
        }
        comps.push_back(v);
        p = next;
        if (p < end) {
            if (*p != ',') {
                throw InvalidInputError("MultiIndex: unparsable key '" + key + "'");
            }
            ++p;
        }
    }
    if (comps.empty()) {
        throw InvalidInputError("MultiIndex: empty key");
    }
    if (expected_dim >= 0 && static_cast<int>(comps.size()) != expected_dim) {
        throw InvalidInputError("MultiIndex: key '" + key + "' has dimension " +
                                std::to_string(comps.size()) + ", expected " +
                                std::to_string(expected_dim));
    }
    return MultiIndex(std::move(comps));
}

MultiIndex MultiIndex::zero(int dim) {
    return MultiIndex(std::vector<int>(static_cast<std::size_t>(dim), 0));
}

bool is_canonical(const MultiIndex& k) {
    for (int i = 0; i < k.dim(); ++i) {
        if (k[i] > 0) return true;
        if (k[i] < 0) return false;
    }
    return true; // zero index
}

MultiIndex canonical_representative(const MultiIndex& k) {
    return is_canonical(k) ? k : -k;
}

IndexSet::IndexSet(std::vector<MultiIndex> indices) {
    if (indices.empty()) {
        throw InvalidInputError("IndexSet: must not be empty");
    }
    d_ = indices.front().dim();
    for (const auto& k : indices) {
        if (k.dim() != d_) {
            throw InvalidInputError("IndexSet: mixed dimensions (" +
                                    std::to_string(k.dim()) + " vs " +
                                    std::to_string(d_) + ")");
        }
    }
    std::sort(indices.begin(), indices.end());
    if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
        throw InvalidInputError("IndexSet: duplicate indices");
    }
    indices_ = std::move(indices);
    if (!contains(MultiIndex::zero(d_))) {
        throw InvalidInputError("IndexSet: must contain the zero index");
    }
    for (const auto& k : indices_) {
        if (!contains(-k)) {
            throw InvalidInputError("IndexSet: not symmetric, missing -(" +
                                    k.to_key() + ")");
        }
    }
}

bool IndexSet::contains(const MultiIndex& k) const {
    return std::binary_search(indices_.begin(), indices_.end(), k);
}

std::ptrdiff_t HalfIndexSet::find(const MultiIndex& k) const {
    MultiIndex canon = canonical_representative(k);
    if (canon.is_zero()) return 0;
    auto it = std::lower_bound(reps_.begin() + 1, reps_.end(), canon);
    if (it == reps_.end() || !(*it == canon)) return -1;
    return it - reps_.begin();
}

IndexSet HalfIndexSet::full_set() const {
    std::vector<MultiIndex> all;
    all.reserve(2 * reps_.size() - 1);
    for (const auto& k : reps_) {
        all.push_back(k);
        if (!k.is_zero()) all.push_back(-k);
    }
    return IndexSet(std::move(all));
}

IndexSet build_difference_set(std::span<const MultiIndex> lambda_plus) {
    if (lambda_plus.empty()) {
        throw InvalidInputError("build_difference_set: lambda_plus is empty");
    }
    const int d = lambda_plus.front().dim();
    bool has_zero = false;
    for (const auto& k : lambda_plus) {
        if (k.dim() != d) {
            throw InvalidInputError(
                "build_difference_set: dimension mismatch among entries");
        }
        has_zero = has_zero || k.is_zero();
    }
    if (!has_zero) {
        throw InvalidInputError(
            "build_difference_set: lambda_plus must contain the zero index");
    }
    std::vector<MultiIndex> diffs;
    diffs.reserve(lambda_plus.size() * lambda_plus.size());
    for (const auto& x : lambda_plus) {
        for (const auto& y : lambda_plus) {
            diffs.push_back(x - y);
        }
    }
    std::sort(diffs.begin(), diffs.end());
    diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
    return IndexSet(std::move(diffs));
}

HalfIndexSet half_index_set(const IndexSet& lambda) {
    HalfIndexSet half;
    half.d_ = lambda.dim();
    half.reps_.push_back(MultiIndex::zero(lambda.dim()));
    for (const auto& k : lambda) {
        if (k.is_zero()) continue;
        if (is_canonical(k)) half.reps_.push_back(k);
    }
    // Lambda is lexicographically sorted, so the canonical reps already are.
    if (2 * half.reps_.size() - 1 != lambda.size()) {
        throw InvalidInputError("half_index_set: input set is not symmetric");
    }
    return half;
}

} // namespace nuspec
