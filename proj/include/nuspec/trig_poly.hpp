#pragma once

#include <span>
#include <vector>

#include "nuspec/index_set.hpp"
#include "nuspec/torus_grid.hpp"

namespace nuspec {

/// Real symmetric trigonometric polynomial
///   P(theta) = sum_{k in Lambda} p_k e^{-i<k,theta>},  p_{-k} = p_k,
/// stored as one real coefficient per {k,-k} pair in HalfIndexSet order.
/// Its value at theta is coeff(0) + sum_pairs 2*coeff(k)*cos(<k,theta>).
class TrigPoly {
public:
    TrigPoly() = default;
    TrigPoly(HalfIndexSet half, std::vector<double> coeffs);

    int dim() const { return half_.dim(); }
    const HalfIndexSet& half() const { return half_; }
    IndexSet support() const { return half_.full_set(); }

    std::size_t coeff_count() const { return coeffs_.size(); }
    double coeff(std::size_t i) const { return coeffs_[i]; }
    double& coeff(std::size_t i) { return coeffs_[i]; }
    const std::vector<double>& coeffs() const { return coeffs_; }

    /// Coefficient for an arbitrary lag (canonicalized); 0 if outside Lambda.
    double coeff_at(const MultiIndex& k) const;

    /// Value at a single frequency vector.
    double eval_at(std::span<const double> theta) const;

    static TrigPoly constant(const HalfIndexSet& half, double value);

private:
    HalfIndexSet half_;
    std::vector<double> coeffs_;
};

/// Samples p on the grid via the cosine basis fields.
GridField eval_trig_poly(const TrigPoly& p, const Grid& grid);

/// Autocorrelation |g(e^{i theta})|^2 of the degree-one filter
/// g(z) = g0 - g1 z1^-1 - ... - gd zd^-1, expressed over lambda.
/// Coefficients: lag 0 -> sum gj^2; lag e_j -> -g0 gj; lag e_i - e_j
/// (i != j, i,j >= 1) -> gi gj. Every other lag in lambda is zero.
TrigPoly filter_autocorrelation(std::span<const double> coeffs, const IndexSet& lambda);

/// Packs the free dual coordinates: q over the half set (q0 first), then
/// p over the half set minus the zero index. Requires p0 == 1 exactly.
std::vector<double> pack_variables(const TrigPoly& p, const TrigPoly& q);

/// Inverse of pack_variables; x must have length |lambda| and p0 is set
/// to 1.
std::pair<TrigPoly, TrigPoly> unpack_variables(std::span<const double> x,
                                               const IndexSet& lambda);

} // namespace nuspec
