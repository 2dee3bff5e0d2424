#include "nuspec/trig_poly.hpp"

#include <cmath>
#include <map>

#include "nuspec/errors.hpp"

namespace nuspec {

TrigPoly::TrigPoly(HalfIndexSet half, std::vector<double> coeffs)
    : half_(std::move(half)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != half_.size()) {
        throw InvalidInputError("TrigPoly: coefficient count " +
                                std::to_string(coeffs_.size()) +
                                " does not match half set size " +
                                std::to_string(half_.size()));
    }
}

double TrigPoly::coeff_at(const MultiIndex& k) const {
    const std::ptrdiff_t pos = half_.find(k);
    return pos < 0 ? 0.0 : coeffs_[static_cast<std::size_t>(pos)];
}

double TrigPoly::eval_at(std::span<const double> theta) const {
    double v = coeffs_[0];
    for (std::size_t j = 1; j < coeffs_.size(); ++j) {
        const MultiIndex& k = half_.rep(j);
        double dot = 0.0;
        for (int axis = 0; axis < dim(); ++axis) {
            if (k[axis] != 0) dot += static_cast<double>(k[axis]) * theta[static_cast<std::size_t>(axis)];
        }
        v += 2.0 * coeffs_[j] * std::cos(dot);
    }
    return v;
}

TrigPoly TrigPoly::constant(const HalfIndexSet& half, double value) {
    std::vector<double> coeffs(half.size(), 0.0);
    coeffs[0] = value;
    return TrigPoly(half, std::move(coeffs));
}

GridField eval_trig_poly(const TrigPoly& p, const Grid& grid) {
    if (p.dim() != grid.dim()) {
        throw InvalidInputError("eval_trig_poly: dimension mismatch");
    }
    GridField out = make_constant_field(grid, p.coeff(0));
    for (std::size_t j = 1; j < p.coeff_count(); ++j) {
        const GridField cosk = basis_field(grid, p.half().rep(j));
        const double twice = 2.0 * p.coeff(j);
        for (std::size_t i = 0; i < out.values.size(); ++i) {
            out.values[i] += twice * cosk.values[i];
        }
    }
    return out;
}

TrigPoly filter_autocorrelation(std::span<const double> coeffs, const IndexSet& lambda) {
    if (coeffs.size() < 2) {
        throw InvalidInputError("filter_autocorrelation: need at least [g0, g1]");
    }
    const int d = static_cast<int>(coeffs.size()) - 1;
    if (lambda.dim() != d) {
        throw InvalidInputError("filter_autocorrelation: filter dimension " +
                                std::to_string(d) + " does not match support dimension " +
                                std::to_string(lambda.dim()));
    }

    std::map<MultiIndex, double> lags;
    double zero_lag = 0.0;
    for (double g : coeffs) zero_lag += g * g;
    lags[MultiIndex::zero(d)] = zero_lag;
    for (int j = 1; j <= d; ++j) {
        std::vector<int> e(static_cast<std::size_t>(d), 0);
        e[static_cast<std::size_t>(j - 1)] = 1;
        lags[MultiIndex(std::move(e))] = -coeffs[0] * coeffs[static_cast<std::size_t>(j)];
    }
    for (int i = 1; i <= d; ++i) {
        for (int j = i + 1; j <= d; ++j) {
            std::vector<int> e(static_cast<std::size_t>(d), 0);
            e[static_cast<std::size_t>(i - 1)] = 1;
            e[static_cast<std::size_t>(j - 1)] = -1;
            lags[MultiIndex(std::move(e))] =
                coeffs[static_cast<std::size_t>(i)] * coeffs[static_cast<std::size_t>(j)];
        }
    }

    const HalfIndexSet half = half_index_set(lambda);
    std::vector<double> out(half.size(), 0.0);
    for (const auto& [lag, value] : lags) {
        const std::ptrdiff_t pos = half.find(lag);
        if (pos < 0) {
            if (value != 0.0) {
                throw InvalidSupportError(
                    "filter_autocorrelation: support is missing lag (" + lag.to_key() +
                    ") with coefficient " + std::to_string(value));
            }
            continue;
        }
        out[static_cast<std::size_t>(pos)] = value;
    }
    return TrigPoly(half, std::move(out));
}

std::vector<double> pack_variables(const TrigPoly& p, const TrigPoly& q) {
    if (!(p.half() == q.half())) {
        throw InvalidInputError("pack_variables: p and q have different supports");
    }
    if (p.coeff(0) != 1.0) {
        throw InvariantViolationError("pack_variables: p0 must equal 1 exactly, got " +
                                      std::to_string(p.coeff(0)));
    }
    std::vector<double> x;
    x.reserve(2 * q.coeff_count() - 1);
    for (std::size_t j = 0; j < q.coeff_count(); ++j) x.push_back(q.coeff(j));
    for (std::size_t j = 1; j < p.coeff_count(); ++j) x.push_back(p.coeff(j));
    return x;
}

std::pair<TrigPoly, TrigPoly> unpack_variables(std::span<const double> x,
                                               const IndexSet& lambda) {
    const HalfIndexSet half = half_index_set(lambda);
    const std::size_t r = half.pair_count();
    if (x.size() != lambda.size()) {
        throw InvalidInputError("unpack_variables: expected " +
                                std::to_string(lambda.size()) + " coordinates, got " +
                                std::to_string(x.size()));
    }
    std::vector<double> qc(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(r + 1));
    std::vector<double> pc(r + 1);
    pc[0] = 1.0;
    for (std::size_t j = 0; j < r; ++j) pc[j + 1] = x[r + 1 + j];
    return {TrigPoly(half, std::move(pc)), TrigPoly(half, std::move(qc))};
}

} // namespace nuspec
