#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nuspec/index_set.hpp"

namespace nuspec {

/// Regular N^d discretization of the d-torus. Axis points are
/// theta_j = 2*pi*j/N for j = 0..N-1; storage is implicit. Grid points
/// linearize row-major with the last axis fastest.
class Grid {
public:
    Grid() = default;
    Grid(int dim, int points_per_axis);

    int dim() const { return d_; }
    int points_per_axis() const { return n_; }
    std::size_t size() const { return size_; }

    double axis_value(int j) const;

    /// Flat index -> per-axis grid indices.
    void decode(std::size_t flat, std::span<int> out) const;
    std::size_t encode(std::span<const int> axis_indices) const;

    /// The frequency vector theta at a flat index.
    std::vector<double> point(std::size_t flat) const;

    bool operator==(const Grid&) const = default;

private:
    int d_ = 0;
    int n_ = 0;
    std::size_t size_ = 0;
};

Grid make_grid(int d, int N);

/// Real values sampled on a Grid, one per grid point.
struct GridField {
    Grid grid;
    std::vector<double> values;

    double operator[](std::size_t i) const { return values[i]; }
    double& operator[](std::size_t i) { return values[i]; }
    std::size_t size() const { return values.size(); }
};

GridField make_constant_field(const Grid& grid, double value);

/// Deterministic pairwise sum; fixed recursion independent of thread count.
double pairwise_sum(std::span<const double> values);

/// Mean of f over the grid (discrete measure with mass N^-d per point).
/// Throws IntegrationError naming the first offending point if any value
/// is non-finite.
double grid_mean(const GridField& f);

/// The field cos(<k, theta>) sampled on the grid.
GridField basis_field(const Grid& grid, const MultiIndex& k);

} // namespace nuspec
