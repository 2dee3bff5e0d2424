#include "nuspec/torus_grid.hpp"

#include <cmath>
#include <sstream>

#include "nuspec/errors.hpp"

namespace nuspec {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

Grid::Grid(int dim, int points_per_axis) : d_(dim), n_(points_per_axis) {
    if (d_ < 1) {
        throw InvalidInputError("Grid: dimension must be at least 1");
    }
    if (n_ < 2) {
        throw InvalidInputError("Grid: need at least 2 points per axis");
    }
    size_ = 1;
    for (int i = 0; i < d_; ++i) size_ *= static_cast<std::size_t>(n_);
}

double Grid::axis_value(int j) const {
    return kTwoPi * (static_cast<double>(j) / static_cast<double>(n_));
}

void Grid::decode(std::size_t flat, std::span<int> out) const {
    for (int axis = d_ - 1; axis >= 0; --axis) {
        out[static_cast<std::size_t>(axis)] =
            static_cast<int>(flat % static_cast<std::size_t>(n_));
        flat /= static_cast<std::size_t>(n_);
    }
}

std::size_t Grid::encode(std::span<const int> axis_indices) const {
    std::size_t flat = 0;
    for (int axis = 0; axis < d_; ++axis) {
        flat = flat * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(axis_indices[static_cast<std::size_t>(axis)]);
    }
    return flat;
}

std::vector<double> Grid::point(std::size_t flat) const {
    std::vector<int> idx(static_cast<std::size_t>(d_));
    decode(flat, idx);
    std::vector<double> theta(static_cast<std::size_t>(d_));
    for (int axis = 0; axis < d_; ++axis) {
        theta[static_cast<std::size_t>(axis)] = axis_value(idx[static_cast<std::size_t>(axis)]);
    }
    return theta;
}

Grid make_grid(int d, int N) { return Grid(d, N); }

GridField make_constant_field(const Grid& grid, double value) {
    return GridField{grid, std::vector<double>(grid.size(), value)};
}

namespace {

// Recursive halving with a small sequential base block. The split points
// depend only on the length, so the result is reproducible.
double pairwise_sum_impl(const double* v, std::size_t n) {
    if (n <= 32) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum_impl(v, half) + pairwise_sum_impl(v + half, n - half);
}

} // namespace

double pairwise_sum(std::span<const double> values) {
    return pairwise_sum_impl(values.data(), values.size());
}

double grid_mean(const GridField& f) {
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        if (!std::isfinite(f.values[i])) {
            std::ostringstream os;
            os << "grid_mean: non-finite value " << f.values[i]
               << " at flat index " << i << ", theta = (";
            auto theta = f.grid.point(i);
            for (std::size_t a = 0; a < theta.size(); ++a) {
                if (a > 0) os << ", ";
                os << theta[a];
            }
            os << ")";
            throw IntegrationError(os.str());
        }
    }
    return pairwise_sum(f.values) / static_cast<double>(f.grid.size());
}

GridField basis_field(const Grid& grid, const MultiIndex& k) {
    if (k.dim() != grid.dim()) {
        throw InvalidInputError("basis_field: index dimension " +
                                std::to_string(k.dim()) + " does not match grid dimension " +
                                std::to_string(grid.dim()));
    }
    GridField out{grid, std::vector<double>(grid.size())};
    const int d = grid.dim();
    const int n = grid.points_per_axis();
    std::vector<int> idx(static_cast<std::size_t>(d), 0);
    for (std::size_t flat = 0; flat < grid.size(); ++flat) {
        double dot = 0.0;
        for (int axis = 0; axis < d; ++axis) {
            const int ka = k[axis];
            if (ka != 0) dot += static_cast<double>(ka) * grid.axis_value(idx[static_cast<std::size_t>(axis)]);
        }
        out.values[flat] = std::cos(dot);
        // odometer increment, last axis fastest
        for (int axis = d - 1; axis >= 0; --axis) {
            if (++idx[static_cast<std::size_t>(axis)] < n) break;
            idx[static_cast<std::size_t>(axis)] = 0;
        }
    }
    return out;
}

} // namespace nuspec
