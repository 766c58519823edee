#pragma once

#include "sw2d/grid.hpp"

#include <vector>

namespace sw2d {

/// @brief Scalar field on a Grid2D; row-major storage with x fastest.
class Field2D {
public:
    Field2D() = default;
    explicit Field2D(const Grid2D& grid, double fill = 0.0)
        : grid_(grid), data_(grid.size(), fill) {}

    const Grid2D& grid() const { return grid_; }
    std::size_t size() const { return data_.size(); }

    double& operator()(std::size_t i, std::size_t j) { return data_[j * grid_.nx + i]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[j * grid_.nx + i]; }
    double& operator[](std::size_t idx) { return data_[idx]; }
    double operator[](std::size_t idx) const { return data_[idx]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    /// In-place arithmetic (grids must match; unchecked in release builds).
    Field2D& operator+=(const Field2D& o);
    Field2D& operator-=(const Field2D& o);
    Field2D& operator*=(double s);
    /// Pointwise product accumulate: this += s * o.
    Field2D& axpy(double s, const Field2D& o);

    friend Field2D operator+(Field2D a, const Field2D& b) { return a += b; }
    friend Field2D operator-(Field2D a, const Field2D& b) { return a -= b; }
    friend Field2D operator*(double s, Field2D a) { return a *= s; }

    double max_abs() const;
    bool finite() const;

private:
    Grid2D grid_;
    std::vector<double> data_;
};

/// @brief Pointwise product a*b as a new field.
Field2D pointwise(const Field2D& a, const Field2D& b);

/// @brief Weight choices for weighted quadrature; coordinates are
///        box-centered (see Grid2D::x/y).
enum class Weight { one, x, y };

/// @brief Trapezoid-exact periodic quadrature: sum(f)*dx*dy.
///
/// Accumulates in long double in a fixed storage order so results are
/// bit-reproducible across runs.
double integral(const Field2D& f);

/// @brief Quadrature of w(x,y)*f with w in {1, x, y}.
double weighted_integral(const Field2D& f, Weight w);

/// @brief Rotate a scalar field by +90 degrees about the box center,
///        exactly on the grid: out(x, y) = f(y, -x).
///
/// Requires nx == ny and lx == ly. Grid point (i,j) of the output pulls from
/// (j, (-i) mod ny) of the input; the map is an exact permutation, so rotation
/// tests are roundoff-free.
Field2D rotate_quarter(const Field2D& f);

} // namespace sw2d
