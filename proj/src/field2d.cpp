#include "sw2d/field2d.hpp"

#include <cassert>
#include <cmath>

namespace sw2d {

Field2D& Field2D::operator+=(const Field2D& o) {
    assert(grid_ == o.grid_);
    for (std::size_t n = 0; n < data_.size(); ++n) data_[n] += o.data_[n];
    return *this;
}

Field2D& Field2D::operator-=(const Field2D& o) {
    assert(grid_ == o.grid_);
    for (std::size_t n = 0; n < data_.size(); ++n) data_[n] -= o.data_[n];
    return *this;
}

Field2D& Field2D::operator*=(double s) {
    for (double& v : data_) v *= s;
    return *this;
}

Field2D& Field2D::axpy(double s, const Field2D& o) {
    assert(grid_ == o.grid_);
    for (std::size_t n = 0; n < data_.size(); ++n) data_[n] += s * o.data_[n];
    return *this;
}

double Field2D::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

bool Field2D::finite() const {
    for (double v : data_)
        if (!std::isfinite(v)) return false;
    return true;
}

Field2D pointwise(const Field2D& a, const Field2D& b) {
    assert(a.grid() == b.grid());
    Field2D out(a.grid());
    for (std::size_t n = 0; n < a.size(); ++n) out[n] = a[n] * b[n];
    return out;
}

double integral(const Field2D& f) {
    long double acc = 0.0L;
    const std::size_t n = f.size();
    const double* d = f.data();
    for (std::size_t i = 0; i < n; ++i) acc += static_cast<long double>(d[i]);
    return static_cast<double>(acc) * f.grid().dx() * f.grid().dy();
}

double weighted_integral(const Field2D& f, Weight w) {
    if (w == Weight::one) return integral(f);
    const Grid2D& g = f.grid();
    long double acc = 0.0L;
    for (std::size_t j = 0; j < g.ny; ++j) {
        for (std::size_t i = 0; i < g.nx; ++i) {
            const double wt = (w == Weight::x) ? g.x(i) : g.y(j);
            acc += static_cast<long double>(wt * f(i, j));
        }
    }
    return static_cast<double>(acc) * g.dx() * g.dy();
}

Field2D rotate_quarter(const Field2D& f) {
    const Grid2D& g = f.grid();
    if (g.nx != g.ny || g.lx != g.ly)
        throw ConfigError("rotate_quarter requires a square grid and box");
    const std::size_t n = g.nx;
    Field2D out(g);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            out(i, j) = f(j, (n - i) % n);
    return out;
}

} // namespace sw2d
