#pragma once

#include "sw2d/errors.hpp"

#include <cstddef>

namespace sw2d {

/// @brief Uniform doubly periodic grid on the centered box
///        [-lx/2, lx/2) x [-ly/2, ly/2).
///
/// nx and ny must be even and at least 8 (spectral Nyquist handling assumes
/// even sizes). Storage convention for fields on this grid is row-major with
/// x fastest: index(i,j) = j*nx + i.
struct Grid2D {
    std::size_t nx = 256;
    std::size_t ny = 256;
    double lx = 40.0;
    double ly = 40.0;

    Grid2D() = default;
    Grid2D(std::size_t nx_, std::size_t ny_, double lx_, double ly_)
        : nx(nx_), ny(ny_), lx(lx_), ly(ly_) {
        validate();
    }

    void validate() const {
        if (nx < 8 || ny < 8 || nx % 2 != 0 || ny % 2 != 0)
            throw ConfigError("grid sizes must be even and >= 8");
        if (!(lx > 0.0) || !(ly > 0.0))
            throw ConfigError("box lengths must be positive");
    }

    std::size_t size() const { return nx * ny; }
    double dx() const { return lx / static_cast<double>(nx); }
    double dy() const { return ly / static_cast<double>(ny); }
    /// Box-centered node coordinates.
    double x(std::size_t i) const { return -0.5 * lx + dx() * static_cast<double>(i); }
    double y(std::size_t j) const { return -0.5 * ly + dy() * static_cast<double>(j); }

    bool operator==(const Grid2D& o) const {
        return nx == o.nx && ny == o.ny && lx == o.lx && ly == o.ly;
    }
};

} // namespace sw2d
