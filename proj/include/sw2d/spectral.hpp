#pragma once

#include "sw2d/field2d.hpp"

#include <complex>
#include <vector>

namespace sw2d {

/// @brief Fourier pseudospectral engine for one Grid2D.
///
/// Wraps FFTW real-to-complex transforms of size ny x nx (x contiguous) and
/// exposes the differential and smoothing operators used by the solvers. All
/// derivative operators zero the relevant Nyquist mode when the symbol is odd
/// so that outputs stay real-symmetric. Plans are created once with
/// FFTW_ESTIMATE (deterministic plan choice) and executed through the
/// new-array interface, so a const Spectral can be shared across threads.
class Spectral {
public:
    explicit Spectral(const Grid2D& grid);
    ~Spectral();
    Spectral(const Spectral&) = delete;
    Spectral& operator=(const Spectral&) = delete;

    const Grid2D& grid() const { return grid_; }

    /// Unnormalized forward transform; layout ny x (nx/2+1), kx contiguous.
    std::vector<std::complex<double>> forward(const Field2D& f) const;
    /// Inverse transform including the 1/(nx*ny) normalization.
    /// The input spectrum is consumed (FFTW c2r overwrites its input).
    Field2D inverse(std::vector<std::complex<double>>& spec) const;

    /// Physical wavenumbers. ix in [0, nx/2]; j in [0, ny).
    double kx(std::size_t ix) const;
    double ky(std::size_t j) const;

    // --- differential operators -------------------------------------------
    Field2D ddx(const Field2D& f) const;
    Field2D ddy(const Field2D& f) const;
    Field2D laplacian(const Field2D& f) const;
    /// Pseudoinverse of d/dx: kx = 0 modes map to zero.
    Field2D inv_dx(const Field2D& f) const;
    /// Pseudoinverse of d2/dx2: kx = 0 modes map to zero.
    Field2D inv_dx2(const Field2D& f) const;
    /// Solve (1 - c*Laplacian) u = f; multiplier 1/(1 + c|k|^2). Requires c >= 0.
    Field2D helmholtz_solve(const Field2D& f, double c) const;
    /// Apply (1 - c*Laplacian): multiplier 1 + c|k|^2.
    Field2D helmholtz_apply(const Field2D& f, double c) const;

    // --- filters ------------------------------------------------------------
    /// 2/3-rule dealiasing: zero modes with ix > nx/3 or |ky index| > ny/3.
    Field2D dealias(const Field2D& f) const;
    /// Zero all modes with physical |k| > kcut.
    Field2D lowpass(const Field2D& f, double kcut) const;

    // --- vector calculus ----------------------------------------------------
    Field2D div2(const Field2D& g1, const Field2D& g2) const;  ///< d(g1)/dx + d(g2)/dy
    Field2D curl2(const Field2D& g1, const Field2D& g2) const; ///< d(g2)/dx - d(g1)/dy

    // --- diagnostics ----------------------------------------------------------
    /// Fraction of spectral energy in modes with physical |k| > kcut.
    double band_fraction_above(const Field2D& f, double kcut) const;
    /// Largest normalized amplitude among kx = 0, ky != 0 modes.
    double max_kx0_transverse(const Field2D& f) const;
    /// Normalized coefficient of one mode: ikx in [0, nx/2], iky signed.
    std::complex<double> mode(const Field2D& f, std::size_t ikx, long iky) const;

private:
    Grid2D grid_;
    std::size_t ncplx_; // ny * (nx/2 + 1)
    void* plan_r2c_ = nullptr;
    void* plan_c2r_ = nullptr;

    template <class Symbol>
    Field2D apply_real_symbol(const Field2D& f, Symbol&& sym) const;
    Field2D apply_ikx(const Field2D& f, bool inverse_op) const;
};

} // namespace sw2d
