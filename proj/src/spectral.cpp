#include "sw2d/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>

namespace sw2d {

namespace {
// FFTW planning routines are not thread-safe; execution through the
// new-array interface is.
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}
} // namespace

Spectral::Spectral(const Grid2D& grid) : grid_(grid) {
    grid_.validate();
    ncplx_ = grid_.ny * (grid_.nx / 2 + 1);
    std::vector<double> rbuf(grid_.size());
    std::vector<std::complex<double>> cbuf(ncplx_);
    std::lock_guard<std::mutex> lock(plan_mutex());
    // Row-major x-fastest storage means FFTW sees an ny x nx array.
    plan_r2c_ = fftw_plan_dft_r2c_2d(
        static_cast<int>(grid_.ny), static_cast<int>(grid_.nx), rbuf.data(),
        reinterpret_cast<fftw_complex*>(cbuf.data()), FFTW_ESTIMATE | FFTW_UNALIGNED);
    plan_c2r_ = fftw_plan_dft_c2r_2d(
        static_cast<int>(grid_.ny), static_cast<int>(grid_.nx),
        reinterpret_cast<fftw_complex*>(cbuf.data()), rbuf.data(),
        FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!plan_r2c_ || !plan_c2r_) throw std::runtime_error("FFTW plan creation failed");
}

Spectral::~Spectral() {
    std::lock_guard<std::mutex> lock(plan_mutex());
    if (plan_r2c_) fftw_destroy_plan(static_cast<fftw_plan>(plan_r2c_));
    if (plan_c2r_) fftw_destroy_plan(static_cast<fftw_plan>(plan_c2r_));
}

std::vector<std::complex<double>> Spectral::forward(const Field2D& f) const {
    std::vector<std::complex<double>> spec(ncplx_);
    // Out-of-place r2c does not modify its input.
    fftw_execute_dft_r2c(static_cast<fftw_plan>(plan_r2c_),
                         const_cast<double*>(f.data()),
                         reinterpret_cast<fftw_complex*>(spec.data()));
    return spec;
}

Field2D Spectral::inverse(std::vector<std::complex<double>>& spec) const {
    Field2D out(grid_);
    fftw_execute_dft_c2r(static_cast<fftw_plan>(plan_c2r_),
                         reinterpret_cast<fftw_complex*>(spec.data()), out.data());
    out *= 1.0 / static_cast<double>(grid_.size());
    return out;
}

double Spectral::kx(std::size_t ix) const {
    return 2.0 * std::numbers::pi * static_cast<double>(ix) / grid_.lx;
}

double Spectral::ky(std::size_t j) const {
    const long jj = (j <= grid_.ny / 2) ? static_cast<long>(j)
                                        : static_cast<long>(j) - static_cast<long>(grid_.ny);
    return 2.0 * std::numbers::pi * static_cast<double>(jj) / grid_.ly;
}

template <class Symbol>
Field2D Spectral::apply_real_symbol(const Field2D& f, Symbol&& sym) const {
    auto spec = forward(f);
    const std::size_t nxh = grid_.nx / 2 + 1;
    for (std::size_t j = 0; j < grid_.ny; ++j) {
        const double kyv = ky(j);
        const bool ny_nyq = (j == grid_.ny / 2);
        for (std::size_t ix = 0; ix < nxh; ++ix) {
            const bool nx_nyq = (ix == grid_.nx / 2);
            spec[j * nxh + ix] *= sym(kx(ix), kyv, nx_nyq, ny_nyq);
        }
    }
    return inverse(spec);
}

Field2D Spectral::apply_ikx(const Field2D& f, bool inverse_op) const {
    auto spec = forward(f);
    const std::size_t nxh = grid_.nx / 2 + 1;
    for (std::size_t j = 0; j < grid_.ny; ++j) {
        for (std::size_t ix = 0; ix < nxh; ++ix) {
            std::complex<double>& c = spec[j * nxh + ix];
            if (ix == 0 || ix == grid_.nx / 2) {
                // kx=0 has no inverse (and i*kx vanishes); Nyquist is zeroed
                // because the symbol is odd.
                c = 0.0;
                continue;
            }
            const double k = kx(ix);
            c *= inverse_op ? std::complex<double>(0.0, -1.0 / k)
                            : std::complex<double>(0.0, k);
        }
    }
    return inverse(spec);
}

Field2D Spectral::ddx(const Field2D& f) const { return apply_ikx(f, false); }

Field2D Spectral::inv_dx(const Field2D& f) const { return apply_ikx(f, true); }

Field2D Spectral::ddy(const Field2D& f) const {
    auto spec = forward(f);
    const std::size_t nxh = grid_.nx / 2 + 1;
    for (std::size_t j = 0; j < grid_.ny; ++j) {
        const std::complex<double> mul =
            (j == grid_.ny / 2) ? std::complex<double>(0.0, 0.0)
                                : std::complex<double>(0.0, ky(j));
        for (std::size_t ix = 0; ix < nxh; ++ix) spec[j * nxh + ix] *= mul;
    }
    return inverse(spec);
}

Field2D Spectral::laplacian(const Field2D& f) const {
    return apply_real_symbol(f, [](double kxv, double kyv, bool, bool) {
        return -(kxv * kxv + kyv * kyv);
    });
}

Field2D Spectral::inv_dx2(const Field2D& f) const {
    return apply_real_symbol(f, [](double kxv, double, bool, bool) {
        return kxv == 0.0 ? 0.0 : -1.0 / (kxv * kxv);
    });
}

Field2D Spectral::helmholtz_solve(const Field2D& f, double c) const {
    if (c < 0.0) throw std::invalid_argument("helmholtz_solve requires c >= 0");
    return apply_real_symbol(f, [c](double kxv, double kyv, bool, bool) {
        return 1.0 / (1.0 + c * (kxv * kxv + kyv * kyv));
    });
}

Field2D Spectral::helmholtz_apply(const Field2D& f, double c) const {
    return apply_real_symbol(f, [c](double kxv, double kyv, bool, bool) {
        return 1.0 + c * (kxv * kxv + kyv * kyv);
    });
}

Field2D Spectral::dealias(const Field2D& f) const {
    const std::size_t cx = grid_.nx / 3;
    const std::size_t cy = grid_.ny / 3;
    auto spec = forward(f);
    const std::size_t nxh = grid_.nx / 2 + 1;
    for (std::size_t j = 0; j < grid_.ny; ++j) {
        const std::size_t jabs =
            (j <= grid_.ny / 2) ? j : grid_.ny - j; // |ky index|
        const bool kill_y = jabs > cy;
        for (std::size_t ix = 0; ix < nxh; ++ix)
            if (kill_y || ix > cx) spec[j * nxh + ix] = 0.0;
    }
    return inverse(spec);
}

Field2D Spectral::lowpass(const Field2D& f, double kcut) const {
    const double k2cut = kcut * kcut;
    return apply_real_symbol(f, [k2cut](double kxv, double kyv, bool, bool) {
        return (kxv * kxv + kyv * kyv) > k2cut ? 0.0 : 1.0;
    });
}

Field2D Spectral::div2(const Field2D& g1, const Field2D& g2) const {
    Field2D out = ddx(g1);
    out += ddy(g2);
    return out;
}

Field2D Spectral::curl2(const Field2D& g1, const Field2D& g2) const {
    Field2D out = ddx(g2);
    out -= ddy(g1);
    return out;
}

double Spectral::band_fraction_above(const Field2D& f, double kcut) const {
    auto spec = forward(f);
    const std::size_t nxh = grid_.nx / 2 + 1;
    const double k2cut = kcut * kcut;
    long double above = 0.0L, total = 0.0L;
    for (std::size_t j = 0; j < grid_.ny; ++j) {
        const double kyv = ky(j);
        for (std::size_t ix = 0; ix < nxh; ++ix) {
            // Hermitian symmetry: interior kx columns represent two modes.
            const double w = (ix == 0 || ix == grid_.nx / 2) ? 1.0 : 2.0;
            const double e = w * std::norm(spec[j * nxh + ix]);
            total += e;
            const double kxv = kx(ix);
            if (kxv * kxv + kyv * kyv > k2cut) above += e;
        }
    }
    return total > 0.0L ? static_cast<double>(above / total) : 0.0;
}

double Spectral::max_kx0_transverse(const Field2D& f) const {
    auto spec = forward(f);
    const std::size_t nxh = grid_.nx / 2 + 1;
    double m = 0.0;
    for (std::size_t j = 1; j < grid_.ny; ++j)
        m = std::max(m, std::abs(spec[j * nxh]));
    return m / static_cast<double>(grid_.size());
}

std::complex<double> Spectral::mode(const Field2D& f, std::size_t ikx, long iky) const {
    auto spec = forward(f);
    const std::size_t nxh = grid_.nx / 2 + 1;
    const long nyl = static_cast<long>(grid_.ny);
    const std::size_t j = static_cast<std::size_t>(((iky % nyl) + nyl) % nyl);
    return spec[j * nxh + ikx] / static_cast<double>(grid_.size());
}

} // namespace sw2d
