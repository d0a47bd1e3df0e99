#include "sfoc/kernels.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace sfoc::kernels {

namespace {

inline std::size_t block_count(std::size_t n) {
    return (n + reduction_block - 1) / reduction_block;
}

inline void nonlinear_phase_block(cplx* p, std::size_t n, double g, double h) {
    for (std::size_t i = 0; i < n; ++i) {
        const double rho = p[i].real() * p[i].real() + p[i].imag() * p[i].imag();
        const double a = -h * g * rho;
        const cplx f{std::cos(a), std::sin(a)};
        p[i] *= f;
    }
}

inline void local_decay_block(cplx* p, const double* v, std::size_t n, double g, double h) {
    for (std::size_t i = 0; i < n; ++i) {
        const double rho = p[i].real() * p[i].real() + p[i].imag() * p[i].imag();
        p[i] *= std::exp(-h * (v[i] + g * rho));
    }
}

inline double sq_norm_block(const cplx* p, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s += p[i].real() * p[i].real() + p[i].imag() * p[i].imag();
    }
    return s;
}

inline double weighted_block(const cplx* p, const double* w, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s += w[i] * (p[i].real() * p[i].real() + p[i].imag() * p[i].imag());
    }
    return s;
}

inline double masked_block(const cplx* p, const std::uint8_t* m, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i]) {
            s += p[i].real() * p[i].real() + p[i].imag() * p[i].imag();
        }
    }
    return s;
}

inline double quartic_block(const cplx* p, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double rho = p[i].real() * p[i].real() + p[i].imag() * p[i].imag();
        s += rho * rho;
    }
    return s;
}

}  // namespace

void nonlinear_phase(std::span<cplx> psi, double g, double h) {
    const std::int64_t nb = static_cast<std::int64_t>(block_count(psi.size()));
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < nb; ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * reduction_block;
        const std::size_t hi = std::min(psi.size(), lo + reduction_block);
        nonlinear_phase_block(psi.data() + lo, hi - lo, g, h);
    }
}

void local_decay(std::span<cplx> psi, std::span<const double> v, double g, double h) {
    const std::int64_t nb = static_cast<std::int64_t>(block_count(psi.size()));
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < nb; ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * reduction_block;
        const std::size_t hi = std::min(psi.size(), lo + reduction_block);
        local_decay_block(psi.data() + lo, v.data() + lo, hi - lo, g, h);
    }
}

void multiply(std::span<cplx> psi, std::span<const cplx> factor) {
    const std::int64_t n = static_cast<std::int64_t>(psi.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        psi[i] *= factor[i];
    }
}

void multiply(std::span<cplx> psi, std::span<const double> factor) {
    const std::int64_t n = static_cast<std::int64_t>(psi.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        psi[i] *= factor[i];
    }
}

void scale(std::span<cplx> psi, double s) {
    const std::int64_t n = static_cast<std::int64_t>(psi.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        psi[i] *= s;
    }
}

double squared_norm(std::span<const cplx> psi) {
    const std::int64_t nb = static_cast<std::int64_t>(block_count(psi.size()));
    std::vector<double> partial(nb);
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < nb; ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * reduction_block;
        const std::size_t hi = std::min(psi.size(), lo + reduction_block);
        partial[b] = sq_norm_block(psi.data() + lo, hi - lo);
    }
    double s = 0.0;
    for (double p : partial) s += p;
    return s;
}

double weighted_squared_norm(std::span<const cplx> psi, std::span<const double> w) {
    const std::int64_t nb = static_cast<std::int64_t>(block_count(psi.size()));
    std::vector<double> partial(nb);
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < nb; ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * reduction_block;
        const std::size_t hi = std::min(psi.size(), lo + reduction_block);
        partial[b] = weighted_block(psi.data() + lo, w.data() + lo, hi - lo);
    }
    double s = 0.0;
    for (double p : partial) s += p;
    return s;
}

double masked_squared_norm(std::span<const cplx> psi, std::span<const std::uint8_t> mask) {
    const std::int64_t nb = static_cast<std::int64_t>(block_count(psi.size()));
    std::vector<double> partial(nb);
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < nb; ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * reduction_block;
        const std::size_t hi = std::min(psi.size(), lo + reduction_block);
        partial[b] = masked_block(psi.data() + lo, mask.data() + lo, hi - lo);
    }
    double s = 0.0;
    for (double p : partial) s += p;
    return s;
}

double quartic_sum(std::span<const cplx> psi) {
    const std::int64_t nb = static_cast<std::int64_t>(block_count(psi.size()));
    std::vector<double> partial(nb);
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < nb; ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * reduction_block;
        const std::size_t hi = std::min(psi.size(), lo + reduction_block);
        partial[b] = quartic_block(psi.data() + lo, hi - lo);
    }
    double s = 0.0;
    for (double p : partial) s += p;
    return s;
}

bool all_finite(std::span<const cplx> psi) {
    const std::int64_t nb = static_cast<std::int64_t>(block_count(psi.size()));
    std::vector<std::uint8_t> ok(nb, 1);
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < nb; ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * reduction_block;
        const std::size_t hi = std::min(psi.size(), lo + reduction_block);
        for (std::size_t i = lo; i < hi; ++i) {
            if (!std::isfinite(psi[i].real()) || !std::isfinite(psi[i].imag())) {
                ok[b] = 0;
                break;
            }
        }
    }
    for (auto f : ok) {
        if (!f) return false;
    }
    return true;
}

namespace serial {

void nonlinear_phase(std::span<cplx> psi, double g, double h) {
    for (std::size_t b = 0; b < block_count(psi.size()); ++b) {
        const std::size_t lo = b * reduction_block;
        const std::size_t hi = std::min(psi.size(), lo + reduction_block);
        nonlinear_phase_block(psi.data() + lo, hi - lo, g, h);
    }
}

void local_decay(std::span<cplx> psi, std::span<const double> v, double g, double h) {
    for (std::size_t b = 0; b < block_count(psi.size()); ++b) {
        const std::size_t lo = b * reduction_block;
        const std::size_t hi = std::min(psi.size(), lo + reduction_block);
        local_decay_block(psi.data() + lo, v.data() + lo, hi - lo, g, h);
    }
}

void multiply(std::span<cplx> psi, std::span<const cplx> factor) {
    for (std::size_t i = 0; i < psi.size(); ++i) psi[i] *= factor[i];
}

void multiply(std::span<cplx> psi, std::span<const double> factor) {
    for (std::size_t i = 0; i < psi.size(); ++i) psi[i] *= factor[i];
}

void scale(std::span<cplx> psi, double s) {
    for (auto& p : psi) p *= s;
}

double squared_norm(std::span<const cplx> psi) {
    double s = 0.0;
    for (std::size_t b = 0; b < block_count(psi.size()); ++b) {
        const std::size_t lo = b * reduction_block;
        const std::size_t hi = std::min(psi.size(), lo + reduction_block);
        s += sq_norm_block(psi.data() + lo, hi - lo);
    }
    return s;
}

double weighted_squared_norm(std::span<const cplx> psi, std::span<const double> w) {
    double s = 0.0;
    for (std::size_t b = 0; b < block_count(psi.size()); ++b) {
        const std::size_t lo = b * reduction_block;
        const std::size_t hi = std::min(psi.size(), lo + reduction_block);
        s += weighted_block(psi.data() + lo, w.data() + lo, hi - lo);
    }
    return s;
}

double masked_squared_norm(std::span<const cplx> psi, std::span<const std::uint8_t> mask) {
    double s = 0.0;
    for (std::size_t b = 0; b < block_count(psi.size()); ++b) {
        const std::size_t lo = b * reduction_block;
        const std::size_t hi = std::min(psi.size(), lo + reduction_block);
        s += masked_block(psi.data() + lo, mask.data() + lo, hi - lo);
    }
    return s;
}

double quartic_sum(std::span<const cplx> psi) {
    double s = 0.0;
    for (std::size_t b = 0; b < block_count(psi.size()); ++b) {
        const std::size_t lo = b * reduction_block;
        const std::size_t hi = std::min(psi.size(), lo + reduction_block);
        s += quartic_block(psi.data() + lo, hi - lo);
    }
    return s;
}

bool all_finite(std::span<const cplx> psi) {
    for (const auto& p : psi) {
        if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) return false;
    }
    return true;
}

}  // namespace serial

}  // namespace sfoc::kernels
