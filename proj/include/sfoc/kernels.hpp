#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace sfoc::kernels {

using cplx = std::complex<double>;

// Pointwise kernels and reductions of the split-step solver. Every kernel has
// an OpenMP-parallel version here and a plain-loop reference in
// kernels::serial; the two are bit-identical for any thread count because the
// reductions accumulate over fixed 4096-element blocks combined in block
// order, and pointwise updates touch each element independently.

inline constexpr std::size_t reduction_block = 4096;

/// psi[i] *= exp(-i * h * g * |psi[i]|^2)  (dynamic part of the local factor)
void nonlinear_phase(std::span<cplx> psi, double g, double h);

/// psi[i] *= exp(-h * (v[i] + g*|psi[i]|^2))  (imaginary-time local factor)
void local_decay(std::span<cplx> psi, std::span<const double> v, double g, double h);

/// psi[i] *= factor[i]
void multiply(std::span<cplx> psi, std::span<const cplx> factor);
void multiply(std::span<cplx> psi, std::span<const double> factor);

void scale(std::span<cplx> psi, double s);

/// sum_i |psi[i]|^2
double squared_norm(std::span<const cplx> psi);

/// sum_i w[i] * |psi[i]|^2
double weighted_squared_norm(std::span<const cplx> psi, std::span<const double> w);

/// sum_i mask[i] * |psi[i]|^2
double masked_squared_norm(std::span<const cplx> psi, std::span<const std::uint8_t> mask);

/// sum_i |psi[i]|^4
double quartic_sum(std::span<const cplx> psi);

bool all_finite(std::span<const cplx> psi);

namespace serial {

void nonlinear_phase(std::span<cplx> psi, double g, double h);
void local_decay(std::span<cplx> psi, std::span<const double> v, double g, double h);
void multiply(std::span<cplx> psi, std::span<const cplx> factor);
void multiply(std::span<cplx> psi, std::span<const double> factor);
void scale(std::span<cplx> psi, double s);
double squared_norm(std::span<const cplx> psi);
double weighted_squared_norm(std::span<const cplx> psi, std::span<const double> w);
double masked_squared_norm(std::span<const cplx> psi, std::span<const std::uint8_t> mask);
double quartic_sum(std::span<const cplx> psi);
bool all_finite(std::span<const cplx> psi);

}  // namespace serial

}  // namespace sfoc::kernels
