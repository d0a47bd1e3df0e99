#pragma once

#include <complex>
#include <filesystem>
#include <vector>

#include "sfoc/geometry.hpp"

namespace sfoc {

/// Complex wavefunction on a grid. "Normalized" means integral |psi|^2 dA = 1.
struct ComplexField2D {
    Grid2D grid;
    std::vector<std::complex<double>> v;

    static ComplexField2D zero(const Grid2D& grid);

    std::complex<double>& at(int ix, int iy) { return v[grid.idx(ix, iy)]; }
    std::complex<double> at(int ix, int iy) const { return v[grid.idx(ix, iy)]; }

    /// integral |psi|^2 dA
    double squared_norm() const;
    void normalize();
    bool finite() const;

    /// Field reflected through x -> -x (exact grid map ix -> nx-1-ix).
    ComplexField2D mirrored_x() const;
};

/// Binary snapshot: little-endian header {magic "GPE2", u32 nx, u32 ny,
/// f64 dx, f64 dy, f64 t} followed by nx*ny interleaved (re, im) f64 pairs in
/// row-major y-fastest order.
void write_snapshot(const ComplexField2D& psi, double t, const std::filesystem::path& path);
ComplexField2D read_snapshot(const std::filesystem::path& path, double* t_out = nullptr);

}  // namespace sfoc
