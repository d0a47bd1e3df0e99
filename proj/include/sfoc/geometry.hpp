#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sfoc/errors.hpp"

namespace sfoc {

/// Dumbbell trap: two disks of radius R joined by a rectangular channel of
/// length l and width d. Disk centers sit at x = +-(l/2 + sqrt(R^2-(d/2)^2))
/// so each disk boundary passes through the channel corner points; the trap
/// interior is the union of the three shapes.
struct TrapGeometry {
    double reservoir_radius = 4.5;   // R
    double channel_length = 2.0;     // l
    double channel_width = 0.6;      // d
    double wall_height = 1e5;        // potential outside the interior

    double disk_center_offset() const;
    double reservoir_area() const;          // S_L = S_R = pi R^2
    double half_extent_x() const;           // disk_center_offset + R
    double half_extent_y() const;           // R

    /// True when (x, y) lies in the trap interior.
    bool contains(double x, double y) const;

    void validate() const;  // R > 0, l > 0, 0 < d < 2R
};

/// Uniform rectangular grid centered on the origin. Coordinates are placed
/// symmetrically, x(ix) = (ix - (nx-1)/2)*dx, so the mirror map ix -> nx-1-ix
/// is exact. Storage is row-major with y fastest: index = ix*ny + iy.
struct Grid2D {
    int nx = 800;
    int ny = 300;
    double dx = 0.05;
    double dy = 0.05;

    double x(int ix) const { return (ix - 0.5 * (nx - 1)) * dx; }
    double y(int iy) const { return (iy - 0.5 * (ny - 1)) * dy; }
    std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
    std::size_t idx(int ix, int iy) const { return static_cast<std::size_t>(ix) * ny + iy; }
    double cell_area() const { return dx * dy; }

    void validate() const;

    /// Margin (everywhere >= 0 required at validate-time callers) between the
    /// trap bounding box and the grid edge.
    void require_encloses(const TrapGeometry& geom, double margin = 2.0) const;

    /// Widen nx in steps of 32 until the trap fits with the margin. ny and the
    /// spacings are kept; throws if the trap cannot fit in y.
    static Grid2D fit(const TrapGeometry& geom, const Grid2D& base, double margin = 2.0);
};

/// Mean-field coupling (g is interpreted as g*N for a unit-normalized psi);
/// n_atoms only scales reported extensive energies.
struct InteractionParams {
    double g = 2.5e4;
    double n_atoms = 1.0;
    void validate() const;
};

/// Real scalar field sampled on a grid.
struct Potential2D {
    Grid2D grid;
    std::vector<double> v;

    double& at(int ix, int iy) { return v[grid.idx(ix, iy)]; }
    double at(int ix, int iy) const { return v[grid.idx(ix, iy)]; }
};

/// Left/right reservoir partition of the interior cells, split at x = 0 so the
/// two populations always add up to the total norm. interior = left | right.
struct ReservoirMasks {
    Grid2D grid;
    std::vector<std::uint8_t> left;
    std::vector<std::uint8_t> right;

    std::size_t left_count() const;
    std::size_t right_count() const;
};

/// Point evaluators (grid-free).
double trap_potential_at(const TrapGeometry& geom, double x, double y);
double bias_potential_at(const TrapGeometry& geom, double x, double y, double bias);

/// 0 inside the interior, wall_height outside; mirror-symmetric in x and y.
Potential2D build_trap_potential(const TrapGeometry& geom, const Grid2D& grid);

/// 0 left of the channel, linear ramp 0..V across it, V right of it, masked to
/// the trap interior. bias >= 0 required.
Potential2D build_bias_potential(const TrapGeometry& geom, const Grid2D& grid, double bias);

ReservoirMasks reservoir_masks(const TrapGeometry& geom, const Grid2D& grid);

}  // namespace sfoc
