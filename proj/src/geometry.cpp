#include "sfoc/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace sfoc {

double TrapGeometry::disk_center_offset() const {
    const double half_w = 0.5 * channel_width;
    return 0.5 * channel_length +
           std::sqrt(reservoir_radius * reservoir_radius - half_w * half_w);
}

double TrapGeometry::reservoir_area() const {
    return std::numbers::pi * reservoir_radius * reservoir_radius;
}

double TrapGeometry::half_extent_x() const { return disk_center_offset() + reservoir_radius; }

double TrapGeometry::half_extent_y() const { return reservoir_radius; }

bool TrapGeometry::contains(double x, double y) const {
    if (std::abs(x) <= 0.5 * channel_length && std::abs(y) <= 0.5 * channel_width) {
        return true;
    }
    // abs(x) keeps the disk test bitwise mirror-symmetric.
    const double ax = std::abs(x);
    const double cx = disk_center_offset();
    const double r2 = reservoir_radius * reservoir_radius;
    const double ddx = ax - cx;
    return ddx * ddx + y * y <= r2;
}

void TrapGeometry::validate() const {
    if (!(reservoir_radius > 0.0)) {
        throw GeometryError("reservoir radius must be positive");
    }
    if (!(channel_length > 0.0)) {
        throw GeometryError("channel length must be positive");
    }
    if (!(channel_width > 0.0) || !(channel_width < 2.0 * reservoir_radius)) {
        throw GeometryError("channel width must satisfy 0 < d < 2R");
    }
    if (!(wall_height > 0.0)) {
        throw GeometryError("wall height must be positive");
    }
}

void Grid2D::validate() const {
    if (nx < 8 || ny < 8) {
        throw GeometryError("grid must be at least 8x8");
    }
    if (!(dx > 0.0) || !(dy > 0.0)) {
        throw GeometryError("grid spacings must be positive");
    }
    if (dx != dy) {
        throw GeometryError("isotropic grid required (dx == dy)");
    }
}

void Grid2D::require_encloses(const TrapGeometry& geom, double margin) const {
    const double need_x = geom.half_extent_x() + margin;
    const double need_y = geom.half_extent_y() + margin;
    if (0.5 * nx * dx < need_x || 0.5 * ny * dy < need_y) {
        throw GeometryError("grid does not enclose the trap with a " + std::to_string(margin) +
                            " margin: need half-extents (" + std::to_string(need_x) + ", " +
                            std::to_string(need_y) + "), have (" + std::to_string(0.5 * nx * dx) +
                            ", " + std::to_string(0.5 * ny * dy) + ")");
    }
}

Grid2D Grid2D::fit(const TrapGeometry& geom, const Grid2D& base, double margin) {
    Grid2D grid = base;
    grid.validate();
    const double need_x = geom.half_extent_x() + margin;
    while (0.5 * grid.nx * grid.dx < need_x) {
        grid.nx += 32;
    }
    grid.require_encloses(geom, margin);  // y cannot grow; reject oversized traps
    return grid;
}

void InteractionParams::validate() const {
    if (!(g > 0.0)) {
        throw GeometryError("coupling g must be positive");
    }
    if (!(n_atoms > 0.0)) {
        throw GeometryError("atom number must be positive");
    }
}

std::size_t ReservoirMasks::left_count() const {
    std::size_t n = 0;
    for (auto m : left) n += m;
    return n;
}

std::size_t ReservoirMasks::right_count() const {
    std::size_t n = 0;
    for (auto m : right) n += m;
    return n;
}

double trap_potential_at(const TrapGeometry& geom, double x, double y) {
    return geom.contains(x, y) ? 0.0 : geom.wall_height;
}

double bias_potential_at(const TrapGeometry& geom, double x, double y, double bias) {
    if (!geom.contains(x, y)) {
        return 0.0;  // the hard wall dominates there
    }
    const double half_l = 0.5 * geom.channel_length;
    if (x < -half_l) {
        return 0.0;
    }
    if (x > half_l) {
        return bias;
    }
    return 0.5 * bias + x * bias / geom.channel_length;
}

Potential2D build_trap_potential(const TrapGeometry& geom, const Grid2D& grid) {
    geom.validate();
    grid.validate();
    grid.require_encloses(geom);
    Potential2D pot{grid, std::vector<double>(grid.size())};
    for (int ix = 0; ix < grid.nx; ++ix) {
        const double x = grid.x(ix);
        for (int iy = 0; iy < grid.ny; ++iy) {
            pot.v[grid.idx(ix, iy)] = trap_potential_at(geom, x, grid.y(iy));
        }
    }
    return pot;
}

Potential2D build_bias_potential(const TrapGeometry& geom, const Grid2D& grid, double bias) {
    geom.validate();
    grid.validate();
    if (!(bias >= 0.0)) {
        throw GeometryError("bias must be non-negative");
    }
    Potential2D pot{grid, std::vector<double>(grid.size())};
    for (int ix = 0; ix < grid.nx; ++ix) {
        const double x = grid.x(ix);
        for (int iy = 0; iy < grid.ny; ++iy) {
            pot.v[grid.idx(ix, iy)] = bias_potential_at(geom, x, grid.y(iy), bias);
        }
    }
    return pot;
}

ReservoirMasks reservoir_masks(const TrapGeometry& geom, const Grid2D& grid) {
    geom.validate();
    grid.validate();
    ReservoirMasks masks{grid, std::vector<std::uint8_t>(grid.size(), 0),
                         std::vector<std::uint8_t>(grid.size(), 0)};
    for (int ix = 0; ix < grid.nx; ++ix) {
        const double x = grid.x(ix);
        for (int iy = 0; iy < grid.ny; ++iy) {
            if (!geom.contains(x, grid.y(iy))) continue;
            const std::size_t k = grid.idx(ix, iy);
            if (x < 0.0) {
                masks.left[k] = 1;
            } else {
                masks.right[k] = 1;
            }
        }
    }
    return masks;
}

}  // namespace sfoc
