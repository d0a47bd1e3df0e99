#pragma once

namespace sfoc {

/// Dimensionless unit system: hbar = m = omega_ref = 1, lengths in the
/// oscillator length a0 = sqrt(hbar/(m*omega_ref)), times in 1/omega_ref.
/// The physical reference values are metadata for reporting only; every
/// quantity in the code is expressed in these internal units.
struct UnitSystem {
    static constexpr double hbar = 1.0;
    static constexpr double mass = 1.0;
    static constexpr double omega_ref = 1.0;
    static constexpr double length_ref = 1.0;
    static constexpr double time_ref = 1.0;  // = 1/omega_ref

    // Physical anchors of the internal units (87Rb in a 5 Hz trap).
    static constexpr double omega_ref_hz = 5.0;       // omega_ref = 2*pi*5 Hz
    static constexpr double length_ref_um = 4.83;     // a0 in micrometers
};

}  // namespace sfoc
