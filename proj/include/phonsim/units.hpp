#pragma once

// Unit conventions used throughout: lengths in mm, energies in ueV,
// times in us, transmon energies/frequencies in GHz (E/h), currents in nA,
// voltages in mV. Conversion constants below are CODATA 2018.

namespace phonsim::units {

inline constexpr double kBoltzmann_ueV_per_K = 86.17333262;

// E = h*f: energy equivalent of 1 GHz in ueV.
inline constexpr double kUeVPerGHz = 4.135667696;
inline constexpr double kGHzPerUeV = 1.0 / kUeVPerGHz;

inline constexpr double kElementaryCharge_C = 1.602176634e-19;

// Tunneling events per us for a current of 1 nA.
inline constexpr double kPairsPerUsPerNA = 1.0e-9 / kElementaryCharge_C * 1.0e-6;

// e * 1 mV expressed in ueV.
inline constexpr double kUeVPerMV = 1000.0;

// Injector bath temperature; thermal factors in the tunnel integrals are
// evaluated at this fixed value.
inline constexpr double kBathTemperature_K = 0.020;

}  // namespace phonsim::units
