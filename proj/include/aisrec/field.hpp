#pragma once

#include "aisrec/coupling.hpp"
#include "aisrec/waveguide.hpp"

#include <complex>
#include <vector>

namespace ais {

/// Mode amplitude vector A(r) at one frequency.
struct ModeAmplitudes {
    double frequency = 0.0;
    std::vector<std::complex<double>> values;
};

/// Horizontal line array, collinear with the source-to-array path.
/// Element j sits at range nearest_range + j * spacing from the source.
struct ArrayGeometry {
    int element_count = 41;
    double spacing = 50.0;       // m
    double depth = 35.0;         // m
    double nearest_range = 0.0;  // m, source to nearest element (r_s)

    double element_range(int j) const { return nearest_range + j * spacing; }
    double aperture() const { return (element_count - 1) * spacing; }
    void validate() const;
};

/// Point-source modal excitation A_m(0) = phi_m(z_source). The usual complex
/// source constant is dropped; per-frequency image normalization cancels it.
ModeAmplitudes initial_amplitudes(const ModeSet& modes, double source_depth);

/// Diagonal propagator: A_m *= exp(i (k_m + i alpha_m) dr).
ModeAmplitudes propagate(const ModeAmplitudes& amps, const ModeSet& modes, double dr);

/// A <- Lambda * A.
ModeAmplitudes apply_coupling(const ModeAmplitudes& amps, const CouplingMatrix& coupling);

/// Adiabatic pressure at one receiver: sum_m A_m(0) e^{i l_m r} phi_m(z) / sqrt(k_m r).
std::complex<double> adiabatic_pressure(const ModeAmplitudes& source_amps,
                                        const ModeSet& modes, double range,
                                        double receiver_depth);

/// Adiabatic field on the whole array.
std::vector<std::complex<double>> adiabatic_pressure_at_array(
    const ModeAmplitudes& source_amps, const ModeSet& modes,
    const ArrayGeometry& geometry);

/// Coupled field on the array: propagate source -> coupling_range, apply
/// Lambda, propagate to each element, then the modal sum with cylindrical
/// spreading per element range. coupling_range is measured from the source.
std::vector<std::complex<double>> pressure_at_array(
    const ModeAmplitudes& source_amps, const ModeSet& modes,
    const ArrayGeometry& geometry, const CouplingMatrix& coupling,
    double coupling_range);

} // namespace ais
