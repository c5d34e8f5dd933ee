#include "aisrec/field.hpp"
#include "aisrec/errors.hpp"

#include <cmath>

namespace ais {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// exp(i k r) for phases of ~1e5 rad. The product is formed as a double-double
// (fma residual) and reduced with the exact fmod before cos/sin, so splitting
// a path into segments changes the result only at the few-ulp level.
std::complex<double> unit_phase(double k, double r) {
    double hi = k * r;
    double lo = std::fma(k, r, -hi);
    double ph = std::fmod(hi, kTwoPi) + lo;
    return {std::cos(ph), std::sin(ph)};
}

} // namespace

void ArrayGeometry::validate() const {
    if (element_count < 2) throw ConfigError("array needs >= 2 elements");
    if (spacing <= 0.0) throw ConfigError("element spacing must be positive");
}

ModeAmplitudes initial_amplitudes(const ModeSet& modes, double source_depth) {
    if (source_depth <= 0.0 || source_depth >= modes.depth_grid.back())
        throw DepthOutOfRange("source depth outside the water column");
    ModeAmplitudes a;
    a.frequency = modes.frequency;
    a.values.resize(modes.count);
    for (int m = 0; m < modes.count; ++m)
        a.values[m] = modes.phi_at(m, source_depth);
    return a;
}

ModeAmplitudes propagate(const ModeAmplitudes& amps, const ModeSet& modes, double dr) {
    if (static_cast<int>(amps.values.size()) != modes.count)
        throw DimensionMismatch("amplitude vector does not match mode count");
    if (dr < 0.0) throw PreconditionViolation("negative propagation distance");
    ModeAmplitudes out = amps;
    for (int m = 0; m < modes.count; ++m)
        out.values[m] *= std::exp(-modes.alpha[m] * dr) * unit_phase(modes.k[m], dr);
    return out;
}

ModeAmplitudes apply_coupling(const ModeAmplitudes& amps, const CouplingMatrix& coupling) {
    if (static_cast<int>(amps.values.size()) != coupling.dim)
        throw DimensionMismatch("coupling matrix does not match amplitude vector");
    ModeAmplitudes out;
    out.frequency = amps.frequency;
    out.values.assign(amps.values.size(), {0.0, 0.0});
    for (int r = 0; r < coupling.dim; ++r) {
        std::complex<double> acc{0.0, 0.0};
        for (int c = 0; c < coupling.dim; ++c)
            acc += coupling.at(r, c) * amps.values[c];
        out.values[r] = acc;
    }
    return out;
}

std::complex<double> adiabatic_pressure(const ModeAmplitudes& source_amps,
                                        const ModeSet& modes, double range,
                                        double receiver_depth) {
    std::complex<double> p{0.0, 0.0};
    for (int m = 0; m < modes.count; ++m) {
        std::complex<double> prop =
            std::exp(-modes.alpha[m] * range) * unit_phase(modes.k[m], range);
        p += source_amps.values[m] * prop * modes.phi_at(m, receiver_depth) /
             std::sqrt(modes.k[m] * range);
    }
    return p;
}

std::vector<std::complex<double>> adiabatic_pressure_at_array(
    const ModeAmplitudes& source_amps, const ModeSet& modes,
    const ArrayGeometry& geometry) {
    geometry.validate();
    std::vector<std::complex<double>> out(geometry.element_count);
    for (int j = 0; j < geometry.element_count; ++j)
        out[j] = adiabatic_pressure(source_amps, modes, geometry.element_range(j),
                                    geometry.depth);
    return out;
}

std::vector<std::complex<double>> pressure_at_array(
    const ModeAmplitudes& source_amps, const ModeSet& modes,
    const ArrayGeometry& geometry, const CouplingMatrix& coupling,
    double coupling_range) {
    geometry.validate();
    if (coupling_range <= 0.0 || coupling_range >= geometry.nearest_range)
        throw CouplingOutsidePath("coupling range must lie between source and array");

    ModeAmplitudes at_coupling = propagate(source_amps, modes, coupling_range);
    ModeAmplitudes coupled = apply_coupling(at_coupling, coupling);

    std::vector<std::complex<double>> out(geometry.element_count);
    std::vector<double> phi_rx(modes.count);
    for (int m = 0; m < modes.count; ++m)
        phi_rx[m] = modes.phi_at(m, geometry.depth);

    for (int j = 0; j < geometry.element_count; ++j) {
        const double r = geometry.element_range(j);
        const double dr = r - coupling_range;
        std::complex<double> p{0.0, 0.0};
        for (int m = 0; m < modes.count; ++m) {
            std::complex<double> prop =
                std::exp(-modes.alpha[m] * dr) * unit_phase(modes.k[m], dr);
            p += coupled.values[m] * prop * phi_rx[m] / std::sqrt(modes.k[m] * r);
        }
        out[j] = p;
    }
    return out;
}

} // namespace ais
