#pragma once

#include <string>
#include <vector>

namespace ais {

/// Water-column sound speed, piecewise linear in depth.
struct SoundSpeedProfile {
    std::vector<double> depth;  // m, strictly increasing, 0 .. water_depth
    std::vector<double> speed;  // m/s

    double at(double z) const;  // linear interpolation, clamped at the ends
    double min_speed() const;
    double max_speed() const;
    void validate(double water_depth) const;
};

enum class BottomType { Halfspace, Rigid };

struct Bottom {
    BottomType type = BottomType::Halfspace;
    double speed = 1700.0;                 // m/s
    double density = 1.8;                  // g/cm^3
    double attenuation_db_lambda = 0.5;    // dB per wavelength
};

struct WaveguideEnv {
    SoundSpeedProfile ssp;
    double water_depth = 50.0;   // m
    double water_density = 1.0;  // g/cm^3
    Bottom bottom;

    void validate() const;
};

struct SolverOptions {
    double points_per_wavelength = 20.0;  // grid step = lambda_min / ppw
    int richardson_levels = 3;            // 1 disables extrapolation
    int max_bisections = 80;
};

/// Trapped modal basis at one frequency. Mode functions live on a uniform
/// water-column grid; the exponential half-space tail is carried analytically
/// through gamma_b (tail decay rates), so inner products and norms include it.
struct ModeSet {
    double frequency = 0.0;            // Hz
    int count = 0;                     // M
    std::vector<double> k;             // rad/m, strictly descending
    std::vector<double> alpha;         // nepers/m, >= 0
    std::vector<double> gamma_b;       // 1/m tail decay (0 for rigid bottom)
    std::vector<double> depth_grid;    // m, uniform, 0 .. D inclusive
    std::vector<double> phi;           // count x grid, row-major, orthonormal
    double bottom_density = 1.0;
    double water_density = 1.0;

    double phi_at(int mode, double z) const;  // linear interp on the grid
    const double* mode(int m) const { return phi.data() + static_cast<std::size_t>(m) * depth_grid.size(); }

    /// Density-weighted inner product <phi_m, phi_n>, half-space tail included.
    double inner_product(int m, int n) const;
};

/// Solve the depth eigenproblem for all trapped modes at one frequency.
/// Finite differences with an impedance closure at the water/bottom interface;
/// eigenvalues bracketed by Sturm pivot counts, refined by bisection, vectors
/// by inverse iteration, wavenumbers Richardson-extrapolated across grids.
ModeSet solve_modes(const WaveguideEnv& env, double frequency,
                    const SolverOptions& opts = {});

/// One ModeSet per frequency f_start, f_start+step, ..., f_end.
std::vector<ModeSet> solve_band(const WaveguideEnv& env, double f_start,
                                double f_end, double step,
                                const SolverOptions& opts = {});

/// Diagnostic table (m, k_m, alpha_m) as CSV.
void write_mode_csv(const ModeSet& modes, const std::string& path);

} // namespace ais
