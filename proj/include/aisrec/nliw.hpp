#pragma once

#include "aisrec/coupling.hpp"
#include "aisrec/field.hpp"
#include "aisrec/image.hpp"
#include "aisrec/waveguide.hpp"

#include <map>
#include <memory>
#include <vector>

namespace ais {

/// Thermocline-depressing internal wave. Displacement at range r:
///   Sech: eta(r) = amplitude * sech^2((r - center)/width)
///   Rect: eta(r) = amplitude on |r - center| <= width (half-width), else 0.
/// center is measured from the array, like the scene timeline.
struct NLIWShape {
    enum class Kind { Sech, Rect };
    Kind kind = Kind::Sech;
    double amplitude = 6.0;  // m
    double width = 75.0;     // m: L for Sech, half-width w for Rect
    double center = 7000.0;  // m

    // how the displacement maps onto the profile (see perturbed_profile)
    double thermocline_top = 10.0;  // m
    double merge_depth = 45.0;      // m

    double displacement(double r) const;
};

/// Moving source / moving NLIW protocol: r_s(t) = source_start + v_s t,
/// r_l(t) = nliw_start + v_l t, both measured from the array; geometry is
/// frozen within one snapshot.
struct SceneTimeline {
    double source_speed = 2.4;      // m/s
    double nliw_speed = 0.6;        // m/s
    double source_start = 2.0e4;    // m
    double nliw_start = 2.0e3;      // m
    double snapshot_interval = 600.0;  // s
    double duration = 2.4e4;        // s

    double source_range(double t) const { return source_start + source_speed * t; }
    double nliw_range(double t) const { return nliw_start + nliw_speed * t; }
    int snapshot_count() const {
        return static_cast<int>(duration / snapshot_interval) + 1;
    }
};

struct StaircaseOptions {
    double sech_support_widths = 5.0;   // truncate at |r - center| <= 5 L
    int segments_per_width = 8;         // Sech segment length <= L / 8
    double overlap_threshold = 0.5;     // min diagonal projection per step
};

/// Background profile with the thermocline pushed down by the local
/// displacement: the mixed layer extends to thermocline_top + eta, the
/// stretch below is remapped linearly and merges with the background at
/// merge_depth. eta = 0 returns the background profile unchanged.
SoundSpeedProfile perturbed_profile(const WaveguideEnv& env, const NLIWShape& shape,
                                    double r);

/// Mode-coupling matrix of the NLIW at one frequency, relative to background
/// propagation over the support (identity when the wave vanishes). Staircase
/// of piecewise range-independent segments; adjacent bases are joined by
/// density-weighted projection and segments propagate diagonally.
CouplingMatrix nliw_coupling_matrix(const WaveguideEnv& env, const NLIWShape& shape,
                                    double frequency, const SolverOptions& sopts = {},
                                    const StaircaseOptions& stairs = {});

/// Supplement-style mode phase diagnostic over a band.
struct PhaseDiagnostic {
    std::vector<double> frequency;        // band grid
    double reference_frequency = 0.0;     // first band point
    int mode_count = 0;
    // row-major (mode, frequency); re-referenced to the band start
    std::vector<double> theta;    // arg of the through-NLIW diagonal
    std::vector<double> theta0;   // background diagonal phase over the support
    std::vector<double> dtheta;   // |theta~ - theta0~|
    std::vector<bool> flagged;    // distance of dtheta to 2*pi*n exceeds threshold
    double threshold = 1.5707963267948966;

    double at(const std::vector<double>& v, int m, int fi) const {
        return v[static_cast<std::size_t>(m) * frequency.size() + fi];
    }
    double max_dtheta(int m) const;
};

PhaseDiagnostic phase_diagnostic(const WaveguideEnv& env, const NLIWShape& shape,
                                 double f_start, double f_end, double f_step,
                                 double flag_threshold = 1.5707963267948966,
                                 const SolverOptions& sopts = {},
                                 const StaircaseOptions& stairs = {});

/// Physically coupled test-scene engine. Caches the background band and the
/// frequency-dependent coupling matrices (which depend on the shape but not
/// on its position, since the matrices are background-relative).
class SceneEvaluator {
public:
    SceneEvaluator(WaveguideEnv env, NLIWShape shape, double f_start, double f_end,
                   double f_step, ArrayGeometry geometry, double source_depth,
                   const SolverOptions& sopts = {}, const StaircaseOptions& stairs = {});

    const std::vector<ModeSet>& background_band() const { return band_; }
    int band_size() const { return static_cast<int>(band_.size()); }
    double frequency(int i) const { return band_[i].frequency; }

    /// Complex coupled field for source range r_s and NLIW range r_l (both
    /// from the array). rows = elements, cols = band frequencies.
    ComplexField coupled_field(double r_s, double r_l) const;

    /// Adiabatic field at the same source range (the label).
    ComplexField clean_field(double r_s) const;

    const CouplingMatrix& coupling_at(int band_index) const;

private:
    WaveguideEnv env_;
    NLIWShape shape_;
    ArrayGeometry geometry_;
    double source_depth_;
    SolverOptions sopts_;
    StaircaseOptions stairs_;
    std::vector<ModeSet> band_;
    mutable std::vector<std::unique_ptr<CouplingMatrix>> coupling_;
};

/// Frozen-geometry snapshot of the moving-source/moving-NLIW scene at time t:
/// the distorted (physically coupled, noise-free) striation image at native
/// resolution, with scene metadata attached.
StriationImage scene_snapshot(const WaveguideEnv& env, const SceneTimeline& timeline,
                              const NLIWShape& shape, double t,
                              const ArrayGeometry& geometry, double source_depth,
                              double f_start, double f_end, double f_step,
                              const SolverOptions& sopts = {},
                              const StaircaseOptions& stairs = {});

} // namespace ais
