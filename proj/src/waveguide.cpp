#include "aisrec/waveguide.hpp"
#include "aisrec/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace ais {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Tridiagonal symmetric pencil A(lambda) - lambda*B for one uniform grid.
// Unknowns are phi_1..phi_N (surface value phi_0 = 0 eliminated); the last
// row carries the bottom closure: rigid (phi'(D) = 0) or half-space impedance
// phi'(D) = -(rho_w/rho_b) * gamma(lambda) * phi(D), both via a ghost point
// and row-scaled by 1/2 so the pencil stays symmetric with B = diag(1,..,1,1/2).
struct DepthGrid {
    int n = 0;            // number of unknowns (= grid intervals)
    double h = 0.0;
    std::vector<double> q;  // omega^2 / c(z_i)^2 at z_i = i*h, i = 1..n
};

// Exact integral of 1/c(z)^2 over [za, zb] for the piecewise-linear profile.
// Cell-averaged coefficients keep the eigenvalue error expansion clean when
// profile kinks do not land on grid points.
double integrate_inv_c2(const SoundSpeedProfile& ssp, double za, double zb) {
    double total = 0.0;
    const std::size_t n = ssp.depth.size();
    auto piece = [](double c1, double c2, double dz) {
        if (dz <= 0.0) return 0.0;
        if (c1 == c2) return dz / (c1 * c1);
        double s = (c2 - c1) / dz;
        return (1.0 / c1 - 1.0 / c2) / s;
    };
    // clamped extensions outside the sampled span
    if (za < ssp.depth.front()) {
        double hi = std::min(zb, ssp.depth.front());
        total += (hi - za) / (ssp.speed.front() * ssp.speed.front());
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        double lo = std::max(za, ssp.depth[i]);
        double hi = std::min(zb, ssp.depth[i + 1]);
        if (hi <= lo) continue;
        double seg = ssp.depth[i + 1] - ssp.depth[i];
        double c_lo = ssp.speed[i] + (ssp.speed[i + 1] - ssp.speed[i]) * (lo - ssp.depth[i]) / seg;
        double c_hi = ssp.speed[i] + (ssp.speed[i + 1] - ssp.speed[i]) * (hi - ssp.depth[i]) / seg;
        total += piece(c_lo, c_hi, hi - lo);
    }
    if (zb > ssp.depth.back()) {
        double lo = std::max(za, ssp.depth.back());
        total += (zb - lo) / (ssp.speed.back() * ssp.speed.back());
    }
    return total;
}

DepthGrid make_grid(const WaveguideEnv& env, double omega, int n) {
    DepthGrid g;
    g.n = n;
    g.h = env.water_depth / n;
    g.q.resize(n);
    for (int i = 1; i <= n; ++i) {
        double za, zb;
        if (i < n) {
            za = (i - 0.5) * g.h;
            zb = (i + 0.5) * g.h;
        } else {
            za = env.water_depth - 0.5 * g.h;  // interface row: water side only
            zb = env.water_depth;
        }
        g.q[i - 1] = omega * omega * integrate_inv_c2(env.ssp, za, zb) / (zb - za);
    }
    return g;
}

struct PencilEval {
    const DepthGrid* grid;
    double lambda_bottom;   // omega^2/c_b^2 (0 for rigid bottom)
    double density_ratio;   // rho_w / rho_b (0 for rigid bottom)

    double gamma(double lambda) const {
        return std::sqrt(std::max(lambda - lambda_bottom, 0.0));
    }

    // Diagonal of A(lambda) - lambda*B, top to bottom.
    double diag(int i, double lambda) const {
        const double h = grid->h;
        const double inv_h2 = 1.0 / (h * h);
        if (i < grid->n - 1)
            return grid->q[i] - 2.0 * inv_h2 - lambda;
        return 0.5 * grid->q[i] - inv_h2 - density_ratio * gamma(lambda) / h -
               0.5 * lambda;
    }

    // Number of pencil eigenvalues below lambda (negative LDL^T pivots).
    int count_below(double lambda) const {
        const double e = 1.0 / (grid->h * grid->h);
        const double e2 = e * e;
        int neg = 0;
        double d = diag(0, lambda);
        if (d <= 0.0) {
            ++neg;
            if (d == 0.0) d = -1e-300;
        }
        for (int i = 1; i < grid->n; ++i) {
            d = diag(i, lambda) - e2 / d;
            if (d <= 0.0) {
                ++neg;
                if (d == 0.0) d = -1e-300;
            }
        }
        return neg;
    }

    int count_above(double lambda) const { return grid->n - count_below(lambda); }
};

// Tridiagonal LU with partial pivoting (dgttrf layout); inverse iteration
// needs the pivoting because the shifted matrix is indefinite.
struct TriFactor {
    int n;
    std::vector<double> dl, d, du, du2;
    std::vector<int> ipiv;

    TriFactor(const std::vector<double>& lower, std::vector<double> diag,
              std::vector<double> upper)
        : n(static_cast<int>(diag.size())), dl(lower), d(std::move(diag)),
          du(std::move(upper)), du2(std::max(n - 2, 0), 0.0), ipiv(n, 0) {
        for (int i = 0; i < n; ++i) ipiv[i] = i;
        for (int i = 0; i < n - 1; ++i) {
            if (std::fabs(d[i]) >= std::fabs(dl[i])) {
                if (d[i] == 0.0) d[i] = 1e-300;
                double fact = dl[i] / d[i];
                dl[i] = fact;
                d[i + 1] -= fact * du[i];
                if (i < n - 2) du2[i] = 0.0;
            } else {
                double fact = d[i] / dl[i];
                d[i] = dl[i];
                dl[i] = fact;
                double tmp = du[i];
                du[i] = d[i + 1];
                d[i + 1] = tmp - fact * d[i + 1];
                if (i < n - 2) {
                    du2[i] = du[i + 1];
                    du[i + 1] = -fact * du[i + 1];
                }
                ipiv[i] = i + 1;
            }
        }
        if (d[n - 1] == 0.0) d[n - 1] = 1e-300;
    }

    void solve(std::vector<double>& b) const {
        for (int i = 0; i < n - 1; ++i) {
            if (ipiv[i] == i) {
                b[i + 1] -= dl[i] * b[i];
            } else {
                double tmp = b[i];
                b[i] = b[i + 1];
                b[i + 1] = tmp - dl[i] * b[i];
            }
        }
        b[n - 1] /= d[n - 1];
        if (n > 1) {
            b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
        }
        for (int i = n - 3; i >= 0; --i) {
            b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
        }
    }
};

struct LevelSolution {
    std::vector<double> lambda;               // descending
    std::vector<std::vector<double>> vec;     // unknowns phi_1..phi_N (finest only)
};

// All pencil eigenvalues in (lambda_lo, lambda_hi), descending, by bisection
// on the Sturm pivot count. want_vectors controls the inverse-iteration pass.
LevelSolution solve_level(const DepthGrid& grid, const PencilEval& pencil,
                          double lambda_lo, double lambda_hi, int max_bisect,
                          bool want_vectors) {
    LevelSolution out;
    const int m_total = pencil.count_above(lambda_lo) - pencil.count_above(lambda_hi);
    if (m_total <= 0) return out;

    const double tol = 1e-14 * std::max(std::fabs(lambda_hi), 1.0);
    for (int j = 1; j <= m_total; ++j) {
        // j-th largest eigenvalue above lambda_lo
        double lo = lambda_lo, hi = lambda_hi;
        int base = pencil.count_above(lambda_hi);
        // invariant: count_above(lo) - base >= j > count_above(hi) - base
        for (int it = 0; it < max_bisect && (hi - lo) > tol; ++it) {
            double mid = 0.5 * (lo + hi);
            if (pencil.count_above(mid) - base >= j)
                lo = mid;
            else
                hi = mid;
        }
        if ((hi - lo) > 1e4 * tol)
            throw ConvergenceFailure("eigenvalue bisection stalled");
        out.lambda.push_back(0.5 * (lo + hi));
    }

    if (!want_vectors) return out;

    const double e = 1.0 / (grid.h * grid.h);
    for (double lam : out.lambda) {
        std::vector<double> lower(grid.n - 1, e), upper(grid.n - 1, e),
            diag(grid.n);
        for (int i = 0; i < grid.n; ++i) diag[i] = pencil.diag(i, lam);
        // mirror the half-weight row scaling on its off-diagonal
        lower[grid.n - 2] = e;
        TriFactor lu(lower, diag, upper);
        std::vector<double> x(grid.n, 1.0);
        double scale = 0.0;
        for (int sweep = 0; sweep < 3; ++sweep) {
            lu.solve(x);
            scale = 0.0;
            for (double v : x) scale = std::max(scale, std::fabs(v));
            if (scale == 0.0) throw ConvergenceFailure("inverse iteration collapsed");
            for (double& v : x) v /= scale;
        }
        out.vec.push_back(std::move(x));
    }
    return out;
}

} // namespace

double SoundSpeedProfile::at(double z) const {
    if (z <= depth.front()) return speed.front();
    if (z >= depth.back()) return speed.back();
    auto it = std::upper_bound(depth.begin(), depth.end(), z);
    std::size_t i = static_cast<std::size_t>(it - depth.begin());
    double t = (z - depth[i - 1]) / (depth[i] - depth[i - 1]);
    return speed[i - 1] + t * (speed[i] - speed[i - 1]);
}

double SoundSpeedProfile::min_speed() const {
    return *std::min_element(speed.begin(), speed.end());
}

double SoundSpeedProfile::max_speed() const {
    return *std::max_element(speed.begin(), speed.end());
}

void SoundSpeedProfile::validate(double water_depth) const {
    if (depth.size() < 2 || depth.size() != speed.size())
        throw ConfigError("sound speed profile needs >= 2 (depth, speed) samples");
    for (std::size_t i = 1; i < depth.size(); ++i)
        if (depth[i] <= depth[i - 1])
            throw ConfigError("profile depths must be strictly increasing");
    if (depth.front() != 0.0 || depth.back() != water_depth)
        throw ConfigError("profile must span depth 0 to water_depth");
    for (double c : speed)
        if (c < 1400.0 || c > 1600.0)
            throw ConfigError("water sound speed outside [1400, 1600] m/s");
}

void WaveguideEnv::validate() const {
    if (water_depth <= 0.0) throw ConfigError("water_depth must be positive");
    ssp.validate(water_depth);
    if (bottom.type == BottomType::Halfspace) {
        if (bottom.speed <= ssp.max_speed())
            throw ConfigError("bottom speed must exceed all water speeds");
        if (bottom.density <= 0.0) throw ConfigError("bottom density must be positive");
        if (bottom.attenuation_db_lambda < 0.0)
            throw ConfigError("bottom attenuation must be >= 0");
    }
}

double ModeSet::phi_at(int m, double z) const {
    const double* row = mode(m);
    const double h = depth_grid[1] - depth_grid[0];
    if (z <= 0.0) return row[0];
    if (z >= depth_grid.back()) return row[depth_grid.size() - 1];
    double s = z / h;
    std::size_t i = static_cast<std::size_t>(s);
    double t = s - static_cast<double>(i);
    return row[i] * (1.0 - t) + row[i + 1] * t;
}

double ModeSet::inner_product(int m, int n) const {
    const double* a = mode(m);
    const double* b = mode(n);
    const std::size_t last = depth_grid.size() - 1;
    const double h = depth_grid[1] - depth_grid[0];
    double s = 0.5 * (a[0] * b[0] + a[last] * b[last]);
    for (std::size_t i = 1; i < last; ++i) s += a[i] * b[i];
    s = s * h / water_density;
    double gm = gamma_b[m], gn = gamma_b[n];
    if (gm > 0.0 && gn > 0.0)
        s += a[last] * b[last] / (bottom_density * (gm + gn));
    return s;
}

ModeSet solve_modes(const WaveguideEnv& env, double frequency,
                    const SolverOptions& opts) {
    env.validate();
    if (frequency <= 0.0) throw ConfigError("frequency must be positive");

    const double omega = kTwoPi * frequency;
    const double c_min = env.ssp.min_speed();
    const bool halfspace = env.bottom.type == BottomType::Halfspace;

    const double lambda_top = (omega / c_min) * (omega / c_min);
    const double lambda_bot =
        halfspace ? (omega / env.bottom.speed) * (omega / env.bottom.speed) : 0.0;
    // nudge off the exact branch points
    const double pad = 1e-9 * lambda_top;
    const double lo = lambda_bot + pad;
    const double hi = lambda_top - pad;
    if (lo >= hi) throw NoTrappedModes("empty trapped-mode interval");

    const int levels = std::max(1, opts.richardson_levels);
    const int mult = 1 << (levels - 1);
    const double lambda_min_acoustic = c_min / frequency;
    double h_target = lambda_min_acoustic / opts.points_per_wavelength;
    int n_fine = static_cast<int>(std::ceil(env.water_depth / h_target));
    n_fine = ((n_fine + mult - 1) / mult) * mult;
    n_fine = std::max(n_fine, 16 * mult);

    // finest level first (carries the vectors), coarser ones for extrapolation
    std::vector<LevelSolution> sols;
    std::vector<DepthGrid> grids;
    for (int l = 0; l < levels; ++l) {
        grids.push_back(make_grid(env, omega, n_fine >> l));
        PencilEval pencil{&grids.back(), lambda_bot,
                          halfspace ? env.water_density / env.bottom.density : 0.0};
        sols.push_back(solve_level(grids.back(), pencil, lo, hi,
                                   opts.max_bisections, l == 0));
    }

    // Extrapolate eigenvalues first; a near-cutoff level that the finite grid
    // pushes above lambda_bot is dropped when its extrapolated value falls
    // back below the trapping threshold.
    std::vector<double> lambda_extrap(sols[0].lambda.size());
    for (std::size_t m = 0; m < sols[0].lambda.size(); ++m) {
        std::vector<double> seq;
        for (int l = 0; l < levels; ++l)
            if (m < sols[l].lambda.size()) seq.push_back(sols[l].lambda[m]);
        int cols = static_cast<int>(seq.size());
        std::vector<double> tableau(seq.rbegin(), seq.rend());  // coarse -> fine
        double pow4 = 4.0;
        for (int stage = 1; stage < cols; ++stage) {
            for (int i = 0; i < cols - stage; ++i)
                tableau[i] = tableau[i + 1] + (tableau[i + 1] - tableau[i]) / (pow4 - 1.0);
            pow4 *= 4.0;
        }
        lambda_extrap[m] = tableau[0];
    }
    std::size_t m_count = lambda_extrap.size();
    while (m_count > 0 && lambda_extrap[m_count - 1] <= lambda_bot + pad) --m_count;
    if (m_count == 0) throw NoTrappedModes("no trapped modes at this frequency");

    ModeSet out;
    out.frequency = frequency;
    out.count = static_cast<int>(m_count);
    out.bottom_density = env.bottom.density;
    out.water_density = env.water_density;

    const DepthGrid& fine = grids[0];
    out.depth_grid.resize(fine.n + 1);
    for (int i = 0; i <= fine.n; ++i) out.depth_grid[i] = i * fine.h;
    out.phi.assign(m_count * (fine.n + 1), 0.0);
    out.k.resize(m_count);
    out.alpha.resize(m_count);
    out.gamma_b.resize(m_count);

    const double alpha_np_bottom =
        halfspace ? env.bottom.attenuation_db_lambda * (std::log(10.0) / 20.0) /
                        (env.bottom.speed / frequency)
                  : 0.0;

    for (std::size_t m = 0; m < m_count; ++m) {
        const double lambda_grid = sols[0].lambda[m];

        double gamma = halfspace ? std::sqrt(std::max(lambda_grid - lambda_bot, 0.0)) : 0.0;
        out.gamma_b[m] = gamma;
        out.k[m] = std::sqrt(std::max(lambda_extrap[m], 0.0));

        // normalize on the finest grid; half-space tail integrates analytically
        const std::vector<double>& x = sols[0].vec[m];
        double* row = out.phi.data() + m * (fine.n + 1);
        row[0] = 0.0;
        for (int i = 1; i <= fine.n; ++i) row[i] = x[i - 1];
        double norm2 = 0.5 * row[fine.n] * row[fine.n];
        for (int i = 1; i < fine.n; ++i) norm2 += row[i] * row[i];
        norm2 = norm2 * fine.h / env.water_density;
        if (gamma > 0.0)
            norm2 += row[fine.n] * row[fine.n] / (2.0 * gamma * env.bottom.density);
        double scale = 1.0 / std::sqrt(norm2);
        if (row[1] < 0.0) scale = -scale;
        for (int i = 0; i <= fine.n; ++i) row[i] *= scale;

        if (halfspace && alpha_np_bottom > 0.0 && gamma > 0.0) {
            double tail = row[fine.n] * row[fine.n] /
                          (2.0 * gamma * env.bottom.density);
            out.alpha[m] = (omega / env.bottom.speed) * alpha_np_bottom * tail / out.k[m];
        } else {
            out.alpha[m] = 0.0;
        }
    }

    // descending k sanity (bisection delivers descending lambda already)
    for (std::size_t m = 1; m < m_count; ++m)
        if (out.k[m] >= out.k[m - 1])
            throw ConvergenceFailure("wavenumbers not strictly descending");
    return out;
}

std::vector<ModeSet> solve_band(const WaveguideEnv& env, double f_start,
                                double f_end, double step,
                                const SolverOptions& opts) {
    if (step <= 0.0) throw ConfigError("band step must be positive");
    if (f_start > f_end) throw ConfigError("band start must not exceed band end");
    std::vector<ModeSet> out;
    int n = static_cast<int>(std::floor((f_end - f_start) / step + 0.5)) + 1;
    for (int i = 0; i < n; ++i) {
        double f = f_start + i * step;
        try {
            out.push_back(solve_modes(env, f, opts));
        } catch (const Error& e) {
            std::ostringstream msg;
            msg << "at " << f << " Hz: " << e.what();
            throw ConvergenceFailure(msg.str());
        }
    }
    return out;
}

void write_mode_csv(const ModeSet& modes, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot open " + path);
    f << "m,k_m,alpha_m\n";
    char buf[80];
    for (int m = 0; m < modes.count; ++m) {
        std::snprintf(buf, sizeof buf, "%d,%.12g,%.12g\n", m + 1, modes.k[m],
                      modes.alpha[m]);
        f << buf;
    }
}

} // namespace ais
