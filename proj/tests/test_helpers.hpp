#pragma once

#include "aisrec/waveguide.hpp"

#include <cmath>
#include <functional>
#include <vector>

namespace ais::test {

/// Default shallow-water environment used across the test suite: 50 m water,
/// downward-refracting profile with a thermocline between 10 m and 19 m,
/// fluid half-space below. Mirrors configs/env_default.json.
inline WaveguideEnv default_env() {
    WaveguideEnv env;
    env.water_depth = 50.0;
    env.ssp.depth = {0.0, 10.0, 19.0, 50.0};
    env.ssp.speed = {1530.0, 1530.0, 1490.0, 1483.0};
    env.bottom.type = BottomType::Halfspace;
    env.bottom.speed = 1700.0;
    env.bottom.density = 1.8;
    env.bottom.attenuation_db_lambda = 0.5;
    return env;
}

inline WaveguideEnv pekeris_env(double c_w = 1500.0, double c_b = 1800.0,
                                double rho_b = 1.8, double depth = 50.0) {
    WaveguideEnv env;
    env.water_depth = depth;
    env.ssp.depth = {0.0, depth};
    env.ssp.speed = {c_w, c_w};
    env.bottom.type = BottomType::Halfspace;
    env.bottom.speed = c_b;
    env.bottom.density = rho_b;
    env.bottom.attenuation_db_lambda = 0.0;
    return env;
}

inline WaveguideEnv ideal_env(double c = 1500.0, double depth = 50.0) {
    WaveguideEnv env;
    env.water_depth = depth;
    env.ssp.depth = {0.0, depth};
    env.ssp.speed = {c, c};
    env.bottom.type = BottomType::Rigid;
    return env;
}

/// Ideal waveguide (pressure-release surface, rigid bottom) closed form.
inline std::vector<double> ideal_wavenumbers(double c, double depth, double f) {
    const double k_w = 2.0 * M_PI * f / c;
    std::vector<double> k;
    for (int m = 1;; ++m) {
        double mu = (m - 0.5) * M_PI / depth;
        if (mu >= k_w) break;
        k.push_back(std::sqrt(k_w * k_w - mu * mu));
    }
    return k;
}

/// Independent Pekeris oracle: bisection on the dispersion relation
///   g(mu) = mu*cos(mu D) + (rho_w/rho_b) * gamma(mu) * sin(mu D) = 0,
/// gamma = sqrt(mu_max^2 - mu^2), scanning (0, mu_max) for sign changes.
inline std::vector<double> pekeris_wavenumbers(double c_w, double c_b,
                                               double rho_b, double depth,
                                               double f, double rho_w = 1.0) {
    const double omega = 2.0 * M_PI * f;
    const double mu_max =
        std::sqrt(omega * omega / (c_w * c_w) - omega * omega / (c_b * c_b));
    auto g = [&](double mu) {
        double gamma = std::sqrt(std::max(mu_max * mu_max - mu * mu, 0.0));
        return mu * std::cos(mu * depth) + (rho_w / rho_b) * gamma * std::sin(mu * depth);
    };
    std::vector<double> roots;
    const int scan = 200000;
    double prev_mu = mu_max * 1e-9;
    double prev_g = g(prev_mu);
    for (int i = 1; i <= scan; ++i) {
        double mu = mu_max * (static_cast<double>(i) / scan) * (1.0 - 1e-12);
        double val = g(mu);
        if (prev_g == 0.0) {
            roots.push_back(prev_mu);
        } else if (prev_g * val < 0.0) {
            double lo = prev_mu, hi = mu, glo = prev_g;
            for (int it = 0; it < 200; ++it) {
                double mid = 0.5 * (lo + hi);
                double gm = g(mid);
                if (glo * gm <= 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    glo = gm;
                }
            }
            roots.push_back(0.5 * (lo + hi));
        }
        prev_mu = mu;
        prev_g = val;
    }
    std::vector<double> k;
    for (double mu : roots) {
        double kk = omega * omega / (c_w * c_w) - mu * mu;
        if (kk > omega * omega / (c_b * c_b))
            k.push_back(std::sqrt(kk));
    }
    std::sort(k.begin(), k.end(), std::greater<double>());
    return k;
}

} // namespace ais::test
