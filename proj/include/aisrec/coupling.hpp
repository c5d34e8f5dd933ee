#pragma once

#include "aisrec/rng.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace ais {

/// Complex M x M mode-coupling matrix with a provenance tag.
struct CouplingMatrix {
    enum class Kind { Identity, Random, Nliw };

    int dim = 0;
    Kind kind = Kind::Identity;
    std::vector<std::complex<double>> values;  // row-major

    static CouplingMatrix identity(int dim);

    std::complex<double>& at(int r, int c) { return values[static_cast<std::size_t>(r) * dim + c]; }
    const std::complex<double>& at(int r, int c) const { return values[static_cast<std::size_t>(r) * dim + c]; }

    /// Leading d x d block; the random model is sampled at the band's largest
    /// mode count and sliced per frequency.
    CouplingMatrix leading(int d) const;
};

struct RandomCouplingConfig {
    double a_low = 0.5;
    double a_high = 1.5;
    double eta_low = 0.0;
    double eta_high = 5.0;
    std::uint64_t seed = 0;

    void validate() const;
};

/// One draw of the random coupling model: real diagonal a_m ~ U(a_low, a_high)
/// i.i.d. per row, off-diagonals -i * eta0 * R_mn with eta0 ~ U(eta_low,
/// eta_high) once per matrix and R_mn ~ N(0,1) i.i.d.
CouplingMatrix sample_coupling(const RandomCouplingConfig& config, int dim, Rng& rng);

} // namespace ais
