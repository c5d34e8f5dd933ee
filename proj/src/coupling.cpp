#include "aisrec/coupling.hpp"
#include "aisrec/errors.hpp"

namespace ais {

CouplingMatrix CouplingMatrix::identity(int dim) {
    CouplingMatrix m;
    m.dim = dim;
    m.kind = Kind::Identity;
    m.values.assign(static_cast<std::size_t>(dim) * dim, {0.0, 0.0});
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

CouplingMatrix CouplingMatrix::leading(int d) const {
    if (d > dim) throw DimensionMismatch("leading block larger than matrix");
    CouplingMatrix m;
    m.dim = d;
    m.kind = kind;
    m.values.resize(static_cast<std::size_t>(d) * d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) m.at(r, c) = at(r, c);
    return m;
}

void RandomCouplingConfig::validate() const {
    if (a_low < 0.0 || a_high < a_low)
        throw ConfigError("coupling a_range must satisfy 0 <= low <= high");
    if (eta_low < 0.0 || eta_high < eta_low)
        throw ConfigError("coupling eta_range must satisfy 0 <= low <= high");
}

CouplingMatrix sample_coupling(const RandomCouplingConfig& config, int dim, Rng& rng) {
    config.validate();
    if (dim < 1) throw ConfigError("coupling dimension must be >= 1");

    CouplingMatrix m;
    m.dim = dim;
    m.kind = CouplingMatrix::Kind::Random;
    m.values.assign(static_cast<std::size_t>(dim) * dim, {0.0, 0.0});

    // draw order is part of the reproducibility contract:
    // eta0, then a_1..a_M, then R row-major skipping the diagonal
    const double eta0 = rng.uniform(config.eta_low, config.eta_high);
    for (int i = 0; i < dim; ++i)
        m.at(i, i) = rng.uniform(config.a_low, config.a_high);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            if (r != c) m.at(r, c) = std::complex<double>(0.0, -eta0 * rng.normal());
    return m;
}

} // namespace ais
