#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace ais {

/// Complex pressure over the array and the band: rows = array elements
/// (range axis), cols = discrete frequencies.
struct ComplexField {
    int rows = 0;
    int cols = 0;
    std::vector<std::complex<double>> values;

    ComplexField() = default;
    ComplexField(int r, int c) : rows(r), cols(c), values(static_cast<std::size_t>(r) * c) {}
    std::complex<double>& at(int r, int c) { return values[static_cast<std::size_t>(r) * cols + c]; }
    const std::complex<double>& at(int r, int c) const { return values[static_cast<std::size_t>(r) * cols + c]; }
};

/// Real striation image in [0,1]: rows = ranges, cols = frequencies, plus the
/// physical axes and free-form metadata that rides along in dataset files.
struct StriationImage {
    int rows = 0;
    int cols = 0;
    std::vector<double> values;
    double r0 = 0.0, dr = 0.0;  // range axis of row i: r0 + i*dr  [m]
    double f0 = 0.0, df = 0.0;  // frequency axis of col j: f0 + j*df  [Hz]
    std::vector<std::pair<std::string, std::string>> meta;

    double& at(int r, int c) { return values[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return values[static_cast<std::size_t>(r) * cols + c]; }

    void set_meta(const std::string& key, const std::string& value);
    const std::string* find_meta(const std::string& key) const;
    double meta_double(const std::string& key, double fallback) const;
};

/// Per-frequency normalized intensity: I(r_m, f_n) = |p / max_m |p||^2, so
/// every frequency column peaks at exactly 1.
StriationImage image_from_field(const ComplexField& field, double r0, double dr,
                                double f0, double df);

/// Bilinear resample to size x size (corner-aligned), clamped to [0,1].
StriationImage resize(const StriationImage& image, int size);

/// 8-bit binary PGM; values are taken as already in [0,1].
void write_pgm(const StriationImage& image, const std::string& path);

/// Three images side by side with 2-px separators (distorted | recovered | label).
void write_pgm_triptych(const StriationImage& a, const StriationImage& b,
                        const StriationImage& c, const std::string& path);

} // namespace ais
