#include "aisrec/image.hpp"
#include "aisrec/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

namespace ais {

void StriationImage::set_meta(const std::string& key, const std::string& value) {
    for (auto& kv : meta)
        if (kv.first == key) {
            kv.second = value;
            return;
        }
    meta.emplace_back(key, value);
}

const std::string* StriationImage::find_meta(const std::string& key) const {
    for (const auto& kv : meta)
        if (kv.first == key) return &kv.second;
    return nullptr;
}

double StriationImage::meta_double(const std::string& key, double fallback) const {
    const std::string* s = find_meta(key);
    return s ? std::stod(*s) : fallback;
}

StriationImage image_from_field(const ComplexField& field, double r0, double dr,
                                double f0, double df) {
    StriationImage img;
    img.rows = field.rows;
    img.cols = field.cols;
    img.values.assign(static_cast<std::size_t>(field.rows) * field.cols, 0.0);
    img.r0 = r0;
    img.dr = dr;
    img.f0 = f0;
    img.df = df;
    for (int c = 0; c < field.cols; ++c) {
        double peak = 0.0;
        for (int r = 0; r < field.rows; ++r)
            peak = std::max(peak, std::abs(field.at(r, c)));
        if (peak == 0.0) throw ZeroField("all-zero pressure column");
        for (int r = 0; r < field.rows; ++r) {
            double a = std::abs(field.at(r, c)) / peak;
            img.at(r, c) = a * a;
        }
    }
    return img;
}

StriationImage resize(const StriationImage& image, int size) {
    if (image.rows < 2 || image.cols < 2)
        throw PreconditionViolation("resize source must be at least 2x2");
    if (size < 2) throw PreconditionViolation("resize target must be at least 2x2");
    StriationImage out;
    out.rows = size;
    out.cols = size;
    out.values.assign(static_cast<std::size_t>(size) * size, 0.0);
    out.r0 = image.r0;
    out.f0 = image.f0;
    out.dr = image.dr * (image.rows - 1) / (size - 1);
    out.df = image.df * (image.cols - 1) / (size - 1);
    out.meta = image.meta;

    for (int i = 0; i < size; ++i) {
        double x = static_cast<double>(i) * (image.rows - 1) / (size - 1);
        int x0 = std::min(static_cast<int>(x), image.rows - 2);
        double tx = x - x0;
        for (int j = 0; j < size; ++j) {
            double y = static_cast<double>(j) * (image.cols - 1) / (size - 1);
            int y0 = std::min(static_cast<int>(y), image.cols - 2);
            double ty = y - y0;
            double v = (1.0 - tx) * ((1.0 - ty) * image.at(x0, y0) + ty * image.at(x0, y0 + 1)) +
                       tx * ((1.0 - ty) * image.at(x0 + 1, y0) + ty * image.at(x0 + 1, y0 + 1));
            out.at(i, j) = std::clamp(v, 0.0, 1.0);
        }
    }
    return out;
}

namespace {

unsigned char to_byte(double v) {
    return static_cast<unsigned char>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
}

} // namespace

void write_pgm(const StriationImage& image, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path);
    f << "P5\n" << image.cols << " " << image.rows << "\n255\n";
    for (int r = 0; r < image.rows; ++r)
        for (int c = 0; c < image.cols; ++c) {
            unsigned char b = to_byte(image.at(r, c));
            f.write(reinterpret_cast<const char*>(&b), 1);
        }
}

void write_pgm_triptych(const StriationImage& a, const StriationImage& b,
                        const StriationImage& c, const std::string& path) {
    if (a.rows != b.rows || a.rows != c.rows)
        throw GridMismatch("triptych images must share height");
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path);
    const int sep = 2;
    const int width = a.cols + b.cols + c.cols + 2 * sep;
    f << "P5\n" << width << " " << a.rows << "\n255\n";
    for (int r = 0; r < a.rows; ++r) {
        std::vector<unsigned char> row;
        row.reserve(width);
        for (int j = 0; j < a.cols; ++j) row.push_back(to_byte(a.at(r, j)));
        row.insert(row.end(), sep, 255);
        for (int j = 0; j < b.cols; ++j) row.push_back(to_byte(b.at(r, j)));
        row.insert(row.end(), sep, 255);
        for (int j = 0; j < c.cols; ++j) row.push_back(to_byte(c.at(r, j)));
        f.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row.size()));
    }
}

} // namespace ais
