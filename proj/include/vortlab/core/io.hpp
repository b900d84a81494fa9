#pragma once

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "vortlab/core/array2d.hpp"
#include "vortlab/core/error.hpp"

namespace vortlab {

// Geometry tags used in snapshot headers.
enum class GeometryTag : std::uint8_t { Torus = 0, Channel = 1, S1 = 2 };

namespace detail_io {
template <class T>
void put(std::ofstream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}
template <class T>
T get(std::ifstream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    return v;
}
}  // namespace detail_io

/// Field snapshot: "FLD1", u32 nx, u32 ny, u8 geometry, f64 time, then
/// nx*ny f64 values row-major, all little-endian.
struct FieldSnapshot {
    std::uint32_t nx = 0, ny = 0;
    GeometryTag geometry = GeometryTag::Torus;
    double time = 0.0;
    std::vector<double> values;  // row-major, ny rows x nx cols
};

inline void write_snapshot(const std::filesystem::path& path, const FieldSnapshot& s) {
    std::ofstream os(path, std::ios::binary);
    require(bool(os), "write_snapshot: cannot open " + path.string());
    os.write("FLD1", 4);
    detail_io::put(os, s.nx);
    detail_io::put(os, s.ny);
    detail_io::put(os, std::uint8_t(s.geometry));
    detail_io::put(os, s.time);
    require(s.values.size() == std::size_t(s.nx) * s.ny, "write_snapshot: bad value count");
    os.write(reinterpret_cast<const char*>(s.values.data()),
             std::streamsize(s.values.size() * sizeof(double)));
}

inline FieldSnapshot read_snapshot(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    require(bool(is), "read_snapshot: cannot open " + path.string());
    char magic[4];
    is.read(magic, 4);
    require(std::memcmp(magic, "FLD1", 4) == 0, "read_snapshot: bad magic in " + path.string());
    FieldSnapshot s;
    s.nx = detail_io::get<std::uint32_t>(is);
    s.ny = detail_io::get<std::uint32_t>(is);
    s.geometry = GeometryTag(detail_io::get<std::uint8_t>(is));
    s.time = detail_io::get<double>(is);
    s.values.resize(std::size_t(s.nx) * s.ny);
    is.read(reinterpret_cast<char*>(s.values.data()),
            std::streamsize(s.values.size() * sizeof(double)));
    require(bool(is), "read_snapshot: truncated file " + path.string());
    return s;
}

/// Polar snapshot: "POL1", u32 nR, u32 ntheta, f64 time, u8 grid map id,
/// values row-major (R-major) f64 LE.
struct PolarSnapshot {
    std::uint32_t n_r = 0, n_theta = 0;
    double time = 0.0;
    std::uint8_t grid_map = 0;  // 0 = algebraic map z = s/(1-s)
    std::vector<double> values;
};

inline void write_polar_snapshot(const std::filesystem::path& path, const PolarSnapshot& s) {
    std::ofstream os(path, std::ios::binary);
    require(bool(os), "write_polar_snapshot: cannot open " + path.string());
    os.write("POL1", 4);
    detail_io::put(os, s.n_r);
    detail_io::put(os, s.n_theta);
    detail_io::put(os, s.time);
    detail_io::put(os, s.grid_map);
    os.write(reinterpret_cast<const char*>(s.values.data()),
             std::streamsize(s.values.size() * sizeof(double)));
}

inline PolarSnapshot read_polar_snapshot(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    require(bool(is), "read_polar_snapshot: cannot open " + path.string());
    char magic[4];
    is.read(magic, 4);
    require(std::memcmp(magic, "POL1", 4) == 0, "read_polar_snapshot: bad magic");
    PolarSnapshot s;
    s.n_r = detail_io::get<std::uint32_t>(is);
    s.n_theta = detail_io::get<std::uint32_t>(is);
    s.time = detail_io::get<double>(is);
    s.grid_map = detail_io::get<std::uint8_t>(is);
    s.values.resize(std::size_t(s.n_r) * s.n_theta);
    is.read(reinterpret_cast<char*>(s.values.data()),
            std::streamsize(s.values.size() * sizeof(double)));
    require(bool(is), "read_polar_snapshot: truncated file");
    return s;
}

/// 8-bit binary portable graymap with the data range in a comment line.
inline void write_pgm(const std::filesystem::path& path, const Array2D& f) {
    double lo = f.data()[0], hi = f.data()[0];
    for (std::size_t i = 0; i < f.size(); ++i) {
        lo = std::min(lo, f.data()[i]);
        hi = std::max(hi, f.data()[i]);
    }
    std::ofstream os(path, std::ios::binary);
    require(bool(os), "write_pgm: cannot open " + path.string());
    char header[160];
    std::snprintf(header, sizeof(header), "P5\n# min=%.17g max=%.17g\n%zu %zu\n255\n", lo, hi,
                  f.cols(), f.rows());
    os << header;
    const double scale = (hi > lo) ? 255.0 / (hi - lo) : 0.0;
    std::vector<unsigned char> row(f.cols());
    for (std::size_t j = 0; j < f.rows(); ++j) {
        for (std::size_t i = 0; i < f.cols(); ++i)
            row[i] = static_cast<unsigned char>(std::lround((f(j, i) - lo) * scale));
        os.write(reinterpret_cast<const char*>(row.data()), std::streamsize(row.size()));
    }
}

/// CSV writer with a stable numeric format (%.17g) so byte-identical runs
/// produce byte-identical files.
class CsvWriter {
  public:
    CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header)
        : os_(path) {
        require(bool(os_), "CsvWriter: cannot open " + path.string());
        for (std::size_t i = 0; i < header.size(); ++i)
            os_ << (i ? "," : "") << header[i];
        os_ << "\n";
    }

    void row(const std::vector<double>& vals) {
        char buf[32];
        for (std::size_t i = 0; i < vals.size(); ++i) {
            std::snprintf(buf, sizeof(buf), "%.17g", vals[i]);
            os_ << (i ? "," : "") << buf;
        }
        os_ << "\n";
    }

  private:
    std::ofstream os_;
};

inline std::string format_g17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace vortlab
