#include "sw2d/snapshot.hpp"

#include "sw2d/errors.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

static_assert(std::endian::native == std::endian::little,
              "snapshot format assumes a little-endian host");

namespace sw2d {

namespace {
constexpr char kMagic[4] = {'S', 'W', '2', 'D'};
constexpr std::uint32_t kVersion = 1;
} // namespace

void write_snapshot(const std::string& path, const Field2D& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open for writing: " + path);
    const Grid2D& g = f.grid();
    const std::uint32_t nx = static_cast<std::uint32_t>(g.nx);
    const std::uint32_t ny = static_cast<std::uint32_t>(g.ny);
    out.write(kMagic, 4);
    out.write(reinterpret_cast<const char*>(&kVersion), 4);
    out.write(reinterpret_cast<const char*>(&nx), 4);
    out.write(reinterpret_cast<const char*>(&ny), 4);
    out.write(reinterpret_cast<const char*>(&g.lx), 8);
    out.write(reinterpret_cast<const char*>(&g.ly), 8);
    out.write(reinterpret_cast<const char*>(f.data()),
              static_cast<std::streamsize>(f.size() * sizeof(double)));
    if (!out) throw ConfigError("write failed: " + path);
}

Field2D read_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open snapshot: " + path);
    char magic[4];
    std::uint32_t version = 0, nx = 0, ny = 0;
    double lx = 0.0, ly = 0.0;
    in.read(magic, 4);
    in.read(reinterpret_cast<char*>(&version), 4);
    in.read(reinterpret_cast<char*>(&nx), 4);
    in.read(reinterpret_cast<char*>(&ny), 4);
    in.read(reinterpret_cast<char*>(&lx), 8);
    in.read(reinterpret_cast<char*>(&ly), 8);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw ConfigError("not a field snapshot: " + path);
    if (version != kVersion)
        throw ConfigError("unsupported snapshot version in " + path);
    Grid2D grid;
    try {
        grid = Grid2D(nx, ny, lx, ly);
    } catch (const ConfigError&) {
        throw ConfigError("snapshot header carries an invalid grid: " + path);
    }
    Field2D f(grid);
    in.read(reinterpret_cast<char*>(f.data()),
            static_cast<std::streamsize>(f.size() * sizeof(double)));
    if (!in) throw ConfigError("snapshot payload truncated: " + path);
    return f;
}

} // namespace sw2d
