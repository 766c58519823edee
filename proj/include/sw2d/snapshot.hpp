#pragma once

#include "sw2d/field2d.hpp"

#include <string>

namespace sw2d {

/// @brief Binary field snapshot I/O.
///
/// Format (little-endian), 32-byte header followed by the payload:
///   bytes  0..3   magic "SW2D"
///   bytes  4..7   format version (u32, currently 1)
///   bytes  8..11  nx (u32)
///   bytes 12..15  ny (u32)
///   bytes 16..23  lx (f64)
///   bytes 24..31  ly (f64)
///   payload: nx*ny f64 values, row-major with x fastest.
void write_snapshot(const std::string& path, const Field2D& f);

/// @brief Read a snapshot written by write_snapshot; throws ConfigError on
///        malformed files.
Field2D read_snapshot(const std::string& path);

} // namespace sw2d
