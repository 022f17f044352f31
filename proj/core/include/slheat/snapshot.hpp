#pragma once

#include <filesystem>
#include <iosfwd>

#include "slheat/field.hpp"

namespace slheat {

// Binary field snapshot, all little-endian:
//   bytes 0..5   magic "SLHF1\0"
//   bytes 6..7   zero padding
//   bytes 8..11  u32 N
//   bytes 12..15 zero padding
//   bytes 16..23 f64 L
// followed by N^3 f64 values in row-major (i, j, k) order.
inline constexpr std::size_t kSnapshotHeaderBytes = 24;

void write_snapshot(std::ostream& out, const RealField& f);
RealField read_snapshot(std::istream& in);

/// Throws std::runtime_error on I/O failure.
void write_snapshot(const std::filesystem::path& path, const RealField& f);
RealField read_snapshot(const std::filesystem::path& path);

}  // namespace slheat
