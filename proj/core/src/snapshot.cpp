#include "slheat/snapshot.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace slheat {
namespace {

constexpr std::array<char, 6> kMagic{'S', 'L', 'H', 'F', '1', '\0'};

static_assert(std::endian::native == std::endian::little,
              "snapshot I/O assumes a little-endian host");

template <class T>
void put(std::array<unsigned char, kSnapshotHeaderBytes>& buf, std::size_t at, T v) {
  std::memcpy(buf.data() + at, &v, sizeof(T));
}

template <class T>
T get(const std::array<unsigned char, kSnapshotHeaderBytes>& buf, std::size_t at) {
  T v;
  std::memcpy(&v, buf.data() + at, sizeof(T));
  return v;
}

}  // namespace

void write_snapshot(std::ostream& out, const RealField& f) {
  std::array<unsigned char, kSnapshotHeaderBytes> header{};
  std::memcpy(header.data(), kMagic.data(), kMagic.size());
  put<std::uint32_t>(header, 8, static_cast<std::uint32_t>(f.grid().points()));
  put<double>(header, 16, f.grid().box_length());
  out.write(reinterpret_cast<const char*>(header.data()), header.size());
  const auto values = f.values();
  out.write(reinterpret_cast<const char*>(values.data()),
            static_cast<std::streamsize>(values.size_bytes()));
  if (!out) throw std::runtime_error("snapshot write failed");
}

RealField read_snapshot(std::istream& in) {
  std::array<unsigned char, kSnapshotHeaderBytes> header{};
  in.read(reinterpret_cast<char*>(header.data()), header.size());
  if (!in) throw std::runtime_error("snapshot truncated in header");
  if (std::memcmp(header.data(), kMagic.data(), kMagic.size()) != 0)
    throw std::runtime_error("snapshot has bad magic");
  const auto n = get<std::uint32_t>(header, 8);
  const auto length = get<double>(header, 16);
  if (n > 4096) throw std::runtime_error("snapshot grid size implausible");
  GridSpec grid(length, static_cast<int>(n));
  std::vector<double> values(grid.size());
  in.read(reinterpret_cast<char*>(values.data()),
          static_cast<std::streamsize>(values.size() * sizeof(double)));
  if (!in) throw std::runtime_error("snapshot truncated in payload");
  return RealField(grid, std::move(values));
}

void write_snapshot(const std::filesystem::path& path, const RealField& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_snapshot(out, f);
}

RealField read_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_snapshot(in);
}

}  // namespace slheat
