#pragma once

// Deterministic randomness. Field values are produced by a counter-based
// hash keyed by (seed, cell coordinates), so regeneration is bit-identical
// on any platform and independent of traversal order.

#include <cstdint>
#include <vector>

#include "toastkit/geom.hpp"

namespace toastkit {

std::uint64_t mix64(std::uint64_t x);

// Hash of a lattice cell under a seed; `stream` separates independent uses
// of the same cell (bit layers, shift draws, ...).
std::uint64_t cell_hash(std::uint64_t seed, std::uint64_t stream,
                        const Point& p);

struct RandomField {
  enum class Kind { Bits, Reals };

  Box box;
  Kind kind = Kind::Bits;
  std::uint64_t seed = 0;
  std::vector<std::uint8_t> bits;        // Kind::Bits, one 0/1 per cell
  std::vector<std::uint64_t> numer;      // Kind::Reals, value = numer * 2^-53

  int bit_at(const Point& p) const { return bits[(size_t)box.index(p)]; }
  double real_at(const Point& p) const {
    return static_cast<double>(numer[(size_t)box.index(p)]) *
           (1.0 / 9007199254740992.0);  // 2^-53
  }
};

std::string to_string(RandomField::Kind k);
RandomField::Kind field_kind_from_string(const std::string& s);

// The raw per-cell draws, usable without materializing a field.
int field_bit(std::uint64_t seed, const Point& p);
std::uint64_t field_real_numer(std::uint64_t seed, const Point& p);

RandomField gen_field(const Box& box, RandomField::Kind kind,
                      std::uint64_t seed);

// Sequential deterministic stream for sampling that is not cell-keyed
// (random shifts, test-corpus generation).
struct StreamRng {
  std::uint64_t seed = 0;
  std::uint64_t seq = 0;

  explicit StreamRng(std::uint64_t s) : seed(s) {}
  std::uint64_t next();
  // Uniform in [0, n), bias-free by rejection.
  std::uint64_t below(std::uint64_t n);
  // Uniform in [lo, hi] inclusive.
  i64 range(i64 lo, i64 hi);
};

}  // namespace toastkit
