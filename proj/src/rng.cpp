#include "toastkit/rng.hpp"

namespace toastkit {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t cell_hash(std::uint64_t seed, std::uint64_t stream,
                        const Point& p) {
  std::uint64_t h = mix64(seed ^ 0x6c62272e07bb0142ULL);
  h = mix64(h ^ stream);
  h = mix64(h ^ static_cast<std::uint64_t>(p.n()));
  for (int i = 0; i < p.n(); ++i)
    h = mix64(h ^ static_cast<std::uint64_t>(p[i]));
  return h;
}

std::string to_string(RandomField::Kind k) {
  return k == RandomField::Kind::Bits ? "bits" : "reals";
}

RandomField::Kind field_kind_from_string(const std::string& s) {
  if (s == "bits") return RandomField::Kind::Bits;
  if (s == "reals") return RandomField::Kind::Reals;
  throw UsageError("unknown field kind: " + s);
}

int field_bit(std::uint64_t seed, const Point& p) {
  return static_cast<int>(cell_hash(seed, 0, p) & 1u);
}

std::uint64_t field_real_numer(std::uint64_t seed, const Point& p) {
  return cell_hash(seed, 1, p) >> 11;  // 53-bit dyadic numerator
}

RandomField gen_field(const Box& box, RandomField::Kind kind,
                      std::uint64_t seed) {
  RandomField f;
  f.box = box;
  f.kind = kind;
  f.seed = seed;
  const size_t count = static_cast<size_t>(box.cell_count());
  if (kind == RandomField::Kind::Bits) {
    f.bits.resize(count);
    for_each_point(box, [&](const Point& p) {
      f.bits[(size_t)box.index(p)] = static_cast<std::uint8_t>(field_bit(seed, p));
    });
  } else {
    f.numer.resize(count);
    for_each_point(box, [&](const Point& p) {
      f.numer[(size_t)box.index(p)] = field_real_numer(seed, p);
    });
  }
  return f;
}

std::uint64_t StreamRng::next() {
  return mix64(mix64(seed ^ 0x51f2bb209f6a4ac5ULL) + (seq++));
}

std::uint64_t StreamRng::below(std::uint64_t n) {
  if (n == 0) throw UsageError("StreamRng::below(0)");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

i64 StreamRng::range(i64 lo, i64 hi) {
  if (lo > hi) throw UsageError("StreamRng::range lo > hi");
  return lo + static_cast<i64>(
                  below(static_cast<std::uint64_t>(hi - lo) + 1));
}

}  // namespace toastkit
