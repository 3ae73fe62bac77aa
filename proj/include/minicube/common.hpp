#pragma once
// Shared error types and a small dynamic bitset used across the library.
//
// Error taxonomy: FormatError covers malformed input (JSON schema, pocset
// text, word syntax) and maps to CLI exit 2; SizeError covers configured
// cap overruns; StructuralError covers broken mathematical structure that
// should never arise from validated inputs (surfaced, never repaired).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace minicube {

struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& m) : std::runtime_error(m) {}
};

struct SizeError : std::runtime_error {
  explicit SizeError(const std::string& m) : std::runtime_error(m) {}
};

struct BackendMismatch : std::runtime_error {
  explicit BackendMismatch(const std::string& m) : std::runtime_error(m) {}
};

struct StructuralError : std::runtime_error {
  explicit StructuralError(const std::string& m) : std::runtime_error(m) {}
};

// Fixed-width-word bitset.  Bit i of word i/64 at position i%64.
struct Bits {
  std::vector<std::uint64_t> w;
  int n = 0;

  Bits() = default;
  explicit Bits(int bits) : w((bits + 63) / 64, 0), n(bits) {}

  bool get(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  void flip(int i) { w[i >> 6] ^= std::uint64_t(1) << (i & 63); }

  void or_with(const Bits& o) {
    for (size_t k = 0; k < w.size(); ++k) w[k] |= o.w[k];
  }
  bool intersects(const Bits& o) const {
    for (size_t k = 0; k < w.size(); ++k)
      if (w[k] & o.w[k]) return true;
    return false;
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += __builtin_popcountll(x);
    return c;
  }
  int hamming(const Bits& o) const {
    int c = 0;
    for (size_t k = 0; k < w.size(); ++k) c += __builtin_popcountll(w[k] ^ o.w[k]);
    return c;
  }
  bool operator==(const Bits& o) const { return n == o.n && w == o.w; }
  bool operator!=(const Bits& o) const { return !(*this == o); }

  // Lexicographic on bit index 0,1,2,... with false < true.
  bool lex_less(const Bits& o) const {
    for (size_t k = 0; k < w.size(); ++k) {
      std::uint64_t d = w[k] ^ o.w[k];
      if (d) {
        std::uint64_t low = d & (~d + 1);
        return (w[k] & low) == 0;
      }
    }
    return false;
  }
  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : w) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace minicube
