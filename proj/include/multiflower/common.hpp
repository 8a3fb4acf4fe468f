#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace multiflower {

// A set of vertex ids (1-based), kept sorted and duplicate-free.
using VertexSet = std::vector<int>;

// Bad user input: malformed files, violated preconditions, out-of-range ids.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured guard tripped: enumeration caps, search budgets, size limits.
struct limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical trouble: LP did not converge, internal consistency check failed.
struct solver_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline VertexSet canonical_set(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool set_contains(const VertexSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::string set_to_string(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  out += "}";
  return out;
}

// Deterministic random source. The raw engine is mt19937_64; all derived
// draws are implemented here rather than with std distributions so the
// stream does not depend on the standard library in use.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do {
      r = eng_();
    } while (r >= limit);
    return lo + static_cast<int>(r % span);
  }

  // Uniform double in [0, 1).
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // Uniform double in [lo, hi).
  double uniform_real(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // k distinct values from {1, ..., n}, sorted.
  VertexSet sample_vertices(int n, int k) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i + 1;
    for (int i = 0; i < k; ++i) std::swap(pool[i], pool[uniform_int(i, n - 1)]);
    pool.resize(k);
    return canonical_set(std::move(pool));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace multiflower
