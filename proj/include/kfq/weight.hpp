// Weights of the character lattice, stored in fundamental-weight coordinates.
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kfq/errors.hpp"

namespace kfq {

using coord_t = std::int64_t;

struct Weight {
  std::vector<coord_t> c;  // c[i] = pairing with the i-th simple coroot

  Weight() = default;
  explicit Weight(std::size_t rank) : c(rank, 0) {}
  Weight(std::initializer_list<coord_t> init) : c(init) {}

  std::size_t rank() const { return c.size(); }
  coord_t operator[](std::size_t i) const { return c[i]; }
  coord_t& operator[](std::size_t i) { return c[i]; }

  bool is_zero() const {
    for (coord_t x : c)
      if (x != 0) return false;
    return true;
  }

  Weight& operator+=(const Weight& o) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
  }
  Weight& operator*=(coord_t k) {
    for (auto& x : c) x *= k;
    return *this;
  }

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(coord_t k, Weight a) { return a *= k; }
  friend Weight operator-(Weight a) {
    for (auto& x : a.c) x = -x;
    return a;
  }

  friend bool operator==(const Weight& a, const Weight& b) { return a.c == b.c; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  // Lexicographic; used as the std::map key order throughout.
  friend bool operator<(const Weight& a, const Weight& b) { return a.c < b.c; }
};

inline std::string to_string(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (i) s += ',';
    s += std::to_string(w.c[i]);
  }
  return s;
}

// Parses "a,b,..."; validates against the expected rank.
Weight parse_weight(const std::string& text, std::size_t rank);

struct WeightHash {
  std::size_t operator()(const Weight& w) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (coord_t x : w.c)
      h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
    return h;
  }
};

}  // namespace kfq
