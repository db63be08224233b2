// Polynomials in q with exact integer coefficients.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kfq/numeric.hpp"

namespace kfq {

// Dense ascending coefficient list, trailing zeros trimmed. The zero
// polynomial is the empty list (degree -1).
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(Int constant) {
    if (constant != 0) c_.push_back(std::move(constant));
  }

  static QPoly monomial(int k, Int coeff = Int(1));
  static QPoly one() { return QPoly(Int(1)); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Int(0);
  }
  bool nonnegative() const {
    for (const Int& x : c_)
      if (x < 0) return false;
    return true;
  }

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly& operator*=(const Int& k);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  friend QPoly operator*(QPoly a, const Int& k) { return a *= k; }
  friend QPoly operator-(QPoly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

  // Multiplication by q^k.
  QPoly shifted(int k) const;
  QPoly derivative() const;
  // Drops all terms of degree > d.
  QPoly truncated(int d) const;
  Int eval(const Int& q) const;

  // Exact division; nullopt when the remainder is nonzero.
  std::optional<QPoly> divided_by(const QPoly& divisor) const;

  std::string to_string() const;  // e.g. "q^2 - q + 1"

 private:
  void trim();
  std::vector<Int> c_;
};

}  // namespace kfq
