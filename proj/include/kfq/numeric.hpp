// Exact arithmetic primitives shared across the library.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace kfq {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

// Inverse of a square rational matrix by Gauss-Jordan elimination.
// Throws std::invalid_argument on a singular input.
RatMat rat_inverse(const RatMat& m);

// Solves m*x = b exactly. Returns an empty vector when the system is
// inconsistent. m may have more rows than columns; the solution, when it
// exists, is unique iff the columns are independent (always the case for
// the simple systems this library feeds in).
RatVec rat_solve(const RatMat& m, const RatVec& b);

}  // namespace kfq
