#pragma once

#include <stdexcept>
#include <string>

namespace kfq {

// Caller passed something outside the contract (unknown type, wrong rank,
// non-dominant weight where dominance is required, ...). CLI exit code 1.
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap was exceeded (Weyl group order). CLI exit code 2.
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// A state the mathematics rules out. Reaching one of these is a bug.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace kfq
