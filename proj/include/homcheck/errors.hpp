#pragma once

#include <stdexcept>
#include <string>

namespace homcheck {

/// Base class for everything this library throws.
struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operand shapes do not line up (matrix product, bilinear evaluation, ...).
struct dimension_error : error {
  using error::error;
};

/// A matrix that must be invertible is not (non-regular twist, singular
/// beta, degenerate two-cocycle, ...).
struct singular_error : error {
  using error::error;
};

/// A checker was handed an algebra whose kind tag does not match. Pass
/// force = true to run the checker anyway.
struct kind_error : error {
  using error::error;
};

/// The twist map is not an algebra morphism for some product.
struct twist_error : error {
  using error::error;
};

/// A graded structure violates degree homogeneity.
struct grading_error : error {
  using error::error;
};

/// An input failed the checker a construction requires; the message carries
/// the first violation of the inner report.
struct precondition_error : error {
  using error::error;
};

/// Malformed documents, bad rationals, unknown kinds, I/O problems.
struct validation_error : error {
  using error::error;
};

}  // namespace homcheck
