#pragma once

#include <stdexcept>
#include <string>

namespace gcat {

/// Base error for the engine. Subclasses map to distinct CLI exit codes.
struct engine_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input file or string.
struct parse_error : engine_error {
  using engine_error::engine_error;
};

/// A category/scene axiom failed validation; message names the axiom and
/// the offending indices.
struct validation_error : engine_error {
  using engine_error::engine_error;
};

/// A mathematical precondition failed at runtime (division by zero,
/// non-idempotent input, field too small to split, singular S-matrix).
struct math_error : engine_error {
  using engine_error::engine_error;
};

/// An identity the theory guarantees failed to hold: an engine bug.
struct internal_error : engine_error {
  using engine_error::engine_error;
};

}  // namespace gcat
