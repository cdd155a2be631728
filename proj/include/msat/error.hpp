#pragma once

#include <stdexcept>
#include <string>

namespace msat {

// Base for everything thrown on bad input or failed computation.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Structurally invalid data: malformed JSON, wrong ranks, non-dominant
// coweight where a dominant one is required, window too small, ...
struct invalid_input : error {
  explicit invalid_input(const std::string& what) : error(what) {}
};

// A cross-check that is supposed to hold failed (classify consistency,
// oracle/algebra comparison, ...). CLI maps this to a distinct exit code.
struct verification_error : error {
  explicit verification_error(const std::string& what) : error(what) {}
};

}  // namespace msat
