#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sumkit {

enum class Errc {
  DegenerateGcd,      // gcd of {0}
  DegenerateSet,      // |A| = 1 where differences are needed
  InvalidDilation,    // dilation by zero
  OutOfRange,         // parameter outside its admissible range
  EmptyCollection,    // the defining family of subsets/tuples is empty
  OracleSize,         // brute-force oracle input too large
  MissingInput,       // auxiliary cardinality not supplied
  Precondition,       // theorem evaluated on an inapplicable instance
  Parse,              // malformed literal
  InvalidArgument,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sumkit
