#pragma once

#include <cstddef>
#include <string_view>

#include "sumkit/int_set.hpp"
#include "sumkit/sumset.hpp"

namespace sumkit {

/// Which sum object the oracle computes.
enum class SumMode {
  HFold,             // hA, param h
  RestrictedHFold,   // h^A, param h
  SubsetSums,        // S(A)
  MinCard,           // S_alpha, param alpha
  BoundedCard,       // S_1^alpha, param alpha
};

std::string_view to_string(SumMode mode);

inline constexpr std::size_t kOracleMaxSize = 20;

/// Direct enumeration from the set-builder definitions. Exponential; inputs
/// beyond kOracleMaxSize elements (terms, for sequences) are rejected.
SumSet brute_force_oracle(const IntSet& set, SumMode mode, Int param = 0);
/// Sequence modes: SubsetSums, MinCard, BoundedCard.
SumSet brute_force_oracle(const IntSequence& seq, SumMode mode, Int param = 0);

}  // namespace sumkit
