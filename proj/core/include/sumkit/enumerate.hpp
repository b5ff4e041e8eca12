#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sumkit/int_set.hpp"

namespace sumkit {

enum class EnumKind {
  PositiveGcd1,  // 0 < a_1 < ... < a_k, gcd 1
  ZeroGcd1,      // 0 = a_0 < ... < a_{k-1}, gcd 1
};

std::string_view to_string(EnumKind kind);
std::optional<EnumKind> parse_enum_kind(std::string_view text);

/// Lexicographic stream of gcd-1 sets of cardinality k with largest element
/// <= max_elem. Single consumer; restart with a cursor to resume after a
/// given set.
class SetEnumerator {
 public:
  SetEnumerator(int k, Int max_elem, EnumKind kind);

  /// Positions the stream just after `last` (which must have cardinality k).
  void resume_after(const IntSet& last);

  std::optional<IntSet> next();

  /// Fills `out` with the next set and returns true, without allocating
  /// when `out` already has capacity k.
  bool next_into(std::vector<Int>& out);

  [[nodiscard]] int k() const noexcept { return k_; }
  [[nodiscard]] Int max_elem() const noexcept { return max_; }
  [[nodiscard]] EnumKind kind() const noexcept { return kind_; }

 private:
  bool advance();  // moves to the next combination regardless of gcd

  int k_;
  Int max_;
  EnumKind kind_;
  // Free part of the set: all elements (positive kind) or all but the
  // leading zero (zero kind), as a combination of [1, max].
  std::vector<Int> comb_;
  bool started_ = false;
  bool done_ = false;
};

/// All sets yielded by SetEnumerator, materialized.
std::vector<IntSet> enumerate_sets(int k, Int max_elem, EnumKind kind);

/// Sequences over every enumerated value set, multiplicity vectors in
/// [1, mult_max]^k in lexicographic order.
class SequenceEnumerator {
 public:
  SequenceEnumerator(int k, Int max_elem, Int mult_max, EnumKind kind);

  void resume_after(const IntSequence& last);
  std::optional<IntSequence> next();

 private:
  bool next_values();

  SetEnumerator sets_;
  Int mult_max_;
  std::vector<Int> values_;
  std::vector<Int> mult_;
  bool have_values_ = false;
};

std::vector<IntSequence> enumerate_sequences(int k, Int max_elem, Int mult_max, EnumKind kind);

}  // namespace sumkit
