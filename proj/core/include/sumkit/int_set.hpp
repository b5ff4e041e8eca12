#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sumkit/error.hpp"

namespace sumkit {

using Int = std::int64_t;

/// A finite set of distinct integers kept in increasing order.
class IntSet {
 public:
  IntSet() = default;
  /// Sorts the input; throws Errc::InvalidArgument on a repeated element.
  explicit IntSet(std::vector<Int> elements);
  IntSet(std::initializer_list<Int> elements) : IntSet(std::vector<Int>(elements)) {}

  /// Parses "0,1,3" (whitespace tolerated).
  static IntSet parse(std::string_view literal);

  [[nodiscard]] std::span<const Int> elements() const noexcept { return elems_; }
  [[nodiscard]] std::size_t size() const noexcept { return elems_.size(); }
  [[nodiscard]] bool empty() const noexcept { return elems_.empty(); }
  [[nodiscard]] Int min() const { return elems_.front(); }
  [[nodiscard]] Int max() const { return elems_.back(); }
  [[nodiscard]] Int operator[](std::size_t i) const { return elems_[i]; }
  [[nodiscard]] bool contains(Int x) const;
  [[nodiscard]] bool all_positive() const { return !empty() && min() > 0; }

  /// Canonical literal, e.g. "0,1,3".
  [[nodiscard]] std::string to_string() const;

  auto operator<=>(const IntSet&) const = default;

 private:
  std::vector<Int> elems_;
};

/// Distinct sorted values a_1 < ... < a_k, value a_i repeated r_i >= 1 times.
class IntSequence {
 public:
  IntSequence() = default;
  /// values must be strictly increasing after sorting; multiplicities are
  /// permuted alongside and must all be >= 1.
  IntSequence(std::vector<Int> values, std::vector<Int> multiplicities);

  static IntSequence parse(std::string_view values, std::string_view multiplicities);
  /// The multiplicity-1 sequence over a set.
  static IntSequence from_set(const IntSet& set);

  [[nodiscard]] std::span<const Int> values() const noexcept { return values_; }
  [[nodiscard]] std::span<const Int> multiplicities() const noexcept { return mult_; }
  [[nodiscard]] std::size_t distinct() const noexcept { return values_.size(); }
  /// Number of terms counted with multiplicity.
  [[nodiscard]] Int size() const noexcept { return size_; }
  [[nodiscard]] Int min_multiplicity() const;
  [[nodiscard]] IntSet value_set() const { return IntSet(values_); }

  /// Canonical literal "1,2,4|2,1,3" (values | multiplicities).
  [[nodiscard]] std::string to_string() const;

  auto operator<=>(const IntSequence&) const = default;

 private:
  std::vector<Int> values_;
  std::vector<Int> mult_;
  Int size_ = 0;
};

/// Parses a comma-separated integer list.
std::vector<Int> parse_int_list(std::string_view literal);

/// d(A): gcd of the absolute values of the elements.
Int gcd_of(const IntSet& set);
Int gcd_of(std::span<const Int> values);

/// A^(N): shift the minimum to 0 and divide by the gcd of the differences.
IntSet normal_form(const IntSet& set);

IntSet dilate(const IntSet& set, Int factor);
IntSet translate(const IntSet& set, Int shift);

/// Unique m in [1,k] with r_1 + ... + r_{m-1} <= alpha < r_1 + ... + r_m.
int m_index(std::span<const Int> multiplicities, Int alpha);

/// Length of the shortest arithmetic progression containing the set.
Int ap_cover_length(const IntSet& set);

[[nodiscard]] bool is_arithmetic_progression(const IntSet& set);
/// A = d * [1,k] for some d >= 1.
[[nodiscard]] bool is_dilated_initial_interval(std::span<const Int> values);

}  // namespace sumkit
