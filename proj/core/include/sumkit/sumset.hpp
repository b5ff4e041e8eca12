#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sumkit/int_set.hpp"

namespace sumkit {

/// A computed set of achievable sums, strictly increasing.
class SumSet {
 public:
  SumSet() = default;
  SumSet(std::vector<Int> sums, std::string provenance);

  [[nodiscard]] std::span<const Int> sums() const noexcept { return sums_; }
  [[nodiscard]] std::size_t size() const noexcept { return sums_.size(); }
  [[nodiscard]] bool empty() const noexcept { return sums_.empty(); }
  [[nodiscard]] Int min() const { return sums_.front(); }
  [[nodiscard]] Int max() const { return sums_.back(); }
  [[nodiscard]] bool contains(Int x) const;
  [[nodiscard]] const std::string& provenance() const noexcept { return provenance_; }

  /// Space-separated sums, e.g. "0 1 2 3 4 6".
  [[nodiscard]] std::string to_string() const;

  /// Equality of the sums only; provenance is a label.
  bool operator==(const SumSet& other) const { return sums_ == other.sums_; }

 private:
  std::vector<Int> sums_;
  std::string provenance_;
};

/// One bit-vector of reachable sums per cardinality c in [0, cap].
///
/// Bit i of layer c is set iff floor + i is the sum of some c-element
/// subset (sub-multiset, for sequences) of the input. Elements are added one
/// copy at a time, so a value of multiplicity r contributes r single-copy
/// steps.
class CardinalityTable {
 public:
  /// `copies` lists every element copy; cap is clamped to copies.size().
  CardinalityTable(std::span<const Int> copies, Int cap);

  static CardinalityTable for_set(const IntSet& set, Int cap);
  static CardinalityTable for_sequence(const IntSequence& seq, Int cap);

  [[nodiscard]] Int cap() const noexcept { return cap_; }
  /// Number of distinct sums reachable with a cardinality in [lo, hi].
  [[nodiscard]] std::size_t count(Int lo, Int hi) const;
  [[nodiscard]] std::vector<Int> sums(Int lo, Int hi) const;

 private:
  using Word = std::uint64_t;
  [[nodiscard]] const Word* layer(Int c) const { return bits_.data() + static_cast<std::size_t>(c) * words_; }
  Word* layer(Int c) { return bits_.data() + static_cast<std::size_t>(c) * words_; }
  void fold_range(Int lo, Int hi, std::vector<Word>& acc) const;

  Int cap_ = 0;
  Int floor_ = 0;
  std::size_t width_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> bits_;
};

SumSet h_fold_sumset(const IntSet& set, Int h);
SumSet restricted_h_fold_sumset(const IntSet& set, Int h);
SumSet subset_sums(const IntSet& set);
SumSet subset_sums_min_card(const IntSet& set, Int alpha);
SumSet subset_sums_bounded_card(const IntSet& set, Int alpha);
SumSet subsequence_sums(const IntSequence& seq);
SumSet subsequence_sums_min_card(const IntSequence& seq, Int alpha);
SumSet subsequence_sums_bounded_card(const IntSequence& seq, Int alpha);

/// |hA| without materializing the sums.
std::size_t h_fold_cardinality(std::span<const Int> elements, Int h);

Int total_sum(const IntSet& set);
Int total_sum(const IntSequence& seq);

}  // namespace sumkit
