#include "sumkit/sumset.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace sumkit {

namespace {

using Word = std::uint64_t;
constexpr std::size_t kWordBits = 64;

// dst |= src << shift  (bit i of src lands on bit i + shift of dst)
void or_shift_up(Word* dst, const Word* src, std::size_t words, std::size_t shift) {
  const std::size_t ws = shift / kWordBits;
  const std::size_t bs = shift % kWordBits;
  if (ws >= words) return;
  for (std::size_t i = words; i-- > ws;) {
    Word v = src[i - ws] << bs;
    if (bs && i - ws >= 1) v |= src[i - ws - 1] >> (kWordBits - bs);
    dst[i] |= v;
  }
}

// dst |= src >> shift
void or_shift_down(Word* dst, const Word* src, std::size_t words, std::size_t shift) {
  const std::size_t ws = shift / kWordBits;
  const std::size_t bs = shift % kWordBits;
  if (ws >= words) return;
  for (std::size_t i = 0; i + ws < words; ++i) {
    Word v = src[i + ws] >> bs;
    if (bs && i + ws + 1 < words) v |= src[i + ws + 1] << (kWordBits - bs);
    dst[i] |= v;
  }
}

void or_shift(Word* dst, const Word* src, std::size_t words, Int delta) {
  if (delta >= 0)
    or_shift_up(dst, src, words, static_cast<std::size_t>(delta));
  else
    or_shift_down(dst, src, words, static_cast<std::size_t>(-delta));
}

std::size_t popcount(const std::vector<Word>& v, std::size_t width) {
  std::size_t n = 0;
  for (Word w : v) n += static_cast<std::size_t>(std::popcount(w));
  (void)width;
  return n;
}

std::vector<Int> collect(const std::vector<Word>& v, Int floor) {
  std::vector<Int> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Word w = v[i];
    while (w) {
      const int b = std::countr_zero(w);
      out.push_back(floor + static_cast<Int>(i * kWordBits + static_cast<std::size_t>(b)));
      w &= w - 1;
    }
  }
  return out;
}

std::string label(const char* op, Int param) { return std::string(op) + "(" + std::to_string(param) + ")"; }

void require_nonempty(std::size_t n) {
  if (n == 0) throw Error(Errc::EmptyCollection, "input must be nonempty");
}

}  // namespace

SumSet::SumSet(std::vector<Int> sums, std::string provenance)
    : sums_(std::move(sums)), provenance_(std::move(provenance)) {}

bool SumSet::contains(Int x) const { return std::binary_search(sums_.begin(), sums_.end(), x); }

std::string SumSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < sums_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(sums_[i]);
  }
  return out;
}

CardinalityTable::CardinalityTable(std::span<const Int> copies, Int cap)
    : cap_(std::clamp<Int>(cap, 0, static_cast<Int>(copies.size()))) {
  // Sums of at most cap copies lie between the cap most negative and the cap
  // largest positive contributions.
  std::vector<Int> sorted(copies.begin(), copies.end());
  std::sort(sorted.begin(), sorted.end());
  Int lo = 0, hi = 0;
  for (Int i = 0; i < cap_ && i < static_cast<Int>(sorted.size()) && sorted[i] < 0; ++i) lo += sorted[i];
  for (Int i = 0; i < cap_ && i < static_cast<Int>(sorted.size()) && sorted[sorted.size() - 1 - i] > 0; ++i)
    hi += sorted[sorted.size() - 1 - i];
  floor_ = lo;
  width_ = static_cast<std::size_t>(hi - lo + 1);
  words_ = (width_ + kWordBits - 1) / kWordBits;
  bits_.assign(words_ * static_cast<std::size_t>(cap_ + 1), 0);

  const auto zero = static_cast<std::size_t>(-floor_);
  layer(0)[zero / kWordBits] |= Word{1} << (zero % kWordBits);
  Int filled = 0;  // layers above `filled` are still empty
  for (Int a : copies) {
    const Int top = std::min(cap_, filled + 1);
    for (Int c = top; c >= 1; --c) or_shift(layer(c), layer(c - 1), words_, a);
    filled = top;
  }
  // bits past width_ in the last word can be set by shifts; clear them
  if (const std::size_t extra = words_ * kWordBits - width_; extra)
    for (Int c = 0; c <= cap_; ++c) layer(c)[words_ - 1] &= ~Word{0} >> extra;
}

CardinalityTable CardinalityTable::for_set(const IntSet& set, Int cap) {
  return CardinalityTable(set.elements(), cap);
}

CardinalityTable CardinalityTable::for_sequence(const IntSequence& seq, Int cap) {
  std::vector<Int> copies;
  copies.reserve(static_cast<std::size_t>(seq.size()));
  for (std::size_t i = 0; i < seq.distinct(); ++i)
    copies.insert(copies.end(), static_cast<std::size_t>(seq.multiplicities()[i]), seq.values()[i]);
  return CardinalityTable(copies, cap);
}

void CardinalityTable::fold_range(Int lo, Int hi, std::vector<Word>& acc) const {
  acc.assign(words_, 0);
  lo = std::max<Int>(lo, 0);
  hi = std::min(hi, cap_);
  for (Int c = lo; c <= hi; ++c) {
    const Word* l = layer(c);
    for (std::size_t w = 0; w < words_; ++w) acc[w] |= l[w];
  }
}

std::size_t CardinalityTable::count(Int lo, Int hi) const {
  std::vector<Word> acc;
  fold_range(lo, hi, acc);
  return popcount(acc, width_);
}

std::vector<Int> CardinalityTable::sums(Int lo, Int hi) const {
  std::vector<Word> acc;
  fold_range(lo, hi, acc);
  return collect(acc, floor_);
}

namespace {

// Bits of the h-fold sumset, indexed by sum - h * min(A).
std::vector<Word> h_fold_bits(std::span<const Int> elements, Int h) {
  const Int lo = elements.front();
  const auto span = static_cast<std::size_t>(elements.back() - lo);
  const std::size_t width = span * static_cast<std::size_t>(h) + 1;
  const std::size_t words = (width + kWordBits - 1) / kWordBits;
  std::vector<Word> cur(words, 0), next(words, 0);
  for (Int a : elements) {
    const auto i = static_cast<std::size_t>(a - lo);
    cur[i / kWordBits] |= Word{1} << (i % kWordBits);
  }
  for (Int step = 1; step < h; ++step) {
    std::fill(next.begin(), next.end(), 0);
    for (Int a : elements) or_shift_up(next.data(), cur.data(), words, static_cast<std::size_t>(a - lo));
    cur.swap(next);
  }
  return cur;
}

}  // namespace

std::size_t h_fold_cardinality(std::span<const Int> elements, Int h) {
  require_nonempty(elements.size());
  if (h < 1) throw Error(Errc::OutOfRange, "h must be >= 1");
  std::size_t n = 0;
  for (Word w : h_fold_bits(elements, h)) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

SumSet h_fold_sumset(const IntSet& set, Int h) {
  require_nonempty(set.size());
  if (h < 1) throw Error(Errc::OutOfRange, "h must be >= 1");
  return SumSet(collect(h_fold_bits(set.elements(), h), h * set.min()), label("hA", h));
}

SumSet restricted_h_fold_sumset(const IntSet& set, Int h) {
  require_nonempty(set.size());
  if (h < 1) throw Error(Errc::OutOfRange, "h must be >= 1");
  if (h > static_cast<Int>(set.size())) throw Error(Errc::EmptyCollection, "h exceeds |A|: no h-element subsets");
  return SumSet(CardinalityTable::for_set(set, h).sums(h, h), label("h^A", h));
}

SumSet subset_sums(const IntSet& set) {
  require_nonempty(set.size());
  const auto k = static_cast<Int>(set.size());
  return SumSet(CardinalityTable::for_set(set, k).sums(1, k), "S(A)");
}

SumSet subset_sums_min_card(const IntSet& set, Int alpha) {
  require_nonempty(set.size());
  const auto k = static_cast<Int>(set.size());
  if (alpha < 1) throw Error(Errc::OutOfRange, "alpha must be >= 1");
  if (alpha > k) throw Error(Errc::EmptyCollection, "alpha exceeds |A|: no subsets of that size");
  return SumSet(CardinalityTable::for_set(set, k).sums(alpha, k), label("S_alpha(A)", alpha));
}

SumSet subset_sums_bounded_card(const IntSet& set, Int alpha) {
  require_nonempty(set.size());
  const auto k = static_cast<Int>(set.size());
  if (alpha < 1) throw Error(Errc::OutOfRange, "alpha must be >= 1");
  if (alpha >= k) throw Error(Errc::EmptyCollection, "alpha must be < |A| for S_1^alpha(A)");
  return SumSet(CardinalityTable::for_set(set, k - alpha).sums(1, k - alpha), label("S_1^alpha(A)", alpha));
}

SumSet subsequence_sums(const IntSequence& seq) {
  require_nonempty(seq.distinct());
  return SumSet(CardinalityTable::for_sequence(seq, seq.size()).sums(1, seq.size()), "S(A_r)");
}

SumSet subsequence_sums_min_card(const IntSequence& seq, Int alpha) {
  require_nonempty(seq.distinct());
  if (alpha < 1) throw Error(Errc::OutOfRange, "alpha must be >= 1");
  if (alpha > seq.size()) throw Error(Errc::EmptyCollection, "alpha exceeds the sequence size");
  return SumSet(CardinalityTable::for_sequence(seq, seq.size()).sums(alpha, seq.size()),
                label("S_alpha(A_r)", alpha));
}

SumSet subsequence_sums_bounded_card(const IntSequence& seq, Int alpha) {
  require_nonempty(seq.distinct());
  if (alpha < 1) throw Error(Errc::OutOfRange, "alpha must be >= 1");
  if (alpha >= seq.size()) throw Error(Errc::EmptyCollection, "alpha must be < the sequence size");
  const Int top = seq.size() - alpha;
  return SumSet(CardinalityTable::for_sequence(seq, top).sums(1, top), label("S_1^alpha(A_r)", alpha));
}

Int total_sum(const IntSet& set) {
  require_nonempty(set.size());
  return std::accumulate(set.elements().begin(), set.elements().end(), Int{0});
}

Int total_sum(const IntSequence& seq) {
  require_nonempty(seq.distinct());
  Int s = 0;
  for (std::size_t i = 0; i < seq.distinct(); ++i) s += seq.values()[i] * seq.multiplicities()[i];
  return s;
}

}  // namespace sumkit
