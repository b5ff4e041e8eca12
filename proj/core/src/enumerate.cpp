#include "sumkit/enumerate.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace sumkit {

std::string_view to_string(EnumKind kind) {
  return kind == EnumKind::PositiveGcd1 ? "POSITIVE_GCD1" : "ZERO_GCD1";
}

std::optional<EnumKind> parse_enum_kind(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::toupper(c); });
  if (t == "POSITIVE_GCD1" || t == "POSITIVE") return EnumKind::PositiveGcd1;
  if (t == "ZERO_GCD1" || t == "ZERO") return EnumKind::ZeroGcd1;
  return std::nullopt;
}

SetEnumerator::SetEnumerator(int k, Int max_elem, EnumKind kind) : k_(k), max_(max_elem), kind_(kind) {
  if (k < 1) throw Error(Errc::OutOfRange, "k must be >= 1");
  const int free = kind == EnumKind::ZeroGcd1 ? k - 1 : k;
  if (free > max_elem) done_ = true;
  comb_.resize(static_cast<std::size_t>(free));
}

void SetEnumerator::resume_after(const IntSet& last) {
  if (static_cast<int>(last.size()) != k_) throw Error(Errc::InvalidArgument, "cursor set has the wrong cardinality");
  auto elems = last.elements();
  if (kind_ == EnumKind::ZeroGcd1) {
    if (elems.front() != 0) throw Error(Errc::InvalidArgument, "cursor set must contain 0");
    elems = elems.subspan(1);
  } else if (elems.front() <= 0) {
    throw Error(Errc::InvalidArgument, "cursor set must be positive");
  }
  if (!elems.empty() && elems.back() > max_) throw Error(Errc::InvalidArgument, "cursor set exceeds max_elem");
  std::copy(elems.begin(), elems.end(), comb_.begin());
  started_ = true;
}

bool SetEnumerator::advance() {
  if (done_) return false;
  const auto n = static_cast<Int>(comb_.size());
  if (!started_) {
    started_ = true;
    std::iota(comb_.begin(), comb_.end(), Int{1});
    return true;
  }
  for (Int i = n - 1; i >= 0; --i) {
    if (comb_[i] < max_ - (n - 1 - i)) {
      ++comb_[i];
      for (Int j = i + 1; j < n; ++j) comb_[j] = comb_[j - 1] + 1;
      return true;
    }
  }
  done_ = true;
  return false;
}

bool SetEnumerator::next_into(std::vector<Int>& out) {
  while (advance()) {
    Int g = 0;
    for (Int c : comb_) g = std::gcd(g, c);
    if (g != 1) continue;
    out.clear();
    if (kind_ == EnumKind::ZeroGcd1) out.push_back(0);
    out.insert(out.end(), comb_.begin(), comb_.end());
    return true;
  }
  return false;
}

std::optional<IntSet> SetEnumerator::next() {
  std::vector<Int> buf;
  buf.reserve(static_cast<std::size_t>(k_));
  if (!next_into(buf)) return std::nullopt;
  return IntSet(std::move(buf));
}

std::vector<IntSet> enumerate_sets(int k, Int max_elem, EnumKind kind) {
  std::vector<IntSet> out;
  SetEnumerator e(k, max_elem, kind);
  while (auto s = e.next()) out.push_back(std::move(*s));
  return out;
}

SequenceEnumerator::SequenceEnumerator(int k, Int max_elem, Int mult_max, EnumKind kind)
    : sets_(k, max_elem, kind), mult_max_(mult_max) {
  if (mult_max < 1) throw Error(Errc::OutOfRange, "mult_max must be >= 1");
}

bool SequenceEnumerator::next_values() {
  if (!sets_.next_into(values_)) return false;
  mult_.assign(values_.size(), 1);
  have_values_ = true;
  return true;
}

void SequenceEnumerator::resume_after(const IntSequence& last) {
  IntSet vs = last.value_set();
  sets_.resume_after(vs);
  values_.assign(vs.elements().begin(), vs.elements().end());
  mult_.assign(last.multiplicities().begin(), last.multiplicities().end());
  for (Int m : mult_)
    if (m > mult_max_) throw Error(Errc::InvalidArgument, "cursor multiplicity exceeds mult_max");
  have_values_ = true;
}

std::optional<IntSequence> SequenceEnumerator::next() {
  if (!have_values_) {
    if (!next_values()) return std::nullopt;
    return IntSequence(values_, mult_);
  }
  // odometer over [1, mult_max]^k, last coordinate fastest
  for (auto i = static_cast<std::ptrdiff_t>(mult_.size()) - 1; i >= 0; --i) {
    if (mult_[i] < mult_max_) {
      ++mult_[i];
      std::fill(mult_.begin() + i + 1, mult_.end(), 1);
      return IntSequence(values_, mult_);
    }
  }
  if (!next_values()) return std::nullopt;
  return IntSequence(values_, mult_);
}

std::vector<IntSequence> enumerate_sequences(int k, Int max_elem, Int mult_max, EnumKind kind) {
  std::vector<IntSequence> out;
  SequenceEnumerator e(k, max_elem, mult_max, kind);
  while (auto s = e.next()) out.push_back(std::move(*s));
  return out;
}

}  // namespace sumkit
