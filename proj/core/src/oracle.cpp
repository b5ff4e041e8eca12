#include "sumkit/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace sumkit {

std::string_view to_string(SumMode mode) {
  switch (mode) {
    case SumMode::HFold: return "h-fold";
    case SumMode::RestrictedHFold: return "restricted-h-fold";
    case SumMode::SubsetSums: return "subset-sums";
    case SumMode::MinCard: return "min-card";
    case SumMode::BoundedCard: return "bounded-card";
  }
  return "?";
}

namespace {

SumSet finish(std::vector<Int> sums, SumMode mode, Int param) {
  if (sums.empty()) throw Error(Errc::EmptyCollection, "no admissible subcollection");
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return SumSet(std::move(sums), "oracle:" + std::string(to_string(mode)) + "(" + std::to_string(param) + ")");
}

// Cardinality window [lo, hi] admitted by a subset-type mode over n items.
std::pair<Int, Int> window(SumMode mode, Int param, Int n) {
  switch (mode) {
    case SumMode::RestrictedHFold: return {param, param};
    case SumMode::SubsetSums: return {1, n};
    case SumMode::MinCard: return {param, n};
    case SumMode::BoundedCard: return {1, n - param};
    case SumMode::HFold: break;
  }
  throw Error(Errc::InvalidArgument, "mode has no cardinality window");
}

void check_param(SumMode mode, Int param) {
  if (mode != SumMode::SubsetSums && param < 1)
    throw Error(Errc::OutOfRange, std::string(to_string(mode)) + " parameter must be >= 1");
}

}  // namespace

SumSet brute_force_oracle(const IntSet& set, SumMode mode, Int param) {
  if (set.empty()) throw Error(Errc::EmptyCollection, "input must be nonempty");
  if (set.size() > kOracleMaxSize) throw Error(Errc::OracleSize, "oracle input exceeds 20 elements");
  check_param(mode, param);
  const auto n = set.size();
  std::vector<Int> sums;

  if (mode == SumMode::HFold) {
    // every multiset of h elements, as a nondecreasing index tuple
    std::vector<char> seen(static_cast<std::size_t>(param * (set.max() - set.min()) + 1), 0);
    const Int base = param * set.min();
    const auto walk = [&](auto&& self, std::size_t from, Int left, Int acc) -> void {
      if (left == 0) {
        seen[static_cast<std::size_t>(acc - base)] = 1;
        return;
      }
      for (std::size_t i = from; i < n; ++i) self(self, i, left - 1, acc + set[i]);
    };
    walk(walk, 0, param, 0);
    for (std::size_t i = 0; i < seen.size(); ++i)
      if (seen[i]) sums.push_back(base + static_cast<Int>(i));
    return finish(std::move(sums), mode, param);
  }

  const auto [lo, hi] = window(mode, param, static_cast<Int>(n));
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    const Int card = std::popcount(mask);
    if (card < lo || card > hi) continue;
    Int s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) s += set[i];
    sums.push_back(s);
  }
  return finish(std::move(sums), mode, param);
}

SumSet brute_force_oracle(const IntSequence& seq, SumMode mode, Int param) {
  if (seq.distinct() == 0) throw Error(Errc::EmptyCollection, "input must be nonempty");
  if (seq.size() > static_cast<Int>(kOracleMaxSize)) throw Error(Errc::OracleSize, "oracle input exceeds 20 terms");
  if (mode == SumMode::HFold || mode == SumMode::RestrictedHFold)
    throw Error(Errc::InvalidArgument, "h-fold modes take a set");
  check_param(mode, param);
  const auto [lo, hi] = window(mode, param, seq.size());
  const auto vals = seq.values();
  const auto mult = seq.multiplicities();
  std::vector<Int> c(vals.size(), 0);
  std::vector<Int> sums;
  // odometer over (c_1, ..., c_k) in prod [0, r_i]
  while (true) {
    std::size_t i = 0;
    while (i < c.size() && c[i] == mult[i]) c[i++] = 0;
    if (i == c.size()) break;
    ++c[i];
    Int card = 0, s = 0;
    for (std::size_t j = 0; j < c.size(); ++j) {
      card += c[j];
      s += c[j] * vals[j];
    }
    if (card >= lo && card <= hi) sums.push_back(s);
  }
  return finish(std::move(sums), mode, param);
}

}  // namespace sumkit
