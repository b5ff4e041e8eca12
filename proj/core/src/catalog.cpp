#include <algorithm>
#include <array>
#include <cctype>

#include "sumkit/theorem.hpp"

namespace sumkit {

namespace {

using enum TheoremId;
constexpr auto kPos = EnumKind::PositiveGcd1;
constexpr auto kZero = EnumKind::ZeroGcd1;

// clang-format off
constexpr std::array<TheoremInfo, kTheoremCount> kCatalog{{
  {NathansonHFold, "NATHANSON_HFOLD",
   "|hA| >= h|A| - h + 1",
   "A nonempty; h >= 1",
   "|hA|", Measure::HFold, 0, false, kZero, Parameter::H, false, "",
   "h >= 2 and equality => A is an arithmetic progression", "", "", 2, 4, 1},
  {NathansonRestricted, "NATHANSON_RESTRICTED",
   "|h^A| >= h|A| - h^2 + 1",
   "A nonempty; 1 <= h <= |A|",
   "|h^A|", Measure::RestrictedHFold, 0, false, kZero, Parameter::H, false, "",
   "|A| >= 5, 2 <= h <= |A|-2 and equality => A is an arithmetic progression", "", "", 2, 0, 1},
  {Freiman3k4Structure, "FREIMAN_3K4_STRUCTURE",
   "|2A| >= 2k - 1; if |2A| = 2k-1+b <= 3k-4 then A lies in an AP of length <= k+b",
   "k >= 3; A any set of integers",
   "|2A|", Measure::HFold, 2, false, kZero, Parameter::None, false, "",
   "|2A| = 2k-1+b <= 3k-4 => ap_cover_length(A) <= k+b", "",
   "The structural clause is checked whenever |2A| <= 3k-4, not only at equality with 2k-1.", 0, 0, 3},
  {Freiman2aLower, "FREIMAN_2A_LOWER",
   "|2A| >= a_{k-1} + k if a_{k-1} <= 2k-3; 3k - 3 if a_{k-1} >= 2k-2",
   "k >= 3; 0 = a_0 < ... < a_{k-1}; d(A) = 1",
   "|2A|", Measure::HFold, 2, false, kZero, Parameter::None, false, "", "", "", "", 0, 0, 3},
  {LevHFold, "LEV_HFOLD",
   "|hA| >= |(h-1)A| + min(a_{k-1}, h(k-2)+1)",
   "k >= 3; 0 = a_0 < ... < a_{k-1}; d(A) = 1; h >= 2",
   "|hA|", Measure::HFold, 0, false, kZero, Parameter::H, false, kAuxHMinus1, "", "", "", 2, 4, 3},
  {FreimanLevConjecture, "FREIMAN_LEV_CONJECTURE",
   "|2^A| >= a_{k-1} + k - 2 if a_{k-1} <= 2k-5; 3k - 7 if a_{k-1} >= 2k-4",
   "k >= 8; 0 = a_0 < ... < a_{k-1}; d(A) = 1",
   "|2^A|", Measure::RestrictedHFold, 2, false, kZero, Parameter::None, true, "", "", "", "", 0, 0, 8},
  {FlpRestricted, "FLP_RESTRICTED",
   "|2^A| >= (a_{k-1} + k)/2 + k - 7/2 if a_{k-1} <= 2k-3; 5k/2 - 5 if a_{k-1} >= 2k-2",
   "k >= 3; 0 = a_0 < ... < a_{k-1}; d(A) = 1",
   "|2^A|", Measure::RestrictedHFold, 2, false, kZero, Parameter::None, false, "", "", "", "", 0, 0, 3},
  {LevRestricted, "LEV_RESTRICTED",
   "|2^A| >= a_{k-1} + k - 2 if a_{k-1} <= 2k-5; (θ+1)k - 6 if a_{k-1} >= 2k-4",
   "k >= 3; 0 = a_0 < ... < a_{k-1}; d(A) = 1",
   "|2^A|", Measure::RestrictedHFold, 2, false, kZero, Parameter::None, false, "", "", "", "", 0, 0, 3},
  {BpSubsetMin, "BP_SUBSET_MIN",
   "|S_α(A)| >= k(k+1)/2 - α(α+1)/2 + 1",
   "A a set of k positive integers; 1 <= α <= k",
   "|S_α(A)|", Measure::SubsetMinCard, 0, false, kPos, Parameter::Alpha, false, "",
   "k >= 4, α <= k-2 and equality => A = d*[1,k]", "", "", 0, 0, 1},
  {BpSubseqMin, "BP_SUBSEQ_MIN",
   "|S_α(𝔸)| >= Σ_{i<=k} i r_i - Σ_{i<=m} i r_i + m(Σ_{i<=m} r_i - α) + 1, m the m-index of α",
   "positive values a_1 < ... < a_k; r_i >= 1; 1 <= α < Σ r_i",
   "|S_α(𝔸)|", Measure::SubseqMinCard, 0, true, kPos, Parameter::Alpha, false, "",
   "k >= 4, α <= Σ r_i - 2 and equality => 𝔸 = d*[1,k]_r", "",
   "α = Σ r_i has no m-index, so the formula is evaluated for α < Σ r_i only.", 0, 0, 1},
  {SubsetMinLemmaA, "SUBSET_MIN_LEMMA_A",
   "|S(A)| >= k(k+1)/2",
   "A a set of k positive integers",
   "|S(A)|", Measure::SubsetSums, 0, false, kPos, Parameter::None, false, "",
   "k >= 4 and equality => A = d*[1,k]", "", "", 0, 0, 1},
  {SubsetFreimanPos, "SUBSET_FREIMAN_POS",
   "|S(A)| >= a_k + k(k-1)/2 if a_k <= 2k-3; θ(k+1) - 4 + k(k-1)/2 if a_k >= 2k-2",
   "k >= 3; 0 < a_1 < ... < a_k; d(A) = 1",
   "|S(A)|", Measure::SubsetSums, 0, false, kPos, Parameter::None, false, "", "", "", "", 0, 0, 3},
  {SubsetFreimanZero, "SUBSET_FREIMAN_ZERO",
   "|S(A)| >= a_{k-1} + (k-1)(k-2)/2 + 1 if a_{k-1} <= 2k-5; θk - 3 + (k-1)(k-2)/2 if a_{k-1} >= 2k-4",
   "k >= 4; 0 = a_0 < ... < a_{k-1}; d(A) = 1",
   "|S(A)|", Measure::SubsetSums, 0, false, kZero, Parameter::None, false, "", "", "", "", 0, 0, 4},
  {SubseqMinR1, "SUBSEQ_MIN_R1",
   "|S(𝔸)| >= Σ i r_i",
   "positive values a_1 < ... < a_k; r_i >= 1",
   "|S(𝔸)|", Measure::SubseqSums, 0, true, kPos, Parameter::None, false, "",
   "k >= 4 and equality => 𝔸 = d*[1,k]_r", "", "", 0, 0, 1},
  {SubseqMinR2, "SUBSEQ_MIN_R2",
   "|S(𝔸)| >= Σ i r_i",
   "positive values a_1 < ... < a_k; r_i >= 2",
   "|S(𝔸)|", Measure::SubseqSums, 0, true, kPos, Parameter::None, false, "",
   "k >= 4 and equality => 𝔸 = d*[1,k]_r", "", "", 0, 0, 1},
  {SubseqFreimanPos, "SUBSEQ_FREIMAN_POS",
   "|S(𝔸)| >= Σ i r_i + a_k - k if a_k <= 2k-3; Σ i r_i + θ(k+1) - k - 4 if a_k >= 2k-2",
   "positive values a_1 < ... < a_k; r_i >= 1; d(A) = 1",
   "|S(𝔸)|", Measure::SubseqSums, 0, true, kPos, Parameter::None, false, "", "", "", "", 0, 0, 1},
  {SubseqFreimanR2, "SUBSEQ_FREIMAN_R2",
   "|S(𝔸)| >= |(r-1)(A u {0})| + min(a_k, r(k-1)+1) - 1 + Σ_{i<k} i r_i + k(r_k - r)",
   "positive values a_1 < ... < a_k; r_i >= 2; d(A) = 1; r = min r_i",
   "|S(𝔸)|", Measure::SubseqSums, 0, true, kPos, Parameter::None, false, kAuxRMinus1WithZero, "", "", "",
   0, 0, 1},
  {SubseqFreimanZero, "SUBSEQ_FREIMAN_ZERO",
   "r >= 2: |S(𝔸)| >= |(r-1)A| + min(a_{k-1}, r(k-2)+1) + Σ_{i<k} (i-1)r_{i-1} + (k-1)(r_{k-1} - r); "
   "r = 1: |S(𝔸)| >= a_{k-1} - k + 2 + Σ_{i<=k} (i-1)r_{i-1} if a_{k-1} <= 2k-5, "
   "θk - k - 2 + Σ_{i<=k} (i-1)r_{i-1} if a_{k-1} >= 2k-4",
   "0 = a_0 < ... < a_{k-1}; r_i >= 1; d(A) = 1; r = min(r_1, ..., r_{k-1})",
   "|S(𝔸)|", Measure::SubseqSums, 0, true, kZero, Parameter::None, false, kAuxRMinus1, "", "",
   "The auxiliary |(r-1)A| is only read when r >= 2.", 0, 0, 2},
  {AlphaSubsetPos, "ALPHA_SUBSET_POS",
   "|S_α(A)| >= a_k + k(k-1)/2 - α(α+1)/2 + 1 if a_k <= 2k-3; θ(k+1) - 4 + k(k-1)/2 - α(α+1)/2 + 1 if a_k >= 2k-2",
   "k >= 3; 0 < a_1 < ... < a_k; d(A) = 1; 1 <= α <= k-2",
   "|S_α(A)|", Measure::SubsetMinCard, 0, false, kPos, Parameter::Alpha, false, "", "", "", "", 0, 0, 3},
  {AlphaSubsetZero, "ALPHA_SUBSET_ZERO",
   "|S_α(A)| >= a_{k-1} + (k-1)(k-2)/2 - α(α-1)/2 + 1 if a_{k-1} <= 2k-5; θk - 4 + (k-1)(k-2)/2 - α(α-1)/2 + 1 "
   "if a_{k-1} >= 2k-4",
   "k >= 4; 0 = a_0 < ... < a_{k-1}; d(A) = 1; 1 <= α <= k-2",
   "|S_α(A)|", Measure::SubsetMinCard, 0, false, kZero, Parameter::Alpha, false, "", "",
   "Published constant is +2 in both branches; A = {0,1,2,3}, α = 1 gives |S_1(A)| = 7 < 8. The argument "
   "establishes +1.",
   "", 0, 0, 4},
  {AlphaSeqLast, "ALPHA_SEQ_LAST",
   "α = Σ r_i - 2. r = 1: |S_α(𝔸)| >= a_k + k if a_k <= 2k-3, (θ+1)(k+1) - 5 if a_k >= 2k-2; "
   "r >= 2: |S_α(𝔸)| >= a_k + k + 1 if a_k <= 2k-1, 3k if a_k >= 2k",
   "k >= 3; positive values; r_i >= 1; d(A) = 1; α = Σ r_i - 2; r = min r_i",
   "|S_α(𝔸)|", Measure::SubseqMinCard, 0, true, kPos, Parameter::Alpha, false, "", "",
   "Published r = 1 large branch is (θ+1)(k+1) - 4; {1,3,4} with r = (1,1,1), α = 1 gives 6 < 4θ. The argument "
   "establishes (θ+1)(k+1) - 5.",
   "", 0, 0, 3},
  {AlphaSeqR2Small, "ALPHA_SEQ_R2_SMALL",
   "|S_α(𝔸)| >= |(r-1)(A u {0})| + min(a_k, r(k-1)+1) + Σ_{i<k} i r_i - Σ_{i<=m} i r_i + m(Σ_{i<=m} r_i - α) "
   "+ k(r_k - r)",
   "k >= 3; positive values; r_i >= 2; d(A) = 1; r = min r_i; 1 <= α < Σ r_i - r",
   "|S_α(𝔸)|", Measure::SubseqMinCard, 0, true, kPos, Parameter::Alpha, false, kAuxRMinus1WithZero, "", "", "",
   0, 0, 3},
  {AlphaSeqR2Large, "ALPHA_SEQ_R2_LARGE",
   "|S_α(𝔸)| >= a_k - k + 1 + k(Σ r_i - α) if a_k <= 2k-1; k + k(Σ r_i - α) if a_k >= 2k",
   "k >= 3; positive values; r_i >= 2; d(A) = 1; r = min r_i; Σ r_i - r <= α < Σ r_i - 2",
   "|S_α(𝔸)|", Measure::SubseqMinCard, 0, true, kPos, Parameter::Alpha, false, "", "",
   "Published constants are a_k - k + 2 and k + 1; {1,2,3} with r = (3,3,3), α = 6 gives |S_6| = 10 < 11. The "
   "argument establishes a_k - k + 1 and k.",
   "", 0, 0, 3},
  {AlphaSeqR1Main, "ALPHA_SEQ_R1_MAIN",
   "(1) α < Σ_{i<k} r_i - 1: |S_α(𝔸)| >= a_k - k + 1 + T if a_k <= 2k-3, θ(k+1) - k - 3 + T if a_k >= 2k-2, "
   "T = Σ i r_i - Σ_{i<=m} i r_i + m(Σ_{i<=m} r_i - α); (2) otherwise a_k - k + k(Σ r_i - α), "
   "θ(k+1) - k - 4 + k(Σ r_i - α)",
   "k >= 3; positive values; r_i >= 1; d(A) = 1; not (r_{k-1} = 1 and r_k >= 2); 1 <= α < Σ r_i - 2",
   "|S_α(𝔸)|", Measure::SubseqMinCard, 0, true, kPos, Parameter::Alpha, false, "", "", "",
   "Multiplicity hypothesis read as (r_{k-1} >= 2 and r_k >= 2) or (r_{k-1} = r_k = 1) or (r_{k-1} >= 2 and "
   "r_k = 1), i.e. every case except r_{k-1} = 1 < r_k.",
   0, 0, 3},
  {AlphaSeqR1Special, "ALPHA_SEQ_R1_SPECIAL",
   "(1) α < Σ_{i<=k-2} r_i: |S_α(𝔸)| >= a_k + k + T if a_k <= 2k-3, θ(k+1) + k - 4 + T if a_k >= 2k-2, "
   "T = Σ_{i<=k-2} i r_i - Σ_{i<=m} i r_i + m(Σ_{i<=m} r_i - α) + (k-m+1)(r_k - 1); (2) otherwise "
   "a_k - k + 2 + (k-1)(Σ r_i - α), θ(k+1) - k - 2 + (k-1)(Σ r_i - α)",
   "k >= 3; positive values; r_{k-1} = 1; r_k >= 2; d(A) = 1; 1 <= α < Σ r_i - 2",
   "|S_α(𝔸)|", Measure::SubseqMinCard, 0, true, kPos, Parameter::Alpha, false, "", "", "", "", 0, 0, 3},
  {AlphaSeqZeroLast, "ALPHA_SEQ_ZERO_LAST",
   "α = Σ r_i - 2. r = 1: |S_α(𝔸)| >= a_{k-1} + k - 1 if a_{k-1} <= 2k-5, (θ+1)k - 5 if a_{k-1} >= 2k-4; "
   "r >= 2: a_{k-1} + k if a_{k-1} <= 2k-3, 3k - 3 if a_{k-1} >= 2k-2",
   "k >= 4; 0 = a_0 < ... < a_{k-1}; d(A) = 1; α = Σ r_i - 2; r = min(r_1, ..., r_{k-1})",
   "|S_α(𝔸)|", Measure::SubseqMinCard, 0, true, kZero, Parameter::Alpha, false, "", "", "", "", 0, 0, 4},
  {AlphaSeqZeroR2, "ALPHA_SEQ_ZERO_R2",
   "(1) α < Σ r_i - r: |S_α(𝔸)| >= |(r-1)A| + min(a_{k-1}, r(k-2)+1) + Σ_{i<k} (i-1)r_{i-1} - Σ_{i<=m} (i-1)r_{i-1} "
   "+ (m-1)(Σ_{i<=m} r_{i-1} - α) + (k-1)(r_{k-1} - r); (2) otherwise a_{k-1} - k + 2 + (k-1)(Σ r_i - α) if "
   "a_{k-1} <= 2k-3, k - 1 + (k-1)(Σ r_i - α) if a_{k-1} >= 2k-2",
   "k >= 4; 0 = a_0 < ... < a_{k-1}; d(A) = 1; r = min(r_1, ..., r_{k-1}) >= 2; 1 <= α < Σ r_i - 2",
   "|S_α(𝔸)|", Measure::SubseqMinCard, 0, true, kZero, Parameter::Alpha, false, kAuxRMinus1, "", "",
   "The auxiliary |(r-1)A| is only read in case (1).", 0, 0, 4},
  {AlphaSeqZeroR1, "ALPHA_SEQ_ZERO_R1",
   "Case I, (1) α < Σ_{i<=k-2} r_i - 1: a_{k-1} - k + 2 + T, θk - k - 2 + T, T = Σ_{i<=k} (i-1)r_{i-1} - "
   "Σ_{i<=m} (i-1)r_{i-1} + (m-1)(Σ_{i<=m} r_{i-1} - α); (2) otherwise a_{k-1} - k + 1 + (k-1)(Σ r_i - α), "
   "θk - k - 3 + (k-1)(Σ r_i - α). Case II (r_{k-2} = 1, r_{k-1} >= 2), (3) α <= r_0: a_{k-1} - k + 2 + "
   "Σ (i-1)r_{i-1}, θk - k - 2 + Σ (i-1)r_{i-1}; (4) r_0 < α < Σ_{i<=k-3} r_i: a_{k-1} + 1 + T', θk - 3 + T', "
   "T' = Σ_{i<k} (i-1)r_{i-1} - Σ_{i<=m} (i-1)r_{i-1} + (m-1)(Σ_{i<=m} r_{i-1} - α) + (k-m)(r_{k-1} - 1); "
   "(5) otherwise a_{k-1} - k + 3 + (k-2)(Σ r_i - α), θk - k - 1 + (k-2)(Σ r_i - α). First form of each "
   "pair when a_{k-1} <= 2k-5",
   "k >= 4; 0 = a_0 < ... < a_{k-1}; d(A) = 1; min(r_1, ..., r_{k-1}) = 1; 1 <= α < Σ r_i - 2",
   "|S_α(𝔸)|", Measure::SubseqMinCard, 0, true, kZero, Parameter::Alpha, false, "", "", "",
   "Cases (1) and (2) are printed as bounds on |S(𝔸)|; they are checked against |S_α(𝔸)|. Their multiplicity "
   "clause names r_k and r_{k-1}, read as the top two multiplicities r_{k-1} and r_{k-2} of the zero-indexed "
   "sequence, so Case I is every sequence outside Case II. Case (4)'s large branch threshold on a_k is read as "
   "a_{k-1}.",
   0, 0, 4},
}};
// clang-format on

constexpr bool indexed_by_id() {
  for (std::size_t i = 0; i < kTheoremCount; ++i)
    if (static_cast<std::size_t>(kCatalog[i].id) != i) return false;
  return true;
}
static_assert(indexed_by_id());

}  // namespace

std::span<const TheoremInfo> catalog() { return kCatalog; }

const TheoremInfo& info(TheoremId id) { return kCatalog[static_cast<std::size_t>(id)]; }

std::span<const TheoremId> all_theorems() {
  static const auto ids = [] {
    std::array<TheoremId, kTheoremCount> out{};
    for (std::size_t i = 0; i < kTheoremCount; ++i) out[i] = kCatalog[i].id;
    return out;
  }();
  return ids;
}

std::string_view to_string(TheoremId id) { return info(id).tag; }

std::optional<TheoremId> parse_theorem_id(std::string_view text) {
  for (const auto& entry : kCatalog) {
    if (entry.tag.size() != text.size()) continue;
    if (std::equal(text.begin(), text.end(), entry.tag.begin(), [](char a, char b) {
          return std::toupper(static_cast<unsigned char>(a)) == b;
        }))
      return entry.id;
  }
  return std::nullopt;
}

}  // namespace sumkit
