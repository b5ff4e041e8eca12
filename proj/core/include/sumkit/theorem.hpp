#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "sumkit/enumerate.hpp"
#include "sumkit/exact_bound.hpp"
#include "sumkit/int_set.hpp"

namespace sumkit {

enum class TheoremId : std::uint8_t {
  NathansonHFold,
  NathansonRestricted,
  Freiman3k4Structure,
  Freiman2aLower,
  LevHFold,
  FreimanLevConjecture,
  FlpRestricted,
  LevRestricted,
  BpSubsetMin,
  BpSubseqMin,
  SubsetMinLemmaA,
  SubsetFreimanPos,
  SubsetFreimanZero,
  SubseqMinR1,
  SubseqMinR2,
  SubseqFreimanPos,
  SubseqFreimanR2,
  SubseqFreimanZero,
  AlphaSubsetPos,
  AlphaSubsetZero,
  AlphaSeqLast,
  AlphaSeqR2Small,
  AlphaSeqR2Large,
  AlphaSeqR1Main,
  AlphaSeqR1Special,
  AlphaSeqZeroLast,
  AlphaSeqZeroR2,
  AlphaSeqZeroR1,
};

inline constexpr std::size_t kTheoremCount = 28;

std::span<const TheoremId> all_theorems();
/// Upper-case tag, e.g. "LEV_RESTRICTED".
std::string_view to_string(TheoremId id);
/// Case-insensitive tag lookup.
std::optional<TheoremId> parse_theorem_id(std::string_view text);

/// Which published formula to check. Three statements are contradicted by
/// small instances; Proven uses the bound their proofs actually establish.
enum class BoundVariant { Proven, AsStated };

/// The sum object whose cardinality a theorem bounds.
enum class Measure {
  HFold,            // |hA|
  RestrictedHFold,  // |h^A|
  SubsetSums,       // |S(A)|
  SubsetMinCard,    // |S_alpha(A)|
  SubseqSums,       // |S(A_r)|
  SubseqMinCard,    // |S_alpha(A_r)|
};

enum class Parameter { None, H, Alpha };

// Keys of caller-supplied auxiliary cardinalities.
inline constexpr std::string_view kAuxHMinus1 = "|(h-1)A|";
inline constexpr std::string_view kAuxRMinus1WithZero = "|(r-1)(A u {0})|";
inline constexpr std::string_view kAuxRMinus1 = "|(r-1)A|";

struct TheoremInfo {
  TheoremId id;
  std::string_view tag;
  std::string_view statement;
  std::string_view hypotheses;
  std::string_view measures;
  Measure measure;
  Int fixed_h;  // 2 for |2A| and |2^A|, else 0
  bool sequence;
  EnumKind family;
  Parameter parameter;
  bool conjecture;
  std::string_view auxiliary;  // empty when the bound is self-contained
  std::string_view inverse;    // empty when there is no inverse clause
  std::string_view erratum;    // empty unless the stated formula fails
  std::string_view note;       // reading adopted where the wording is ambiguous
  Int default_h_min;
  Int default_h_max;  // 0 means |A|
  Int min_k;          // smallest k for which the hypotheses can hold
};

/// Stable-ordered, one entry per TheoremId.
std::span<const TheoremInfo> catalog();
const TheoremInfo& info(TheoremId id);

/// A set or sequence plus the parameters and auxiliary cardinalities a bound
/// may need.
struct Instance {
  std::variant<IntSet, IntSequence> object;
  std::optional<Int> alpha;
  std::optional<Int> h;
  std::map<std::string, Int, std::less<>> aux;

  static Instance of(IntSet set, std::optional<Int> alpha = {}, std::optional<Int> h = {});
  static Instance of(IntSequence seq, std::optional<Int> alpha = {}, std::optional<Int> h = {});

  [[nodiscard]] bool is_sequence() const { return std::holds_alternative<IntSequence>(object); }
  [[nodiscard]] const IntSet& set() const { return std::get<IntSet>(object); }
  [[nodiscard]] const IntSequence& sequence() const { return std::get<IntSequence>(object); }
  /// Distinct elements.
  [[nodiscard]] IntSet values() const;

  /// "0,1,3", "1,2|2,1", with " h=2" / " alpha=3" appended when set.
  [[nodiscard]] std::string to_string() const;
};

struct Applicability {
  bool ok = true;
  std::string reason;  // first failing hypothesis
  explicit operator bool() const { return ok; }
};

Applicability applicable(TheoremId t, const Instance& inst);

/// An auxiliary sumset cardinality required by a bound: |n B| where B is the
/// value set, with 0 adjoined when with_zero.
struct AuxRequest {
  std::string_view key;
  Int fold;
  bool with_zero;
};

/// The auxiliary input evaluate_bound will read for this (applicable)
/// instance, if any.
std::optional<AuxRequest> auxiliary_request(TheoremId t, const Instance& inst);

struct Evaluation {
  ExactBound bound;
  std::string branch;  // which piece of a piecewise statement was selected
};

/// Throws Errc::Precondition when inapplicable, Errc::MissingInput when a
/// required auxiliary cardinality is absent.
Evaluation evaluate_bound(TheoremId t, const Instance& inst, BoundVariant variant = BoundVariant::Proven);

bool bound_holds(TheoremId t, const Instance& inst, Int observed, BoundVariant variant = BoundVariant::Proven);

/// Whether the inverse clause fires for this outcome: side conditions hold
/// and either the bound is attained or, for the 3k-4 theorem, |2A| <= 3k-4.
bool inverse_triggered(TheoremId t, const Instance& inst, Int measured, bool attained);

/// The structural conclusion of t's inverse clause evaluated on inst:
/// arithmetic progression, d*[1,k], or AP cover length <= k+b. Absent when t
/// has no inverse clause.
std::optional<bool> equality_characterization(TheoremId t, const Instance& inst, Int measured);

}  // namespace sumkit
