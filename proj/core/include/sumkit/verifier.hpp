#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumkit/enumerate.hpp"
#include "sumkit/theorem.hpp"

namespace sumkit {

enum class Status { Pass, Equality, Violation, Inapplicable };
enum class InverseStatus { StructureConfirmed, StructureFailed, NotChecked };

std::string_view to_string(Status status);
std::string_view to_string(InverseStatus status);

struct CheckOutcome {
  TheoremId theorem{};
  std::string instance;
  Int measured = 0;
  std::string bound;   // rendered ExactBound; empty when inapplicable
  std::string branch;  // selected piece of the statement
  Status status = Status::Inapplicable;
  std::optional<InverseStatus> inverse_status;
  std::string reason;  // why the instance is inapplicable
};

/// Cardinality of the object t bounds, for an applicable instance.
Int measure(TheoremId t, const Instance& inst);

/// Computes any auxiliary sumset cardinality the bound needs and stores it in
/// inst.aux (caller-supplied values are kept).
void fill_auxiliary(TheoremId t, Instance& inst);

CheckOutcome check_instance(TheoremId t, Instance inst, BoundVariant variant = BoundVariant::Proven);

/// Every theorem against one instance, in catalog order.
std::vector<CheckOutcome> cross_theorem_consistency(const Instance& inst,
                                                    BoundVariant variant = BoundVariant::Proven);

enum class AlphaPolicy { AllApplicable, Fixed };

struct SweepConfig {
  TheoremId theorem{};
  int k_min = 1;
  int k_max = 1;
  Int max_elem = 1;
  Int mult_max = 1;                // sequences only
  std::optional<EnumKind> kind;    // defaults to the theorem's hypothesis family
  AlphaPolicy alpha_policy = AlphaPolicy::AllApplicable;
  std::vector<Int> alphas;         // used when alpha_policy == Fixed
  Int h_min = 0;                   // 0: theorem default
  Int h_max = 0;                   // 0: theorem default (|A| when that is 0)
  unsigned jobs = 1;
  BoundVariant variant = BoundVariant::Proven;
  std::string cursor;              // resume after this position; empty = start
  std::uint64_t limit = 0;         // stop after this many objects; 0 = no limit
  std::size_t witness_cap = 1000;  // per list
};

struct StatusCounts {
  std::uint64_t pass = 0;
  std::uint64_t equality = 0;
  std::uint64_t violation = 0;
  std::uint64_t inapplicable = 0;
  [[nodiscard]] std::uint64_t total() const { return pass + equality + violation + inapplicable; }
  friend bool operator==(const StatusCounts&, const StatusCounts&) = default;
};

struct InverseCounts {
  std::uint64_t confirmed = 0;
  std::uint64_t failed = 0;
  std::uint64_t not_checked = 0;
  friend bool operator==(const InverseCounts&, const InverseCounts&) = default;
};

/// An instance singled out by a sweep: a violation or a structure failure.
struct Finding {
  std::string instance;
  Int measured = 0;
  std::string bound;
  friend bool operator==(const Finding&, const Finding&) = default;
};

struct SweepParams {
  int k_min = 0;
  int k_max = 0;
  Int max_elem = 0;
  Int mult_max = 0;
  std::string alpha_policy;  // "ALL_APPLICABLE", a comma list, or "NONE"
  std::string kind;
  Int h_min = 0;             // 0 when the theorem takes no h
  Int h_max = 0;             // 0 when h runs up to |A|
  std::string variant;       // "PROVEN" or "AS_STATED"
  friend bool operator==(const SweepParams&, const SweepParams&) = default;
};

struct VerificationReport {
  TheoremId theorem{};
  SweepParams params;
  std::uint64_t objects = 0;  // sets or sequences enumerated
  StatusCounts counts;        // per (object, parameter) pair
  InverseCounts inverse;
  std::vector<std::string> equality_witnesses;
  bool witnesses_truncated = false;
  std::vector<Finding> violations;
  bool violations_truncated = false;
  std::vector<Finding> structure_failures;
  std::uint64_t monotonicity_inversions = 0;  // |S_alpha| increasing in alpha
  std::string cursor;                         // "done" when the sweep finished
  std::string version;
  std::string note;
  double elapsed_seconds = 0;  // excluded from equality and serialization

  [[nodiscard]] bool finished() const { return cursor == "done"; }
  bool operator==(const VerificationReport& other) const;
};

inline constexpr std::string_view kCursorDone = "done";

VerificationReport verify_range(const SweepConfig& config);

struct TightnessResult {
  IntSet set;
  Int expected = 0;
  Int measured = 0;
  [[nodiscard]] bool matches() const { return expected == measured; }
};

/// The extremal family {0, ..., k-3} u {a-1, a} for the restricted 2-fold
/// conjecture, measured with the engine.
TightnessResult conjecture1_tightness(Int k, Int a_last);

}  // namespace sumkit
