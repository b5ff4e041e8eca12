#include <doctest.h>

#include <algorithm>

#include "sumkit/verifier.hpp"

using namespace sumkit;
using T = TheoremId;

namespace {

const CheckOutcome& outcome_for(const std::vector<CheckOutcome>& all, T id) {
  auto it = std::find_if(all.begin(), all.end(), [id](const CheckOutcome& o) { return o.theorem == id; });
  REQUIRE(it != all.end());
  return *it;
}

}  // namespace

TEST_CASE("check_instance examples") {
  auto pos = check_instance(T::SubsetFreimanPos, Instance::of(IntSet{1, 2, 4}));
  CHECK(pos.measured == 7);
  CHECK(pos.bound.starts_with("4θ-1"));
  CHECK(pos.status == Status::Pass);

  auto eq = check_instance(T::SubsetMinLemmaA, Instance::of(IntSet{1, 2, 3, 4}));
  CHECK(eq.measured == 10);
  CHECK(eq.bound == "10");
  CHECK(eq.status == Status::Equality);
  CHECK(eq.inverse_status == InverseStatus::StructureConfirmed);

  auto pass = check_instance(T::SubsetMinLemmaA, Instance::of(IntSet{1, 2, 3, 5}));
  CHECK(pass.measured == 11);
  CHECK(pass.status == Status::Pass);
  CHECK_FALSE(pass.inverse_status.has_value());

  auto na = check_instance(T::SubsetFreimanZero, Instance::of(IntSet{0, 1, 2}));
  CHECK(na.status == Status::Inapplicable);
  CHECK(na.reason == "k ≥ 4 required");
}

TEST_CASE("check_instance fills auxiliary cardinalities") {
  auto lev = check_instance(T::LevHFold, Instance::of(IntSet{0, 1, 3}, {}, 2));
  CHECK(lev.measured == 6);
  CHECK(lev.status == Status::Equality);
}

TEST_CASE("as-stated variant reports the counterexamples as violations") {
  auto v = check_instance(T::AlphaSeqR2Large, Instance::of(IntSequence({1, 2, 3}, {3, 3, 3}), 6), BoundVariant::AsStated);
  CHECK(v.status == Status::Violation);
  auto ok = check_instance(T::AlphaSeqR2Large, Instance::of(IntSequence({1, 2, 3}, {3, 3, 3}), 6));
  CHECK(ok.status != Status::Violation);
}

TEST_CASE("cross_theorem_consistency") {
  auto as_set = cross_theorem_consistency(Instance::of(IntSet{1, 2, 3}));
  auto as_seq = cross_theorem_consistency(Instance::of(IntSequence({1, 2, 3}, {1, 1, 1})));
  REQUIRE(as_set.size() == kTheoremCount);
  REQUIRE(as_seq.size() == kTheoremCount);
  CHECK(outcome_for(as_set, T::SubsetMinLemmaA).measured == 6);
  CHECK(outcome_for(as_seq, T::SubseqMinR1).measured == 6);
  CHECK(outcome_for(as_set, T::SubseqMinR1).status == Status::Inapplicable);

  auto zero = cross_theorem_consistency(Instance::of(IntSet{0, 1, 3}));
  const auto& fr = outcome_for(zero, T::Freiman2aLower);
  CHECK(fr.measured == 6);
  CHECK(fr.bound == "6");
  CHECK(fr.status == Status::Equality);

  for (const auto& o : cross_theorem_consistency(Instance::of(IntSet{1}))) {
    if (o.theorem == T::SubsetMinLemmaA) continue;  // the k(k+1)/2 floor applies for every k >= 1
    CHECK_MESSAGE(o.status == Status::Inapplicable, to_string(o.theorem));
  }
}

TEST_CASE("verify_range examples") {
  SweepConfig cfg;
  cfg.theorem = T::SubsetMinLemmaA;
  cfg.k_min = cfg.k_max = 4;
  cfg.max_elem = 12;
  auto rep = verify_range(cfg);
  CHECK(rep.counts.violation == 0);
  CHECK(rep.equality_witnesses == std::vector<std::string>{"1,2,3,4"});
  CHECK(rep.inverse.confirmed == 1);
  CHECK(rep.finished());

  SweepConfig nat;
  nat.theorem = T::NathansonHFold;
  nat.k_min = nat.k_max = 3;
  nat.max_elem = 6;
  nat.h_min = nat.h_max = 2;
  auto nrep = verify_range(nat);
  CHECK(nrep.params.kind == "ZERO_GCD1");
  CHECK(nrep.counts.violation == 0);
  CHECK(nrep.equality_witnesses == std::vector<std::string>{"0,1,2 h=2"});
}

TEST_CASE("counts cover every (object, alpha) pair") {
  SweepConfig cfg;
  cfg.theorem = T::AlphaSubsetPos;
  cfg.k_min = 3;
  cfg.k_max = 5;
  cfg.max_elem = 10;
  auto rep = verify_range(cfg);
  CHECK(rep.counts.violation == 0);
  CHECK(rep.monotonicity_inversions == 0);
  std::uint64_t objects = 0, pairs = 0;
  for (int k = 3; k <= 5; ++k) {
    auto n = enumerate_sets(k, 10, EnumKind::PositiveGcd1).size();
    objects += n;
    pairs += n * static_cast<std::uint64_t>(k);
  }
  CHECK(rep.objects == objects);
  CHECK(rep.counts.total() == pairs);
}

TEST_CASE("reports do not depend on the number of jobs") {
  SweepConfig cfg;
  cfg.theorem = T::AlphaSeqR1Main;
  cfg.k_min = 3;
  cfg.k_max = 4;
  cfg.max_elem = 8;
  cfg.mult_max = 2;
  cfg.jobs = 1;
  auto one = verify_range(cfg);
  cfg.jobs = 4;
  auto four = verify_range(cfg);
  CHECK(one == four);
  CHECK(one.counts.violation == 0);
}

TEST_CASE("cursor and limit resume a sweep exactly") {
  SweepConfig cfg;
  cfg.theorem = T::BpSubsetMin;
  cfg.k_min = 3;
  cfg.k_max = 5;
  cfg.max_elem = 11;
  cfg.witness_cap = 100000;
  auto whole = verify_range(cfg);
  REQUIRE(whole.objects > 100);

  cfg.limit = 37;
  StatusCounts sum;
  std::uint64_t objects = 0;
  std::vector<std::string> witnesses;
  int parts = 0;
  for (;;) {
    auto part = verify_range(cfg);
    ++parts;
    objects += part.objects;
    sum.pass += part.counts.pass;
    sum.equality += part.counts.equality;
    sum.violation += part.counts.violation;
    sum.inapplicable += part.counts.inapplicable;
    witnesses.insert(witnesses.end(), part.equality_witnesses.begin(), part.equality_witnesses.end());
    if (part.finished()) break;
    CHECK(part.objects == 37);
    CHECK(part.cursor.starts_with("k="));
    cfg.cursor = part.cursor;
  }
  CHECK(parts > 1);
  CHECK(objects == whole.objects);
  CHECK(sum == whole.counts);
  CHECK(witnesses == whole.equality_witnesses);
}

TEST_CASE("witness lists are capped") {
  SweepConfig cfg;
  cfg.theorem = T::NathansonRestricted;
  cfg.k_min = 3;
  cfg.k_max = 5;
  cfg.max_elem = 10;
  cfg.witness_cap = 5;
  auto rep = verify_range(cfg);
  CHECK(rep.equality_witnesses.size() == 5);
  CHECK(rep.witnesses_truncated);
  CHECK(rep.counts.equality > 5);
}

TEST_CASE("conjecture1_tightness") {
  auto a = conjecture1_tightness(9, 20);
  CHECK(a.set == IntSet{0, 1, 2, 3, 4, 5, 6, 19, 20});
  CHECK(a.expected == 20);
  CHECK(a.measured == 20);
  auto b = conjecture1_tightness(9, 13);
  CHECK(b.expected == 20);
  CHECK(b.matches());
  auto c = conjecture1_tightness(8, 12);
  CHECK(c.expected == 17);
  CHECK(c.measured == 17);
  CHECK_THROWS_AS((void)conjecture1_tightness(5, 10), Error);
  CHECK_THROWS_AS((void)conjecture1_tightness(9, 7), Error);
}
