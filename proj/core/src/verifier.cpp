#include "sumkit/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <map>
#include <thread>
#include <variant>

#include "sumkit/sumset.hpp"
#include "sumkit/version.hpp"

namespace sumkit {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Pass: return "PASS";
    case Status::Equality: return "EQUALITY";
    case Status::Violation: return "VIOLATION";
    case Status::Inapplicable: return "INAPPLICABLE";
  }
  return "?";
}

std::string_view to_string(InverseStatus status) {
  switch (status) {
    case InverseStatus::StructureConfirmed: return "STRUCTURE_CONFIRMED";
    case InverseStatus::StructureFailed: return "STRUCTURE_FAILED";
    case InverseStatus::NotChecked: return "NOT_CHECKED";
  }
  return "?";
}

bool VerificationReport::operator==(const VerificationReport& o) const {
  return theorem == o.theorem && params == o.params && objects == o.objects && counts == o.counts &&
         inverse == o.inverse && equality_witnesses == o.equality_witnesses &&
         witnesses_truncated == o.witnesses_truncated && violations == o.violations &&
         violations_truncated == o.violations_truncated && structure_failures == o.structure_failures &&
         monotonicity_inversions == o.monotonicity_inversions && cursor == o.cursor && version == o.version &&
         note == o.note;
}

namespace {

Int fold_count(const IntSet& values, Int fold, bool with_zero) {
  if (fold == 0) return 1;  // 0B = {0}
  if (!with_zero || values.contains(0)) return static_cast<Int>(h_fold_cardinality(values.elements(), fold));
  std::vector<Int> v(values.elements().begin(), values.elements().end());
  v.push_back(0);
  return static_cast<Int>(h_fold_cardinality(IntSet(std::move(v)).elements(), fold));
}

Int table_count(const Instance& inst, Int cap, Int lo, Int hi) {
  const auto table = inst.is_sequence() ? CardinalityTable::for_sequence(inst.sequence(), cap)
                                        : CardinalityTable::for_set(inst.set(), cap);
  return static_cast<Int>(table.count(lo, hi));
}

Int object_size(const Instance& inst) {
  return inst.is_sequence() ? inst.sequence().size() : static_cast<Int>(inst.set().size());
}

struct Judgement {
  Status status = Status::Inapplicable;
  std::optional<InverseStatus> inverse;
  bool inverse_clause_skipped = false;  // equality, but side conditions fail
  Int measured = 0;
  Evaluation eval;
  std::string reason;
};

// Applicability is checked by the caller; aux must already be filled.
Judgement judge(TheoremId t, const Instance& inst, Int measured, BoundVariant variant) {
  Judgement j;
  j.measured = measured;
  j.eval = evaluate_bound(t, inst, variant);
  const bool attained = j.eval.bound.attained_by(measured);
  j.status = attained ? Status::Equality
                      : (j.eval.bound.satisfied_by(measured) ? Status::Pass : Status::Violation);
  if (inverse_triggered(t, inst, measured, attained)) {
    j.inverse = equality_characterization(t, inst, measured).value_or(false) ? InverseStatus::StructureConfirmed
                                                                              : InverseStatus::StructureFailed;
  } else if (attained && !info(t).inverse.empty()) {
    j.inverse_clause_skipped = true;
  }
  return j;
}

}  // namespace

Int measure(TheoremId t, const Instance& inst) {
  const auto& meta = info(t);
  const Int h = meta.fixed_h ? meta.fixed_h : inst.h.value_or(0);
  const Int size = object_size(inst);
  switch (meta.measure) {
    case Measure::HFold:
      return fold_count(inst.values(), h, false);
    case Measure::RestrictedHFold:
      return table_count(inst, h, h, h);
    case Measure::SubsetSums:
    case Measure::SubseqSums:
      return table_count(inst, size, 1, size);
    case Measure::SubsetMinCard:
    case Measure::SubseqMinCard:
      return table_count(inst, size, inst.alpha.value_or(1), size);
  }
  return 0;
}

void fill_auxiliary(TheoremId t, Instance& inst) {
  const auto req = auxiliary_request(t, inst);
  if (!req || inst.aux.contains(req->key)) return;
  inst.aux.emplace(std::string(req->key), fold_count(inst.values(), req->fold, req->with_zero));
}

CheckOutcome check_instance(TheoremId t, Instance inst, BoundVariant variant) {
  CheckOutcome out;
  out.theorem = t;
  out.instance = inst.to_string();
  if (const auto app = applicable(t, inst); !app) {
    out.status = Status::Inapplicable;
    out.reason = app.reason;
    return out;
  }
  try {
    fill_auxiliary(t, inst);
    const Judgement j = judge(t, inst, measure(t, inst), variant);
    out.measured = j.measured;
    out.bound = j.eval.bound.to_string();
    out.branch = j.eval.branch;
    out.status = j.status;
    out.inverse_status = j.inverse;
  } catch (const Error& e) {
    throw Error(e.code(), std::string(e.what()) + " [" + std::string(to_string(t)) + " on " + out.instance + "]");
  }
  return out;
}

std::vector<CheckOutcome> cross_theorem_consistency(const Instance& inst, BoundVariant variant) {
  std::vector<CheckOutcome> out;
  out.reserve(kTheoremCount);
  for (TheoremId t : all_theorems()) out.push_back(check_instance(t, inst, variant));
  return out;
}

namespace {

using Object = std::variant<IntSet, IntSequence>;

std::string literal(const Object& obj) {
  return std::visit([](const auto& o) { return o.to_string(); }, obj);
}

std::string encode_cursor(int k, const Object& last) { return "k=" + std::to_string(k) + ";last=" + literal(last); }

struct Cursor {
  int k;
  std::string last;
};

Cursor decode_cursor(const std::string& text) {
  const auto semi = text.find(';');
  if (text.rfind("k=", 0) != 0 || semi == std::string::npos || text.compare(semi + 1, 5, "last=") != 0)
    throw Error(Errc::Parse, "malformed cursor '" + text + "'");
  const auto k = parse_int_list(text.substr(2, semi - 2));
  if (k.size() != 1) throw Error(Errc::Parse, "malformed cursor '" + text + "'");
  return {static_cast<int>(k[0]), text.substr(semi + 6)};
}

// Ordered stream over k = k_min..k_max of sets or sequences.
class Source {
 public:
  Source(const SweepConfig& cfg, EnumKind kind, bool sequences)
      : cfg_(cfg), kind_(kind), sequences_(sequences), k_(cfg.k_min) {
    if (!cfg.cursor.empty()) {
      const Cursor c = decode_cursor(cfg.cursor);
      if (c.k < cfg.k_min || c.k > cfg.k_max) throw Error(Errc::OutOfRange, "cursor k outside the sweep range");
      k_ = c.k;
      open();
      if (sequences_) {
        const auto bar = c.last.find('|');
        if (bar == std::string::npos) throw Error(Errc::Parse, "cursor names a set, sweep is over sequences");
        std::get<SequenceEnumerator>(*enum_).resume_after(
            IntSequence::parse(c.last.substr(0, bar), c.last.substr(bar + 1)));
      } else {
        std::get<SetEnumerator>(*enum_).resume_after(IntSet::parse(c.last));
      }
    }
  }

  std::optional<Object> next() {
    while (k_ <= cfg_.k_max) {
      if (!enum_) open();
      std::optional<Object> out;
      if (sequences_) {
        if (auto s = std::get<SequenceEnumerator>(*enum_).next()) out = std::move(*s);
      } else if (auto s = std::get<SetEnumerator>(*enum_).next()) {
        out = std::move(*s);
      }
      if (out) {
        last_k_ = k_;
        return out;
      }
      enum_.reset();
      ++k_;
    }
    return std::nullopt;
  }

  [[nodiscard]] int last_k() const { return last_k_; }

 private:
  void open() {
    if (sequences_)
      enum_.emplace(std::in_place_type<SequenceEnumerator>, k_, cfg_.max_elem, cfg_.mult_max, kind_);
    else
      enum_.emplace(std::in_place_type<SetEnumerator>, k_, cfg_.max_elem, kind_);
  }

  const SweepConfig& cfg_;
  EnumKind kind_;
  bool sequences_;
  int k_;
  int last_k_ = 0;
  std::optional<std::variant<SetEnumerator, SequenceEnumerator>> enum_;
};

struct Partial {
  std::uint64_t objects = 0;
  StatusCounts counts;
  InverseCounts inverse;
  std::vector<std::string> witnesses;
  std::vector<Finding> violations;
  std::vector<Finding> structure_failures;
  std::uint64_t monotonicity_inversions = 0;
  std::exception_ptr error;
  std::string error_context;
};

// Measurements for one object, shared by every parameter value.
class ObjectCache {
 public:
  ObjectCache(const Instance& inst, Int restricted_cap) : inst_(inst), restricted_cap_(restricted_cap) {}

  Int min_card(Int alpha) {
    const Int size = object_size(inst_);
    ensure_table(size);
    return static_cast<Int>(table_->count(alpha, size));
  }
  Int restricted(Int h) {
    if (!small_) small_.emplace(CardinalityTable::for_set(inst_.set(), restricted_cap_));
    return static_cast<Int>(small_->count(h, h));
  }
  Int hfold(Int h) {
    auto [it, fresh] = hfold_.try_emplace(h, 0);
    if (fresh) it->second = fold_count(inst_.values(), h, false);
    return it->second;
  }
  Int aux(const AuxRequest& req) { return req.with_zero ? fold_count(inst_.values(), req.fold, true) : hfold(req.fold); }

  Int measured(TheoremId t, const Instance& inst) {
    const auto& meta = info(t);
    const Int h = meta.fixed_h ? meta.fixed_h : inst.h.value_or(0);
    switch (meta.measure) {
      case Measure::HFold: return hfold(h);
      case Measure::RestrictedHFold: return restricted(h);
      case Measure::SubsetSums:
      case Measure::SubseqSums: return min_card(1);
      case Measure::SubsetMinCard:
      case Measure::SubseqMinCard: return min_card(*inst.alpha);
    }
    return 0;
  }

 private:
  void ensure_table(Int cap) {
    if (table_) return;
    table_.emplace(inst_.is_sequence() ? CardinalityTable::for_sequence(inst_.sequence(), cap)
                                       : CardinalityTable::for_set(inst_.set(), cap));
  }

  const Instance& inst_;
  Int restricted_cap_;
  std::optional<CardinalityTable> table_;  // all cardinalities
  std::optional<CardinalityTable> small_;  // up to restricted_cap_
  std::map<Int, Int> hfold_;
};

struct Plan {
  TheoremId theorem;
  BoundVariant variant;
  Parameter parameter;
  Int h_lo = 0, h_hi = 0;  // h_hi 0: up to |A|
  bool all_alpha = true;
  std::vector<Int> alphas;
  std::size_t cap = 1000;
  bool check_monotone = false;
};

void push_capped(std::vector<std::string>& list, std::string item, std::size_t cap) {
  if (list.size() < cap) list.push_back(std::move(item));
}

void run_pair(const Plan& plan, Instance& inst, ObjectCache& cache, Partial& part) {
  const TheoremId t = plan.theorem;
  const auto app = applicable(t, inst);
  if (!app) {
    ++part.counts.inapplicable;
    return;
  }
  if (const auto req = auxiliary_request(t, inst)) inst.aux[std::string(req->key)] = cache.aux(*req);
  const Judgement j = judge(t, inst, cache.measured(t, inst), plan.variant);
  switch (j.status) {
    case Status::Pass: ++part.counts.pass; break;
    case Status::Equality:
      ++part.counts.equality;
      push_capped(part.witnesses, inst.to_string(), plan.cap + 1);
      break;
    case Status::Violation:
      ++part.counts.violation;
      if (part.violations.size() <= plan.cap) part.violations.push_back({inst.to_string(), j.measured, j.eval.bound.to_string()});
      break;
    case Status::Inapplicable: break;
  }
  if (j.inverse == InverseStatus::StructureConfirmed) ++part.inverse.confirmed;
  if (j.inverse == InverseStatus::StructureFailed) {
    ++part.inverse.failed;
    if (part.structure_failures.size() <= plan.cap)
      part.structure_failures.push_back({inst.to_string(), j.measured, j.eval.bound.to_string()});
  }
  if (j.inverse_clause_skipped) ++part.inverse.not_checked;
}

Partial process_chunk(const Plan& plan, const std::vector<Object>& chunk) {
  Partial part;
  for (const Object& obj : chunk) {
    ++part.objects;
    Instance inst{obj, std::nullopt, std::nullopt, {}};
    try {
      const Int size = object_size(inst);
      const Int k = static_cast<Int>(inst.values().size());
      const Int fixed_h = info(plan.theorem).fixed_h;
      ObjectCache cache(inst, fixed_h ? fixed_h : (plan.h_hi ? std::min(plan.h_hi, k) : k));
      switch (plan.parameter) {
        case Parameter::None:
          run_pair(plan, inst, cache, part);
          break;
        case Parameter::H: {
          const Int hi = plan.h_hi ? plan.h_hi : k;
          for (Int h = plan.h_lo; h <= hi; ++h) {
            inst.h = h;
            inst.aux.clear();
            run_pair(plan, inst, cache, part);
          }
          break;
        }
        case Parameter::Alpha: {
          const auto visit = [&](Int alpha) {
            inst.alpha = alpha;
            inst.aux.clear();
            run_pair(plan, inst, cache, part);
          };
          if (plan.all_alpha)
            for (Int alpha = 1; alpha <= size; ++alpha) visit(alpha);
          else
            for (Int alpha : plan.alphas) visit(alpha);
          if (plan.check_monotone)
            for (Int alpha = 1; alpha < size; ++alpha)
              if (cache.min_card(alpha + 1) > cache.min_card(alpha)) ++part.monotonicity_inversions;
          break;
        }
      }
    } catch (...) {
      part.error = std::current_exception();
      part.error_context = inst.to_string();
      return part;
    }
  }
  return part;
}

void merge(VerificationReport& rep, Partial&& part, std::size_t cap) {
  rep.objects += part.objects;
  rep.counts.pass += part.counts.pass;
  rep.counts.equality += part.counts.equality;
  rep.counts.violation += part.counts.violation;
  rep.counts.inapplicable += part.counts.inapplicable;
  rep.inverse.confirmed += part.inverse.confirmed;
  rep.inverse.failed += part.inverse.failed;
  rep.inverse.not_checked += part.inverse.not_checked;
  rep.monotonicity_inversions += part.monotonicity_inversions;
  for (auto& w : part.witnesses) {
    if (rep.equality_witnesses.size() < cap)
      rep.equality_witnesses.push_back(std::move(w));
    else
      rep.witnesses_truncated = true;
  }
  for (auto& v : part.violations) {
    if (rep.violations.size() < cap)
      rep.violations.push_back(std::move(v));
    else
      rep.violations_truncated = true;
  }
  for (auto& f : part.structure_failures)
    if (rep.structure_failures.size() < cap) rep.structure_failures.push_back(std::move(f));
}

std::string join(const std::vector<Int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

constexpr std::size_t kChunk = 2048;

}  // namespace

VerificationReport verify_range(const SweepConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const TheoremInfo& meta = info(cfg.theorem);
  if (cfg.k_min < 1 || cfg.k_max < cfg.k_min) throw Error(Errc::OutOfRange, "empty k range");
  if (cfg.max_elem < 1) throw Error(Errc::OutOfRange, "max_elem must be >= 1");
  if (meta.sequence && cfg.mult_max < 1) throw Error(Errc::OutOfRange, "mult_max must be >= 1");
  if (cfg.alpha_policy == AlphaPolicy::Fixed && cfg.alphas.empty())
    throw Error(Errc::OutOfRange, "fixed alpha policy needs at least one alpha");

  Plan plan;
  plan.theorem = cfg.theorem;
  plan.variant = cfg.variant;
  plan.parameter = meta.parameter;
  plan.cap = cfg.witness_cap;
  plan.all_alpha = cfg.alpha_policy == AlphaPolicy::AllApplicable;
  plan.alphas = cfg.alphas;
  plan.check_monotone = meta.parameter == Parameter::Alpha;
  if (meta.parameter == Parameter::H) {
    plan.h_lo = cfg.h_min ? cfg.h_min : meta.default_h_min;
    plan.h_hi = cfg.h_max ? cfg.h_max : meta.default_h_max;
    if (plan.h_lo < 1 || (plan.h_hi && plan.h_hi < plan.h_lo)) throw Error(Errc::OutOfRange, "empty h range");
  }
  const EnumKind kind = cfg.kind.value_or(meta.family);

  VerificationReport rep;
  rep.theorem = cfg.theorem;
  rep.params.k_min = cfg.k_min;
  rep.params.k_max = cfg.k_max;
  rep.params.max_elem = cfg.max_elem;
  rep.params.mult_max = meta.sequence ? cfg.mult_max : 1;
  rep.params.kind = std::string(to_string(kind));
  rep.params.alpha_policy = meta.parameter != Parameter::Alpha ? "NONE"
                            : plan.all_alpha                    ? "ALL_APPLICABLE"
                                                                : join(cfg.alphas);
  rep.params.h_min = plan.h_lo;
  rep.params.h_max = plan.h_hi;
  rep.params.variant = cfg.variant == BoundVariant::Proven ? "PROVEN" : "AS_STATED";
  rep.version = std::string(kVersion);
  rep.note = std::string(meta.note);
  if (cfg.variant == BoundVariant::AsStated && !meta.erratum.empty())
    rep.note += (rep.note.empty() ? "" : " ") + std::string(meta.erratum);

  Source source(cfg, kind, meta.sequence);
  const unsigned jobs = std::max(1U, cfg.jobs);
  std::uint64_t produced = 0;
  std::optional<Object> last;
  int last_k = 0;
  bool exhausted = false;
  bool limited = false;

  while (!exhausted && !limited) {
    std::vector<std::vector<Object>> batch;
    while (batch.size() < jobs && !exhausted && !limited) {
      std::vector<Object> chunk;
      chunk.reserve(kChunk);
      while (chunk.size() < kChunk) {
        if (cfg.limit && produced == cfg.limit) {
          limited = true;
          break;
        }
        auto obj = source.next();
        if (!obj) {
          exhausted = true;
          break;
        }
        ++produced;
        chunk.push_back(std::move(*obj));
      }
      if (!chunk.empty()) {
        last = chunk.back();
        last_k = source.last_k();
        batch.push_back(std::move(chunk));
      }
    }

    std::vector<Partial> parts(batch.size());
    if (batch.size() == 1) {
      parts[0] = process_chunk(plan, batch[0]);
    } else {
      std::vector<std::jthread> workers;
      workers.reserve(batch.size());
      for (std::size_t i = 0; i < batch.size(); ++i)
        workers.emplace_back([&, i] { parts[i] = process_chunk(plan, batch[i]); });
    }
    for (auto& part : parts) {
      if (part.error) {
        try {
          std::rethrow_exception(part.error);
        } catch (const Error& e) {
          throw Error(e.code(), std::string(e.what()) + " [" + std::string(meta.tag) + " on " + part.error_context + "]");
        }
      }
      merge(rep, std::move(part), cfg.witness_cap);
    }
  }

  // A limited sweep is only finished if nothing follows the last object.
  if (limited && !source.next()) limited = false;
  rep.cursor = limited && last ? encode_cursor(last_k, *last) : std::string(kCursorDone);
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

TightnessResult conjecture1_tightness(Int k, Int a_last) {
  if (k < 8) throw Error(Errc::OutOfRange, "tightness construction needs k >= 8");
  if (a_last < k - 1) throw Error(Errc::OutOfRange, "tightness construction needs a_last >= k - 1");
  std::vector<Int> elems;
  for (Int i = 0; i <= k - 3; ++i) elems.push_back(i);
  elems.push_back(a_last - 1);
  elems.push_back(a_last);
  TightnessResult res;
  res.set = IntSet(std::move(elems));
  res.expected = a_last <= 2 * k - 5 ? a_last + k - 2 : 3 * k - 7;
  res.measured = static_cast<Int>(restricted_h_fold_sumset(res.set, 2).size());
  return res;
}

}  // namespace sumkit
