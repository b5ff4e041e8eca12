#include "sumkit/theorem.hpp"

#include <algorithm>
#include <numeric>

namespace sumkit {

Instance Instance::of(IntSet set, std::optional<Int> alpha, std::optional<Int> h) {
  return Instance{std::move(set), alpha, h, {}};
}

Instance Instance::of(IntSequence seq, std::optional<Int> alpha, std::optional<Int> h) {
  return Instance{std::move(seq), alpha, h, {}};
}

IntSet Instance::values() const { return is_sequence() ? sequence().value_set() : set(); }

std::string Instance::to_string() const {
  std::string out = is_sequence() ? sequence().to_string() : set().to_string();
  if (h) out += " h=" + std::to_string(*h);
  if (alpha) out += " alpha=" + std::to_string(*alpha);
  return out;
}

namespace {

using enum TheoremId;

// Facts about the instance that hypotheses and formulas refer to. For
// sequences, `mult` is r_1..r_k (positive) or r_0..r_{k-1} (zero-based).
struct View {
  std::span<const Int> values;
  std::span<const Int> mult;  // empty for sets
  Int k = 0;
  Int a = 0;  // largest element
  Int size = 0;

  [[nodiscard]] Int r(Int i) const { return mult[static_cast<std::size_t>(i - 1)]; }  // 1-based
  [[nodiscard]] Int prefix(Int m) const {
    Int s = 0;
    for (Int i = 1; i <= m; ++i) s += r(i);
    return s;
  }
  // Σ_{i<=m} (i - shift) r_i
  [[nodiscard]] Int weighted(Int m, Int shift = 0) const {
    Int s = 0;
    for (Int i = 1; i <= m; ++i) s += (i - shift) * r(i);
    return s;
  }
  [[nodiscard]] Int min_mult(Int from = 1) const {
    Int best = r(from);
    for (Int i = from; i <= k; ++i) best = std::min(best, r(i));
    return best;
  }
};

View view_of(const Instance& inst) {
  View v;
  if (inst.is_sequence()) {
    const auto& s = inst.sequence();
    v.values = s.values();
    v.mult = s.multiplicities();
    v.size = s.size();
  } else {
    v.values = inst.set().elements();
    v.size = static_cast<Int>(v.values.size());
  }
  v.k = static_cast<Int>(v.values.size());
  v.a = v.values.empty() ? 0 : v.values.back();
  return v;
}

class Checker {
 public:
  explicit Checker(Applicability& out) : out_(out) {}
  Checker& require(bool cond, std::string_view reason) {
    if (out_.ok && !cond) {
      out_.ok = false;
      out_.reason = reason;
    }
    return *this;
  }
  [[nodiscard]] bool ok() const { return out_.ok; }

 private:
  Applicability& out_;
};

bool positive(const View& v) { return v.k > 0 && v.values.front() > 0; }
bool zero_based(const View& v) { return v.k > 0 && v.values.front() == 0; }
bool gcd1(const View& v) {
  Int g = 0;
  for (Int x : v.values) g = std::gcd(g, x < 0 ? -x : x);
  return g == 1;
}

Applicability check(TheoremId t, const Instance& inst) {
  Applicability res;
  Checker c(res);
  const auto& meta = info(t);
  c.require(inst.is_sequence() == meta.sequence, meta.sequence ? "sequence input required" : "set input required");
  if (!c.ok()) return res;
  const View v = view_of(inst);
  c.require(v.k >= 1, "nonempty input required");
  if (!c.ok()) return res;

  const auto need_h = [&] { c.require(inst.h.has_value(), "h required"); };
  const auto need_alpha = [&] { c.require(inst.alpha.has_value(), "α required"); };
  const Int h = inst.h.value_or(0);
  const Int al = inst.alpha.value_or(0);
  const auto pos_gcd = [&](Int kmin, std::string_view kreason) {
    c.require(v.k >= kmin, kreason).require(positive(v), "positive elements required").require(gcd1(v), "d(A) = 1 required");
  };
  const auto zero_gcd = [&](Int kmin, std::string_view kreason) {
    c.require(v.k >= kmin, kreason).require(zero_based(v), "0 = a_0 < a_1 < ... required").require(gcd1(v), "d(A) = 1 required");
  };
  const auto all_mult_at_least_2 = [&] { c.require(v.min_mult() >= 2, "r_i ≥ 2 required"); };

  switch (t) {
    case NathansonHFold:
      need_h();
      c.require(h >= 1, "h ≥ 1 required");
      break;
    case NathansonRestricted:
      need_h();
      c.require(h >= 1 && h <= v.k, "1 ≤ h ≤ |A| required");
      break;
    case Freiman3k4Structure:
      c.require(v.k >= 3, "k ≥ 3 required");
      break;
    case Freiman2aLower:
    case FlpRestricted:
    case LevRestricted:
      zero_gcd(3, "k ≥ 3 required");
      break;
    case LevHFold:
      zero_gcd(3, "k ≥ 3 required");
      need_h();
      c.require(h >= 2, "h ≥ 2 required");
      break;
    case FreimanLevConjecture:
      zero_gcd(8, "k > 7 required");
      break;
    case BpSubsetMin:
      c.require(positive(v), "positive elements required");
      need_alpha();
      c.require(al >= 1 && al <= v.k, "1 ≤ α ≤ k required");
      break;
    case BpSubseqMin:
      c.require(positive(v), "positive elements required");
      need_alpha();
      c.require(al >= 1 && al < v.size, "1 ≤ α < Σr_i required");
      break;
    case SubsetMinLemmaA:
    case SubseqMinR1:
      c.require(positive(v), "positive elements required");
      break;
    case SubseqMinR2:
      c.require(positive(v), "positive elements required");
      all_mult_at_least_2();
      break;
    case SubsetFreimanPos:
      pos_gcd(3, "k ≥ 3 required");
      break;
    case SubsetFreimanZero:
      zero_gcd(4, "k ≥ 4 required");
      break;
    case SubseqFreimanPos:
      pos_gcd(1, "k ≥ 1 required");
      break;
    case SubseqFreimanR2:
      pos_gcd(1, "k ≥ 1 required");
      all_mult_at_least_2();
      break;
    case SubseqFreimanZero:
      zero_gcd(2, "k ≥ 2 required");
      break;
    case AlphaSubsetPos:
      pos_gcd(3, "k ≥ 3 required");
      need_alpha();
      c.require(al >= 1 && al <= v.k - 2, "1 ≤ α ≤ k − 2 required");
      break;
    case AlphaSubsetZero:
      zero_gcd(4, "k ≥ 4 required");
      need_alpha();
      c.require(al >= 1 && al <= v.k - 2, "1 ≤ α ≤ k − 2 required");
      break;
    case AlphaSeqLast:
      pos_gcd(3, "k ≥ 3 required");
      need_alpha();
      c.require(al == v.size - 2, "α = Σr_i − 2 required");
      break;
    case AlphaSeqR2Small:
      pos_gcd(3, "k ≥ 3 required");
      all_mult_at_least_2();
      need_alpha();
      c.require(al >= 1, "α ≥ 1 required");
      if (c.ok()) c.require(al < v.size - v.min_mult(), "α < Σr_i − r required");
      break;
    case AlphaSeqR2Large:
      pos_gcd(3, "k ≥ 3 required");
      all_mult_at_least_2();
      need_alpha();
      c.require(al >= 1, "α ≥ 1 required");
      if (c.ok()) c.require(al >= v.size - v.min_mult(), "α ≥ Σr_i − r required");
      c.require(al < v.size - 2, "α < Σr_i − 2 required");
      break;
    case AlphaSeqR1Main:
      pos_gcd(3, "k ≥ 3 required");
      if (c.ok()) c.require(!(v.r(v.k - 1) == 1 && v.r(v.k) >= 2), "not (r_{k−1} = 1 and r_k ≥ 2) required");
      need_alpha();
      c.require(al >= 1 && al < v.size - 2, "1 ≤ α < Σr_i − 2 required");
      break;
    case AlphaSeqR1Special:
      pos_gcd(3, "k ≥ 3 required");
      if (c.ok()) c.require(v.r(v.k - 1) == 1, "r_{k−1} = 1 required").require(v.r(v.k) >= 2, "r_k ≥ 2 required");
      need_alpha();
      c.require(al >= 1 && al < v.size - 2, "1 ≤ α < Σr_i − 2 required");
      break;
    case AlphaSeqZeroLast:
      zero_gcd(4, "k ≥ 4 required");
      need_alpha();
      c.require(al == v.size - 2, "α = Σr_i − 2 required");
      break;
    case AlphaSeqZeroR2:
      zero_gcd(4, "k ≥ 4 required");
      if (c.ok()) c.require(v.min_mult(2) >= 2, "min(r_1, …, r_{k−1}) ≥ 2 required");
      need_alpha();
      c.require(al >= 1 && al < v.size - 2, "1 ≤ α < Σr_i − 2 required");
      break;
    case AlphaSeqZeroR1:
      zero_gcd(4, "k ≥ 4 required");
      if (c.ok()) c.require(v.min_mult(2) == 1, "min(r_1, …, r_{k−1}) = 1 required");
      need_alpha();
      c.require(al >= 1 && al < v.size - 2, "1 ≤ α < Σr_i − 2 required");
      break;
  }
  return res;
}

ExactBound golden(Int q, Int p) { return ExactBound::golden(Rational(q), Rational(p)); }

Int aux_value(const Instance& inst, std::string_view key) {
  const auto it = inst.aux.find(key);
  if (it == inst.aux.end()) throw Error(Errc::MissingInput, "auxiliary cardinality " + std::string(key) + " required");
  return it->second;
}

Int m_of(const View& v, Int alpha) { return m_index(v.mult, alpha); }

}  // namespace

Applicability applicable(TheoremId t, const Instance& inst) { return check(t, inst); }

std::optional<AuxRequest> auxiliary_request(TheoremId t, const Instance& inst) {
  if (!check(t, inst)) return std::nullopt;
  const View v = view_of(inst);
  switch (t) {
    case LevHFold:
      return AuxRequest{kAuxHMinus1, *inst.h - 1, false};
    case SubseqFreimanR2:
      return AuxRequest{kAuxRMinus1WithZero, v.min_mult() - 1, true};
    case AlphaSeqR2Small:
      return AuxRequest{kAuxRMinus1WithZero, v.min_mult() - 1, true};
    case SubseqFreimanZero:
      if (v.min_mult(2) >= 2) return AuxRequest{kAuxRMinus1, v.min_mult(2) - 1, false};
      return std::nullopt;
    case AlphaSeqZeroR2:
      if (*inst.alpha < v.size - v.min_mult(2)) return AuxRequest{kAuxRMinus1, v.min_mult(2) - 1, false};
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

Evaluation evaluate_bound(TheoremId t, const Instance& inst, BoundVariant variant) {
  if (const auto app = check(t, inst); !app) throw Error(Errc::Precondition, std::string(to_string(t)) + ": " + app.reason);
  const bool stated = variant == BoundVariant::AsStated;
  const View v = view_of(inst);
  const Int k = v.k, a = v.a;
  const Int h = inst.h.value_or(0);
  const Int al = inst.alpha.value_or(0);
  const Int n = v.size;
  const auto tri = [](Int x) { return x * (x + 1) / 2; };
  const auto pick = [&](bool small, std::string_view small_label, ExactBound lo, std::string_view large_label,
                        ExactBound hi, std::string prefix = {}) {
    return Evaluation{small ? lo : hi, prefix + std::string(small ? small_label : large_label)};
  };

  switch (t) {
    case NathansonHFold:
      return {ExactBound(h * k - h + 1), ""};
    case NathansonRestricted:
      return {ExactBound(h * k - h * h + 1), ""};
    case Freiman3k4Structure:
      return {ExactBound(2 * k - 1), ""};
    case Freiman2aLower:
      return pick(a <= 2 * k - 3, "a_{k-1} <= 2k-3", a + k, "a_{k-1} >= 2k-2", 3 * k - 3);
    case LevHFold:
      return {ExactBound(aux_value(inst, kAuxHMinus1) + std::min(a, h * (k - 2) + 1)), ""};
    case FreimanLevConjecture:
      return pick(a <= 2 * k - 5, "a_{k-1} <= 2k-5", a + k - 2, "a_{k-1} >= 2k-4", 3 * k - 7);
    case FlpRestricted:
      return pick(a <= 2 * k - 3, "a_{k-1} <= 2k-3", ExactBound(Rational(a + k, 2) + Rational(2 * k - 7, 2)),
                  "a_{k-1} >= 2k-2", ExactBound(Rational(5 * k - 10, 2)));
    case LevRestricted:
      return pick(a <= 2 * k - 5, "a_{k-1} <= 2k-5", a + k - 2, "a_{k-1} >= 2k-4", golden(k, k - 6));
    case BpSubsetMin:
      return {ExactBound(tri(k) - tri(al) + 1), ""};
    case BpSubseqMin: {
      const Int m = m_of(v, al);
      return {ExactBound(v.weighted(k) - v.weighted(m) + m * (v.prefix(m) - al) + 1), "m=" + std::to_string(m)};
    }
    case SubsetMinLemmaA:
      return {ExactBound(tri(k)), ""};
    case SubsetFreimanPos: {
      const Int c = k * (k - 1) / 2;
      return pick(a <= 2 * k - 3, "a_k <= 2k-3", a + c, "a_k >= 2k-2", golden(k + 1, c - 4));
    }
    case SubsetFreimanZero: {
      const Int c = (k - 1) * (k - 2) / 2;
      return pick(a <= 2 * k - 5, "a_{k-1} <= 2k-5", a + c + 1, "a_{k-1} >= 2k-4", golden(k, c - 3));
    }
    case SubseqMinR1:
    case SubseqMinR2:
      return {ExactBound(v.weighted(k)), ""};
    case SubseqFreimanPos: {
      const Int w = v.weighted(k);
      return pick(a <= 2 * k - 3, "a_k <= 2k-3", w + a - k, "a_k >= 2k-2", golden(k + 1, w - k - 4));
    }
    case SubseqFreimanR2: {
      const Int r = v.min_mult();
      return {ExactBound(aux_value(inst, kAuxRMinus1WithZero) + std::min(a, r * (k - 1) + 1) - 1 +
                         v.weighted(k - 1) + k * (v.r(k) - r)),
              "r=" + std::to_string(r)};
    }
    case SubseqFreimanZero: {
      const Int r = v.min_mult(2);
      if (r >= 2)
        return {ExactBound(aux_value(inst, kAuxRMinus1) + std::min(a, r * (k - 2) + 1) + v.weighted(k - 1, 1) +
                           (k - 1) * (v.r(k) - r)),
                "r>=2"};
      const Int w = v.weighted(k, 1);
      return pick(a <= 2 * k - 5, "a_{k-1} <= 2k-5", a - k + 2 + w, "a_{k-1} >= 2k-4", golden(k, w - k - 2),
                  "r=1, ");
    }
    case AlphaSubsetPos: {
      const Int c = k * (k - 1) / 2 - tri(al) + 1;
      return pick(a <= 2 * k - 3, "a_k <= 2k-3", a + c, "a_k >= 2k-2", golden(k + 1, c - 4));
    }
    case AlphaSubsetZero: {
      const Int c = (k - 1) * (k - 2) / 2 - al * (al - 1) / 2 + (stated ? 2 : 1);
      return pick(a <= 2 * k - 5, "a_{k-1} <= 2k-5", a + c, "a_{k-1} >= 2k-4", golden(k, c - 4));
    }
    case AlphaSeqLast: {
      if (v.min_mult() == 1)
        return pick(a <= 2 * k - 3, "a_k <= 2k-3", a + k, "a_k >= 2k-2", golden(k + 1, k + 1 - (stated ? 4 : 5)),
                    "r=1, ");
      return pick(a <= 2 * k - 1, "a_k <= 2k-1", a + k + 1, "a_k >= 2k", 3 * k, "r>=2, ");
    }
    case AlphaSeqR2Small: {
      const Int r = v.min_mult();
      const Int m = m_of(v, al);
      return {ExactBound(aux_value(inst, kAuxRMinus1WithZero) + std::min(a, r * (k - 1) + 1) + v.weighted(k - 1) -
                         v.weighted(m) + m * (v.prefix(m) - al) + k * (v.r(k) - r)),
              "m=" + std::to_string(m)};
    }
    case AlphaSeqR2Large: {
      const Int tail = k * (n - al);
      const Int e = stated ? 1 : 0;
      return pick(a <= 2 * k - 1, "a_k <= 2k-1", a - k + 1 + e + tail, "a_k >= 2k", k + e + tail);
    }
    case AlphaSeqR1Main: {
      if (al < v.prefix(k - 1) - 1) {
        const Int m = m_of(v, al);
        const Int tt = v.weighted(k) - v.weighted(m) + m * (v.prefix(m) - al);
        return pick(a <= 2 * k - 3, "a_k <= 2k-3", a - k + 1 + tt, "a_k >= 2k-2", golden(k + 1, tt - k - 3),
                    "case (1), m=" + std::to_string(m) + ", ");
      }
      const Int tail = k * (n - al);
      return pick(a <= 2 * k - 3, "a_k <= 2k-3", a - k + tail, "a_k >= 2k-2", golden(k + 1, tail - k - 4),
                  "case (2), ");
    }
    case AlphaSeqR1Special: {
      if (al < v.prefix(k - 2)) {
        const Int m = m_of(v, al);
        const Int tt = v.weighted(k - 2) - v.weighted(m) + m * (v.prefix(m) - al) + (k - m + 1) * (v.r(k) - 1);
        return pick(a <= 2 * k - 3, "a_k <= 2k-3", a + k + tt, "a_k >= 2k-2", golden(k + 1, k - 4 + tt),
                    "case (1), m=" + std::to_string(m) + ", ");
      }
      const Int tail = (k - 1) * (n - al);
      return pick(a <= 2 * k - 3, "a_k <= 2k-3", a - k + 2 + tail, "a_k >= 2k-2", golden(k + 1, tail - k - 2),
                  "case (2), ");
    }
    case AlphaSeqZeroLast: {
      if (v.min_mult(2) == 1)
        return pick(a <= 2 * k - 5, "a_{k-1} <= 2k-5", a + k - 1, "a_{k-1} >= 2k-4", golden(k, k - 5), "r=1, ");
      return pick(a <= 2 * k - 3, "a_{k-1} <= 2k-3", a + k, "a_{k-1} >= 2k-2", 3 * k - 3, "r>=2, ");
    }
    case AlphaSeqZeroR2: {
      const Int r = v.min_mult(2);
      if (al < n - r) {
        const Int m = m_of(v, al);
        return {ExactBound(aux_value(inst, kAuxRMinus1) + std::min(a, r * (k - 2) + 1) + v.weighted(k - 1, 1) -
                           v.weighted(m, 1) + (m - 1) * (v.prefix(m) - al) + (k - 1) * (v.r(k) - r)),
                "case (1), m=" + std::to_string(m)};
      }
      const Int tail = (k - 1) * (n - al);
      return pick(a <= 2 * k - 3, "a_{k-1} <= 2k-3", a - k + 2 + tail, "a_{k-1} >= 2k-2", k - 1 + tail,
                  "case (2), ");
    }
    case AlphaSeqZeroR1: {
      const bool small = a <= 2 * k - 5;
      constexpr std::string_view lo = "a_{k-1} <= 2k-5", hi = "a_{k-1} >= 2k-4";
      const bool case_two = v.r(k - 1) == 1 && v.r(k) >= 2;
      if (!case_two) {
        if (al < v.prefix(k - 1) - 1) {
          const Int m = m_of(v, al);
          const Int tt = v.weighted(k, 1) - v.weighted(m, 1) + (m - 1) * (v.prefix(m) - al);
          return pick(small, lo, a - k + 2 + tt, hi, golden(k, tt - k - 2), "case (1), m=" + std::to_string(m) + ", ");
        }
        const Int tail = (k - 1) * (n - al);
        return pick(small, lo, a - k + 1 + tail, hi, golden(k, tail - k - 3), "case (2), ");
      }
      if (al <= v.r(1)) {
        const Int w = v.weighted(k, 1);
        return pick(small, lo, a - k + 2 + w, hi, golden(k, w - k - 2), "case (3), ");
      }
      if (al < v.prefix(k - 2)) {
        const Int m = m_of(v, al);
        const Int tt =
            v.weighted(k - 1, 1) - v.weighted(m, 1) + (m - 1) * (v.prefix(m) - al) + (k - m) * (v.r(k) - 1);
        return pick(small, lo, a + 1 + tt, hi, golden(k, tt - 3), "case (4), m=" + std::to_string(m) + ", ");
      }
      const Int tail = (k - 2) * (n - al);
      return pick(small, lo, a - k + 3 + tail, hi, golden(k, tail - k - 1), "case (5), ");
    }
  }
  throw Error(Errc::InvalidArgument, "unknown theorem");
}

bool bound_holds(TheoremId t, const Instance& inst, Int observed, BoundVariant variant) {
  return evaluate_bound(t, inst, variant).bound.satisfied_by(observed);
}

bool inverse_triggered(TheoremId t, const Instance& inst, Int measured, bool attained) {
  if (!check(t, inst)) return false;
  const View v = view_of(inst);
  switch (t) {
    case NathansonHFold:
      return attained && *inst.h >= 2;
    case NathansonRestricted:
      return attained && v.k >= 5 && *inst.h >= 2 && *inst.h <= v.k - 2;
    case Freiman3k4Structure:
      return measured <= 3 * v.k - 4;
    case SubsetMinLemmaA:
    case SubseqMinR1:
    case SubseqMinR2:
      return attained && v.k >= 4;
    case BpSubsetMin:
      return attained && v.k >= 4 && *inst.alpha <= v.k - 2;
    case BpSubseqMin:
      return attained && v.k >= 4 && *inst.alpha <= v.size - 2;
    default:
      return false;
  }
}

std::optional<bool> equality_characterization(TheoremId t, const Instance& inst, Int measured) {
  switch (t) {
    case NathansonHFold:
    case NathansonRestricted:
      return is_arithmetic_progression(inst.values());
    case Freiman3k4Structure: {
      const IntSet values = inst.values();
      const auto k = static_cast<Int>(values.size());
      const Int b = measured - (2 * k - 1);
      return ap_cover_length(values) <= k + b;
    }
    case SubsetMinLemmaA:
    case BpSubsetMin:
    case SubseqMinR1:
    case SubseqMinR2:
    case BpSubseqMin:
      return is_dilated_initial_interval(inst.values().elements());
    default:
      return std::nullopt;
  }
}

}  // namespace sumkit
