#include "sumkit_cli/commands.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "sumkit/oracle.hpp"
#include "sumkit/sumset.hpp"
#include "sumkit/verifier.hpp"
#include "sumkit/version.hpp"
#include "sumkit_cli/report_io.hpp"

namespace sumkit::cli {

namespace {

struct Common {
  std::string format = "plain";
  std::string out_path;
  unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
  std::optional<long long> seed;  // accepted for interface stability; sweeps are exhaustive
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->set_help_flag("--help", "Print this help message and exit");  // -h would clash with --h
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"plain", "json", "csv"}));
  cmd->add_option("--out", c.out_path, "Write output to this file instead of stdout");
  cmd->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", c.seed, "Reserved; every sweep is exhaustive and deterministic");
}

// A usage problem tied to a specific flag.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto with_flag(std::string_view flag, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

std::string valid_tags() {
  std::string out;
  for (const auto& e : catalog()) out += (out.empty() ? "" : ", ") + std::string(e.tag);
  return out;
}

struct ComputeArgs {
  std::string set, values, mult;
  std::optional<Int> h, alpha;
  bool restricted = false, subset_sums = false, subseq_sums = false, bounded = false, oracle = false;
};

SumSet compute(const ComputeArgs& a) {
  const bool have_set = !a.set.empty();
  const bool have_seq = !a.values.empty() || !a.mult.empty();
  if (have_set == have_seq) throw UsageError("exactly one input is required: --set, or --values with --mult");
  if (have_seq && (a.values.empty() || a.mult.empty())) throw UsageError("--values and --mult must be given together");
  const int modes = int(a.h.has_value()) + int(a.subset_sums) + int(a.subseq_sums);
  if (modes != 1) throw UsageError("choose exactly one of --h, --subset-sums, --subseq-sums");
  if (a.restricted && !a.h) throw UsageError("--restricted applies to --h");
  if ((a.alpha || a.bounded) && a.h) throw UsageError("--alpha/--bounded apply to --subset-sums or --subseq-sums");
  if (a.bounded && !a.alpha) throw UsageError("--bounded needs --alpha");

  if (have_set) {
    const IntSet set = with_flag("--set", [&] { return IntSet::parse(a.set); });
    if (a.subseq_sums) throw UsageError("--subseq-sums needs --values/--mult");
    if (a.h) {
      return with_flag("--h", [&] {
        if (a.oracle) return brute_force_oracle(set, a.restricted ? SumMode::RestrictedHFold : SumMode::HFold, *a.h);
        return a.restricted ? restricted_h_fold_sumset(set, *a.h) : h_fold_sumset(set, *a.h);
      });
    }
    return with_flag(a.alpha ? "--alpha" : "--subset-sums", [&] {
      if (a.oracle) {
        const SumMode mode = !a.alpha ? SumMode::SubsetSums : (a.bounded ? SumMode::BoundedCard : SumMode::MinCard);
        return brute_force_oracle(set, mode, a.alpha.value_or(0));
      }
      if (!a.alpha) return subset_sums(set);
      return a.bounded ? subset_sums_bounded_card(set, *a.alpha) : subset_sums_min_card(set, *a.alpha);
    });
  }

  const IntSequence seq = with_flag("--values/--mult", [&] { return IntSequence::parse(a.values, a.mult); });
  if (a.h) throw UsageError("--h needs --set");
  return with_flag(a.alpha ? "--alpha" : "--subseq-sums", [&] {
    if (a.oracle) {
      const SumMode mode = !a.alpha ? SumMode::SubsetSums : (a.bounded ? SumMode::BoundedCard : SumMode::MinCard);
      return brute_force_oracle(seq, mode, a.alpha.value_or(0));
    }
    if (!a.alpha) return subsequence_sums(seq);
    return a.bounded ? subsequence_sums_bounded_card(seq, *a.alpha) : subsequence_sums_min_card(seq, *a.alpha);
  });
}

std::string render_sums(const SumSet& s, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::Plain:
      os << s.to_string() << " (|·|=" << s.size() << ")\n";
      break;
    case Format::Json: {
      Json doc{{"operation", s.provenance()},
               {"sums", std::vector<Int>(s.sums().begin(), s.sums().end())},
               {"size", s.size()}};
      os << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      os << "sum\n";
      for (Int x : s.sums()) os << x << '\n';
      break;
  }
  return os.str();
}

struct VerifyArgs {
  std::string theorem;
  std::optional<int> k, k_min, k_max;
  Int max_elem = 0;
  Int mult_max = 2;
  std::string kind;
  std::string alpha;
  std::optional<Int> h, h_min, h_max;
  bool as_stated = false;
  std::string cursor;
  std::uint64_t limit = 0;
  std::size_t witness_cap = 1000;
};

SweepConfig sweep_config(const VerifyArgs& a, unsigned jobs) {
  SweepConfig cfg;
  const auto id = parse_theorem_id(a.theorem);
  if (!id) throw UsageError("--theorem: unknown tag '" + a.theorem + "'; valid tags: " + valid_tags());
  cfg.theorem = *id;
  if (a.k && (a.k_min || a.k_max)) throw UsageError("--k conflicts with --k-min/--k-max");
  cfg.k_min = a.k ? *a.k : a.k_min.value_or(info(*id).min_k);
  cfg.k_max = a.k ? *a.k : a.k_max.value_or(cfg.k_min);
  if (cfg.k_min < 1 || cfg.k_max < cfg.k_min) throw UsageError("--k-min/--k-max: empty k range");
  if (a.max_elem < 1) throw UsageError("--max-elem must be >= 1");
  cfg.max_elem = a.max_elem;
  cfg.mult_max = a.mult_max;
  if (!a.kind.empty()) {
    cfg.kind = parse_enum_kind(a.kind);
    if (!cfg.kind) throw UsageError("--kind: expected positive or zero");
  }
  if (!a.alpha.empty()) {
    cfg.alpha_policy = AlphaPolicy::Fixed;
    cfg.alphas = with_flag("--alpha", [&] { return parse_int_list(a.alpha); });
  }
  if (a.h && (a.h_min || a.h_max)) throw UsageError("--h conflicts with --h-min/--h-max");
  cfg.h_min = a.h ? *a.h : a.h_min.value_or(0);
  cfg.h_max = a.h ? *a.h : a.h_max.value_or(0);
  cfg.jobs = jobs;
  cfg.variant = a.as_stated ? BoundVariant::AsStated : BoundVariant::Proven;
  cfg.cursor = a.cursor;
  cfg.limit = a.limit;
  cfg.witness_cap = a.witness_cap;
  return cfg;
}

int verify_exit_code(const VerificationReport& r) {
  if (r.counts.violation > 0) return info(r.theorem).conjecture ? kExitConjectureFinding : kExitViolation;
  if (r.inverse.failed > 0 || r.monotonicity_inversions > 0) return kExitViolation;
  return kExitOk;
}

struct TightnessArgs {
  Int k = 0;
  std::optional<Int> a_last;
};

std::string render_tightness(const std::vector<TightnessResult>& rows, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::Plain:
      for (const auto& r : rows)
        os << "A = {" << r.set.to_string() << "}  expected " << r.expected << "  measured " << r.measured
           << (r.matches() ? "" : "  MISMATCH") << '\n';
      break;
    case Format::Json: {
      Json arr = Json::array();
      for (const auto& r : rows)
        arr.push_back({{"set", r.set.to_string()},
                       {"a_last", r.set.max()},
                       {"expected", r.expected},
                       {"measured", r.measured},
                       {"match", r.matches()}});
      os << arr.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      os << "set,a_last,expected,measured,match\n";
      for (const auto& r : rows)
        os << csv_field(r.set.to_string()) << ',' << r.set.max() << ',' << r.expected << ',' << r.measured << ','
           << (r.matches() ? "true" : "false") << '\n';
      break;
  }
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sumsets, subset and subsequence sums, and exhaustive checks of their lower-bound theorems", "sumkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  Common common;
  ComputeArgs ca;
  auto* compute_cmd = app.add_subcommand("compute", "Compute a sum object");
  add_common(compute_cmd, common);
  compute_cmd->add_option("--set", ca.set, "Set literal, e.g. 0,1,3");
  compute_cmd->add_option("--values", ca.values, "Sequence values, e.g. 1,2,4");
  compute_cmd->add_option("--mult", ca.mult, "Sequence multiplicities, e.g. 2,1,3");
  compute_cmd->add_option("--h", ca.h, "h-fold sumset hA");
  compute_cmd->add_flag("--restricted", ca.restricted, "Distinct summands (h^A)");
  compute_cmd->add_flag("--subset-sums", ca.subset_sums, "S(A), or S_alpha(A) with --alpha");
  compute_cmd->add_flag("--subseq-sums", ca.subseq_sums, "S(A_r), or S_alpha(A_r) with --alpha");
  compute_cmd->add_option("--alpha", ca.alpha, "Minimum cardinality alpha");
  compute_cmd->add_flag("--bounded", ca.bounded, "S_1^alpha: cardinality between 1 and size - alpha");
  compute_cmd->add_flag("--oracle", ca.oracle, "Use the brute-force oracle instead of the DP engine");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Check a theorem over every enumerated instance");
  add_common(verify_cmd, common);
  verify_cmd->add_option("--theorem", va.theorem, "Catalog tag (case-insensitive)")->required();
  verify_cmd->add_option("--k", va.k, "Cardinality (number of distinct values)");
  verify_cmd->add_option("--k-min", va.k_min, "Smallest k");
  verify_cmd->add_option("--k-max", va.k_max, "Largest k");
  verify_cmd->add_option("--max-elem", va.max_elem, "Largest element")->required();
  verify_cmd->add_option("--mult-max", va.mult_max, "Largest multiplicity (sequence theorems)")->capture_default_str();
  verify_cmd->add_option("--kind", va.kind, "positive or zero (default: the theorem's hypothesis)");
  verify_cmd->add_option("--alpha", va.alpha, "Fixed alpha list, e.g. 1,2 (default: all)");
  verify_cmd->add_option("--h", va.h, "Single h");
  verify_cmd->add_option("--h-min", va.h_min, "Smallest h");
  verify_cmd->add_option("--h-max", va.h_max, "Largest h");
  verify_cmd->add_flag("--as-stated", va.as_stated, "Check the published formula even where it is known to fail");
  verify_cmd->add_option("--cursor", va.cursor, "Resume after this cursor");
  verify_cmd->add_option("--limit", va.limit, "Stop after this many sets or sequences");
  verify_cmd->add_option("--witness-cap", va.witness_cap, "Longest witness and violation lists")->capture_default_str();

  auto* catalog_cmd = app.add_subcommand("catalog", "List every encoded theorem");
  add_common(catalog_cmd, common);

  TightnessArgs ta;
  auto* tight_cmd = app.add_subcommand("tightness", "Measure the extremal family of the restricted 2-fold conjecture");
  add_common(tight_cmd, common);
  tight_cmd->add_option("--k", ta.k, "k >= 8")->required();
  tight_cmd->add_option("--a-last", ta.a_last, "Largest element (default: every value in [k-1, 3k])");

  std::vector<const char*> argv{"sumkit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Format format = *parse_format(common.format);
    std::string body;
    int code = kExitOk;
    if (compute_cmd->parsed()) {
      body = render_sums(compute(ca), format);
    } else if (verify_cmd->parsed()) {
      const auto report = verify_range(sweep_config(va, common.jobs));
      body = render_report(report, format);
      code = verify_exit_code(report);
    } else if (catalog_cmd->parsed()) {
      body = render_catalog(format);
    } else {
      if (ta.k < 8) throw UsageError("--k: the construction needs k >= 8");
      if (ta.a_last && *ta.a_last < ta.k - 1) throw UsageError("--a-last: must be >= k - 1");
      std::vector<TightnessResult> rows;
      const Int lo = ta.a_last.value_or(ta.k - 1), hi = ta.a_last.value_or(3 * ta.k);
      for (Int a = lo; a <= hi; ++a) rows.push_back(conjecture1_tightness(ta.k, a));
      body = render_tightness(rows, format);
      for (const auto& r : rows)
        if (!r.matches()) code = kExitViolation;
    }
    if (common.out_path.empty()) {
      out << body;
    } else {
      std::ofstream file(common.out_path, std::ios::binary);
      if (!file) throw UsageError("--out: cannot open " + common.out_path);
      file << body;
    }
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace sumkit::cli
