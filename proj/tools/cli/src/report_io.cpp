#include "sumkit_cli/report_io.hpp"

#include <cstdio>
#include <sstream>

namespace sumkit::cli {

std::optional<Format> parse_format(std::string_view text) {
  if (text == "plain") return Format::Plain;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  return std::nullopt;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

namespace {

Json findings_to_json(const std::vector<Finding>& list) {
  Json arr = Json::array();
  for (const auto& f : list) arr.push_back({{"instance", f.instance}, {"measured", f.measured}, {"bound", f.bound}});
  return arr;
}

std::vector<Finding> findings_from_json(const Json& arr) {
  std::vector<Finding> out;
  for (const auto& f : arr)
    out.push_back({f.at("instance").get<std::string>(), f.at("measured").get<Int>(), f.at("bound").get<std::string>()});
  return out;
}

}  // namespace

Json report_to_json(const VerificationReport& r) {
  Json doc;
  doc["theorem"] = std::string(to_string(r.theorem));
  doc["params"] = {
      {"k_min", r.params.k_min},       {"k_max", r.params.k_max},   {"max_elem", r.params.max_elem},
      {"mult_max", r.params.mult_max}, {"alpha_policy", r.params.alpha_policy},
      {"kind", r.params.kind},         {"h_min", r.params.h_min},   {"h_max", r.params.h_max},
      {"variant", r.params.variant},
  };
  doc["objects"] = r.objects;
  doc["counts"] = {{"pass", r.counts.pass},
                   {"equality", r.counts.equality},
                   {"violation", r.counts.violation},
                   {"inapplicable", r.counts.inapplicable}};
  doc["inverse"] = {{"confirmed", r.inverse.confirmed},
                    {"failed", r.inverse.failed},
                    {"not_checked", r.inverse.not_checked}};
  doc["equality_witnesses"] = r.equality_witnesses;
  doc["witnesses_truncated"] = r.witnesses_truncated;
  doc["violations"] = findings_to_json(r.violations);
  doc["violations_truncated"] = r.violations_truncated;
  doc["structure_failures"] = findings_to_json(r.structure_failures);
  doc["monotonicity_inversions"] = r.monotonicity_inversions;
  doc["cursor"] = r.cursor;
  doc["version"] = r.version;
  doc["note"] = r.note;
  return doc;
}

VerificationReport report_from_json(const Json& doc) {
  try {
    VerificationReport r;
    const auto tag = doc.at("theorem").get<std::string>();
    const auto id = parse_theorem_id(tag);
    if (!id) throw Error(Errc::Parse, "unknown theorem '" + tag + "'");
    r.theorem = *id;
    const auto& p = doc.at("params");
    r.params.k_min = p.at("k_min").get<int>();
    r.params.k_max = p.at("k_max").get<int>();
    r.params.max_elem = p.at("max_elem").get<Int>();
    r.params.mult_max = p.at("mult_max").get<Int>();
    r.params.alpha_policy = p.at("alpha_policy").get<std::string>();
    r.params.kind = p.at("kind").get<std::string>();
    r.params.h_min = p.at("h_min").get<Int>();
    r.params.h_max = p.at("h_max").get<Int>();
    r.params.variant = p.at("variant").get<std::string>();
    r.objects = doc.at("objects").get<std::uint64_t>();
    const auto& c = doc.at("counts");
    r.counts = {c.at("pass").get<std::uint64_t>(), c.at("equality").get<std::uint64_t>(),
                c.at("violation").get<std::uint64_t>(), c.at("inapplicable").get<std::uint64_t>()};
    const auto& inv = doc.at("inverse");
    r.inverse = {inv.at("confirmed").get<std::uint64_t>(), inv.at("failed").get<std::uint64_t>(),
                 inv.at("not_checked").get<std::uint64_t>()};
    r.equality_witnesses = doc.at("equality_witnesses").get<std::vector<std::string>>();
    r.witnesses_truncated = doc.at("witnesses_truncated").get<bool>();
    r.violations = findings_from_json(doc.at("violations"));
    r.violations_truncated = doc.at("violations_truncated").get<bool>();
    r.structure_failures = findings_from_json(doc.at("structure_failures"));
    r.monotonicity_inversions = doc.at("monotonicity_inversions").get<std::uint64_t>();
    r.cursor = doc.at("cursor").get<std::string>();
    r.version = doc.at("version").get<std::string>();
    r.note = doc.at("note").get<std::string>();
    return r;
  } catch (const Json::exception& e) {
    throw Error(Errc::Parse, std::string("malformed report: ") + e.what());
  }
}

std::string render_report(const VerificationReport& r, Format format) {
  std::ostringstream os;
  const std::string tag(to_string(r.theorem));
  switch (format) {
    case Format::Json:
      os << report_to_json(r).dump(2) << '\n';
      break;
    case Format::Csv: {
      os << "theorem,record,instance,value,bound\n";
      const auto row = [&](std::string_view record, std::string_view instance, const std::string& value,
                           std::string_view bound) {
        os << tag << ',' << record << ',' << csv_field(instance) << ',' << value << ',' << csv_field(bound) << '\n';
      };
      row("pass", "", std::to_string(r.counts.pass), "");
      row("equality", "", std::to_string(r.counts.equality), "");
      row("violation", "", std::to_string(r.counts.violation), "");
      row("inapplicable", "", std::to_string(r.counts.inapplicable), "");
      for (const auto& w : r.equality_witnesses) row("equality_witness", w, "", "");
      for (const auto& v : r.violations) row("violation_instance", v.instance, std::to_string(v.measured), v.bound);
      for (const auto& f : r.structure_failures)
        row("structure_failure", f.instance, std::to_string(f.measured), f.bound);
      row("cursor", r.cursor, "", "");
      break;
    }
    case Format::Plain: {
      os << tag << "  k=" << r.params.k_min << ".." << r.params.k_max << "  max_elem=" << r.params.max_elem;
      if (r.params.mult_max > 1) os << "  mult_max=" << r.params.mult_max;
      os << "  kind=" << r.params.kind;
      if (r.params.alpha_policy != "NONE") os << "  alpha=" << r.params.alpha_policy;
      if (r.params.h_min) os << "  h=" << r.params.h_min << ".." << (r.params.h_max ? std::to_string(r.params.h_max) : "k");
      if (r.params.variant != "PROVEN") os << "  variant=" << r.params.variant;
      os << '\n';
      os << "objects " << r.objects << "  pass " << r.counts.pass << "  equality " << r.counts.equality
         << "  violation " << r.counts.violation << "  inapplicable " << r.counts.inapplicable << '\n';
      if (r.inverse.confirmed || r.inverse.failed)
        os << "structure confirmed " << r.inverse.confirmed << "  failed " << r.inverse.failed << '\n';
      if (!r.equality_witnesses.empty()) {
        os << "equality witnesses (" << r.equality_witnesses.size() << (r.witnesses_truncated ? ", truncated" : "")
           << "):";
        for (std::size_t i = 0; i < r.equality_witnesses.size() && i < 20; ++i) os << "  " << r.equality_witnesses[i];
        if (r.equality_witnesses.size() > 20) os << "  ...";
        os << '\n';
      }
      for (const auto& v : r.violations)
        os << "VIOLATION " << v.instance << "  measured " << v.measured << " < " << v.bound << '\n';
      for (const auto& f : r.structure_failures)
        os << "STRUCTURE_FAILED " << f.instance << "  measured " << f.measured << '\n';
      if (r.monotonicity_inversions) os << "monotonicity inversions " << r.monotonicity_inversions << '\n';
      if (!r.note.empty()) os << "note: " << r.note << '\n';
      char elapsed[32];
      std::snprintf(elapsed, sizeof elapsed, "%.3f", r.elapsed_seconds);
      os << "cursor " << r.cursor << "  elapsed " << elapsed << "s\n";
      break;
    }
  }
  return os.str();
}

Json catalog_to_json() {
  Json arr = Json::array();
  for (const auto& e : catalog()) {
    Json entry{{"id", std::string(e.tag)},
               {"statement", std::string(e.statement)},
               {"hypotheses", std::string(e.hypotheses)},
               {"measures", std::string(e.measures)},
               {"conjecture", e.conjecture}};
    if (!e.auxiliary.empty()) entry["auxiliary"] = std::string(e.auxiliary);
    if (!e.inverse.empty()) entry["inverse"] = std::string(e.inverse);
    if (!e.erratum.empty()) entry["erratum"] = std::string(e.erratum);
    if (!e.note.empty()) entry["note"] = std::string(e.note);
    arr.push_back(std::move(entry));
  }
  return arr;
}

std::string render_catalog(Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Json:
      os << catalog_to_json().dump(2) << '\n';
      break;
    case Format::Csv:
      os << "id,statement,hypotheses,measures,conjecture\n";
      for (const auto& e : catalog())
        os << e.tag << ',' << csv_field(e.statement) << ',' << csv_field(e.hypotheses) << ',' << csv_field(e.measures)
           << ',' << (e.conjecture ? "true" : "false") << '\n';
      break;
    case Format::Plain:
      for (const auto& e : catalog()) {
        os << e.tag << (e.conjecture ? "  [conjecture]" : "") << "\n  measures:   " << e.measures
           << "\n  hypotheses: " << e.hypotheses << "\n  bound:      " << e.statement << '\n';
        if (!e.auxiliary.empty()) os << "  auxiliary:  " << e.auxiliary << '\n';
        if (!e.inverse.empty()) os << "  inverse:    " << e.inverse << '\n';
        if (!e.erratum.empty()) os << "  erratum:    " << e.erratum << '\n';
        if (!e.note.empty()) os << "  note:       " << e.note << '\n';
      }
      break;
  }
  return os.str();
}

}  // namespace sumkit::cli
