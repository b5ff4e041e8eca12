#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "sumkit/verifier.hpp"

namespace sumkit::cli {

enum class Format { Plain, Json, Csv };

std::optional<Format> parse_format(std::string_view text);

using Json = nlohmann::ordered_json;

Json report_to_json(const VerificationReport& report);
/// Inverse of report_to_json; throws Errc::Parse on schema mismatch.
VerificationReport report_from_json(const Json& doc);

/// Plain output includes the elapsed time; JSON and CSV do not, so they are
/// reproducible byte for byte.
std::string render_report(const VerificationReport& report, Format format);

Json catalog_to_json();
std::string render_catalog(Format format);

/// RFC 4180 quoting when the field contains a comma, quote or newline.
std::string csv_field(std::string_view text);

}  // namespace sumkit::cli
