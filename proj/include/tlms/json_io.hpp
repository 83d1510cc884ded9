#pragma once

#include <string>
#include <vector>

#include "tlms/geometry.hpp"
#include "tlms/interpolate.hpp"
#include "tlms/verify.hpp"

namespace tlms {

// Canonical 17-significant-digit shortest-faithful float text. Parsing this
// back recovers the exact double, so emit(parse(emit(x))) is byte-stable.
std::string fmt17(double v);

std::string read_text_file(const std::string& path);
// Writes via a sibling temp file plus rename so readers never observe a
// partial file.
void write_text_file_atomic(const std::string& path, const std::string& content);

// Parsers accept any whitespace/key order produced by hand editing; emitters
// produce one canonical form: fixed key order, entries sorted by degree,
// 17-digit floats, LF newline at end of file.
SplitFourierSeries parse_series_json(const std::string& text);
SplitCurve parse_curve_json(const std::string& text);
Surface parse_surface_json(const std::string& text);

std::string emit_series_json(const SplitFourierSeries& s);
std::string emit_curve_json(const SplitCurve& c);
std::string emit_surface_json(const Surface& s);
std::string emit_report_json(const VerificationReport& r);
std::string emit_search_report_json(const std::vector<RadiusCandidate>& candidates,
                                    const Surface* best);
std::string emit_error_json(const std::string& kind, const std::string& message);

}  // namespace tlms
