#pragma once

#include "cesaro/measure.hpp"
#include "cesaro/numerics.hpp"
#include "cesaro/series.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace cesaro {

/// Shortest decimal string that reads back to the same double.
std::string format_double(double x);

/// Measure config files:
///   {"type": "lebesgue"}
///   {"type": "power_density", "alpha": -0.5, "scale": 1}
///   {"type": "atomic", "points": [...], "weights": [...]}
///   {"type": "dyadic", "weight_exponent": 1, "count": 48}
///   {"type": "mixture", "components": [ ... ]}
/// Throws ValidationError on malformed input or an invalid measure.
Measure measure_from_json(const std::string& text);
Measure load_measure(const std::filesystem::path& path);
std::string measure_to_json(const Measure& mu);

/// One coefficient per line, "re" or "re im"; blank lines and lines
/// starting with '#' are skipped.
PowerSeries read_coefficients(std::istream& in);
PowerSeries load_coefficients(const std::filesystem::path& path);
void write_coefficients(std::ostream& out, const PowerSeries& f);

/// "level,value" header followed by one row per level.
void write_trace_csv(std::ostream& out, const std::vector<int>& levels, const std::vector<double>& values);

}  // namespace cesaro
