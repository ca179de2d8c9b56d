#ifndef CUSPFILL_REPORT_IO_HPP
#define CUSPFILL_REPORT_IO_HPP

// Text, JSON and CSV renderings of reports, plus the literal grammars used on
// the command line.

#include "cuspfill/filling_bounds.hpp"
#include "cuspfill/verifiers.hpp"

#include <json.hpp>

#include <complex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace cuspfill::io {

inline constexpr int kDefaultPrecisionDigits = 12;

// Significant digits for text and CSV output, from CUSPFILL_PRECISION_DIGITS
// (1..17, default 12). Never affects computation.
int precision_digits();

std::string format_number(double value, int digits);

// `<real>[+|-]<real>i`, no whitespace, e.g. "1.5-0.25i" or "-2e-3+1E2i".
std::optional<std::complex<double>> parse_complex_literal(std::string_view text);

// "p,q"
std::optional<std::pair<std::int64_t, std::int64_t>> parse_slope(std::string_view text);

struct IntRange {
    std::int64_t first = 0;
    std::int64_t last = 0;
};

// "a..b" with a <= b.
std::optional<IntRange> parse_range(std::string_view text);

// Key order is part of the output contract, hence ordered_json.
nlohmann::ordered_json to_json(const filling::PipelineReport& report);
nlohmann::ordered_json to_json(const verify::TrialReport& report);

void write_text(std::ostream& out, const filling::PipelineReport& report, int digits);
void write_text(std::ostream& out, const verify::TrialReport& report, int digits);

// Header genus,n,admissible,min_n,length_lo,length_hi,intro_lo,intro_hi;
// rows in (genus, n) order, LF line endings. Throws GenusTooSmall when the
// genus range starts below 2.
void write_bounds_table(std::ostream& out, const IntRange& genus, const IntRange& n, int digits);

} // namespace cuspfill::io

#endif
