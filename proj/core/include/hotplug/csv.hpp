#pragma once

#include <hotplug/rational.hpp>

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace hotplug {

/// One emitted curve sample or breakpoint: which curve it belongs to plus the
/// exact (M, R) pair.
struct CurveRow {
  std::string scheme;
  TradeoffPoint point;

  bool operator==(const CurveRow&) const = default;
};

/// Writes `scheme,M_num,M_den,R_num,R_den,M_decimal,R_decimal` rows with a
/// header, LF line endings, exact numerator/denominator columns and 6-place
/// decimals (display only).
void write_tradeoff_csv(std::ostream& out, std::span<const CurveRow> rows);

/// Parses the exact format produced by write_tradeoff_csv; the rational
/// columns are authoritative, so a round trip reproduces the input exactly.
/// Throws std::invalid_argument on malformed input.
std::vector<CurveRow> parse_tradeoff_csv(std::istream& in);

}  // namespace hotplug
