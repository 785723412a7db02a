#include "hotplug/csv.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hotplug {

namespace {

constexpr const char* kHeader = "scheme,M_num,M_den,R_num,R_den,M_decimal,R_decimal";

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    fields.push_back(std::move(current));
    return fields;
}

Rational rational_from(const std::string& num, const std::string& den) {
    try {
        BigInt n(num), d(den);
        if (d == 0) throw std::invalid_argument("zero denominator");
        return Rational(n, d);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational in CSV: " + num + "/" + den);
    }
}

}  // namespace

void write_tradeoff_csv(std::ostream& out, std::span<const CurveRow> rows) {
    out << kHeader << '\n';
    for (const CurveRow& row : rows) {
        const Rational& m = row.point.memory;
        const Rational& r = row.point.load;
        out << row.scheme << ',' << numerator(m) << ',' << denominator(m) << ','
            << numerator(r) << ',' << denominator(r) << ','
            << to_decimal_string(m) << ',' << to_decimal_string(r) << '\n';
    }
}

std::vector<CurveRow> parse_tradeoff_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kHeader)
        throw std::invalid_argument("missing or wrong CSV header");
    std::vector<CurveRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f = split_fields(line);
        if (f.size() != 7)
            throw std::invalid_argument("expected 7 CSV fields, got " +
                                        std::to_string(f.size()));
        rows.push_back({f[0], {rational_from(f[1], f[2]), rational_from(f[3], f[4])}});
    }
    return rows;
}

}  // namespace hotplug
