#ifndef NPWSD_UTIL_HPP
#define NPWSD_UTIL_HPP

#include <optional>
#include <string>
#include <vector>

namespace npwsd {

std::string to_lower_ascii(std::string s);
std::string trim(const std::string& s);

// Splits on a single delimiter; keeps empty fields.
std::vector<std::string> split(const std::string& s, char delim);
// Splits on runs of ASCII whitespace; drops empty fields.
std::vector<std::string> split_ws(const std::string& s);
std::string join(const std::vector<std::string>& parts, const std::string& sep);

long parse_long(const std::string& s, const std::string& what);

// Fraction -> "74.14%" (two decimals, percent sign).
std::string format_percent(double fraction);
std::string format_percent(const std::optional<double>& fraction);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace npwsd

#endif
