#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wk/core.hpp"

namespace wk::io {

inline constexpr int kDefaultDigits = 6;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact decimal <-> scaled integer at 10^-digits. More fraction digits than
// the precision holds is an error, not a rounding.
i64 parse_decimal(const std::string& s, int digits = kDefaultDigits);
std::string format_decimal(i64 v, int digits = kDefaultDigits);

struct InstanceFile {
  Instance inst;     // items and capacity scaled by 10^digits; eps as written
  int digits = kDefaultDigits;
  std::vector<std::string> comments;  // '#' lines, without the marker
};

// Header "t=<dec> eps=<dec> [digits=<n>]", then one "w p" pair per line.
// Blank lines and '#' comments are skipped; unknown header keys are errors.
InstanceFile read_instance(std::istream& in);
InstanceFile read_instance_file(const std::string& path);
void write_instance(std::ostream& out, const InstanceFile& f);

}  // namespace wk::io
