#include "wk/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

namespace wk::io {

i64 parse_decimal(const std::string& s, int digits) {
  if (digits < 0 || digits > 12) throw ParseError("precision must be 0..12 digits");
  std::size_t k = 0;
  bool neg = false;
  if (k < s.size() && (s[k] == '-' || s[k] == '+')) neg = s[k++] == '-';
  i128 v = 0;
  int intd = 0, frac = 0;
  for (; k < s.size() && std::isdigit((unsigned char)s[k]); ++k, ++intd) v = v * 10 + (s[k] - '0');
  if (k < s.size() && s[k] == '.') {
    for (++k; k < s.size() && std::isdigit((unsigned char)s[k]); ++k) {
      if (++frac > digits) {
        if (s[k] != '0') throw ParseError("'" + s + "' has more than " + std::to_string(digits) + " decimals");
        continue;
      }
      v = v * 10 + (s[k] - '0');
    }
  }
  if (k != s.size() || intd + frac == 0) throw ParseError("not a decimal: '" + s + "'");
  if (intd > 19) throw ParseError("decimal out of range: '" + s + "'");
  for (int d = std::min(frac, digits); d < digits; ++d) v *= 10;
  if (v > std::numeric_limits<i64>::max()) throw ParseError("decimal out of range: '" + s + "'");
  return neg ? -(i64)v : (i64)v;
}

std::string format_decimal(i64 v, int digits) {
  const bool neg = v < 0;
  unsigned long long u = neg ? 0ULL - (unsigned long long)v : (unsigned long long)v;
  unsigned long long p = 1;
  for (int d = 0; d < digits; ++d) p *= 10;
  std::string out = (neg ? "-" : "") + std::to_string(u / p);
  if (digits > 0) {
    std::string f = std::to_string(u % p);
    out += "." + std::string((std::size_t)digits - f.size(), '0') + f;
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return out;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

}  // namespace

InstanceFile read_instance(std::istream& in) {
  InstanceFile f;
  std::string line, t, eps;
  bool header = false;
  int lineno = 0;
  auto fail = [&](const std::string& msg) { throw ParseError("line " + std::to_string(lineno) + ": " + msg); };
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty()) continue;
    if (line[0] == '#') {
      f.comments.push_back(trim(line.substr(1)));
      continue;
    }
    std::istringstream ss(line);
    std::vector<std::string> tok;
    for (std::string x; ss >> x;) tok.push_back(x);
    if (!header) {
      for (const auto& kv : tok) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) fail("header expects key=value, got '" + kv + "'");
        auto key = kv.substr(0, eq), val = kv.substr(eq + 1);
        if (key == "t")
          t = val;
        else if (key == "eps")
          eps = val;
        else if (key == "digits") {
          try {
            f.digits = std::stoi(val);
          } catch (const std::exception&) {
            fail("bad digits '" + val + "'");
          }
        } else
          fail("unknown header key '" + key + "'");
      }
      if (t.empty() || eps.empty()) fail("header needs t= and eps=");
      try {
        f.inst.capacity = parse_decimal(t, f.digits);
        std::size_t used = 0;
        f.inst.eps = std::stod(eps, &used);
        if (used != eps.size()) fail("bad eps '" + eps + "'");
      } catch (const ParseError& e) {
        fail(e.what());
      } catch (const std::exception&) {
        fail("bad eps '" + eps + "'");
      }
      header = true;
      continue;
    }
    if (tok.size() != 2) fail("expected 'w p'");
    try {
      f.inst.items.push_back({parse_decimal(tok[0], f.digits), parse_decimal(tok[1], f.digits)});
    } catch (const ParseError& e) {
      fail(e.what());
    }
  }
  if (!header) throw ParseError("missing header line 't=<decimal> eps=<decimal>'");
  return f;
}

InstanceFile read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_instance(in);
}

void write_instance(std::ostream& out, const InstanceFile& f) {
  for (const auto& c : f.comments) out << "# " << c << "\n";
  char eps[32];
  auto r = std::to_chars(eps, eps + sizeof eps, f.inst.eps);
  out << "t=" << format_decimal(f.inst.capacity, f.digits) << " eps=" << std::string(eps, r.ptr);
  if (f.digits != kDefaultDigits) out << " digits=" << f.digits;
  out << "\n";
  for (const auto& it : f.inst.items)
    out << format_decimal(it.weight, f.digits) << " " << format_decimal(it.profit, f.digits) << "\n";
}

}  // namespace wk::io
