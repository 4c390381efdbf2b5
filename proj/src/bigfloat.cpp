#include "sharp/bigfloat.hpp"

#include "sharp/params.hpp"

#include <cstdio>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace sharp {

namespace {

std::recursive_mutex& precision_mutex() {
  static std::recursive_mutex m;
  return m;
}

}  // namespace

PrecisionScope::PrecisionScope(PrecisionCtx ctx)
    : lock_(precision_mutex()), saved_(BigFloat::default_precision()) {
  if (ctx.digits < 10) {
    throw std::invalid_argument("working precision must be at least 10 digits");
  }
  BigFloat::default_precision(ctx.digits);
}

PrecisionScope::~PrecisionScope() { BigFloat::default_precision(saved_); }

BigFloat big_pi() { return boost::math::constants::pi<BigFloat>(); }

BigFloat to_big(const ExactInt& x) {
  BigFloat r;
  r = x;
  return r;
}

std::string to_sci(const BigFloat& x, unsigned significant) {
  std::ostringstream os;
  os.precision(significant > 0 ? significant - 1 : 0);
  os << std::scientific << x;
  return os.str();
}

std::string to_decimal(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

BigFloat parse_angle(const std::string& text) {
  static const std::regex pi_form(R"(^\s*(?:([+-]?[0-9]*\.?[0-9]+)\s*\*?\s*)?(-)?pi\s*(?:/\s*([0-9]*\.?[0-9]+))?\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, pi_form)) {
    BigFloat value = big_pi();
    if (m[1].matched) value *= BigFloat(m[1].str());
    if (m[2].matched) value = -value;
    if (m[3].matched) value /= BigFloat(m[3].str());
    return value;
  }
  static const std::regex decimal(R"(^\s*[+-]?([0-9]+\.?[0-9]*|\.[0-9]+)([eE][+-]?[0-9]+)?\s*$)");
  if (!std::regex_match(text, decimal)) {
    throw std::invalid_argument("cannot parse angle '" + text + "'");
  }
  return BigFloat(text);
}

double parse_exponent(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "Inf") return kInf;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse exponent '" + text + "'");
  }
  if (used != text.size()) throw std::invalid_argument("cannot parse exponent '" + text + "'");
  return v;
}

std::string format_exponent(double x) { return std::isinf(x) ? "inf" : to_decimal(x); }

}  // namespace sharp
