#include "abelcyc/rational.hpp"

#include <charconv>
#include <numeric>

#include "abelcyc/error.hpp"

namespace abelcyc {

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw Error(ErrorCode::invalid_exponent, "zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  return (num_ % den_ != 0 && num_ < 0) ? q - 1 : q;
}

std::int64_t Rational::ceil() const {
  std::int64_t q = num_ / den_;
  return (num_ % den_ != 0 && num_ > 0) ? q + 1 : q;
}

std::string Rational::str() const {
  return is_integer() ? std::to_string(num_) : fraction_str();
}

std::string Rational::fraction_str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {
std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::parse, "malformed number '" + std::string(s) + "'");
  }
  return v;
}
}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den <= 0) throw Error(ErrorCode::parse, "denominator must be positive");
  return Rational(parse_int(text.substr(0, slash)), den);
}

ExponentSpec ExponentSpec::parse(std::string_view text) {
  ExponentSpec out;
  if (!text.empty() && text.back() == '+') {
    out.strict_plus = true;
    text.remove_suffix(1);
  }
  out.value = Rational::parse(text);
  return out;
}

}  // namespace abelcyc
