#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace abelcyc {

/// Exact fraction kept in lowest terms with a positive denominator.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator = 1);

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }

  std::int64_t floor() const;
  std::int64_t ceil() const;

  /// "N" for integers, "p/q" otherwise.
  std::string str() const;
  /// Always "p/q".
  std::string fraction_str() const;

  /// Accepts "N" and "p/q".
  static Rational parse(std::string_view text);

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// A power threshold as written on the command line: "N", "p/q", with an
/// optional trailing '+' meaning "strictly greater than".
struct ExponentSpec {
  Rational value;
  bool strict_plus = false;

  std::string str() const { return value.str() + (strict_plus ? "+" : ""); }
  static ExponentSpec parse(std::string_view text);
};

}  // namespace abelcyc
