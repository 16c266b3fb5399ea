#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace psl
{

/// Exact non-negative-friendly rational number, always kept in lowest terms with a
/// positive denominator. Screen fractions and abstract durations use it so that
/// default placements compare exactly.
class Rational
{
public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  [[nodiscard]] std::int64_t num() const noexcept { return num_; }
  [[nodiscard]] std::int64_t den() const noexcept { return den_; }
  [[nodiscard]] double to_double() const noexcept
  {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// "3" for integers, "p/q" otherwise.
  [[nodiscard]] std::string str() const;

  /// Accepts "p/q" or "n"; surrounding whitespace is not allowed.
  [[nodiscard]] static std::optional<Rational> parse(std::string_view text);

  friend Rational operator+(Rational a, Rational b);
  friend Rational operator-(Rational a, Rational b);
  friend Rational operator*(Rational a, Rational b);
  friend Rational operator/(Rational a, Rational b);
  Rational & operator+=(Rational b) { return *this = *this + b; }

  friend bool operator==(const Rational &, const Rational &) = default;
  friend std::strong_ordering operator<=>(const Rational & a, const Rational & b);

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace psl
