#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace puiseux {

using BigInt = boost::multiprecision::cpp_int;

/// Exact nonnegative rational kept in canonical reduced form:
/// gcd(num, den) == 1, den >= 1, zero stored as 0/1.
///
/// Only the operations the monoid computations need exist: addition,
/// multiplication, powers by nonnegative integers and exact comparison.
/// Negative values and subtraction are deliberately absent.
class Rat {
 public:
  Rat() = default;

  /// Reduces num/den to canonical form. Rejects den == 0 and negative input.
  Rat(BigInt num, BigInt den);

  explicit Rat(BigInt value);
  explicit Rat(std::uint64_t value);

  /// Parses "p/q" or "p" (decimal digits only, q > 0). Surrounding ASCII
  /// spaces are ignored.
  static Rat parse(const std::string& text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == 1; }

  std::string str() const;       // "p/q"; integer values shorten to "p"
  std::string frac_str() const;  // always "p/q"; used by machine formats
  double approx() const;         // lossy; table display only

  friend bool operator==(const Rat&, const Rat&) = default;
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);

 private:
  BigInt num_ = 0;
  BigInt den_ = 1;
};

/// base^exponent with the convention 0^0 = 1.
Rat pow(const Rat& base, std::uint64_t exponent);

/// Rational extended with a single point at infinity. Infinity compares
/// greater than every finite value. The computations never claim infinity as
/// a proven result; the type exists so limit reports have room for it.
class ExtRat {
 public:
  ExtRat() = default;  // finite zero
  explicit ExtRat(Rat value) : finite_(std::move(value)) {}
  static ExtRat infinity();

  bool is_infinite() const { return !finite_.has_value(); }
  const Rat& finite() const;  // rejects infinity

  std::string str() const;
  std::string frac_str() const;

  friend bool operator==(const ExtRat&, const ExtRat&) = default;
  friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b);

 private:
  std::optional<Rat> finite_ = Rat();
};

}  // namespace puiseux
