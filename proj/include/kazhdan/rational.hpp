#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace kazhdan {

/// Arbitrary-precision signed integer, sign/magnitude over 32-bit limbs.
/// Only the operations the rest of the library needs; no bit twiddling API.
class BigInt {
public:
  BigInt() = default;
  BigInt(long long v);
  static BigInt from_string(std::string_view s);

  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }
  bool is_one() const;

  BigInt operator-() const;
  BigInt abs() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  /// Truncated division; remainder has the sign of the dividend.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  BigInt operator/(const BigInt& b) const;
  BigInt operator%(const BigInt& b) const;

  static BigInt gcd(BigInt a, BigInt b);

  friend bool operator==(const BigInt& a, const BigInt& b);
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

  std::string to_string() const;
  /// Exact conversion; throws std::overflow_error if out of range.
  long long to_ll() const;

private:
  int sign_ = 0;                    // -1, 0, +1
  std::vector<std::uint32_t> mag_;  // little-endian, no leading zero limbs

  void trim();
  static int cmp_mag(const BigInt& a, const BigInt& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>&,
                                            const std::vector<std::uint32_t>&);
  // precondition: |a| >= |b|
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>&,
                                            const std::vector<std::uint32_t>&);
};

std::ostream& operator<<(std::ostream&, const BigInt&);

/// Exact rational number. Always reduced, denominator > 0.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}
  Rational(BigInt num, BigInt den);
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}
  /// Parses "p", "-p", or "p/q".
  static Rational from_string(std::string_view s);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_.is_one(); }
  bool is_negative() const { return num_.is_negative(); }
  int sign() const { return num_.is_zero() ? 0 : (num_.is_negative() ? -1 : 1); }

  Rational operator-() const;
  friend Rational operator+(const Rational&, const Rational&);
  friend Rational operator-(const Rational&, const Rational&);
  friend Rational operator*(const Rational&, const Rational&);
  friend Rational operator/(const Rational&, const Rational&);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational&, const Rational&);
  friend std::strong_ordering operator<=>(const Rational&, const Rational&);

  /// "p" when integral, else "p/q".
  std::string to_string() const;

private:
  BigInt num_, den_;
  void reduce();
};

std::ostream& operator<<(std::ostream&, const Rational&);

}  // namespace kazhdan
