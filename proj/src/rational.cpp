#include "kazhdan/rational.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace kazhdan {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  // avoid UB on LLONG_MIN
  std::uint64_t u = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
  while (u) {
    mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffu));
    u >>= 32;
  }
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

bool BigInt::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
  if (a.mag_.size() != b.mag_.size()) return a.mag_.size() < b.mag_.size() ? -1 : 1;
  for (size_t i = a.mag_.size(); i-- > 0;) {
    if (a.mag_[i] != b.mag_[i]) return a.mag_[i] < b.mag_[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r;
  r.reserve(std::max(a.size(), b.size()) + 1);
  std::uint64_t carry = 0;
  for (size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
    std::uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    r.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
    carry = s >> 32;
  }
  return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r(a.size());
  std::int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    borrow = 0;
    if (d < 0) {
      d += static_cast<std::int64_t>(kBase);
      borrow = 1;
    }
    r[i] = static_cast<std::uint32_t>(d);
  }
  return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  BigInt r;
  if (a.sign_ == b.sign_) {
    r.sign_ = a.sign_;
    r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
  } else {
    int c = BigInt::cmp_mag(a, b);
    if (c == 0) return BigInt();
    const BigInt& hi = c > 0 ? a : b;
    const BigInt& lo = c > 0 ? b : a;
    r.sign_ = hi.sign_;
    r.mag_ = BigInt::sub_mag(hi.mag_, lo.mag_);
  }
  r.trim();
  return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
  BigInt r;
  r.sign_ = a.sign_ * b.sign_;
  r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
  for (size_t i = 0; i < a.mag_.size(); ++i) {
    std::uint64_t carry = 0;
    for (size_t j = 0; j < b.mag_.size() || carry; ++j) {
      std::uint64_t cur = r.mag_[i + j] + carry;
      if (j < b.mag_.size())
        cur += static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j];
      r.mag_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
  }
  r.trim();
  return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
  // binary long division on magnitudes
  q = BigInt();
  r = BigInt();
  if (a.sign_ == 0) return;
  const size_t bits = a.mag_.size() * 32;
  std::vector<std::uint32_t> qm((a.mag_.size()), 0);
  BigInt babs = b.abs();
  for (size_t i = bits; i-- > 0;) {
    // r = (r << 1) | bit_i(a)
    std::uint32_t carry = (a.mag_[i / 32] >> (i % 32)) & 1u;
    for (size_t l = 0; l < r.mag_.size(); ++l) {
      std::uint32_t next = r.mag_[l] >> 31;
      r.mag_[l] = (r.mag_[l] << 1) | carry;
      carry = next;
    }
    if (carry) r.mag_.push_back(carry);
    if (!r.mag_.empty()) r.sign_ = 1;
    if (cmp_mag(r, babs) >= 0 && r.sign_ != 0) {
      r.mag_ = sub_mag(r.mag_, babs.mag_);
      r.trim();
      qm[i / 32] |= (1u << (i % 32));
    }
  }
  q.mag_ = std::move(qm);
  q.sign_ = 1;
  q.trim();
  if (!q.is_zero()) q.sign_ = a.sign_ * b.sign_;
  if (!r.is_zero()) r.sign_ = a.sign_;
}

BigInt BigInt::operator/(const BigInt& b) const {
  BigInt q, r;
  divmod(*this, b, q, r);
  return q;
}

BigInt BigInt::operator%(const BigInt& b) const {
  BigInt q, r;
  divmod(*this, b, q, r);
  return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    BigInt q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return BigInt(1);
  return a;
}

bool operator==(const BigInt& a, const BigInt& b) {
  return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
  int c = BigInt::cmp_mag(a, b) * (a.sign_ < 0 ? -1 : 1);
  return c <=> 0;
}

BigInt BigInt::from_string(std::string_view s) {
  size_t i = 0;
  int sign = 1;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '-') sign = -1;
    ++i;
  }
  if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
  BigInt r;
  BigInt ten(10);
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("BigInt: bad digit in numeral");
    r = r * ten + BigInt(s[i] - '0');
  }
  if (sign < 0) r = -r;
  return r;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  BigInt cur = abs();
  BigInt chunk(1000000000);
  std::vector<std::uint32_t> parts;
  while (!cur.is_zero()) {
    BigInt q, r;
    divmod(cur, chunk, q, r);
    parts.push_back(r.is_zero() ? 0u : r.mag_[0]);
    cur = std::move(q);
  }
  out = std::to_string(parts.back());
  for (size_t i = parts.size() - 1; i-- > 0;) {
    std::string p = std::to_string(parts[i]);
    out += std::string(9 - p.size(), '0') + p;
  }
  if (sign_ < 0) out.insert(out.begin(), '-');
  return out;
}

long long BigInt::to_ll() const {
  if (mag_.size() > 2) throw std::overflow_error("BigInt: does not fit in long long");
  std::uint64_t u = 0;
  for (size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
  if (sign_ >= 0) {
    if (u > static_cast<std::uint64_t>(std::numeric_limits<long long>::max()))
      throw std::overflow_error("BigInt: does not fit in long long");
    return static_cast<long long>(u);
  }
  if (u > static_cast<std::uint64_t>(std::numeric_limits<long long>::max()) + 1)
    throw std::overflow_error("BigInt: does not fit in long long");
  return -static_cast<long long>(u - 1) - 1;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
  reduce();
}

void Rational::reduce() {
  if (den_.is_negative()) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rational Rational::from_string(std::string_view s) {
  size_t slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(BigInt::from_string(s), BigInt(1));
  return Rational(BigInt::from_string(s.substr(0, slash)),
                  BigInt::from_string(s.substr(slash + 1)));
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const Rational& a, const Rational& b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return (a.num_ * b.den_) <=> (b.num_ * a.den_);
}

std::string Rational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace kazhdan
