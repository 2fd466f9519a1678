#pragma once

/**
 * @file field.hpp
 * @brief Exact scalars over Q and GF(p).
 *
 * Two element types model the base field:
 *
 * - `Rational`: arbitrary-precision fraction, always in lowest terms with a
 *   positive denominator.
 * - `Residue`: an element of GF(p), stored as a value in [0, p) together with
 *   its modulus.
 *
 * Every container in the library carries a `FieldSpec` so that zeros and ones
 * can be produced without a prototype element. Algorithms are templates over
 * the `FieldElement` concept and are instantiated for both types.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "dialg/error.hpp"

namespace dialg {

/// Largest modulus accepted; keeps residue products inside 64 bits.
inline constexpr std::uint32_t kMaxPrime = (1u << 31) - 1;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

class FieldSpec {
 public:
  enum class Kind { Rationals, Prime };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }

  static FieldSpec prime(std::uint64_t p) {
    if (p > kMaxPrime || !is_prime(p))
      throw FieldError(std::to_string(p) + " is not a supported prime");
    return FieldSpec(Kind::Prime, static_cast<std::uint32_t>(p));
  }

  Kind kind() const noexcept { return kind_; }
  bool is_prime_field() const noexcept { return kind_ == Kind::Prime; }
  /// Characteristic; 0 for Q.
  std::uint32_t characteristic() const noexcept { return p_; }

  std::string to_string() const {
    return is_prime_field() ? "GF(" + std::to_string(p_) + ")" : "Q";
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

/// Splits "[+-]digits[/digits]" into signed numerator and positive denominator.
inline bool parse_fraction(std::string_view text,
                           boost::multiprecision::cpp_int& num,
                           boost::multiprecision::cpp_int& den) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) return false;
  num = boost::multiprecision::cpp_int(std::string(num_text));
  den = boost::multiprecision::cpp_int(std::string(den_text));
  if (negative) num = -num;
  return true;
}

}  // namespace detail

/// Element of Q.
class Rational {
 public:
  using value_type = boost::multiprecision::cpp_rational;

  Rational() = default;
  explicit Rational(value_type v) : v_(std::move(v)) {}

  static bool supports(const FieldSpec& f) noexcept {
    return f.kind() == FieldSpec::Kind::Rationals;
  }
  static Rational from_integer(const FieldSpec&, std::int64_t n) {
    return Rational(value_type(n));
  }
  static Rational zero(const FieldSpec& f) { return from_integer(f, 0); }
  static Rational one(const FieldSpec& f) { return from_integer(f, 1); }

  /// Accepts `[+-]n` or `[+-]n/d` with d > 0.
  static Rational parse(const FieldSpec&, std::string_view text) {
    boost::multiprecision::cpp_int num, den;
    if (!detail::parse_fraction(text, num, den))
      throw FieldError("malformed rational '" + std::string(text) + "'");
    if (den == 0) throw FieldError("zero denominator in '" + std::string(text) + "'");
    return Rational(value_type(num, den));
  }

  FieldSpec field() const { return FieldSpec::rationals(); }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  const value_type& value() const noexcept { return v_; }

  Rational inverse() const {
    if (is_zero()) throw PreconditionError("inverse of zero");
    return Rational(1 / v_);
  }

  std::string to_string() const {
    const auto num = boost::multiprecision::numerator(v_);
    const auto den = boost::multiprecision::denominator(v_);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
  }

  Rational operator-() const { return Rational(-v_); }
  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }
  Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
  Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
  Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (b.v_ < a.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  value_type v_{0};
};

/// Element of GF(p). Arithmetic between residues of different moduli is a
/// programming error and is not checked on the hot path.
class Residue {
 public:
  Residue() = default;

  static bool supports(const FieldSpec& f) noexcept { return f.is_prime_field(); }

  static Residue from_integer(const FieldSpec& f, std::int64_t n) {
    const std::int64_t p = f.characteristic();
    std::int64_t r = n % p;
    if (r < 0) r += p;
    return Residue(static_cast<std::uint32_t>(r), f.characteristic());
  }
  static Residue zero(const FieldSpec& f) { return Residue(0, f.characteristic()); }
  static Residue one(const FieldSpec& f) { return Residue(1 % f.characteristic(), f.characteristic()); }

  /// Accepts an integer of any size, reduced mod p, or `n/d` when d is a unit mod p.
  static Residue parse(const FieldSpec& f, std::string_view text) {
    boost::multiprecision::cpp_int num, den;
    if (!detail::parse_fraction(text, num, den))
      throw FieldError("malformed coefficient '" + std::string(text) + "'");
    const boost::multiprecision::cpp_int p = f.characteristic();
    auto reduce = [&](boost::multiprecision::cpp_int v) {
      v %= p;
      if (v < 0) v += p;
      return Residue(v.convert_to<std::uint32_t>(), f.characteristic());
    };
    const Residue d = reduce(den);
    if (d.is_zero())
      throw FieldError("'" + std::string(text) + "' is not an element of " + f.to_string());
    return reduce(num) / d;
  }

  FieldSpec field() const { return FieldSpec::prime(p_); }
  bool is_zero() const noexcept { return v_ == 0; }
  bool is_one() const noexcept { return v_ == 1; }
  std::uint32_t value() const noexcept { return v_; }
  std::uint32_t modulus() const noexcept { return p_; }

  Residue inverse() const {
    if (is_zero()) throw PreconditionError("inverse of zero");
    // extended Euclid on (v, p)
    std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      const std::int64_t q = a / b;
      std::int64_t t = a - q * b;
      a = b;
      b = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    x0 %= static_cast<std::int64_t>(p_);
    if (x0 < 0) x0 += p_;
    return Residue(static_cast<std::uint32_t>(x0), p_);
  }

  std::string to_string() const { return std::to_string(v_); }

  Residue operator-() const { return Residue(v_ == 0 ? 0 : p_ - v_, p_); }
  friend Residue operator+(Residue a, Residue b) {
    std::uint64_t s = std::uint64_t(a.v_) + b.v_;
    if (s >= a.p_) s -= a.p_;
    return Residue(static_cast<std::uint32_t>(s), a.p_);
  }
  friend Residue operator-(Residue a, Residue b) { return a + (-b); }
  friend Residue operator*(Residue a, Residue b) {
    return Residue(static_cast<std::uint32_t>(std::uint64_t(a.v_) * b.v_ % a.p_), a.p_);
  }
  friend Residue operator/(Residue a, Residue b) { return a * b.inverse(); }
  Residue& operator+=(Residue b) { return *this = *this + b; }
  Residue& operator-=(Residue b) { return *this = *this - b; }
  Residue& operator*=(Residue b) { return *this = *this * b; }

  friend bool operator==(Residue a, Residue b) noexcept { return a.v_ == b.v_ && a.p_ == b.p_; }
  friend std::strong_ordering operator<=>(Residue a, Residue b) noexcept { return a.v_ <=> b.v_; }

 private:
  Residue(std::uint32_t v, std::uint32_t p) : v_(v), p_(p) {}

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

template <class S>
concept FieldElement = std::regular<S> && std::three_way_comparable<S> &&
    requires(const S a, const S b, const FieldSpec& f, std::int64_t n, std::string_view text) {
      { S::supports(f) } -> std::same_as<bool>;
      { S::from_integer(f, n) } -> std::same_as<S>;
      { S::zero(f) } -> std::same_as<S>;
      { S::one(f) } -> std::same_as<S>;
      { S::parse(f, text) } -> std::same_as<S>;
      { a.is_zero() } -> std::same_as<bool>;
      { a.inverse() } -> std::same_as<S>;
      { a.to_string() } -> std::same_as<std::string>;
      { -a } -> std::same_as<S>;
      { a + b } -> std::same_as<S>;
      { a - b } -> std::same_as<S>;
      { a * b } -> std::same_as<S>;
      { a / b } -> std::same_as<S>;
    };

static_assert(FieldElement<Rational>);
static_assert(FieldElement<Residue>);

template <FieldElement S>
void require_field(const FieldSpec& f) {
  if (!S::supports(f)) throw FieldError("element type does not match field " + f.to_string());
}

/// Calls `fn.template operator()<S>()` with the element type matching `f`.
template <class Fn>
decltype(auto) visit_field(const FieldSpec& f, Fn&& fn) {
  if (f.is_prime_field()) return fn.template operator()<Residue>();
  return fn.template operator()<Rational>();
}

}  // namespace dialg
