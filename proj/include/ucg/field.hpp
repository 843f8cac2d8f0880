#pragma once

// Runtime-tagged scalars over the fields the library works with: rationals standing in for the
// reals, odd prime fields, F_2 and F_4 = F_2[t]/(t^2+t+1), and floating point reals.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ucg/error.hpp"

namespace ucg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { RationalAsReal, PrimeField, CharTwoField, ApproxReal };

constexpr double kDefaultTolerance = 1e-9;

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

class Scalar;

class Field {
 public:
  static Field rational() { return Field(FieldKind::RationalAsReal, 0, 0.0); }

  static Field prime(std::int64_t p) {
    require(p > 2 && p < (std::int64_t{1} << 31) && is_prime(p), ErrorKind::InvalidInput,
            "prime field order must be an odd prime below 2^31, got " + std::to_string(p));
    return Field(FieldKind::PrimeField, p, 0.0);
  }

  static Field char_two(int q) {
    require(q == 2 || q == 4, ErrorKind::InvalidInput,
            "characteristic-2 field must have 2 or 4 elements, got " + std::to_string(q));
    return Field(FieldKind::CharTwoField, q, 0.0);
  }

  static Field approx(double tolerance = kDefaultTolerance) {
    require(tolerance > 0.0, ErrorKind::InvalidInput, "tolerance must be positive");
    return Field(FieldKind::ApproxReal, 0, tolerance);
  }

  FieldKind kind() const noexcept { return kind_; }
  bool is_exact() const noexcept { return kind_ != FieldKind::ApproxReal; }
  bool is_finite() const noexcept { return kind_ == FieldKind::PrimeField || kind_ == FieldKind::CharTwoField; }
  bool is_real() const noexcept { return kind_ == FieldKind::RationalAsReal || kind_ == FieldKind::ApproxReal; }

  /// 0 for the real stand-ins.
  std::int64_t characteristic() const noexcept {
    switch (kind_) {
      case FieldKind::PrimeField: return order_;
      case FieldKind::CharTwoField: return 2;
      default: return 0;
    }
  }

  /// Number of elements; 0 for infinite fields.
  std::int64_t order() const noexcept { return order_; }
  double tolerance() const noexcept { return tol_; }

  std::string name() const {
    switch (kind_) {
      case FieldKind::RationalAsReal: return "rational";
      case FieldKind::PrimeField: return "fp:" + std::to_string(order_);
      case FieldKind::CharTwoField: return order_ == 2 ? "f2" : "f4";
      case FieldKind::ApproxReal: return "approx";
    }
    return "?";
  }

  bool operator==(const Field&) const = default;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_rational(const Rational& v) const;
  Scalar from_double(double v) const;

  /// Element with canonical index i in [0, order()).
  Scalar element(std::int64_t i) const;
  std::vector<Scalar> elements() const;

  void require_exact(std::string_view op) const {
    require(is_exact(), ErrorKind::Unsupported, std::string(op) + " requires an exact field, got approx");
  }
  void require_odd_characteristic(std::string_view op) const {
    require(characteristic() != 2, ErrorKind::Unsupported,
            std::string(op) + " requires characteristic different from 2");
  }
  void require_finite(std::string_view op) const {
    require(is_finite(), ErrorKind::Unsupported, std::string(op) + " requires a finite field, got " + name());
  }

 private:
  Field(FieldKind kind, std::int64_t order, double tol) : kind_(kind), order_(order), tol_(tol) {}

  FieldKind kind_;
  std::int64_t order_;
  double tol_;
};

namespace detail {

// F_4 = {0, 1, t, t+1} encoded as bit0 + 2*bit1 (coefficient of t).
inline constexpr std::int64_t kF4Mul[4][4] = {
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},
    {0, 3, 1, 2},
};
inline constexpr std::int64_t kF4Inv[4] = {0, 1, 3, 2};

inline std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t result = 1;
  base %= p;
  if (base < 0) base += p;
  while (exp > 0) {
    if (exp & 1) result = static_cast<std::int64_t>((static_cast<__int128>(result) * base) % p);
    base = static_cast<std::int64_t>((static_cast<__int128>(base) * base) % p);
    exp >>= 1;
  }
  return result;
}

inline std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

}  // namespace detail

/// A field element. Arithmetic is closed within one Field; mixing fields throws.
class Scalar {
 public:
  Scalar() : field_(Field::rational()), value_(Rational(0)) {}

  static Scalar from_residue(const Field& f, std::int64_t r) { return Scalar(f, Value(r)); }
  static Scalar from_rational(const Field& f, Rational r) { return Scalar(f, Value(std::move(r))); }
  static Scalar from_double(const Field& f, double d) { return Scalar(f, Value(d)); }

  const Field& field() const noexcept { return field_; }

  /// Canonical residue for finite fields (0..p-1, or the F_4 encoding).
  std::int64_t residue() const { return std::get<std::int64_t>(value_); }
  const Rational& rational() const { return std::get<Rational>(value_); }
  double real() const { return std::get<double>(value_); }

  /// Numeric approximation, available for the real stand-ins.
  double to_double() const {
    switch (field_.kind()) {
      case FieldKind::RationalAsReal: return static_cast<double>(rational());
      case FieldKind::ApproxReal: return real();
      default: return static_cast<double>(residue());
    }
  }

  bool is_zero() const {
    switch (field_.kind()) {
      case FieldKind::RationalAsReal: return rational() == 0;
      case FieldKind::ApproxReal: return std::abs(real()) <= field_.tolerance();
      default: return residue() == 0;
    }
  }

  bool is_one() const { return *this == field_.one(); }

  Scalar operator-() const {
    switch (field_.kind()) {
      case FieldKind::RationalAsReal: return Scalar(field_, Value(Rational(-rational())));
      case FieldKind::ApproxReal: return Scalar(field_, Value(-real()));
      case FieldKind::PrimeField: return Scalar(field_, Value(residue() == 0 ? 0 : field_.order() - residue()));
      case FieldKind::CharTwoField: return *this;
    }
    return *this;
  }

  Scalar& operator+=(const Scalar& o) {
    check_same(o);
    switch (field_.kind()) {
      case FieldKind::RationalAsReal: std::get<Rational>(value_) += o.rational(); break;
      case FieldKind::ApproxReal: std::get<double>(value_) += o.real(); break;
      case FieldKind::PrimeField: {
        std::int64_t s = residue() + o.residue();
        if (s >= field_.order()) s -= field_.order();
        value_ = s;
        break;
      }
      case FieldKind::CharTwoField: value_ = residue() ^ o.residue(); break;
    }
    return *this;
  }

  Scalar& operator-=(const Scalar& o) { return *this += -o; }

  Scalar& operator*=(const Scalar& o) {
    check_same(o);
    switch (field_.kind()) {
      case FieldKind::RationalAsReal: std::get<Rational>(value_) *= o.rational(); break;
      case FieldKind::ApproxReal: std::get<double>(value_) *= o.real(); break;
      case FieldKind::PrimeField:
        value_ = static_cast<std::int64_t>((static_cast<__int128>(residue()) * o.residue()) % field_.order());
        break;
      case FieldKind::CharTwoField: value_ = detail::kF4Mul[residue()][o.residue()]; break;
    }
    return *this;
  }

  Scalar inverse() const {
    require(!is_zero(), ErrorKind::InvalidInput, "division by zero in " + field_.name());
    switch (field_.kind()) {
      case FieldKind::RationalAsReal: return Scalar(field_, Value(Rational(1) / rational()));
      case FieldKind::ApproxReal: return Scalar(field_, Value(1.0 / real()));
      case FieldKind::PrimeField:
        return Scalar(field_, Value(detail::mod_pow(residue(), field_.order() - 2, field_.order())));
      case FieldKind::CharTwoField: return Scalar(field_, Value(detail::kF4Inv[residue()]));
    }
    return *this;
  }

  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar result = field_.one();
    Scalar base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  /// Structural equality; ApproxReal compares within the field tolerance.
  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) return false;
    switch (a.field_.kind()) {
      case FieldKind::RationalAsReal: return a.rational() == b.rational();
      case FieldKind::ApproxReal: return std::abs(a.real() - b.real()) <= a.field_.tolerance();
      default: return a.residue() == b.residue();
    }
  }

  /// Total order used for canonical sorting (residue order for finite fields, value order for reals).
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    a.check_same(b);
    switch (a.field_.kind()) {
      case FieldKind::RationalAsReal:
        if (a.rational() < b.rational()) return std::strong_ordering::less;
        if (a.rational() > b.rational()) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
      case FieldKind::ApproxReal:
        if (a == b) return std::strong_ordering::equal;
        return a.real() < b.real() ? std::strong_ordering::less : std::strong_ordering::greater;
      default: return a.residue() <=> b.residue();
    }
  }

  std::string to_string() const {
    switch (field_.kind()) {
      case FieldKind::RationalAsReal: {
        const Rational& q = rational();
        if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
        return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
      }
      case FieldKind::ApproxReal: {
        std::ostringstream os;
        os.precision(17);
        os << real();
        return os.str();
      }
      case FieldKind::PrimeField: return std::to_string(residue());
      case FieldKind::CharTwoField: {
        static const char* names[4] = {"0", "1", "t", "t+1"};
        return names[residue()];
      }
    }
    return "?";
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  using Value = std::variant<std::int64_t, Rational, double>;

  Scalar(const Field& f, Value v) : field_(f), value_(std::move(v)) {}

  void check_same(const Scalar& o) const {
    if (field_ != o.field_)
      fail(ErrorKind::InvalidInput, "mixed-field arithmetic: " + field_.name() + " vs " + o.field_.name());
  }

  Field field_;
  Value value_;
};

inline Scalar Field::zero() const { return from_int(0); }
inline Scalar Field::one() const { return from_int(1); }

inline Scalar Field::from_int(std::int64_t v) const {
  switch (kind_) {
    case FieldKind::RationalAsReal: return Scalar::from_rational(*this, Rational(v));
    case FieldKind::ApproxReal: return Scalar::from_double(*this, static_cast<double>(v));
    case FieldKind::PrimeField: return Scalar::from_residue(*this, detail::mod_reduce(v, order_));
    case FieldKind::CharTwoField: return Scalar::from_residue(*this, detail::mod_reduce(v, 2));
  }
  return Scalar();
}

inline Scalar Field::from_rational(const Rational& v) const {
  switch (kind_) {
    case FieldKind::RationalAsReal: return Scalar::from_rational(*this, v);
    case FieldKind::ApproxReal: return Scalar::from_double(*this, static_cast<double>(v));
    default: {
      Integer num = boost::multiprecision::numerator(v);
      Integer den = boost::multiprecision::denominator(v);
      const Integer mod = characteristic();
      Integer n = num % mod;
      Integer d = den % mod;
      if (n < 0) n += mod;
      require(d != 0, ErrorKind::InvalidInput, "denominator vanishes in " + name());
      return from_int(static_cast<std::int64_t>(n)) / from_int(static_cast<std::int64_t>(d));
    }
  }
}

inline Scalar Field::from_double(double v) const {
  require(kind_ == FieldKind::ApproxReal, ErrorKind::InvalidInput, "floating point values need the approx field");
  return Scalar::from_double(*this, v);
}

inline Scalar Field::element(std::int64_t i) const {
  require_finite("element enumeration");
  require(i >= 0 && i < order_, ErrorKind::InvalidInput, "element index out of range");
  return Scalar::from_residue(*this, i);
}

inline std::vector<Scalar> Field::elements() const {
  require_finite("element enumeration");
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (std::int64_t i = 0; i < order_; ++i) out.push_back(Scalar::from_residue(*this, i));
  return out;
}

// ----------------------------------------------------------------------------------------------
// Square classes

/// Class of a scalar in K^x/(K^x)^2 together with zero. Over the reals Unit means positive.
enum class SquareClass { Zero, Unit, NonResidue };

inline SquareClass operator*(SquareClass a, SquareClass b) {
  if (a == SquareClass::Zero || b == SquareClass::Zero) return SquareClass::Zero;
  return a == b ? SquareClass::Unit : SquareClass::NonResidue;
}

inline const char* to_string(SquareClass c) {
  switch (c) {
    case SquareClass::Zero: return "0";
    case SquareClass::Unit: return "1";
    case SquareClass::NonResidue: return "e";
  }
  return "?";
}

inline SquareClass square_class(const Scalar& x) {
  const Field& f = x.field();
  f.require_exact("square_class");
  if (x.is_zero()) return SquareClass::Zero;
  switch (f.kind()) {
    case FieldKind::RationalAsReal: return x.rational() > 0 ? SquareClass::Unit : SquareClass::NonResidue;
    case FieldKind::PrimeField: {
      const std::int64_t p = f.order();
      return detail::mod_pow(x.residue(), (p - 1) / 2, p) == 1 ? SquareClass::Unit : SquareClass::NonResidue;
    }
    case FieldKind::CharTwoField: return SquareClass::Unit;  // Frobenius is bijective
    default: break;
  }
  return SquareClass::Zero;
}

/// Smallest positive nonresidue mod p; -1 for the rationals.
inline Scalar canonical_nonresidue(const Field& f) {
  switch (f.kind()) {
    case FieldKind::RationalAsReal: return f.from_int(-1);
    case FieldKind::PrimeField:
      for (std::int64_t a = 2; a < f.order(); ++a)
        if (square_class(f.from_int(a)) == SquareClass::NonResidue) return f.from_int(a);
      break;
    case FieldKind::CharTwoField:
      fail(ErrorKind::Unsupported, "every element of " + f.name() + " is a square");
    case FieldKind::ApproxReal:
      fail(ErrorKind::Unsupported, "square classes are not defined for the approx field");
  }
  fail(ErrorKind::Internal, "no nonresidue found");
}

/// Representative scalar of a square class (0, 1, or the canonical nonresidue).
inline Scalar class_representative(const Field& f, SquareClass c) {
  switch (c) {
    case SquareClass::Zero: return f.zero();
    case SquareClass::Unit: return f.one();
    case SquareClass::NonResidue: return canonical_nonresidue(f);
  }
  return f.zero();
}

namespace detail {

inline std::int64_t tonelli_shanks(std::int64_t n, std::int64_t p) {
  std::int64_t q = p - 1, s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::int64_t z = 2;
  while (mod_pow(z, (p - 1) / 2, p) != p - 1) ++z;
  std::int64_t m = s;
  std::int64_t c = mod_pow(z, q, p);
  std::int64_t t = mod_pow(n, q, p);
  std::int64_t r = mod_pow(n, (q + 1) / 2, p);
  auto mul = [p](std::int64_t a, std::int64_t b) {
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
  };
  while (t != 1) {
    std::int64_t i = 0, tt = t;
    while (tt != 1) {
      tt = mul(tt, tt);
      ++i;
    }
    std::int64_t b = c;
    for (std::int64_t j = 0; j < m - i - 1; ++j) b = mul(b, b);
    m = i;
    c = mul(b, b);
    t = mul(t, c);
    r = mul(r, b);
  }
  return r;
}

}  // namespace detail

/// A square root of x when one exists in the field. For F_p the smaller residue is returned.
inline std::optional<Scalar> sqrt_if_square(const Scalar& x) {
  const Field& f = x.field();
  if (x.is_zero()) return f.zero();
  switch (f.kind()) {
    case FieldKind::RationalAsReal: {
      const Rational& q = x.rational();
      if (q < 0) return std::nullopt;
      Integer num = boost::multiprecision::numerator(q);
      Integer den = boost::multiprecision::denominator(q);
      Integer rn = boost::multiprecision::sqrt(num);
      Integer rd = boost::multiprecision::sqrt(den);
      if (rn * rn != num || rd * rd != den) return std::nullopt;
      return Scalar::from_rational(f, Rational(rn, rd));
    }
    case FieldKind::PrimeField: {
      if (square_class(x) != SquareClass::Unit) return std::nullopt;
      const std::int64_t p = f.order();
      std::int64_t r = detail::tonelli_shanks(x.residue(), p);
      return f.from_int(std::min(r, p - r));
    }
    case FieldKind::CharTwoField:
      return x * x;  // x^4 = x on F_4, so x^2 is the unique root; identity on F_2
    case FieldKind::ApproxReal:
      if (x.real() < 0) return std::nullopt;
      return Scalar::from_double(f, std::sqrt(x.real()));
  }
  return std::nullopt;
}

// ----------------------------------------------------------------------------------------------
// Parsing and sampling

inline Field parse_field(std::string_view spec) {
  if (spec == "rational") return Field::rational();
  if (spec == "f2") return Field::char_two(2);
  if (spec == "f4") return Field::char_two(4);
  if (spec == "approx") return Field::approx();
  if (spec.starts_with("fp:")) {
    std::string digits(spec.substr(3));
    require(!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos,
            ErrorKind::InvalidInput, "bad prime in field spec '" + std::string(spec) + "'");
    return Field::prime(std::stoll(digits));
  }
  fail(ErrorKind::InvalidInput, "unknown field '" + std::string(spec) + "' (expected rational|fp:<p>|f2|f4|approx)");
}

/// Parses an element: integers, fractions a/b, decimals for approx, "t"/"t+1" for F_4, and "e"
/// for the canonical nonresidue.
inline Scalar parse_scalar(const Field& f, std::string_view raw) {
  std::string s;
  for (char c : raw)
    if (c != ' ') s.push_back(c);
  require(!s.empty(), ErrorKind::InvalidInput, "empty scalar");
  if (s == "e" || s == "-e") {
    Scalar e = canonical_nonresidue(f);
    return s[0] == '-' ? -e : e;
  }
  if (f.kind() == FieldKind::CharTwoField && f.order() == 4) {
    if (s == "t" || s == "w") return f.element(2);
    if (s == "t+1" || s == "1+t" || s == "w2") return f.element(3);
  }
  if (f.kind() == FieldKind::ApproxReal) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidInput, "bad real '" + s + "'");
    }
    require(used == s.size(), ErrorKind::InvalidInput, "bad real '" + s + "'");
    return Scalar::from_double(f, v);
  }
  try {
    if (s.find('.') != std::string::npos) {
      // exact decimal: 1.25 -> 125/100
      std::size_t dot = s.find('.');
      std::string intpart = s.substr(0, dot);
      std::string frac = s.substr(dot + 1);
      bool neg = !intpart.empty() && intpart[0] == '-';
      if (neg || (!intpart.empty() && intpart[0] == '+')) intpart = intpart.substr(1);
      require(frac.find_first_not_of("0123456789") == std::string::npos &&
                  intpart.find_first_not_of("0123456789") == std::string::npos,
              ErrorKind::InvalidInput, "bad decimal '" + s + "'");
      Integer num(intpart.empty() ? std::string("0") : intpart);
      Integer den = 1;
      for (char c : frac) {
        num = num * 10 + (c - '0');
        den *= 10;
      }
      Rational q(num, den);
      return f.from_rational(neg ? Rational(-q) : q);
    }
    std::size_t slash = s.find('/');
    auto check_int = [&](const std::string& t) {
      std::string body = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? t.substr(1) : t;
      require(!body.empty() && body.find_first_not_of("0123456789") == std::string::npos, ErrorKind::InvalidInput,
              "bad number '" + s + "'");
    };
    if (slash == std::string::npos) {
      check_int(s);
      return f.from_rational(Rational(Integer(s[0] == '+' ? s.substr(1) : s)));
    }
    std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    check_int(a);
    check_int(b);
    Integer den(b);
    require(den != 0, ErrorKind::InvalidInput, "zero denominator in '" + s + "'");
    return f.from_rational(Rational(Integer(a[0] == '+' ? a.substr(1) : a), den));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorKind::InvalidInput, "bad number '" + s + "'");
  }
}

/// Uniform element of a finite field; small random fractions / reals otherwise.
template <class Rng>
Scalar random_scalar(const Field& f, Rng& rng) {
  switch (f.kind()) {
    case FieldKind::PrimeField:
    case FieldKind::CharTwoField: {
      std::uniform_int_distribution<std::int64_t> d(0, f.order() - 1);
      return f.element(d(rng));
    }
    case FieldKind::RationalAsReal: {
      std::uniform_int_distribution<std::int64_t> num(-20, 20), den(1, 9);
      return f.from_rational(Rational(num(rng), den(rng)));
    }
    case FieldKind::ApproxReal: {
      std::uniform_real_distribution<double> d(-10.0, 10.0);
      return f.from_double(d(rng));
    }
  }
  return f.zero();
}

}  // namespace ucg
