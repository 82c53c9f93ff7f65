#ifndef CLD_RATIONAL_HPP
#define CLD_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cld {

// Arbitrary-precision rational scalar. Always stored in lowest terms with a
// positive denominator; all arithmetic is exact and equality is decidable.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long n, long d);
  explicit Rational(mpq_class v);

  // Accepts "a", "a/b", optionally signed, reduced or not ("6/8" -> 3/4).
  static Rational parse(std::string_view text);

  // Lowest-terms rendering: "3/4", "-1/2", "5", "0".
  std::string str() const;

  // Decimal rendering with the given number of fraction digits, rounded half
  // away from zero. Auxiliary output only; never used in core arithmetic.
  std::string decimal(int digits) const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  int sign() const { return sgn(v_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ * b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  mpq_class v_; // canonical at all times
};

inline Rational abs(const Rational& r) { return r.abs(); }

} // namespace cld

#endif
