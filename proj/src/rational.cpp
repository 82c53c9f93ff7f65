#include "cld/rational.hpp"

#include <cctype>
#include <ostream>

#include "cld/errors.hpp"

namespace cld {

Rational::Rational(long n, long d) : v_(n, d) {
  if (d == 0) throw Error("Rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto bad = [&] {
    return Error("Rational: cannot parse '" + std::string(text) + "'");
  };
  size_t i = 0;
  const auto read_int = [&](bool allow_sign) -> std::string {
    std::string s;
    if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) {
      if (text[i] == '-') s += '-';
      ++i;
    }
    const size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      s += text[i++];
    if (i == start) throw bad();
    return s;
  };
  const std::string num = read_int(true);
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = read_int(false);
  }
  if (i != text.size()) throw bad();
  mpq_class v{mpz_class(num), mpz_class(den)};
  if (v.get_den() == 0) throw Error("Rational: zero denominator");
  v.canonicalize();
  return Rational(std::move(v));
}

std::string Rational::str() const { return v_.get_str(); }

std::string Rational::decimal(int digits) const {
  if (digits < 0) digits = 0;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // round(|v| * 10^digits), half away from zero
  mpz_class num = ::abs(v_.get_num()) * scale;
  const mpz_class& den = v_.get_den();
  mpz_class q = num / den;
  mpz_class r = num % den;
  if (2 * r >= den) q += 1;
  std::string ds = q.get_str();
  if (static_cast<int>(ds.size()) <= digits)
    ds.insert(0, static_cast<size_t>(digits) + 1 - ds.size(), '0');
  std::string out;
  if (sgn(v_) < 0 && q != 0) out += '-';
  out += ds.substr(0, ds.size() - static_cast<size_t>(digits));
  if (digits > 0) {
    out += '.';
    out += ds.substr(ds.size() - static_cast<size_t>(digits));
  }
  return out;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.v_ == 0) throw Error("Rational: division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

} // namespace cld
