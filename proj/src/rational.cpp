#include "homcheck/rational.hpp"

#include <cctype>
#include <ostream>

namespace homcheck {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw singular_error("rational with zero denominator");
  v_.canonicalize();
}

static bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Rational Rational::from_string(const std::string& s) {
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  if (!is_integer_token(num))
    throw validation_error("malformed rational: \"" + s + "\"");
  mpq_class v;
  if (slash == std::string::npos) {
    v = mpq_class(mpz_class(num));
  } else {
    const std::string den = s.substr(slash + 1);
    // Denominator must be a bare positive integer; "1/0" and "1/-2" are
    // malformed, not values to normalize.
    if (!is_integer_token(den) || den[0] == '-')
      throw validation_error("malformed rational: \"" + s + "\"");
    mpz_class d(den);
    if (d == 0) throw validation_error("malformed rational: \"" + s + "\"");
    v = mpq_class(mpz_class(num), d);
    v.canonicalize();
  }
  return Rational(v);
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw singular_error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace homcheck
