#include "bsrbd/rational.hpp"

#include <climits>
#include <ostream>

#include "bsrbd/error.hpp"

namespace bsrbd {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw Error("empty rational literal");
  std::string s(text);
  auto valid_int = [](std::string_view t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw Error("malformed rational literal '" + s + "'");
    return Rational(BigInt(strip_plus(s)), BigInt(1));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw Error("malformed rational literal '" + s + "'");
  return Rational(BigInt(strip_plus(num)), BigInt(den));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("division by zero");
  v_ /= o.v_;
  return *this;
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::size_t Rational::hash() const {
  const std::size_t n = mpz_get_ui(v_.get_num_mpz_t()) ^ (mpz_sgn(v_.get_num_mpz_t()) < 0 ? 0x9e3779b9u : 0u);
  const std::size_t d = mpz_get_ui(v_.get_den_mpz_t());
  return n * 1000003u ^ d;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

std::pair<BigInt, Rational> floor_fr(const Rational& r) {
  BigInt f = r.floor();
  return {f, r - Rational(f, 1)};
}

Rational fr(const Rational& r) { return floor_fr(r).second; }

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

std::int64_t to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) throw OutOfRange("integer does not fit into 64 bits: " + v.get_str());
  return v.get_si();
}

}  // namespace bsrbd
