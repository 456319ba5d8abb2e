#include "hyperball/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace hyperball {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
  // mpq_set_str is permissive about whitespace and leading '+'; reject both
  // up front so every accepted string is already in canonical syntax.
  if (s.empty()) throw std::invalid_argument("Rational: empty string");
  auto digits_ok = [](std::string_view t) {
    if (!t.empty() && t.front() == '-') t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!digits_ok(s)) throw std::invalid_argument("Rational: malformed '" + std::string(s) + "'");
  } else {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!digits_ok(num) || !digits_ok(den) || den.front() == '-') {
      throw std::invalid_argument("Rational: malformed '" + std::string(s) + "'");
    }
  }
  mpq_class v;
  if (mpq_set_str(v.get_mpq_t(), std::string(s).c_str(), 10) != 0) {
    throw std::invalid_argument("Rational: malformed '" + std::string(s) + "'");
  }
  if (mpz_sgn(mpq_denref(v.get_mpq_t())) == 0) {
    throw std::invalid_argument("Rational: zero denominator in '" + std::string(s) + "'");
  }
  v.canonicalize();
  return Rational(std::move(v));
}

Rational Rational::abs() const {
  return is_negative() ? -*this : *this;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace hyperball
