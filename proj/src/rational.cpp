#include "stabkit/rational.hpp"

#include <cctype>

#include "stabkit/errors.hpp"

namespace stabkit {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = trim(s.substr(0, slash));
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                               : trim(s.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw InputError("not a rational number: '" + std::string(text) + "'");
  }
  auto strip_plus = [](std::string_view v) {
    return std::string(v.front() == '+' ? v.substr(1) : v);
  };
  Integer n(strip_plus(num));
  Integer d(strip_plus(den));
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_pq(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

bool exact_sqrt(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
    return false;
  }
  Integer n = sqrt(q.get_num());
  Integer d = sqrt(q.get_den());
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

ExtRational max(const ExtRational& a, const ExtRational& b) { return a < b ? b : a; }
ExtRational min(const ExtRational& a, const ExtRational& b) { return b < a ? b : a; }

std::string to_pq(const ExtRational& q) {
  switch (q.kind()) {
    case ExtRational::Kind::neg_infinity: return "-inf";
    case ExtRational::Kind::pos_infinity: return "+inf";
    case ExtRational::Kind::finite: break;
  }
  return to_pq(q.value());
}

std::string to_string(const ExtRational& q) {
  if (!q.is_finite()) return to_pq(q);
  return to_string(q.value());
}

ExtRational parse_ext_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s == "-inf") return ExtRational::neg_infinity();
  if (s == "+inf" || s == "inf") return ExtRational::pos_infinity();
  return parse_rational(s);
}

double to_double(const Rational& q) { return q.get_d(); }

std::ostream& operator<<(std::ostream& os, const ExtRational& q) { return os << to_string(q); }

}  // namespace stabkit
