#include "realfill/integer.hpp"

#include <cctype>
#include <stdexcept>

namespace realfill {

int sign(const Integer& x) { return sgn(x); }

Integer abs(const Integer& x) {
  Integer r;
  mpz_abs(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw std::invalid_argument("division by zero");
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer trunc_div(const Integer& a, const Integer& b) {
  if (b == 0) throw std::invalid_argument("division by zero");
  Integer r;
  mpz_tdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool divides(const Integer& d, const Integer& n) {
  if (d == 0) return n == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw std::invalid_argument("isqrt of a negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Integer> exact_sqrt(const Integer& n) {
  if (n < 0 || mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  return isqrt(n);
}

long mod_positive(const Integer& x, long m) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(m));
  return r.get_si();
}

std::string to_string(const Integer& x) { return x.get_str(); }

Integer parse_integer(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string_view body = text.substr(begin, end - begin);

  std::size_t digits_at = 0;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) digits_at = 1;
  if (digits_at == body.size()) {
    throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
  }
  for (std::size_t i = digits_at; i < body.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(body[i]))) {
      throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
    }
  }
  std::string canonical(body.substr(body[0] == '+' ? 1 : 0));
  return Integer(canonical, 10);
}

}  // namespace realfill
