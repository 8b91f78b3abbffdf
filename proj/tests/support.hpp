#pragma once

// Independent oracles and random generators for the test suites. Nothing here
// calls the algorithms under test: arithmetic is plain 128-bit integers,
// searches are brute force, continued fractions use high-precision floats.

#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "realfill/lattice.hpp"

namespace oracle {

using i128 = __int128;

struct Small {
  i128 a, b, c, d;

  friend bool operator==(const Small&, const Small&) = default;
};

inline Small mul(const Small& m, const Small& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c,
          m.c * n.b + m.d * n.d};
}

inline i128 det(const Small& m) { return m.a * m.d - m.b * m.c; }

// Inverse of a determinant-one matrix.
inline Small inv(const Small& m) { return {m.d, -m.b, -m.c, m.a}; }

inline realfill::Integer big(i128 v) {
  if (v >= INT64_MIN && v <= INT64_MAX) return realfill::Integer(static_cast<long>(v));
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string digits;
  while (u > 0) {
    digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  return realfill::Integer((neg ? "-" : "") + digits);
}

inline i128 small(const realfill::Integer& v) {
  if (!v.fits_slong_p()) throw std::out_of_range("oracle entry too large: " + v.get_str());
  return v.get_si();
}

inline realfill::Mat2 to_mat(const Small& m) {
  return realfill::Mat2(big(m.a), big(m.b), big(m.c), big(m.d));
}

inline Small from_mat(const realfill::Mat2& m) {
  return {small(m.a11()), small(m.a12()), small(m.a21()), small(m.a22())};
}

inline constexpr Small kTa{1, 1, 0, 1};
inline constexpr Small kTb{1, 0, -1, 1};
inline constexpr Small kIdentity{1, 0, 0, 1};

// A matrix of determinant one whose first column is (p, q), by brute force
// over the second column.
inline Small basis_with_first_column(i128 p, i128 q) {
  for (i128 r = 0; r < 1000; ++r) {
    for (i128 s = -r; s <= r; ++s) {
      for (i128 t : {r, -r}) {
        if (p * t - s * q == 1) return {p, s, q, t};
        if (p * s - t * q == 1) return {p, t, q, s};
      }
    }
  }
  // Large entries: extended Euclid, then s, t with p t - s q = 1.
  i128 r0 = p, r1 = q, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
  while (r1 != 0) {
    i128 k = r0 / r1;
    i128 r2 = r0 - k * r1, x2 = x0 - k * x1, y2 = y0 - k * y1;
    r0 = r1, r1 = r2, x0 = x1, x1 = x2, y0 = y1, y1 = y2;
  }
  if (r0 == -1) x0 = -x0, y0 = -y0, r0 = 1;
  if (r0 != 1) throw std::runtime_error("no completing column found");
  return {p, -y0, q, x0};
}

// Twist along (p, q) as the conjugate K t_a K^-1 with K e_1 = (p, q).
inline Small twist(i128 p, i128 q) {
  Small k = basis_with_first_column(p, q);
  return mul(mul(k, kTa), inv(k));
}

inline i128 gcd(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Canonical sign of an unoriented primitive pair.
inline std::pair<i128, i128> canonical(i128 p, i128 q) {
  if (q < 0 || (q == 0 && p < 0)) return {-p, -q};
  return {p, q};
}

// Determinant -1 involutions with entries in [-bound, bound], by testing every
// matrix against m^2 = I and det = -1.
inline std::vector<Small> involutions(int bound) {
  std::vector<Small> out;
  for (int a = -bound; a <= bound; ++a)
    for (int b = -bound; b <= bound; ++b)
      for (int c = -bound; c <= bound; ++c)
        for (int d = -bound; d <= bound; ++d) {
          Small m{a, b, c, d};
          if (det(m) == -1 && mul(m, m) == kIdentity) out.push_back(m);
        }
  return out;
}

// Continued fraction digits of (p + sqrt(d)) / q computed in floating point
// with enough bits that the first `count` digits are exact.
inline std::vector<long> cf_digits(long p, long q, long d, int count, int bits = 4096) {
  mpf_class x(0, bits);
  mpf_class root(0, bits);
  mpf_class dd(d, bits);
  mpf_sqrt(root.get_mpf_t(), dd.get_mpf_t());
  x = (mpf_class(p, bits) + root) / mpf_class(q, bits);
  std::vector<long> out;
  for (int i = 0; i < count; ++i) {
    mpf_class f(0, bits);
    mpf_floor(f.get_mpf_t(), x.get_mpf_t());
    out.push_back(f.get_si());
    x = mpf_class(1, bits) / (x - f);
  }
  return out;
}

inline bool palindrome(const std::vector<long>& w, std::size_t from, std::size_t len) {
  for (std::size_t i = 0; i < len / 2; ++i) {
    if (w[from + i] != w[from + len - 1 - i]) return false;
  }
  return true;
}

// Every rotation and every split into two odd nonempty palindromes.
inline bool odd_bipalindromic(const std::vector<long>& word) {
  const std::size_t n = word.size();
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<long> rot(n);
    for (std::size_t i = 0; i < n; ++i) rot[i] = word[(r + i) % n];
    for (std::size_t cut = 1; cut < n; cut += 2) {
      if ((n - cut) % 2 == 1 && palindrome(rot, 0, cut) && palindrome(rot, cut, n - cut)) return true;
    }
  }
  return false;
}

// R^{a1} L^{a2} ... by repeated multiplication with the letters themselves.
inline Small rl_product(const std::vector<long>& word) {
  Small out = kIdentity;
  for (std::size_t i = 0; i < word.size(); ++i) {
    Small letter = i % 2 == 0 ? Small{1, 1, 0, 1} : Small{1, 0, 1, 1};
    for (long k = 0; k < word[i]; ++k) out = mul(out, letter);
  }
  return out;
}

// Some C with det 1 and C M = N C among entries in [-bound, bound].
inline bool conjugate_by_search(const Small& m, const Small& n, int bound) {
  for (int a = -bound; a <= bound; ++a)
    for (int b = -bound; b <= bound; ++b)
      for (int c = -bound; c <= bound; ++c)
        for (int d = -bound; d <= bound; ++d) {
          Small k{a, b, c, d};
          if (det(k) == 1 && mul(k, m) == mul(n, k)) return true;
        }
  return false;
}

}  // namespace oracle

namespace gen {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline realfill::PrimitiveClass primitive(Rng& rng, long bound) {
  for (;;) {
    long p = uniform(rng, -bound, bound);
    long q = uniform(rng, -bound, bound);
    if (std::gcd(p, q) == 1) return realfill::PrimitiveClass(p, q);
  }
}

// Product of `length` random letters t_a^{+-1}, t_b^{+-1}.
inline oracle::Small word_matrix(Rng& rng, int length) {
  oracle::Small m = oracle::kIdentity;
  for (int i = 0; i < length; ++i) {
    oracle::Small g = uniform(rng, 0, 1) == 0 ? oracle::kTa : oracle::kTb;
    if (uniform(rng, 0, 1) == 0) g = oracle::inv(g);
    m = oracle::mul(m, g);
  }
  return m;
}

inline realfill::Mat2 sl2z(Rng& rng, int max_length) {
  return oracle::to_mat(word_matrix(rng, static_cast<int>(uniform(rng, 0, max_length))));
}

}  // namespace gen
