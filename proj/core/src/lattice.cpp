#include "realfill/lattice.hpp"

#include <cctype>
#include <stdexcept>

namespace realfill {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t at = s.find(sep, start);
    if (at == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, at - start));
    start = at + 1;
  }
}

}  // namespace

Vec2 operator+(const Vec2& u, const Vec2& v) { return {u.x + v.x, u.y + v.y}; }
Vec2 operator-(const Vec2& u, const Vec2& v) { return {u.x - v.x, u.y - v.y}; }

Integer cross(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }

// ---------------------------------------------------------------------------
// Mat2

Mat2::Mat2() : a11_(1), a12_(0), a21_(0), a22_(1) {}

Mat2::Mat2(Integer a11, Integer a12, Integer a21, Integer a22)
    : a11_(std::move(a11)), a12_(std::move(a12)), a21_(std::move(a21)), a22_(std::move(a22)) {}

Mat2 Mat2::sl2z(Integer a11, Integer a12, Integer a21, Integer a22) {
  Mat2 m(std::move(a11), std::move(a12), std::move(a21), std::move(a22));
  if (!m.is_sl2z()) {
    throw std::invalid_argument("matrix " + m.str() + " has determinant " + to_string(m.det()) +
                                ", expected 1");
  }
  return m;
}

Mat2 Mat2::gl2z(Integer a11, Integer a12, Integer a21, Integer a22) {
  Mat2 m(std::move(a11), std::move(a12), std::move(a21), std::move(a22));
  if (!m.is_gl2z()) {
    throw std::invalid_argument("matrix " + m.str() + " has determinant " + to_string(m.det()) +
                                ", expected +1 or -1");
  }
  return m;
}

Mat2 Mat2::from_columns(const Vec2& u, const Vec2& v) { return Mat2(u.x, v.x, u.y, v.y); }

Mat2 Mat2::parse(std::string_view text) {
  auto rows = split(trim(text), ';');
  if (rows.size() != 2) {
    throw std::invalid_argument("matrix must look like 'a,b;c,d', got '" + std::string(text) + "'");
  }
  auto top = split(rows[0], ',');
  auto bottom = split(rows[1], ',');
  if (top.size() != 2 || bottom.size() != 2) {
    throw std::invalid_argument("matrix must look like 'a,b;c,d', got '" + std::string(text) + "'");
  }
  return Mat2(parse_integer(top[0]), parse_integer(top[1]), parse_integer(bottom[0]),
              parse_integer(bottom[1]));
}

Integer Mat2::det() const { return a11_ * a22_ - a12_ * a21_; }
Integer Mat2::trace() const { return a11_ + a22_; }
bool Mat2::is_gl2z() const { return abs(det()) == 1; }
bool Mat2::is_sl2z() const { return det() == 1; }
bool Mat2::is_identity() const { return *this == Mat2(); }

Integer Mat2::height() const {
  Integer h = abs(a11_);
  for (const Integer* e : {&a12_, &a21_, &a22_}) {
    if (abs(*e) > h) h = abs(*e);
  }
  return h;
}

Mat2 Mat2::adjugate() const { return Mat2(a22_, -a12_, -a21_, a11_); }

Mat2 Mat2::inverse() const {
  Integer d = det();
  if (d == 1) return adjugate();
  if (d == -1) return -adjugate();
  throw std::invalid_argument("matrix " + str() + " is not invertible over Z");
}

Mat2 Mat2::pow(long exponent) const {
  Mat2 base = exponent < 0 ? inverse() : *this;
  unsigned long n = exponent < 0 ? -static_cast<unsigned long>(exponent)
                                 : static_cast<unsigned long>(exponent);
  Mat2 result;
  while (n > 0) {
    if (n & 1UL) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

Mat2 Mat2::operator-() const { return Mat2(-a11_, -a12_, -a21_, -a22_); }

Mat2 operator*(const Mat2& m, const Mat2& n) {
  return Mat2(m.a11_ * n.a11_ + m.a12_ * n.a21_, m.a11_ * n.a12_ + m.a12_ * n.a22_,
              m.a21_ * n.a11_ + m.a22_ * n.a21_, m.a21_ * n.a12_ + m.a22_ * n.a22_);
}

Vec2 operator*(const Mat2& m, const Vec2& v) {
  return {m.a11_ * v.x + m.a12_ * v.y, m.a21_ * v.x + m.a22_ * v.y};
}

Mat2 operator+(const Mat2& m, const Mat2& n) {
  return Mat2(m.a11_ + n.a11_, m.a12_ + n.a12_, m.a21_ + n.a21_, m.a22_ + n.a22_);
}

Mat2 operator-(const Mat2& m, const Mat2& n) {
  return Mat2(m.a11_ - n.a11_, m.a12_ - n.a12_, m.a21_ - n.a21_, m.a22_ - n.a22_);
}

Mat2 operator*(const Integer& k, const Mat2& m) {
  return Mat2(k * m.a11_, k * m.a12_, k * m.a21_, k * m.a22_);
}

std::string Mat2::str() const {
  return to_string(a11_) + "," + to_string(a12_) + ";" + to_string(a21_) + "," + to_string(a22_);
}

void require_sl2z(const Mat2& m, std::string_view what) {
  if (!m.is_sl2z()) {
    throw std::invalid_argument(std::string(what) + ": matrix " + m.str() + " has determinant " +
                                to_string(m.det()) + ", expected 1");
  }
}

std::optional<Mat2> solve_integral(const Mat2& source, const Mat2& target) {
  Integer d = source.det();
  if (d == 0) throw std::invalid_argument("solve_integral: singular source matrix");
  Mat2 numerator = target * source.adjugate();
  for (const Integer* e : {&numerator.a11(), &numerator.a12(), &numerator.a21(), &numerator.a22()}) {
    if (!divides(d, *e)) return std::nullopt;
  }
  return Mat2(numerator.a11() / d, numerator.a12() / d, numerator.a21() / d, numerator.a22() / d);
}

Mat2 complete_basis(const Vec2& w) {
  // s p + t q = 1 gives det [[p, -t], [q, s]] = 1.
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), w.x.get_mpz_t(), w.y.get_mpz_t());
  if (g != 1) throw std::invalid_argument("complete_basis: vector is not primitive");
  return Mat2(w.x, -t, w.y, s);
}

// ---------------------------------------------------------------------------
// PrimitiveClass

PrimitiveClass::PrimitiveClass(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {
  if (gcd(p_, q_) != 1) {
    throw std::invalid_argument("(" + to_string(p_) + "," + to_string(q_) +
                                ") is not a primitive class");
  }
  if (q_ < 0 || (q_ == 0 && p_ < 0)) {
    p_ = -p_;
    q_ = -q_;
  }
}

PrimitiveClass PrimitiveClass::parse(std::string_view text) {
  auto parts = split(trim(text), ',');
  if (parts.size() != 2) {
    throw std::invalid_argument("class must look like 'p,q', got '" + std::string(text) + "'");
  }
  return PrimitiveClass(parse_integer(parts[0]), parse_integer(parts[1]));
}

Integer PrimitiveClass::height() const {
  Integer hp = abs(p_), hq = abs(q_);
  return hp > hq ? hp : hq;
}

std::strong_ordering operator<=>(const PrimitiveClass& l, const PrimitiveClass& r) {
  if (int c = cmp(l.p_, r.p_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (int c = cmp(l.q_, r.q_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string PrimitiveClass::str() const { return to_string(p_) + "," + to_string(q_); }

PrimitiveClass apply(const Mat2& m, const PrimitiveClass& w) {
  if (!m.is_gl2z()) {
    throw std::invalid_argument("apply: matrix " + m.str() + " is not in GL(2,Z)");
  }
  return PrimitiveClass(m * w.vec());
}

// ---------------------------------------------------------------------------
// Twists

Mat2 twist_matrix(const PrimitiveClass& w) {
  const Integer& p = w.p();
  const Integer& q = w.q();
  Integer pq = p * q;
  return Mat2(1 - pq, p * p, -(q * q), 1 + pq);
}

Integer intersection(const PrimitiveClass& w1, const PrimitiveClass& w2) {
  return abs(cross(w1.vec(), w2.vec()));
}

PrimitiveForm primitive_form(const Vec2& x) {
  if (x.x == 0 && x.y == 0) throw std::invalid_argument("no primitive form for the zero vector");
  Integer g = gcd(x.x, x.y);
  Integer p = x.x / g;
  Integer q = x.y / g;
  return {PrimitiveClass(std::move(p), std::move(q)), g};
}

std::optional<TwistPower> recognize_positive_twist(const Mat2& m) {
  require_sl2z(m, "recognize_positive_twist");
  // m - I must equal k * [[-pq, p^2], [-q^2, pq]] with k >= 1.
  Mat2 n = m - Mat2::identity();
  const Integer& p2k = n.a12();
  Integer q2k = -n.a21();
  if (n.trace() != 0 || p2k < 0 || q2k < 0 || (p2k == 0 && q2k == 0)) return std::nullopt;

  // gcd(k p^2, k q^2) = k because gcd(p, q) = 1.
  Integer k = gcd(p2k, q2k);
  auto p = exact_sqrt(p2k / k);
  auto q = exact_sqrt(q2k / k);
  if (!p || !q) return std::nullopt;
  if (*q == 0) {
    if (*p != 1) return std::nullopt;
  } else if (n.a11() > 0) {
    // -pq > 0 forces opposite signs.
    *p = -*p;
  }
  PrimitiveClass w(*p, *q);
  if (n != k * (twist_matrix(w) - Mat2::identity())) return std::nullopt;
  return TwistPower{w, k};
}

// ---------------------------------------------------------------------------
// Generator words

void GeneratorWord::append(Generator g, const Integer& exponent) {
  if (exponent == 0) return;
  if (!syllables_.empty() && syllables_.back().generator == g) {
    syllables_.back().exponent += exponent;
    if (syllables_.back().exponent == 0) syllables_.pop_back();
    return;
  }
  syllables_.push_back({g, exponent});
}

void GeneratorWord::append(const GeneratorWord& other) {
  for (const auto& s : other.syllables_) append(s.generator, s.exponent);
}

Integer GeneratorWord::length() const {
  Integer n = 0;
  for (const auto& s : syllables_) n += abs(s.exponent);
  return n;
}

Integer GeneratorWord::exponent_sum() const {
  Integer n = 0;
  for (const auto& s : syllables_) n += s.exponent;
  return n;
}

GeneratorWord GeneratorWord::parse(std::string_view text) {
  GeneratorWord w;
  std::string_view rest = trim(text);
  if (rest == "1") return w;
  while (!rest.empty()) {
    std::size_t end = rest.find(' ');
    std::string_view token = rest.substr(0, end);
    rest = end == std::string_view::npos ? std::string_view{} : trim(rest.substr(end));
    if (token.empty()) continue;
    Generator g;
    if (token[0] == 'A') {
      g = Generator::A;
    } else if (token[0] == 'B') {
      g = Generator::B;
    } else {
      throw std::invalid_argument("unknown generator in word token '" + std::string(token) + "'");
    }
    Integer e = 1;
    if (token.size() > 1) {
      if (token[1] != '^') {
        throw std::invalid_argument("malformed word token '" + std::string(token) + "'");
      }
      e = parse_integer(token.substr(2));
    }
    w.append(g, e);
  }
  return w;
}

std::string GeneratorWord::str() const {
  if (syllables_.empty()) return "1";
  std::string out;
  for (const auto& s : syllables_) {
    if (!out.empty()) out += ' ';
    out += s.generator == Generator::A ? 'A' : 'B';
    if (s.exponent != 1) out += "^" + to_string(s.exponent);
  }
  return out;
}

Mat2 generator_matrix(Generator g) {
  return g == Generator::A ? Mat2(1, 1, 0, 1) : Mat2(1, 0, -1, 1);
}

Mat2 generator_power(Generator g, const Integer& exponent) {
  return g == Generator::A ? Mat2(1, exponent, 0, 1) : Mat2(1, 0, -exponent, 1);
}

Mat2 evaluate_word(const GeneratorWord& w) {
  Mat2 m;
  for (const auto& s : w.syllables()) m = m * generator_power(s.generator, s.exponent);
  return m;
}

GeneratorWord sl2z_word(const Mat2& m) {
  require_sl2z(m, "sl2z_word");

  // Reduce the first column to (+-1, 0) by left multiplication with powers of
  // A (row1 += n row2) and B (row2 -= n row1). `applied` lists the factors in
  // the order they were multiplied on, so reduced = g_k ... g_1 m.
  GeneratorWord applied;
  Mat2 cur = m;
  while (cur.a21() != 0) {
    Syllable step;
    if (abs(cur.a11()) > abs(cur.a21())) {
      step = {Generator::A, -trunc_div(cur.a11(), cur.a21())};
    } else if (cur.a11() != 0) {
      step = {Generator::B, trunc_div(cur.a21(), cur.a11())};
    } else {
      // First column (0, +-1); A^c moves it to (1, c).
      step = {Generator::A, cur.a21()};
    }
    cur = generator_power(step.generator, step.exponent) * cur;
    applied.append(step.generator, step.exponent);
  }

  // cur = eps * A^(eps * b) with eps = +-1, and m = g_1^-1 ... g_k^-1 cur.
  GeneratorWord word;
  for (const auto& s : applied.syllables()) word.append(s.generator, -s.exponent);
  const Integer& eps = cur.a11();
  if (eps < 0) {
    // (AB)^3 = -I
    for (int i = 0; i < 3; ++i) {
      word.append(Generator::A, 1);
      word.append(Generator::B, 1);
    }
  }
  word.append(Generator::A, eps * cur.a12());
  return word;
}

int deg_mod12(const Mat2& m) {
  return static_cast<int>(mod_positive(sl2z_word(m).exponent_sum(), 12));
}

}  // namespace realfill
