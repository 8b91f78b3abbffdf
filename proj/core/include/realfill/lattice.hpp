#pragma once

// Exact 2x2 integer matrix algebra on H_1(T^2; Z) = Z a + Z b.
//
// Composition convention: a twist factorization (w_1, ..., w_n) lists the
// vanishing cycles in the order they are applied, so its total monodromy is
// the matrix product twist_matrix(w_n) * ... * twist_matrix(w_1). Generator
// words are read the same way as written compositions: the word [A, B]
// evaluates to [t_a][t_b], i.e. t_b acts first.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "realfill/integer.hpp"

namespace realfill {

struct Vec2 {
  Integer x;
  Integer y;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

Vec2 operator+(const Vec2& u, const Vec2& v);
Vec2 operator-(const Vec2& u, const Vec2& v);

/// Signed algebraic intersection u.x * v.y - u.y * v.x.
Integer cross(const Vec2& u, const Vec2& v);

class Mat2 {
 public:
  /// The identity matrix.
  Mat2();
  Mat2(Integer a11, Integer a12, Integer a21, Integer a22);

  static Mat2 identity() { return Mat2(); }
  /// Rejects matrices whose determinant is not +1.
  static Mat2 sl2z(Integer a11, Integer a12, Integer a21, Integer a22);
  /// Rejects matrices whose determinant is not +1 or -1.
  static Mat2 gl2z(Integer a11, Integer a12, Integer a21, Integer a22);
  /// Matrix whose columns are u and v.
  static Mat2 from_columns(const Vec2& u, const Vec2& v);

  /// Parses "a,b;c,d" (rows separated by ';').
  static Mat2 parse(std::string_view text);

  const Integer& a11() const { return a11_; }
  const Integer& a12() const { return a12_; }
  const Integer& a21() const { return a21_; }
  const Integer& a22() const { return a22_; }

  Integer det() const;
  Integer trace() const;
  bool is_gl2z() const;
  bool is_sl2z() const;
  bool is_identity() const;
  /// Largest absolute value of an entry.
  Integer height() const;

  /// Inverse of a GL(2,Z) matrix; throws for other determinants.
  Mat2 inverse() const;
  /// Adjugate, so that m * m.adjugate() = det(m) * I.
  Mat2 adjugate() const;
  Mat2 pow(long exponent) const;

  Mat2 operator-() const;
  friend Mat2 operator*(const Mat2& m, const Mat2& n);
  friend Vec2 operator*(const Mat2& m, const Vec2& v);
  friend Mat2 operator+(const Mat2& m, const Mat2& n);
  friend Mat2 operator-(const Mat2& m, const Mat2& n);
  friend Mat2 operator*(const Integer& k, const Mat2& m);
  friend bool operator==(const Mat2&, const Mat2&) = default;

  /// "a,b;c,d"
  std::string str() const;

 private:
  Integer a11_, a12_, a21_, a22_;
};

/// The integer matrix X with X * source = target, if one exists. source must
/// be nonsingular.
std::optional<Mat2> solve_integral(const Mat2& source, const Mat2& target);

/// A matrix in SL(2,Z) whose first column is w.
Mat2 complete_basis(const Vec2& w);

/// Throws std::invalid_argument naming `what` unless det(m) = 1.
void require_sl2z(const Mat2& m, std::string_view what);

/// Unoriented primitive class p a + q b, stored with q > 0 or (q = 0, p > 0).
class PrimitiveClass {
 public:
  PrimitiveClass(Integer p, Integer q);
  explicit PrimitiveClass(const Vec2& v) : PrimitiveClass(v.x, v.y) {}

  /// Parses "p,q".
  static PrimitiveClass parse(std::string_view text);

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  Vec2 vec() const { return {p_, q_}; }
  Integer height() const;

  friend bool operator==(const PrimitiveClass&, const PrimitiveClass&) = default;
  friend std::strong_ordering operator<=>(const PrimitiveClass& l, const PrimitiveClass& r);

  /// "p,q"
  std::string str() const;

 private:
  Integer p_, q_;
};

/// Image of an unoriented class under a GL(2,Z) matrix.
PrimitiveClass apply(const Mat2& m, const PrimitiveClass& w);

/// Matrix of the positive Dehn twist along w: [[1-pq, p^2], [-q^2, 1+pq]].
Mat2 twist_matrix(const PrimitiveClass& w);

/// Geometric intersection number |p1 q2 - q1 p2| of two primitive classes.
Integer intersection(const PrimitiveClass& w1, const PrimitiveClass& w2);

struct PrimitiveForm {
  PrimitiveClass primitive;
  Integer multiplier;
};

/// Writes x = +-multiplier * primitive. Throws for the zero vector.
PrimitiveForm primitive_form(const Vec2& x);

struct TwistPower {
  PrimitiveClass curve;
  Integer power;  // >= 1
};

/// Recognizes m as a positive power of a single Dehn twist. Returns nothing for
/// the identity, negative twists and non-parabolic matrices.
std::optional<TwistPower> recognize_positive_twist(const Mat2& m);

enum class Generator { A, B };

/// A run of one generator raised to a nonzero integer power.
struct Syllable {
  Generator generator;
  Integer exponent;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Word in t_a (A) and t_b (B), stored run-length encoded.
class GeneratorWord {
 public:
  GeneratorWord() = default;

  /// Appends g^exponent, merging with the last run when possible.
  void append(Generator g, const Integer& exponent);
  void append(const GeneratorWord& other);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }
  /// Number of letters A^{+-1}, B^{+-1}.
  Integer length() const;
  Integer exponent_sum() const;

  /// Parses e.g. "A B^-1 A^3"; the empty string is the empty word.
  static GeneratorWord parse(std::string_view text);
  /// "A B^-1 A^3", or "1" for the empty word.
  std::string str() const;

  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;

 private:
  std::vector<Syllable> syllables_;
};

Mat2 generator_matrix(Generator g);
Mat2 generator_power(Generator g, const Integer& exponent);

/// Product of the letters from left to right.
Mat2 evaluate_word(const GeneratorWord& w);

/// A word in t_a, t_b evaluating to m, found by Euclidean reduction of the
/// first column. Throws unless det(m) = 1.
GeneratorWord sl2z_word(const Mat2& m);

/// Exponent sum of any word for m, modulo 12. Throws unless det(m) = 1.
int deg_mod12(const Mat2& m);

}  // namespace realfill
