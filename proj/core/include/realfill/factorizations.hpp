#pragma once

// Positive Dehn twist factorizations of torus monodromies, Hurwitz moves, and
// the two-twist case: enumeration, equivalence, and the realness obstruction.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "realfill/lattice.hpp"
#include "realfill/real_structures.hpp"

namespace realfill {

/// Vanishing cycles in the order they are applied; product() is
/// twist_matrix(w_n) * ... * twist_matrix(w_1).
class TwistFactorization {
 public:
  TwistFactorization() = default;
  explicit TwistFactorization(std::vector<PrimitiveClass> cycles);

  const std::vector<PrimitiveClass>& cycles() const { return cycles_; }
  const Mat2& product() const { return product_; }
  std::size_t size() const { return cycles_.size(); }
  Integer height() const;

  /// Parses "3,5/1,0"; "()" is the empty factorization.
  static TwistFactorization parse(std::string_view text);
  /// "3,5/1,0", or "()" when empty.
  std::string str() const;

  friend bool operator==(const TwistFactorization& l, const TwistFactorization& r) {
    return l.cycles_ == r.cycles_;
  }

 private:
  std::vector<PrimitiveClass> cycles_;
  Mat2 product_;
};

Mat2 total_monodromy(const TwistFactorization& f);

/// Global conjugation: every cycle w becomes k w.
TwistFactorization transform(const Mat2& k, const TwistFactorization& f);

enum class MoveDirection {
  Left,   // (x, y) -> (t_x^-1 y, x)
  Right,  // (x, y) -> (y, t_y x)
};

/// Hurwitz move on the cycles at positions index and index + 1, counted from 1.
TwistFactorization hurwitz_move(const TwistFactorization& f, std::size_t index, MoveDirection dir);

struct HurwitzWitness {
  int moves;          // 0 or 1 Left moves at position 1 applied to the source
  Mat2 conjugator;    // K with K x = sign_first x', K y = sign_second y'
  int sign_first;
  int sign_second;
};

struct HurwitzVerdict {
  bool equivalent;
  std::optional<HurwitzWitness> witness;
};

/// Decides Hurwitz equivalence (with global conjugation) of two length-2
/// factorizations of the same matrix. Two Left moves amount to conjugation by
/// the inverse product, so a single move plus a conjugation covers every case.
HurwitzVerdict pairs_equivalent(const TwistFactorization& p, const TwistFactorization& q);

/// coeff_aa alpha^2 + coeff_ab alpha beta + coeff_bb beta^2 = rhs
struct BinaryQuadraticEquation {
  Integer coeff_aa;
  Integer coeff_ab;
  Integer coeff_bb;
  Integer rhs;

  bool satisfied_by(const Integer& alpha, const Integer& beta) const;
  /// "25a^2 - 55ab + 25b^2 = 25" with a = alpha, b = beta.
  std::string str() const;

  friend bool operator==(const BinaryQuadraticEquation&, const BinaryQuadraticEquation&) = default;
};

/// trace(twist_matrix((alpha, beta))^-1 * m) = 2, written as a binary
/// quadratic equation in (alpha, beta).
BinaryQuadraticEquation two_twist_diophantine(const Mat2& m);

/// Primitive classes (alpha, beta) of height <= bound solving the equation.
std::vector<PrimitiveClass> solve_two_twist_equation(const BinaryQuadraticEquation& eq,
                                                     std::int64_t bound);

/// Determinant-one matrices commuting with m with the least |trace| > 2,
/// searched in the centralizer x I + y (m - a22 I) / g. Empty when m is
/// not hyperbolic.
std::vector<Mat2> commuting_hyperbolic_candidates(const Mat2& m);

struct TwoTwistEnumeration {
  std::vector<TwistFactorization> factorizations;  // sorted by height, then lexicographically
  /// Some commuting symmetry maps a found factorization beyond the bound, so
  /// more factorizations exist than were listed.
  bool truncated = false;
};

TwoTwistEnumeration enumerate_two_twist_factorizations(const Mat2& m, std::int64_t bound);

struct HurwitzClasses {
  /// One per class: shortest last cycle, then least height. Classes are
  /// ordered by their representatives the same way.
  std::vector<TwistFactorization> representatives;
  std::vector<std::vector<TwistFactorization>> members;
  std::vector<Mat2> commuting;  // candidates used for the closure check
  bool closure_ok = true;
  bool truncated = false;
};

HurwitzClasses hurwitz_classes_two(const Mat2& m, std::int64_t bound);

enum class CaseStatus { Obstructed, Open, Degenerate };

struct CaseOutcome {
  CaseStatus status;
  Integer value;  // intersection or eigenbasis pairing; 0 when degenerate
};

enum class ObstructionVerdict { NotReal, Inconclusive };

struct RealObstructionReport {
  CaseOutcome invariant;  // both critical values real: cycles c-invariant
  CaseOutcome swapped;    // critical values exchanged: c x = +-y
  ObstructionVerdict verdict;
  /// Homological corroboration, filled in when the matching case is Open.
  std::optional<std::size_t> preserving_structures;
  std::optional<std::size_t> swapping_structures;
};

RealObstructionReport factorization_real_obstruction(const TwistFactorization& f);

const char* to_string(CaseStatus s);
const char* to_string(ObstructionVerdict v);

}  // namespace realfill
