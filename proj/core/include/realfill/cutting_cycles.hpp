#pragma once

// Conjugacy invariants of hyperbolic elements of SL(2,Z).
//
// A hyperbolic M with trace > 2 is conjugate to a unique-up-to-rotation
// positive word R^{a_1} L^{a_2} ... R^{a_{2k-1}} L^{a_{2k}} with
// R = [[1,1],[0,1]] and L = [[1,0],[1,1]]. The exponents are read off the
// periodic part of the continued fraction of the attracting fixed point of M
// acting on slopes by x -> (a11 x + a12) / (a21 x + a22).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "realfill/lattice.hpp"

namespace realfill {

/// (p + sqrt(d)) / q with d > 0 not a perfect square and q | d - p^2.
class QuadraticSurd {
 public:
  /// Throws when q = 0 or d is a perfect square. Rescales numerator and
  /// denominator if q does not divide d - p^2.
  QuadraticSurd(Integer p, Integer q, Integer d);

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  const Integer& d() const { return d_; }

  /// floor of the value, computed exactly.
  Integer floor() const;

  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;

  /// "(p+sqrt(d))/q"
  std::string str() const;

 private:
  Integer p_, q_, d_;
};

/// Attracting fixed point of a matrix with trace > 2, reduced by the square
/// factors common to its numerator and denominator.
QuadraticSurd fixed_point_surd(const Mat2& m);

struct ContinuedFraction {
  std::vector<Integer> preperiod;
  std::vector<Integer> period;  // minimal
};

ContinuedFraction cf_expansion(const QuadraticSurd& s);

enum class TraceSign { Positive, Negative };

using CycleWord = std::vector<Integer>;

/// R^{a_1} L^{a_2} ... L^{a_{2k}}. Throws for odd length or entries < 1.
Mat2 evaluate_rl(std::span<const Integer> word);

/// Cutting period cycle of a hyperbolic matrix M together with a witness C in
/// SL(2,Z) such that C^-1 (sign M) C = evaluate_rl(word). The word is the
/// least rotation by an even offset, which makes (word, sign) a complete
/// SL(2,Z)-conjugacy invariant.
class CuttingCycle {
 public:
  /// Verifies the witness relation; throws std::logic_error on mismatch.
  CuttingCycle(CycleWord word, TraceSign sign, Mat2 witness, const Mat2& source);

  const CycleWord& word() const { return word_; }
  TraceSign sign() const { return sign_; }
  const Mat2& witness() const { return witness_; }

  /// "[1,3,1,3] sign=-"
  std::string str() const;

 private:
  CycleWord word_;
  TraceSign sign_;
  Mat2 witness_;
};

/// Throws std::invalid_argument unless |trace(m)| > 2 and det(m) = 1.
CuttingCycle cutting_cycle(const Mat2& m);

/// Least rotation over all offsets.
CycleWord canonical_cycle(std::span<const Integer> word);

struct PalindromicSplit {
  std::size_t rotation;  // word is rotated left by this many letters
  std::size_t cut;       // length of the first piece

  friend bool operator==(const PalindromicSplit&, const PalindromicSplit&) = default;
};

/// A rotation splitting the cyclic word into two nonempty palindromes of odd
/// length, if any.
std::optional<PalindromicSplit> is_odd_bipalindromic(std::span<const Integer> word);

/// The two pieces described by a split.
std::pair<CycleWord, CycleWord> split_pieces(std::span<const Integer> word,
                                             const PalindromicSplit& split);

struct HyperbolicRealness {
  bool real;
  CuttingCycle cycle;
  std::optional<PalindromicSplit> split;
};

/// Realness criterion for hyperbolic elements: real iff the cutting period
/// cycle is odd-bipalindromic. Throws for |trace| <= 2.
HyperbolicRealness is_real_hyperbolic(const Mat2& m);

/// SL(2,Z)-conjugacy of two hyperbolic matrices. Throws for |trace| <= 2.
bool hyperbolic_conjugate(const Mat2& m, const Mat2& n);

std::string cycle_str(std::span<const Integer> word);
/// Parses "[1,3,1,3]".
CycleWord parse_cycle(std::string_view text);

}  // namespace realfill
