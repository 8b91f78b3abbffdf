#pragma once

// Homological real structures on the torus: integer involutions of
// determinant -1 acting on H_1(T^2; Z).

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "realfill/lattice.hpp"

namespace realfill {

/// Search bound used when none is given. Large enough to contain the
/// certificate of the reference monodromy, whose largest entry is 187.
inline constexpr std::int64_t kDefaultSearchBound = 200;

class Involution {
 public:
  /// Throws unless m^2 = I, det(m) = -1 and trace(m) = 0.
  explicit Involution(Mat2 m);

  const Mat2& matrix() const { return m_; }

  friend bool operator==(const Involution&, const Involution&) = default;

 private:
  Mat2 m_;
};

bool is_involution(const Mat2& m);

/// A decomposition target = c * c_prime into two real structures.
class RealnessCertificate {
 public:
  /// Throws unless c * c_prime equals target exactly.
  RealnessCertificate(Involution c, Involution c_prime, Mat2 target);

  /// Checks a candidate pair without constructing anything.
  static bool verify(const Mat2& c, const Mat2& c_prime, const Mat2& target);

  const Involution& c() const { return c_; }
  const Involution& c_prime() const { return c_prime_; }
  const Mat2& target() const { return target_; }

 private:
  Involution c_;
  Involution c_prime_;
  Mat2 target_;
};

struct EigenBasis {
  PrimitiveClass plus;   // generates ker(c - I)
  PrimitiveClass minus;  // generates ker(c + I)
};

EigenBasis eigen_lattice_basis(const Involution& c);

enum class InvolutionType { Split, NonSplit };

struct Pairing {
  Integer value;  // intersection of the eigenlattice generators, 1 or 2
  InvolutionType type;
};

Pairing pairing_and_type(const Involution& c);

/// Every involution [[p, q], [r, -p]] with p^2 + qr = 1 and all entries
/// bounded by `bound` in absolute value, ordered lexicographically by (p, q, r).
/// Throws for bound < 1.
std::vector<Involution> enumerate_involutions(std::int64_t bound);

/// Visits the same sequence as enumerate_involutions; stops early when the
/// visitor returns false.
void for_each_involution(std::int64_t bound, const std::function<bool(const Mat2&)>& visit);

/// Looks for c with entries bounded by `bound` such that c * m is also an
/// involution. An empty result is inconclusive, not a proof of non-realness.
std::optional<RealnessCertificate> realness_by_search(const Mat2& m,
                                                      std::int64_t bound = kDefaultSearchBound);

/// All involutions c with c x = +-x and c y = +-y. Throws when x = y.
std::vector<Involution> solve_structure_preserving(const PrimitiveClass& x,
                                                   const PrimitiveClass& y);

/// All involutions c with c x = +-y (and hence c y = +-x). Throws when x = y.
std::vector<Involution> solve_structure_swapping(const PrimitiveClass& x,
                                                 const PrimitiveClass& y);

}  // namespace realfill
