#include "realfill/real_structures.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace realfill {

namespace {

// Upper limit keeping p^2 within 64 bits during enumeration.
constexpr std::int64_t kMaxEnumerationBound = 1'000'000'000;

void check_bound(std::int64_t bound) {
  if (bound < 1) throw std::invalid_argument("search bound must be at least 1");
  if (bound > kMaxEnumerationBound) {
    throw std::invalid_argument("search bound exceeds " + std::to_string(kMaxEnumerationBound));
  }
}

bool mat_less(const Mat2& l, const Mat2& r) {
  std::array<const Integer*, 4> a{&l.a11(), &l.a12(), &l.a21(), &l.a22()};
  std::array<const Integer*, 4> b{&r.a11(), &r.a12(), &r.a21(), &r.a22()};
  for (std::size_t i = 0; i < 4; ++i) {
    if (int c = cmp(*a[i], *b[i]); c != 0) return c < 0;
  }
  return false;
}

std::optional<Mat2> solve_columns(const Vec2& x, const Vec2& y, const Vec2& target_x,
                                  const Vec2& target_y) {
  return solve_integral(Mat2::from_columns(x, y), Mat2::from_columns(target_x, target_y));
}

std::vector<Involution> collect(std::vector<Mat2> candidates) {
  std::sort(candidates.begin(), candidates.end(), mat_less);
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<Involution> out;
  for (auto& m : candidates) {
    if (is_involution(m)) out.emplace_back(std::move(m));
  }
  return out;
}

void require_distinct(const PrimitiveClass& x, const PrimitiveClass& y) {
  if (x == y) throw std::invalid_argument("degenerate pair: both classes are " + x.str());
}

}  // namespace

bool is_involution(const Mat2& m) {
  return m.det() == -1 && m.trace() == 0 && (m * m).is_identity();
}

Involution::Involution(Mat2 m) : m_(std::move(m)) {
  if (!is_involution(m_)) {
    throw std::invalid_argument("matrix " + m_.str() +
                                " is not an involution of determinant -1");
  }
}

RealnessCertificate::RealnessCertificate(Involution c, Involution c_prime, Mat2 target)
    : c_(std::move(c)), c_prime_(std::move(c_prime)), target_(std::move(target)) {
  if (c_.matrix() * c_prime_.matrix() != target_) {
    throw std::invalid_argument("certificate product does not equal " + target_.str());
  }
}

bool RealnessCertificate::verify(const Mat2& c, const Mat2& c_prime, const Mat2& target) {
  return is_involution(c) && is_involution(c_prime) && c * c_prime == target;
}

EigenBasis eigen_lattice_basis(const Involution& c) {
  const Mat2& m = c.matrix();
  const Integer& p = m.a11();
  const Integer& q = m.a12();
  const Integer& r = m.a21();
  // Kernel of a nonzero row (s, t) is spanned by (t, -s); c - I and c + I are
  // nonzero of rank one, so one of their rows gives the eigenline.
  auto kernel = [](const Vec2& row1, const Vec2& row2) {
    Vec2 k{row1.y, -row1.x};
    if (k.x == 0 && k.y == 0) k = {row2.y, -row2.x};
    return primitive_form(k).primitive;
  };
  PrimitiveClass plus = kernel({p - 1, q}, {r, -p - 1});
  PrimitiveClass minus = kernel({p + 1, q}, {r, 1 - p});
  return {plus, minus};
}

Pairing pairing_and_type(const Involution& c) {
  EigenBasis basis = eigen_lattice_basis(c);
  Integer value = intersection(basis.plus, basis.minus);
  return {value, value == 1 ? InvolutionType::Split : InvolutionType::NonSplit};
}

void for_each_involution(std::int64_t bound, const std::function<bool(const Mat2&)>& visit) {
  check_bound(bound);
  for (std::int64_t p = -bound; p <= bound; ++p) {
    // q r = 1 - p^2
    const std::int64_t rhs = 1 - p * p;
    for (std::int64_t q = -bound; q <= bound; ++q) {
      if (q == 0) {
        if (rhs != 0) continue;
        for (std::int64_t r = -bound; r <= bound; ++r) {
          if (!visit(Mat2(Integer(static_cast<long>(p)), 0, Integer(static_cast<long>(r)),
                          Integer(static_cast<long>(-p))))) {
            return;
          }
        }
        continue;
      }
      if (rhs % q != 0) continue;
      const std::int64_t r = rhs / q;
      if (r < -bound || r > bound) continue;
      if (!visit(Mat2(Integer(static_cast<long>(p)), Integer(static_cast<long>(q)),
                      Integer(static_cast<long>(r)), Integer(static_cast<long>(-p))))) {
        return;
      }
    }
  }
}

std::vector<Involution> enumerate_involutions(std::int64_t bound) {
  std::vector<Involution> out;
  for_each_involution(bound, [&](const Mat2& m) {
    out.emplace_back(m);
    return true;
  });
  return out;
}

std::optional<RealnessCertificate> realness_by_search(const Mat2& m, std::int64_t bound) {
  require_sl2z(m, "realness_by_search");
  std::optional<RealnessCertificate> found;
  for_each_involution(bound, [&](const Mat2& c) {
    // c * (c m) = m; c m is an involution iff c m c = m^-1.
    Mat2 c_prime = c * m;
    if (c_prime.trace() != 0 || !(c_prime * c_prime).is_identity()) return true;
    found.emplace(Involution(c), Involution(std::move(c_prime)), m);
    return false;
  });
  return found;
}

std::vector<Involution> solve_structure_preserving(const PrimitiveClass& x,
                                                   const PrimitiveClass& y) {
  require_distinct(x, y);
  std::vector<Mat2> candidates;
  for (int s : {1, -1}) {
    for (int t : {1, -1}) {
      Vec2 tx{s * x.p(), s * x.q()};
      Vec2 ty{t * y.p(), t * y.q()};
      if (auto c = solve_columns(x.vec(), y.vec(), tx, ty)) candidates.push_back(std::move(*c));
    }
  }
  return collect(std::move(candidates));
}

std::vector<Involution> solve_structure_swapping(const PrimitiveClass& x,
                                                 const PrimitiveClass& y) {
  require_distinct(x, y);
  std::vector<Mat2> candidates;
  for (int s : {1, -1}) {
    for (int t : {1, -1}) {
      Vec2 tx{s * y.p(), s * y.q()};
      Vec2 ty{t * x.p(), t * x.q()};
      if (auto c = solve_columns(x.vec(), y.vec(), tx, ty)) candidates.push_back(std::move(*c));
    }
  }
  return collect(std::move(candidates));
}

}  // namespace realfill
