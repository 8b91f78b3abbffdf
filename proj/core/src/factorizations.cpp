#include "realfill/factorizations.hpp"

#include <algorithm>
#include <stdexcept>

namespace realfill {

namespace {

// Divisor search for the centralizer generator stops trial division here.
constexpr unsigned long kDivisorSearchLimit = 1'000'000;

void check_bound(std::int64_t bound) {
  if (bound < 1) throw std::invalid_argument("search bound must be at least 1");
}

bool factorization_less(const TwistFactorization& l, const TwistFactorization& r) {
  if (int c = cmp(l.height(), r.height()); c != 0) return c < 0;
  return l.cycles() < r.cycles();
}

// Normal form inside a Hurwitz class: the last cycle as short as possible.
bool representative_less(const TwistFactorization& l, const TwistFactorization& r) {
  if (int c = cmp(l.cycles().back().height(), r.cycles().back().height()); c != 0) return c < 0;
  return factorization_less(l, r);
}

bool mat_less(const Mat2& l, const Mat2& r) {
  for (auto [a, b] : {std::pair{&l.a11(), &r.a11()}, std::pair{&l.a12(), &r.a12()},
                      std::pair{&l.a21(), &r.a21()}, std::pair{&l.a22(), &r.a22()}}) {
    if (int c = cmp(*a, *b); c != 0) return c < 0;
  }
  return false;
}

// Divisors of n (n >= 1) in increasing order; complete when n <= limit^2,
// otherwise only divisors d or n/d with d <= limit.
std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> small, large;
  for (unsigned long d = 1; d <= kDivisorSearchLimit && Integer(d) * d <= n; ++d) {
    if (!divides(d, n)) continue;
    small.emplace_back(d);
    Integer co = n / d;
    if (co != d) large.push_back(std::move(co));
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

void require_pair(const TwistFactorization& f, std::string_view what) {
  if (f.size() != 2) {
    throw std::invalid_argument(std::string(what) + ": expected a factorization of length 2, got " +
                                std::to_string(f.size()));
  }
}

// Conjugators K in SL(2,Z) with K x = +-x2 and K y = +-y2.
std::optional<HurwitzWitness> find_conjugator(const TwistFactorization& source,
                                              const TwistFactorization& target, int moves) {
  const PrimitiveClass& x = source.cycles()[0];
  const PrimitiveClass& y = source.cycles()[1];
  const PrimitiveClass& x2 = target.cycles()[0];
  const PrimitiveClass& y2 = target.cycles()[1];
  if (intersection(x, y) != intersection(x2, y2)) return std::nullopt;

  if (x == y) {
    // Both pairs repeat one curve; SL(2,Z) is transitive on primitive vectors.
    Mat2 k = complete_basis(x2.vec()) * complete_basis(x.vec()).inverse();
    return HurwitzWitness{moves, k, 1, 1};
  }
  const Mat2 columns = Mat2::from_columns(x.vec(), y.vec());
  for (int s : {1, -1}) {
    for (int t : {1, -1}) {
      Vec2 tx{s * x2.p(), s * x2.q()};
      Vec2 ty{t * y2.p(), t * y2.q()};
      auto k = solve_integral(columns, Mat2::from_columns(tx, ty));
      if (k && k->is_sl2z()) return HurwitzWitness{moves, *k, s, t};
    }
  }
  return std::nullopt;
}

std::string term(const Integer& coeff, const std::string& monomial, bool first) {
  if (coeff == 0) return "";
  std::string out;
  if (first) {
    if (coeff < 0) out += "-";
  } else {
    out += coeff < 0 ? " - " : " + ";
  }
  Integer a = abs(coeff);
  if (a != 1) out += to_string(a) + "*";
  return out + monomial;
}

}  // namespace

// ---------------------------------------------------------------------------
// TwistFactorization

TwistFactorization::TwistFactorization(std::vector<PrimitiveClass> cycles)
    : cycles_(std::move(cycles)) {
  for (const auto& w : cycles_) product_ = twist_matrix(w) * product_;
}

Integer TwistFactorization::height() const {
  Integer h = 0;
  for (const auto& w : cycles_) {
    if (w.height() > h) h = w.height();
  }
  return h;
}

TwistFactorization TwistFactorization::parse(std::string_view text) {
  std::size_t b = text.find_first_not_of(" \t");
  std::size_t e = text.find_last_not_of(" \t");
  if (b == std::string_view::npos) {
    throw std::invalid_argument("empty factorization text; use '()' for the empty factorization");
  }
  std::string_view body = text.substr(b, e - b + 1);
  if (body == "()") return TwistFactorization();
  std::vector<PrimitiveClass> cycles;
  std::size_t start = 0;
  for (;;) {
    std::size_t slash = body.find('/', start);
    cycles.push_back(PrimitiveClass::parse(body.substr(start, slash == body.npos ? body.npos : slash - start)));
    if (slash == body.npos) break;
    start = slash + 1;
  }
  return TwistFactorization(std::move(cycles));
}

std::string TwistFactorization::str() const {
  if (cycles_.empty()) return "()";
  std::string out;
  for (const auto& w : cycles_) {
    if (!out.empty()) out += '/';
    out += w.str();
  }
  return out;
}

Mat2 total_monodromy(const TwistFactorization& f) { return f.product(); }

TwistFactorization transform(const Mat2& k, const TwistFactorization& f) {
  std::vector<PrimitiveClass> cycles;
  cycles.reserve(f.size());
  for (const auto& w : f.cycles()) cycles.push_back(apply(k, w));
  return TwistFactorization(std::move(cycles));
}

TwistFactorization hurwitz_move(const TwistFactorization& f, std::size_t index, MoveDirection dir) {
  if (index < 1 || index >= f.size()) {
    throw std::invalid_argument("hurwitz_move: position " + std::to_string(index) +
                                " out of range for a factorization of length " +
                                std::to_string(f.size()));
  }
  std::vector<PrimitiveClass> cycles = f.cycles();
  const std::size_t i = index - 1;
  const PrimitiveClass x = cycles[i];
  const PrimitiveClass y = cycles[i + 1];
  if (dir == MoveDirection::Left) {
    cycles[i] = apply(twist_matrix(x).inverse(), y);
    cycles[i + 1] = x;
  } else {
    cycles[i] = y;
    cycles[i + 1] = apply(twist_matrix(y), x);
  }
  return TwistFactorization(std::move(cycles));
}

HurwitzVerdict pairs_equivalent(const TwistFactorization& p, const TwistFactorization& q) {
  require_pair(p, "pairs_equivalent");
  require_pair(q, "pairs_equivalent");
  if (p.product() != q.product()) {
    throw std::invalid_argument("pairs_equivalent: factorizations of different matrices " +
                                p.product().str() + " and " + q.product().str());
  }
  // Both sources may work; report the smaller conjugator.
  std::optional<HurwitzWitness> best = find_conjugator(p, q, 0);
  auto moved = find_conjugator(hurwitz_move(p, 1, MoveDirection::Left), q, 1);
  if (moved && (!best || moved->conjugator.height() < best->conjugator.height())) best = moved;
  return {best.has_value(), best};
}

// ---------------------------------------------------------------------------
// Two-twist Diophantine equation

bool BinaryQuadraticEquation::satisfied_by(const Integer& alpha, const Integer& beta) const {
  return coeff_aa * alpha * alpha + coeff_ab * alpha * beta + coeff_bb * beta * beta == rhs;
}

std::string BinaryQuadraticEquation::str() const {
  std::string lhs;
  lhs += term(coeff_aa, "alpha^2", lhs.empty());
  lhs += term(coeff_ab, "alpha*beta", lhs.empty());
  lhs += term(coeff_bb, "beta^2", lhs.empty());
  if (lhs.empty()) lhs = "0";
  return lhs + " = " + to_string(rhs);
}

BinaryQuadraticEquation two_twist_diophantine(const Mat2& m) {
  require_sl2z(m, "two_twist_diophantine");
  return {-m.a21(), m.a11() - m.a22(), m.a12(), 2 - m.trace()};
}

std::vector<PrimitiveClass> solve_two_twist_equation(const BinaryQuadraticEquation& eq,
                                                     std::int64_t bound) {
  check_bound(bound);
  const Integer limit(static_cast<long>(bound));
  std::vector<PrimitiveClass> out;
  auto accept = [&](const Integer& alpha, const Integer& beta) {
    if (abs(alpha) > limit || gcd(alpha, beta) != 1) return;
    if (beta == 0 && alpha != 1) return;  // canonical representative of +-(1,0)
    out.emplace_back(alpha, beta);
  };

  // For each beta >= 0 the equation is a quadratic (or linear) in alpha.
  for (std::int64_t b = 0; b <= bound; ++b) {
    const Integer beta(static_cast<long>(b));
    const Integer lin = eq.coeff_ab * beta;
    const Integer constant = eq.coeff_bb * beta * beta - eq.rhs;
    if (eq.coeff_aa != 0) {
      Integer disc = lin * lin - 4 * eq.coeff_aa * constant;
      auto root = exact_sqrt(disc);
      if (!root) continue;
      const Integer denom = 2 * eq.coeff_aa;
      for (const Integer& numerator : {Integer(-lin - *root), Integer(-lin + *root)}) {
        if (!divides(denom, numerator)) continue;
        accept(numerator / denom, beta);
        if (*root == 0) break;
      }
    } else if (lin != 0) {
      if (divides(lin, constant)) accept(-constant / lin, beta);
    } else if (constant == 0) {
      for (std::int64_t a = -bound; a <= bound; ++a) accept(Integer(static_cast<long>(a)), beta);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Mat2> commuting_hyperbolic_candidates(const Mat2& m) {
  require_sl2z(m, "commuting_hyperbolic_candidates");
  if (abs(m.trace()) <= 2) return {};

  // Integer matrices commuting with m are x I + y n0, n0 = (m - a22 I) / g.
  const Integer g = gcd(gcd(m.a11() - m.a22(), m.a12()), m.a21());
  const Mat2 n0((m.a11() - m.a22()) / g, m.a12() / g, m.a21() / g, 0);
  const Integer tn = n0.trace();
  const Integer dn = n0.det();

  // det(x I + y n0) = x^2 + tn x y + dn y^2 = 1. Every solution is +-K0^j for
  // a fundamental K0, so its y is a multiple of K0's; m itself has y = g.
  for (const Integer& y : divisors(g)) {
    auto root = exact_sqrt(y * y * (tn * tn - 4 * dn) + 4);
    if (!root || *root <= 2) continue;
    std::vector<Mat2> out;
    for (const Integer& sy : {Integer(y), Integer(-y)}) {
      for (const Integer& numerator : {Integer(-tn * sy - *root), Integer(-tn * sy + *root)}) {
        if (!divides(2, numerator)) continue;
        Mat2 k = Integer(numerator / 2) * Mat2() + sy * n0;
        if (k.is_sl2z()) out.push_back(std::move(k));
      }
    }
    if (out.empty()) continue;
    std::sort(out.begin(), out.end(), mat_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  return {};
}

TwoTwistEnumeration enumerate_two_twist_factorizations(const Mat2& m, std::int64_t bound) {
  require_sl2z(m, "enumerate_two_twist_factorizations");
  check_bound(bound);
  const Integer limit(static_cast<long>(bound));
  TwoTwistEnumeration result;
  for (const PrimitiveClass& second : solve_two_twist_equation(two_twist_diophantine(m), bound)) {
    auto cofactor = recognize_positive_twist(twist_matrix(second).inverse() * m);
    if (!cofactor || cofactor->power != 1 || cofactor->curve.height() > limit) continue;
    result.factorizations.emplace_back(std::vector<PrimitiveClass>{cofactor->curve, second});
  }
  std::sort(result.factorizations.begin(), result.factorizations.end(), factorization_less);

  for (const Mat2& s : commuting_hyperbolic_candidates(m)) {
    for (const auto& f : result.factorizations) {
      if (transform(s, f).height() > limit) result.truncated = true;
    }
  }
  return result;
}

HurwitzClasses hurwitz_classes_two(const Mat2& m, std::int64_t bound) {
  TwoTwistEnumeration all = enumerate_two_twist_factorizations(m, bound);
  HurwitzClasses classes;
  classes.truncated = all.truncated;
  for (auto& f : all.factorizations) {
    bool placed = false;
    for (std::size_t i = 0; i < classes.representatives.size() && !placed; ++i) {
      if (pairs_equivalent(classes.representatives[i], f).equivalent) {
        classes.members[i].push_back(f);
        placed = true;
      }
    }
    if (!placed) {
      classes.representatives.push_back(f);
      classes.members.push_back({f});
    }
  }
  std::vector<std::size_t> order(classes.members.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    classes.representatives[i] = *std::min_element(
        classes.members[i].begin(), classes.members[i].end(), representative_less);
    order[i] = i;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return representative_less(classes.representatives[a], classes.representatives[b]);
  });
  HurwitzClasses sorted;
  for (std::size_t i : order) {
    sorted.representatives.push_back(std::move(classes.representatives[i]));
    sorted.members.push_back(std::move(classes.members[i]));
  }
  classes.representatives = std::move(sorted.representatives);
  classes.members = std::move(sorted.members);

  // Commuting symmetries act on factorizations of m; their images must land
  // in a known class.
  classes.commuting = commuting_hyperbolic_candidates(m);
  for (const Mat2& s : classes.commuting) {
    for (const auto& rep : classes.representatives) {
      TwistFactorization image = transform(s, rep);
      bool known = std::any_of(classes.representatives.begin(), classes.representatives.end(),
                               [&](const TwistFactorization& r) {
                                 return pairs_equivalent(r, image).equivalent;
                               });
      if (!known) classes.closure_ok = false;
    }
  }
  return classes;
}

// ---------------------------------------------------------------------------
// Realness obstruction

RealObstructionReport factorization_real_obstruction(const TwistFactorization& f) {
  require_pair(f, "factorization_real_obstruction");
  const PrimitiveClass& x = f.cycles()[0];
  const PrimitiveClass& y = f.cycles()[1];
  RealObstructionReport report{};

  // Invariant cycles of a real torus meet at most twice.
  Integer meet = intersection(x, y);
  report.invariant = {meet > 2 ? CaseStatus::Obstructed : CaseStatus::Open, meet};

  if (x == y) {
    report.swapped = {CaseStatus::Degenerate, 0};
  } else {
    // c x = +-y puts x + y and x - y (for one choice of sign of y) in the two
    // eigenlattices, whose generators pair to at most 2.
    std::optional<Integer> least;
    for (int s : {1, -1}) {
      Vec2 ys{s * y.p(), s * y.q()};
      Integer pairing = intersection(primitive_form(x.vec() + ys).primitive,
                                     primitive_form(x.vec() - ys).primitive);
      if (!least || pairing < *least) least = pairing;
    }
    report.swapped = {*least > 2 ? CaseStatus::Obstructed : CaseStatus::Open, *least};
  }

  const bool invariant_blocked = report.invariant.status == CaseStatus::Obstructed;
  const bool swapped_blocked = report.swapped.status == CaseStatus::Obstructed ||
                               report.swapped.status == CaseStatus::Degenerate;
  report.verdict = invariant_blocked && swapped_blocked ? ObstructionVerdict::NotReal
                                                        : ObstructionVerdict::Inconclusive;

  if (x != y) {
    if (report.invariant.status == CaseStatus::Open) {
      report.preserving_structures = solve_structure_preserving(x, y).size();
    }
    if (report.swapped.status == CaseStatus::Open) {
      report.swapping_structures = solve_structure_swapping(x, y).size();
    }
  }
  return report;
}

const char* to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::Obstructed: return "obstructed";
    case CaseStatus::Open: return "open";
    case CaseStatus::Degenerate: return "degenerate";
  }
  return "?";
}

const char* to_string(ObstructionVerdict v) {
  return v == ObstructionVerdict::NotReal ? "not-real" : "inconclusive";
}

}  // namespace realfill
