#include "realfill/cutting_cycles.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>
#include <utility>

namespace realfill {

namespace {

// Trial division limit used when stripping square factors from a surd.
constexpr unsigned long kTrialDivisionLimit = 100'000;

// Largest s with s | g and s^2 | d, as far as trial division up to the limit
// (plus one leftover cofactor) can tell.
Integer common_square_factor(Integer g, const Integer& d) {
  g = abs(g);
  Integer s = 1;
  Integer rest = d;
  for (unsigned long f = 2; f <= kTrialDivisionLimit && Integer(f) * f <= g; ++f) {
    while (divides(f, g)) {
      g /= f;
      if (divides(Integer(f) * f, rest)) {
        rest /= Integer(f) * f;
        s *= f;
      }
    }
  }
  if (g > 1 && divides(g * g, rest)) s *= g;
  return s;
}

bool is_hyperbolic(const Mat2& m) { return abs(m.trace()) > 2; }

void require_hyperbolic(const Mat2& m, std::string_view what) {
  require_sl2z(m, what);
  if (!is_hyperbolic(m)) {
    throw std::invalid_argument(std::string(what) + ": matrix " + m.str() + " has trace " +
                                to_string(m.trace()) + "; criterion applies to hyperbolic elements only");
  }
}

// Moebius matrix of x -> 1 / (x - a).
Mat2 cf_step(const Integer& a) { return Mat2(0, 1, 1, -a); }

CycleWord rotate(std::span<const Integer> word, std::size_t by) {
  CycleWord out(word.begin(), word.end());
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(by), out.end());
  return out;
}

bool is_palindrome(std::span<const Integer> w) {
  for (std::size_t i = 0, j = w.size(); i + 1 < j; ++i, --j) {
    if (w[i] != w[j - 1]) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// QuadraticSurd

QuadraticSurd::QuadraticSurd(Integer p, Integer q, Integer d)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
  if (q_ == 0) throw std::invalid_argument("surd denominator must be nonzero");
  if (d_ <= 0 || exact_sqrt(d_)) {
    throw std::invalid_argument("surd radicand " + to_string(d_) +
                                " must be a positive non-square");
  }
  if (!divides(q_, d_ - p_ * p_)) {
    // (p + sqrt(d)) / q = (p|q| + sqrt(d q^2)) / (q|q|)
    Integer aq = abs(q_);
    p_ *= aq;
    d_ *= q_ * q_;
    q_ *= aq;
  }
}

Integer QuadraticSurd::floor() const {
  Integer s = isqrt(d_);
  if (q_ > 0) return floor_div(p_ + s, q_);
  return floor_div(-p_ - s - 1, -q_);
}

std::string QuadraticSurd::str() const {
  return "(" + to_string(p_) + "+sqrt(" + to_string(d_) + "))/" + to_string(q_);
}

QuadraticSurd fixed_point_surd(const Mat2& m) {
  require_sl2z(m, "fixed_point_surd");
  if (m.a21() == 0) {
    throw std::invalid_argument("matrix " + m.str() + " has no quadratic fixed point");
  }
  if (m.trace() <= 2) {
    throw std::invalid_argument("fixed_point_surd: matrix " + m.str() +
                                " must be hyperbolic with trace > 2");
  }
  // c x^2 + (d - a) x - b = 0; the root with c x + d equal to the larger
  // eigenvalue is attracting.
  Integer p = m.a11() - m.a22();
  Integer q = 2 * m.a21();
  Integer d = m.trace() * m.trace() - 4;
  Integer s = common_square_factor(gcd(p, q), d);
  return QuadraticSurd(p / s, q / s, d / (s * s));
}

ContinuedFraction cf_expansion(const QuadraticSurd& s) {
  std::vector<Integer> digits;
  std::map<std::pair<Integer, Integer>, std::size_t> seen;
  Integer p = s.p();
  Integer q = s.q();
  const Integer& d = s.d();
  for (;;) {
    auto [it, inserted] = seen.emplace(std::make_pair(p, q), digits.size());
    if (!inserted) {
      std::size_t start = it->second;
      ContinuedFraction cf;
      cf.preperiod.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(start));
      cf.period.assign(digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end());
      return cf;
    }
    Integer a = QuadraticSurd(p, q, d).floor();
    digits.push_back(a);
    p = a * q - p;
    q = (d - p * p) / q;
  }
}

// ---------------------------------------------------------------------------
// RL words

Mat2 evaluate_rl(std::span<const Integer> word) {
  if (word.size() % 2 != 0) throw std::invalid_argument("RL word must have even length");
  Mat2 m;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] < 1) throw std::invalid_argument("RL word entries must be positive");
    m = m * (i % 2 == 0 ? Mat2(1, word[i], 0, 1) : Mat2(1, 0, word[i], 1));
  }
  return m;
}

CuttingCycle::CuttingCycle(CycleWord word, TraceSign sign, Mat2 witness, const Mat2& source)
    : word_(std::move(word)), sign_(sign), witness_(std::move(witness)) {
  if (word_.size() < 2 || word_.size() % 2 != 0) {
    throw std::logic_error("cutting cycle must have even length");
  }
  Mat2 signed_source = sign_ == TraceSign::Positive ? source : -source;
  if (!witness_.is_sl2z() ||
      witness_.inverse() * signed_source * witness_ != evaluate_rl(word_)) {
    throw std::logic_error("cutting cycle witness does not conjugate " + source.str() + " to " +
                           cycle_str(word_));
  }
}

std::string CuttingCycle::str() const {
  return cycle_str(word_) + " sign=" + (sign_ == TraceSign::Positive ? "+" : "-");
}

CuttingCycle cutting_cycle(const Mat2& m) {
  require_sl2z(m, "cutting_cycle");
  if (!is_hyperbolic(m)) {
    throw std::invalid_argument("cutting_cycle: matrix " + m.str() + " is not hyperbolic");
  }
  const TraceSign sign = m.trace() > 0 ? TraceSign::Positive : TraceSign::Negative;
  const Mat2 positive = sign == TraceSign::Positive ? m : -m;

  ContinuedFraction cf = cf_expansion(fixed_point_surd(positive));

  // Walk the continued fraction to the start of the periodic tail y, taking
  // an even number of steps so that gamma lies in SL(2,Z).
  Mat2 gamma;
  for (const Integer& a : cf.preperiod) gamma = cf_step(a) * gamma;
  CycleWord period = cf.period;
  if (cf.preperiod.size() % 2 != 0) {
    gamma = cf_step(period.front()) * gamma;
    period = rotate(period, 1);
  }
  if (period.size() % 2 != 0) {
    // Odd periods are doubled so that R and L alternate.
    const CycleWord once = period;
    period.insert(period.end(), once.begin(), once.end());
  }

  // gamma * positive * gamma^-1 fixes y with y attracting, so it is a positive
  // power of the primitive word for y.
  const Mat2 primitive = evaluate_rl(period);
  const Integer target_trace = positive.trace();
  Mat2 power = primitive;
  CycleWord word = period;
  while (power.trace() < target_trace) {
    power = power * primitive;
    word.insert(word.end(), period.begin(), period.end());
  }
  Mat2 conjugated = gamma * positive * gamma.inverse();
  if (conjugated != power) {
    throw std::logic_error("cutting_cycle: reduction of " + m.str() + " failed");
  }
  Mat2 witness = gamma.inverse();

  // Normalize to the least rotation by an even offset, conjugating the
  // witness by the rotated prefix.
  std::size_t best = 0;
  CycleWord best_word = word;
  for (std::size_t r = 2; r < word.size(); r += 2) {
    CycleWord candidate = rotate(word, r);
    if (candidate < best_word) {
      best = r;
      best_word = std::move(candidate);
    }
  }
  if (best != 0) {
    witness = witness * evaluate_rl(std::span<const Integer>(word.data(), best));
  }
  return CuttingCycle(std::move(best_word), sign, std::move(witness), m);
}

CycleWord canonical_cycle(std::span<const Integer> word) {
  CycleWord best(word.begin(), word.end());
  for (std::size_t r = 1; r < word.size(); ++r) {
    CycleWord candidate = rotate(word, r);
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

std::optional<PalindromicSplit> is_odd_bipalindromic(std::span<const Integer> word) {
  const std::size_t n = word.size();
  for (std::size_t r = 0; r < n; ++r) {
    CycleWord rotated = rotate(word, r);
    std::span<const Integer> w(rotated);
    for (std::size_t cut = 1; cut < n; cut += 2) {
      if ((n - cut) % 2 == 0) continue;
      if (is_palindrome(w.first(cut)) && is_palindrome(w.subspan(cut))) {
        return PalindromicSplit{r, cut};
      }
    }
  }
  return std::nullopt;
}

std::pair<CycleWord, CycleWord> split_pieces(std::span<const Integer> word,
                                             const PalindromicSplit& split) {
  CycleWord rotated = rotate(word, split.rotation);
  CycleWord tail(rotated.begin() + static_cast<std::ptrdiff_t>(split.cut), rotated.end());
  rotated.resize(split.cut);
  return {std::move(rotated), std::move(tail)};
}

HyperbolicRealness is_real_hyperbolic(const Mat2& m) {
  require_hyperbolic(m, "is_real_hyperbolic");
  CuttingCycle cycle = cutting_cycle(m);
  auto split = is_odd_bipalindromic(cycle.word());
  return {split.has_value(), std::move(cycle), split};
}

bool hyperbolic_conjugate(const Mat2& m, const Mat2& n) {
  require_hyperbolic(m, "hyperbolic_conjugate");
  require_hyperbolic(n, "hyperbolic_conjugate");
  CuttingCycle a = cutting_cycle(m);
  CuttingCycle b = cutting_cycle(n);
  return a.sign() == b.sign() && a.word() == b.word();
}

std::string cycle_str(std::span<const Integer> word) {
  std::string out = "[";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ',';
    out += to_string(word[i]);
  }
  return out + "]";
}

CycleWord parse_cycle(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string_view body = text.substr(b, e - b);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
    throw std::invalid_argument("cycle must look like '[1,3,1,3]', got '" + std::string(text) + "'");
  }
  body = body.substr(1, body.size() - 2);
  CycleWord word;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    std::string_view token = body.substr(start, comma == std::string_view::npos ? body.npos : comma - start);
    Integer v = parse_integer(token);
    if (v < 1) throw std::invalid_argument("cycle entries must be positive");
    word.push_back(std::move(v));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return word;
}

}  // namespace realfill
