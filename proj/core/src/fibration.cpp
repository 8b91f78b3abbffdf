#include "realfill/fibration.hpp"

#include <algorithm>
#include <stdexcept>

namespace realfill {

OpenBookMonodromy::OpenBookMonodromy(Mat2 matrix, Integer deg)
    : matrix_(std::move(matrix)), deg_(std::move(deg)) {
  require_sl2z(matrix_, "OpenBookMonodromy");
  const int expected = deg_mod12(matrix_);
  if (mod_positive(deg_, 12) != expected) {
    throw std::invalid_argument("degree " + to_string(deg_) + " is inconsistent with matrix " +
                                matrix_.str() + " (degree must be " + std::to_string(expected) +
                                " mod 12)");
  }
}

OpenBookMonodromy OpenBookMonodromy::after(const OpenBookMonodromy& first) const {
  return OpenBookMonodromy(matrix_ * first.matrix_, deg_ + first.deg_);
}

OpenBookMonodromy boundary_open_book(const GenusOneFibration& f) {
  if (f.fiber_kind == FiberKind::ClosedTorus) {
    throw std::invalid_argument("closed-fiber boundary is a torus bundle, not an open book");
  }
  return OpenBookMonodromy(TwistFactorization(f.cycles).product(),
                           Integer(static_cast<unsigned long>(f.cycles.size())));
}

Mat2 boundary_bundle(const GenusOneFibration& f) { return TwistFactorization(f.cycles).product(); }

OpenBookRealness is_open_book_real(const OpenBookMonodromy& ob, std::int64_t bound) {
  const Mat2& m = ob.matrix();
  if (abs(m.trace()) > 2) {
    HyperbolicRealness h = is_real_hyperbolic(m);
    return {h.real ? RealnessKind::Real : RealnessKind::NotReal, std::nullopt, std::move(h.cycle),
            h.split};
  }
  if (auto cert = realness_by_search(m, bound)) {
    return {RealnessKind::Real, std::move(cert), std::nullopt, std::nullopt};
  }
  return {RealnessKind::Inconclusive, std::nullopt, std::nullopt, std::nullopt};
}

FillingReport fillings(const OpenBookMonodromy& ob, std::int64_t bound) {
  FillingReport report;
  report.twist_count = ob.deg();
  const Mat2& m = ob.matrix();
  const Integer& deg = ob.deg();

  if (deg < 0) {
    report.note = "negative degree: no positive factorization";
  } else if (deg == 0) {
    report.fillable = m.is_identity();
    if (report.fillable) report.classes.emplace_back();
    report.note = report.fillable ? "filled by the empty fibration" : "degree 0 but matrix is not I";
  } else if (deg == 1) {
    auto twist = recognize_positive_twist(m);
    report.fillable = twist && twist->power == 1;
    if (report.fillable) report.classes.emplace_back(std::vector<PrimitiveClass>{twist->curve});
    report.note = report.fillable ? "single vanishing cycle" : "degree 1 but not a single twist";
  } else if (deg == 2) {
    HurwitzClasses classes = hurwitz_classes_two(m, bound);
    report.classes = std::move(classes.representatives);
    report.fillable = !report.classes.empty();
    report.truncated = classes.truncated;
    for (const auto& rep : report.classes) {
      report.per_class_real.push_back(factorization_real_obstruction(rep));
    }
    report.note = report.fillable ? "two-twist fillings up to Hurwitz equivalence"
                                  : "no two-twist factorization within bound";
  } else {
    report.supported = false;
    report.note = "degree >= 3: every filling has exactly deg twists; enumeration unsupported";
  }
  report.note += "; genus-1 fibers with one boundary component only";
  return report;
}

RealFillingVerdict real_filling_verdict(const OpenBookMonodromy& ob, std::int64_t bound) {
  RealFillingVerdict v{is_open_book_real(ob, bound), fillings(ob, bound), RealFilling::None, ""};
  const FillingReport& fr = v.filling;

  if (!fr.supported) {
    v.real_filling = RealFilling::Unsupported;
  } else if (!fr.fillable) {
    v.real_filling = RealFilling::None;
  } else if (ob.deg() == 0) {
    v.real_filling = RealFilling::TrivialEmpty;
  } else if (ob.deg() == 1) {
    v.real_filling = RealFilling::OutOfScope;
  } else {
    bool all_obstructed = std::all_of(
        fr.per_class_real.begin(), fr.per_class_real.end(),
        [](const RealObstructionReport& r) { return r.verdict == ObstructionVerdict::NotReal; });
    v.real_filling = all_obstructed ? RealFilling::None : RealFilling::Undetermined;
  }

  std::string book = v.open_book.kind == RealnessKind::Real      ? "real open book"
                     : v.open_book.kind == RealnessKind::NotReal ? "non-real open book"
                                                                 : "open book of undetermined realness";
  std::string fill;
  if (!fr.supported) {
    fill = "fillings unsupported for degree " + to_string(fr.twist_count);
  } else if (!fr.fillable) {
    fill = "no fillings";
  } else if (fr.classes.size() == 2) {
    fill = "two fillings";
  } else if (fr.classes.size() == 1) {
    fill = "one filling";
  } else {
    fill = std::to_string(fr.classes.size()) + " fillings";
  }
  std::string real;
  switch (v.real_filling) {
    case RealFilling::None:
      real = fr.fillable ? (fr.classes.size() == 2 ? "neither real" : "none real") : "no real filling";
      break;
    case RealFilling::TrivialEmpty: real = "the empty fibration is real"; break;
    case RealFilling::OutOfScope: real = "realness of single-twist fillings not decided"; break;
    case RealFilling::Undetermined: real = "realness undetermined"; break;
    case RealFilling::Unsupported: real = "realness unsupported"; break;
  }
  v.summary = book + "; " + fill + "; " + real;
  return v;
}

const char* to_string(RealnessKind k) {
  switch (k) {
    case RealnessKind::Real: return "real";
    case RealnessKind::NotReal: return "not-real";
    case RealnessKind::Inconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(RealFilling r) {
  switch (r) {
    case RealFilling::None: return "none";
    case RealFilling::TrivialEmpty: return "trivial-empty";
    case RealFilling::OutOfScope: return "out-of-scope";
    case RealFilling::Undetermined: return "undetermined";
    case RealFilling::Unsupported: return "unsupported";
  }
  return "?";
}

}  // namespace realfill
