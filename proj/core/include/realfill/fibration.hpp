#pragma once

// Genus-1 Lefschetz fibrations over the disk and the open books on their
// boundaries.
//
// A boundary mapping class of the once-holed torus is stored as its action on
// homology together with its degree (each positive twist counts 1). The
// kernel of the map to SL(2,Z) is generated by the boundary twist, which has
// degree 12, so the pair is a faithful encoding.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "realfill/cutting_cycles.hpp"
#include "realfill/factorizations.hpp"
#include "realfill/lattice.hpp"
#include "realfill/real_structures.hpp"

namespace realfill {

enum class FiberKind { ClosedTorus, TorusWithBoundary };

struct GenusOneFibration {
  std::vector<PrimitiveClass> cycles;  // vanishing cycles, first applied first
  FiberKind fiber_kind = FiberKind::TorusWithBoundary;
};

class OpenBookMonodromy {
 public:
  /// Throws unless matrix is in SL(2,Z) and deg = deg_mod12(matrix) mod 12.
  OpenBookMonodromy(Mat2 matrix, Integer deg);

  const Mat2& matrix() const { return matrix_; }
  const Integer& deg() const { return deg_; }

  /// Composition: (*this) after `first`.
  OpenBookMonodromy after(const OpenBookMonodromy& first) const;

  friend bool operator==(const OpenBookMonodromy&, const OpenBookMonodromy&) = default;

 private:
  Mat2 matrix_;
  Integer deg_;
};

/// Throws for closed fibers, whose boundary is a torus bundle.
OpenBookMonodromy boundary_open_book(const GenusOneFibration& f);

/// Monodromy of the boundary torus bundle of any genus-1 fibration.
Mat2 boundary_bundle(const GenusOneFibration& f);

enum class RealnessKind { Real, NotReal, Inconclusive };

struct OpenBookRealness {
  RealnessKind kind;
  std::optional<RealnessCertificate> certificate;  // from bounded search
  std::optional<CuttingCycle> cycle;               // hyperbolic case
  std::optional<PalindromicSplit> split;
};

/// Realness of the page monodromy, which does not depend on deg. Decided
/// exactly for hyperbolic matrices, by bounded search otherwise.
OpenBookRealness is_open_book_real(const OpenBookMonodromy& ob,
                                   std::int64_t bound = kDefaultSearchBound);

struct FillingReport {
  bool fillable = false;
  Integer twist_count;
  std::vector<TwistFactorization> classes;          // Hurwitz class representatives
  std::vector<RealObstructionReport> per_class_real;  // two-twist fillings only
  bool supported = true;
  bool truncated = false;
  std::string note;
};

/// Fillings by genus-1 Lefschetz fibrations with one boundary component. A
/// filling has exactly deg twists; deg >= 3 is reported unsupported.
FillingReport fillings(const OpenBookMonodromy& ob, std::int64_t bound = kDefaultSearchBound);

enum class RealFilling {
  None,          // no filling is real (or there is no filling at all)
  TrivialEmpty,  // the empty fibration fills the identity
  OutOfScope,    // single-twist fillings
  Undetermined,  // some two-twist class is not obstructed
  Unsupported,   // deg >= 3
};

struct RealFillingVerdict {
  OpenBookRealness open_book;
  FillingReport filling;
  RealFilling real_filling;
  std::string summary;
};

RealFillingVerdict real_filling_verdict(const OpenBookMonodromy& ob,
                                        std::int64_t bound = kDefaultSearchBound);

const char* to_string(RealnessKind k);
const char* to_string(RealFilling r);

// ---------------------------------------------------------------------------
// Reference scenario: the fibration with vanishing cycles 3a + 5b then a.

struct ScenarioCheck {
  std::string name;
  bool passed;
  std::vector<std::pair<std::string, std::string>> witness;
};

struct ScenarioReport {
  std::vector<ScenarioCheck> checks;
  std::string verdict;

  bool all_passed() const;
  /// Stable JSON document with a top-level "schema": 1.
  std::string to_json() const;
  /// One "PASS name: key=value ..." line per check, then the verdict.
  std::string to_text() const;
};

struct ScenarioOptions {
  /// Replaces the computed monodromy in every downstream check.
  std::optional<Mat2> injected_monodromy;
  std::int64_t class_bound = 40;
  std::int64_t search_bound = kDefaultSearchBound;
};

ScenarioReport paper_scenario(const ScenarioOptions& options = {});

}  // namespace realfill
