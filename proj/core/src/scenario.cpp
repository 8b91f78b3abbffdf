#include <algorithm>
#include <exception>
#include <functional>

#include <nlohmann/json.hpp>

#include "realfill/fibration.hpp"

namespace realfill {

namespace {

const Mat2 kMonodromy(-39, 25, -25, 16);
const Mat2 kReferenceC(5, -3, 8, -5);
const Mat2 kReferenceCPrime(-120, 77, -187, 120);
const Mat2 kCommuting(-3, 5, -5, 8);

using Witness = std::vector<std::pair<std::string, std::string>>;

TwistFactorization pair_of(long p1, long q1, long p2, long q2) {
  return TwistFactorization({PrimitiveClass(p1, q1), PrimitiveClass(p2, q2)});
}

// Runs one check; exceptions turn into a failed check with the message.
ScenarioCheck run_check(std::string name, const std::function<bool(Witness&)>& body) {
  Witness witness;
  bool ok = false;
  try {
    ok = body(witness);
  } catch (const std::exception& e) {
    witness.emplace_back("error", e.what());
  }
  return {std::move(name), ok, std::move(witness)};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

bool ScenarioReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ScenarioCheck& c) { return c.passed; });
}

std::string ScenarioReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["report"] = "scenario";
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json w = nlohmann::ordered_json::object();
    for (const auto& [k, v] : c.witness) w[k] = v;
    doc["checks"].push_back({{"name", c.name}, {"status", c.passed ? "PASS" : "FAIL"}, {"witness", w}});
  }
  doc["passed"] = all_passed();
  doc["verdict"] = verdict;
  return doc.dump(2) + "\n";
}

std::string ScenarioReport::to_text() const {
  std::string out;
  for (const auto& c : checks) {
    out += c.passed ? "PASS " : "FAIL ";
    out += c.name;
    for (std::size_t i = 0; i < c.witness.size(); ++i) {
      out += i == 0 ? ": " : "; ";
      out += c.witness[i].first + "=" + c.witness[i].second;
    }
    out += '\n';
  }
  return out + verdict + "\n";
}

ScenarioReport paper_scenario(const ScenarioOptions& options) {
  ScenarioReport report;
  const TwistFactorization reference = pair_of(3, 5, 1, 0);
  const Mat2 computed = total_monodromy(reference);
  const Mat2 f = options.injected_monodromy.value_or(computed);

  report.checks.push_back(run_check("monodromy", [&](Witness& w) {
    w.emplace_back("cycles", reference.str());
    w.emplace_back("matrix", f.str());
    w.emplace_back("deg_mod12", std::to_string(deg_mod12(f)));
    return computed == kMonodromy && f == computed && deg_mod12(f) == 2;
  }));

  report.checks.push_back(run_check("realness-certificate", [&](Witness& w) {
    bool reference_ok = RealnessCertificate::verify(kReferenceC, kReferenceCPrime, f);
    w.emplace_back("reference_pair", kReferenceC.str() + " * " + kReferenceCPrime.str());
    w.emplace_back("reference_pair_valid", yes_no(reference_ok));
    auto found = realness_by_search(f, options.search_bound);
    if (found) {
      w.emplace_back("found", found->c().matrix().str() + " * " + found->c_prime().matrix().str());
    }
    return reference_ok && found &&
           RealnessCertificate::verify(found->c().matrix(), found->c_prime().matrix(), f);
  }));

  report.checks.push_back(run_check("cutting-cycle", [&](Witness& w) {
    CuttingCycle cycle = cutting_cycle(f);
    w.emplace_back("cycle", cycle.str());
    w.emplace_back("witness", cycle.witness().str());
    auto split = is_odd_bipalindromic(cycle.word());
    if (!split) return false;
    auto [left, right] = split_pieces(cycle.word(), *split);
    w.emplace_back("pieces", cycle_str(left) + "|" + cycle_str(right));
    const CycleWord expected{1, 3, 1, 3};
    return cycle.word() == expected && cycle.sign() == TraceSign::Negative &&
           left == CycleWord{1} && right == CycleWord{3, 1, 3};
  }));

  report.checks.push_back(run_check("diophantine", [&](Witness& w) {
    BinaryQuadraticEquation eq = two_twist_diophantine(f);
    w.emplace_back("equation", eq.str());
    auto solutions = solve_two_twist_equation(eq, options.class_bound);
    std::string listed;
    for (const auto& s : solutions) listed += (listed.empty() ? "" : " ") + s.str();
    w.emplace_back("solutions", listed);
    const BinaryQuadraticEquation expected{25, -55, 25, 25};
    bool contains = true;
    for (auto [p, q] : {std::pair{1, 0}, {0, 1}, {3, 5}, {5, 8}, {16, 25}, {25, 39}}) {
      contains = contains && std::find(solutions.begin(), solutions.end(),
                                       PrimitiveClass(p, q)) != solutions.end();
    }
    auto commuting = commuting_hyperbolic_candidates(f);
    bool has_s = std::find(commuting.begin(), commuting.end(), kCommuting) != commuting.end();
    w.emplace_back("commuting", kCommuting.str() + (has_s ? " found" : " missing"));
    bool closed = true;
    const Integer limit(static_cast<long>(options.class_bound));
    for (const Mat2& s : {kCommuting, kCommuting.inverse()}) {
      for (const auto& sol : solutions) {
        PrimitiveClass image = apply(s, sol);
        if (image.height() <= limit &&
            std::find(solutions.begin(), solutions.end(), image) == solutions.end()) {
          closed = false;
        }
        if (!eq.satisfied_by(image.p(), image.q())) closed = false;
      }
    }
    w.emplace_back("orbit_closed", yes_no(closed));
    return eq == expected && contains && has_s && closed;
  }));

  HurwitzClasses classes;
  report.checks.push_back(run_check("hurwitz-classes", [&](Witness& w) {
    classes = hurwitz_classes_two(f, options.class_bound);
    std::string reps;
    for (const auto& r : classes.representatives) reps += (reps.empty() ? "" : " ") + r.str();
    w.emplace_back("classes", reps);
    const TwistFactorization first = pair_of(3, 5, 1, 0);
    const TwistFactorization second = pair_of(5, 8, 0, 1);
    bool across = pairs_equivalent(first, second).equivalent;
    bool within = pairs_equivalent(first, pair_of(16, 25, 3, 5)).equivalent;
    w.emplace_back("equivalent_across", yes_no(across));
    w.emplace_back("equivalent_within", yes_no(within));
    w.emplace_back("closure", yes_no(classes.closure_ok));
    return classes.representatives == std::vector<TwistFactorization>{first, second} && !across &&
           within && classes.closure_ok;
  }));

  report.checks.push_back(run_check("obstruction", [&](Witness& w) {
    bool ok = !classes.representatives.empty();
    for (const auto& rep : classes.representatives) {
      RealObstructionReport r = factorization_real_obstruction(rep);
      w.emplace_back(rep.str(), std::string(to_string(r.verdict)) + " (" +
                                    to_string(r.invariant.value) + "," +
                                    to_string(r.swapped.value) + ")");
      ok = ok && r.verdict == ObstructionVerdict::NotReal && r.invariant.value == 5 &&
           r.swapped.value == 10;
    }
    return ok;
  }));

  RealFillingVerdict verdict;
  report.checks.push_back(run_check("verdict", [&](Witness& w) {
    verdict = real_filling_verdict(OpenBookMonodromy(f, 2), options.search_bound);
    w.emplace_back("open_book", to_string(verdict.open_book.kind));
    w.emplace_back("fillable", yes_no(verdict.filling.fillable));
    w.emplace_back("classes", std::to_string(verdict.filling.classes.size()));
    w.emplace_back("real_filling", to_string(verdict.real_filling));
    return verdict.open_book.kind == RealnessKind::Real && verdict.filling.fillable &&
                 verdict.filling.classes.size() == 2 && verdict.real_filling == RealFilling::None;
  }));

  if (report.all_passed()) {
    report.verdict = verdict.summary;
  } else {
    std::size_t failed = std::count_if(report.checks.begin(), report.checks.end(),
                                       [](const ScenarioCheck& c) { return !c.passed; });
    report.verdict = "FAIL: " + std::to_string(failed) + " of " +
                     std::to_string(report.checks.size()) + " checks failed";
  }
  return report;
}

}  // namespace realfill
