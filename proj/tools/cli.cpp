#include "cli.hpp"

#include <charconv>
#include <functional>
#include <map>
#include <stdexcept>
#include <string_view>

#include <nlohmann/json.hpp>

#include "realfill/fibration.hpp"

namespace realfill::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Invocation {
  std::string command;
  std::vector<std::string> positional;
  std::int64_t bound = kDefaultSearchBound;
  bool bound_given = false;
  bool json = false;
  bool quiet = false;
};

// Text lines plus the JSON document for one command.
struct Output {
  int exit_code = kSuccess;
  std::string text;
  Json doc = Json::object();
};

std::int64_t parse_bound(std::string_view s) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value < 1) {
    throw UsageError("--bound expects a positive integer, got '" + std::string(s) + "'");
  }
  return value;
}

// Anything starting with "--" is a flag; a single leading '-' belongs to a
// number such as "-39,25;-25,16".
Invocation parse_args(const std::vector<std::string>& args) {
  Invocation inv;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--", 0) == 0) {
      if (a == "--json") {
        inv.json = true;
      } else if (a == "--quiet") {
        inv.quiet = true;
      } else if (a == "--bound") {
        if (i + 1 >= args.size()) throw UsageError("--bound needs a value");
        inv.bound = parse_bound(args[++i]);
        inv.bound_given = true;
      } else if (a.rfind("--bound=", 0) == 0) {
        inv.bound = parse_bound(std::string_view(a).substr(8));
        inv.bound_given = true;
      } else if (a == "--help") {
        inv.command = "help";
      } else {
        throw UsageError("unknown flag " + a);
      }
    } else if (inv.command.empty()) {
      inv.command = a;
    } else {
      inv.positional.push_back(a);
    }
  }
  if (inv.command.empty()) throw UsageError("missing subcommand");
  return inv;
}

void expect_args(const Invocation& inv, std::size_t n, const char* shape) {
  if (inv.positional.size() != n) {
    throw UsageError(inv.command + " expects " + shape);
  }
}

// Library parsers throw invalid_argument; at the command line that is bad input.
template <class F>
auto parse_or_usage(const std::string& what, const std::string& text, F&& f) {
  try {
    return f(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("cannot parse " + what + " '" + text + "': " + e.what());
  }
}

Mat2 arg_matrix(const std::string& s) {
  return parse_or_usage("matrix", s, [](const std::string& t) { return Mat2::parse(t); });
}
PrimitiveClass arg_class(const std::string& s) {
  return parse_or_usage("class", s, [](const std::string& t) { return PrimitiveClass::parse(t); });
}
CycleWord arg_cycle(const std::string& s) {
  return parse_or_usage("cycle", s, [](const std::string& t) { return parse_cycle(t); });
}
TwistFactorization arg_factorization(const std::string& s) {
  return parse_or_usage("factorization", s,
                        [](const std::string& t) { return TwistFactorization::parse(t); });
}
Integer arg_integer(const std::string& s) {
  return parse_or_usage("integer", s, [](const std::string& t) { return parse_integer(t); });
}

const char* sign_str(TraceSign s) { return s == TraceSign::Negative ? "-" : "+"; }

const char* type_str(InvolutionType t) { return t == InvolutionType::Split ? "split" : "non-split"; }

std::string pieces_str(const CycleWord& word, const PalindromicSplit& split) {
  auto [left, right] = split_pieces(word, split);
  return cycle_str(left) + "|" + cycle_str(right);
}

Json cycle_json(const CuttingCycle& c) {
  return Json{{"word", cycle_str(c.word())}, {"sign", sign_str(c.sign())},
              {"witness", c.witness().str()}};
}

Json certificate_json(const RealnessCertificate& cert) {
  return Json{{"c", cert.c().matrix().str()}, {"c_prime", cert.c_prime().matrix().str()}};
}

Json obstruction_json(const RealObstructionReport& r) {
  Json j{{"verdict", to_string(r.verdict)},
         {"invariant", {{"status", to_string(r.invariant.status)},
                        {"value", to_string(r.invariant.value)}}},
         {"swapped", {{"status", to_string(r.swapped.status)},
                      {"value", to_string(r.swapped.value)}}}};
  if (r.preserving_structures) j["preserving_structures"] = *r.preserving_structures;
  if (r.swapping_structures) j["swapping_structures"] = *r.swapping_structures;
  return j;
}

std::string obstruction_line(const RealObstructionReport& r) {
  return std::string("verdict=") + to_string(r.verdict) + " invariant=" +
         to_string(r.invariant.status) + "(" + to_string(r.invariant.value) + ") swapped=" +
         to_string(r.swapped.status) + "(" + to_string(r.swapped.value) + ")";
}

Output cmd_twist(const Invocation& inv) {
  expect_args(inv, 1, "one class p,q");
  PrimitiveClass w = arg_class(inv.positional[0]);
  Mat2 t = twist_matrix(w);
  return {kSuccess, t.str() + "\n", Json{{"class", w.str()}, {"matrix", t.str()}}};
}

Output cmd_intersect(const Invocation& inv) {
  expect_args(inv, 2, "two classes p,q");
  PrimitiveClass a = arg_class(inv.positional[0]);
  PrimitiveClass b = arg_class(inv.positional[1]);
  Integer n = intersection(a, b);
  return {kSuccess, to_string(n) + "\n",
          Json{{"first", a.str()}, {"second", b.str()}, {"intersection", to_string(n)}}};
}

Output cmd_recognize(const Invocation& inv) {
  expect_args(inv, 1, "one matrix a,b;c,d");
  Mat2 m = arg_matrix(inv.positional[0]);
  auto tw = recognize_positive_twist(m);
  Output out;
  out.doc["matrix"] = m.str();
  out.doc["twist"] = tw.has_value();
  if (tw) {
    out.doc["curve"] = tw->curve.str();
    out.doc["power"] = to_string(tw->power);
    out.text = "curve=" + tw->curve.str() + " power=" + to_string(tw->power) + "\n";
  } else {
    out.text = "not a positive twist power\n";
  }
  return out;
}

Output cmd_word(const Invocation& inv) {
  expect_args(inv, 1, "one matrix a,b;c,d");
  Mat2 m = arg_matrix(inv.positional[0]);
  GeneratorWord w = sl2z_word(m);
  return {kSuccess, w.str() + "\n",
          Json{{"matrix", m.str()}, {"word", w.str()}, {"exponent_sum", to_string(w.exponent_sum())}}};
}

Output cmd_deg(const Invocation& inv) {
  expect_args(inv, 1, "one matrix a,b;c,d");
  Mat2 m = arg_matrix(inv.positional[0]);
  int d = deg_mod12(m);
  return {kSuccess, std::to_string(d) + "\n", Json{{"matrix", m.str()}, {"deg_mod12", d}}};
}

Output cmd_real_check(const Invocation& inv) {
  expect_args(inv, 1, "one matrix a,b;c,d");
  Mat2 m = arg_matrix(inv.positional[0]);
  require_sl2z(m, "real-check");
  Output out;
  out.doc["matrix"] = m.str();
  if (abs(m.trace()) > 2) {
    HyperbolicRealness h = is_real_hyperbolic(m);
    out.doc["method"] = "cutting-cycle";
    out.doc["real"] = h.real;
    out.doc["cycle"] = cycle_json(h.cycle);
    out.text = std::string(h.real ? "real" : "not real") + " cycle=" + h.cycle.str();
    if (h.split) {
      out.doc["pieces"] = pieces_str(h.cycle.word(), *h.split);
      out.text += " pieces=" + pieces_str(h.cycle.word(), *h.split);
    }
    out.text += "\n";
    return out;
  }
  out.doc["method"] = "search";
  out.doc["bound"] = inv.bound;
  if (auto cert = realness_by_search(m, inv.bound)) {
    out.doc["real"] = true;
    out.doc["certificate"] = certificate_json(*cert);
    out.text = "real c=" + cert->c().matrix().str() + " c'=" + cert->c_prime().matrix().str() + "\n";
  } else {
    out.exit_code = kInconclusive;
    out.doc["real"] = nullptr;
    out.text = "inconclusive within bound " + std::to_string(inv.bound) + "\n";
  }
  return out;
}

Output cmd_real_decompose(const Invocation& inv) {
  expect_args(inv, 1, "one matrix a,b;c,d");
  Mat2 m = arg_matrix(inv.positional[0]);
  Output out;
  out.doc["matrix"] = m.str();
  out.doc["bound"] = inv.bound;
  if (auto cert = realness_by_search(m, inv.bound)) {
    out.doc["found"] = true;
    out.doc["certificate"] = certificate_json(*cert);
    out.text = "c=" + cert->c().matrix().str() + " c'=" + cert->c_prime().matrix().str() + "\n";
  } else {
    out.exit_code = kInconclusive;
    out.doc["found"] = false;
    out.text = "no decomposition within bound " + std::to_string(inv.bound) + "\n";
  }
  return out;
}

Output cmd_involutions(const Invocation& inv) {
  if (inv.positional.size() > 1) throw UsageError("involutions expects at most one bound");
  std::int64_t bound = inv.bound;
  if (inv.positional.size() == 1) {
    bound = parse_or_usage("bound", inv.positional[0],
                           [](const std::string& t) { return parse_bound(t); });
  }
  Output out;
  out.doc["bound"] = bound;
  Json list = Json::array();
  for (const auto& c : enumerate_involutions(bound)) {
    Pairing pr = pairing_and_type(c);
    list.push_back({{"matrix", c.matrix().str()}, {"pairing", to_string(pr.value)},
                    {"type", type_str(pr.type)}});
    out.text += c.matrix().str() + " pairing=" + to_string(pr.value) + " " + type_str(pr.type) + "\n";
  }
  out.doc["count"] = list.size();
  out.doc["involutions"] = std::move(list);
  out.text += "count=" + std::to_string(out.doc["count"].get<std::size_t>()) + "\n";
  return out;
}

Output cmd_eigen(const Invocation& inv) {
  expect_args(inv, 1, "one involution a,b;c,d");
  Involution c(arg_matrix(inv.positional[0]));
  EigenBasis basis = eigen_lattice_basis(c);
  Pairing pr = pairing_and_type(c);
  return {kSuccess,
          "plus=" + basis.plus.str() + " minus=" + basis.minus.str() + " pairing=" +
              to_string(pr.value) + " " + type_str(pr.type) + "\n",
          Json{{"matrix", c.matrix().str()}, {"plus", basis.plus.str()}, {"minus", basis.minus.str()},
               {"pairing", to_string(pr.value)}, {"type", type_str(pr.type)}}};
}

Output cmd_cutting_cycle(const Invocation& inv) {
  expect_args(inv, 1, "one matrix a,b;c,d");
  Mat2 m = arg_matrix(inv.positional[0]);
  CuttingCycle c = cutting_cycle(m);
  Json doc{{"matrix", m.str()}};
  doc.update(cycle_json(c));
  return {kSuccess, c.str() + "\n", std::move(doc)};
}

Output cmd_bipalindromic(const Invocation& inv) {
  expect_args(inv, 1, "one cycle [a1,...,an]");
  CycleWord w = arg_cycle(inv.positional[0]);
  auto split = is_odd_bipalindromic(w);
  Output out;
  out.doc["cycle"] = cycle_str(w);
  out.doc["odd_bipalindromic"] = split.has_value();
  if (split) {
    out.doc["rotation"] = split->rotation;
    out.doc["pieces"] = pieces_str(w, *split);
    out.text = "yes " + pieces_str(w, *split) + "\n";
  } else {
    out.text = "no\n";
  }
  return out;
}

Output cmd_conjugate(const Invocation& inv) {
  expect_args(inv, 2, "two matrices a,b;c,d");
  Mat2 m = arg_matrix(inv.positional[0]);
  Mat2 n = arg_matrix(inv.positional[1]);
  bool same = hyperbolic_conjugate(m, n);
  return {kSuccess, std::string(same ? "conjugate" : "not conjugate") + "\n",
          Json{{"first", m.str()}, {"second", n.str()}, {"conjugate", same}}};
}

Output cmd_two_twist(const Invocation& inv) {
  expect_args(inv, 1, "one matrix a,b;c,d");
  Mat2 m = arg_matrix(inv.positional[0]);
  require_sl2z(m, "two-twist");
  BinaryQuadraticEquation eq = two_twist_diophantine(m);
  TwoTwistEnumeration all = enumerate_two_twist_factorizations(m, inv.bound);
  HurwitzClasses classes = hurwitz_classes_two(m, inv.bound);

  Output out;
  out.doc["matrix"] = m.str();
  out.doc["bound"] = inv.bound;
  out.doc["equation"] = eq.str();
  Json facts = Json::array();
  for (const auto& f : all.factorizations) facts.push_back(f.str());
  out.doc["factorizations"] = std::move(facts);
  out.doc["truncated"] = all.truncated || classes.truncated;
  Json cls = Json::array();
  for (std::size_t i = 0; i < classes.representatives.size(); ++i) {
    Json members = Json::array();
    for (const auto& f : classes.members[i]) members.push_back(f.str());
    cls.push_back({{"representative", classes.representatives[i].str()}, {"members", members}});
  }
  out.doc["classes"] = std::move(cls);
  Json comm = Json::array();
  for (const auto& s : classes.commuting) comm.push_back(s.str());
  out.doc["commuting"] = std::move(comm);
  out.doc["closure_ok"] = classes.closure_ok;

  out.text = "equation: " + eq.str() + "\n";
  out.text += "factorizations: " + std::to_string(all.factorizations.size()) +
              (all.truncated ? " (truncated)" : "") + "\n";
  for (std::size_t i = 0; i < classes.representatives.size(); ++i) {
    out.text += "class " + std::to_string(i + 1) + ": " + classes.representatives[i].str() + " (" +
                std::to_string(classes.members[i].size()) + " within bound)\n";
  }
  out.text += "classes: " + std::to_string(classes.representatives.size()) + "\n";
  return out;
}

Output cmd_hurwitz_equiv(const Invocation& inv) {
  expect_args(inv, 2, "two factorizations p,q/p,q");
  TwistFactorization a = arg_factorization(inv.positional[0]);
  TwistFactorization b = arg_factorization(inv.positional[1]);
  HurwitzVerdict v = pairs_equivalent(a, b);
  Output out;
  out.doc["first"] = a.str();
  out.doc["second"] = b.str();
  out.doc["equivalent"] = v.equivalent;
  out.text = v.equivalent ? "equivalent" : "not equivalent";
  if (v.witness) {
    const HurwitzWitness& w = *v.witness;
    out.doc["witness"] = {{"moves", w.moves}, {"conjugator", w.conjugator.str()},
                          {"signs", {w.sign_first, w.sign_second}}};
    out.text += " moves=" + std::to_string(w.moves) + " conjugator=" + w.conjugator.str();
  }
  out.text += "\n";
  return out;
}

Output cmd_obstruction(const Invocation& inv) {
  expect_args(inv, 1, "one factorization p,q/p,q");
  TwistFactorization f = arg_factorization(inv.positional[0]);
  RealObstructionReport r = factorization_real_obstruction(f);
  Json doc{{"factorization", f.str()}};
  doc.update(obstruction_json(r));
  return {kSuccess, obstruction_line(r) + "\n", std::move(doc)};
}

Output cmd_boundary(const Invocation& inv) {
  expect_args(inv, 1, "one factorization p,q/p,q");
  TwistFactorization f = arg_factorization(inv.positional[0]);
  OpenBookMonodromy ob = boundary_open_book({f.cycles(), FiberKind::TorusWithBoundary});
  return {kSuccess, "matrix=" + ob.matrix().str() + " deg=" + to_string(ob.deg()) + "\n",
          Json{{"factorization", f.str()}, {"matrix", ob.matrix().str()},
               {"deg", to_string(ob.deg())}}};
}

Output cmd_fill(const Invocation& inv) {
  expect_args(inv, 2, "a matrix a,b;c,d and a degree");
  Mat2 m = arg_matrix(inv.positional[0]);
  Integer deg = arg_integer(inv.positional[1]);
  RealFillingVerdict v = real_filling_verdict(OpenBookMonodromy(m, deg), inv.bound);
  const FillingReport& fr = v.filling;

  Output out;
  out.doc["matrix"] = m.str();
  out.doc["deg"] = to_string(deg);
  out.doc["bound"] = inv.bound;
  out.doc["open_book"] = to_string(v.open_book.kind);
  if (v.open_book.cycle) out.doc["cycle"] = cycle_json(*v.open_book.cycle);
  if (v.open_book.certificate) out.doc["certificate"] = certificate_json(*v.open_book.certificate);
  out.doc["supported"] = fr.supported;
  out.doc["fillable"] = fr.fillable;
  out.doc["truncated"] = fr.truncated;
  Json cls = Json::array();
  for (std::size_t i = 0; i < fr.classes.size(); ++i) {
    Json c{{"representative", fr.classes[i].str()}};
    if (i < fr.per_class_real.size()) c["real"] = obstruction_json(fr.per_class_real[i]);
    cls.push_back(std::move(c));
  }
  out.doc["classes"] = std::move(cls);
  out.doc["real_filling"] = to_string(v.real_filling);
  out.doc["note"] = fr.note;
  out.doc["summary"] = v.summary;

  out.text = std::string("open book: ") + to_string(v.open_book.kind);
  if (v.open_book.cycle) out.text += " cycle=" + v.open_book.cycle->str();
  out.text += "\n";
  for (std::size_t i = 0; i < fr.classes.size(); ++i) {
    out.text += "filling " + std::to_string(i + 1) + ": " + fr.classes[i].str();
    if (i < fr.per_class_real.size()) out.text += " " + obstruction_line(fr.per_class_real[i]);
    out.text += "\n";
  }
  out.text += "note: " + fr.note + "\n" + v.summary + "\n";
  if (v.open_book.kind == RealnessKind::Inconclusive) out.exit_code = kInconclusive;
  return out;
}

Output cmd_verify_paper(const Invocation& inv) {
  expect_args(inv, 0, "no arguments");
  ScenarioOptions options;
  if (inv.bound_given) options.search_bound = inv.bound;
  ScenarioReport report = paper_scenario(options);
  Output out;
  out.exit_code = report.all_passed() ? kSuccess : kCheckFailed;
  out.text = report.to_text();
  out.doc = Json::parse(report.to_json());
  return out;
}

using Handler = std::function<Output(const Invocation&)>;

const std::map<std::string, Handler, std::less<>>& handlers() {
  static const std::map<std::string, Handler, std::less<>> table{
      {"twist", cmd_twist},
      {"intersect", cmd_intersect},
      {"recognize", cmd_recognize},
      {"word", cmd_word},
      {"deg", cmd_deg},
      {"real-check", cmd_real_check},
      {"real-decompose", cmd_real_decompose},
      {"involutions", cmd_involutions},
      {"eigen", cmd_eigen},
      {"cutting-cycle", cmd_cutting_cycle},
      {"bipalindromic", cmd_bipalindromic},
      {"conjugate", cmd_conjugate},
      {"two-twist", cmd_two_twist},
      {"hurwitz-equiv", cmd_hurwitz_equiv},
      {"obstruction", cmd_obstruction},
      {"boundary", cmd_boundary},
      {"fill", cmd_fill},
      {"verify-paper", cmd_verify_paper},
  };
  return table;
}

std::string render_json(const std::string& command, Json doc) {
  if (doc.contains("schema")) return doc.dump(2) + "\n";  // already versioned
  Json wrapped{{"schema", 1}, {"command", command}};
  wrapped.update(doc);
  return wrapped.dump(2) + "\n";
}

}  // namespace

std::string usage() {
  return "usage: realfill <subcommand> [args] [--bound N] [--json] [--quiet]\n"
         "  twist P,Q                 twist matrix of a class\n"
         "  intersect P,Q P,Q         algebraic intersection number (absolute)\n"
         "  recognize A,B;C,D         recognize a positive twist power\n"
         "  word A,B;C,D              word in t_a, t_b\n"
         "  deg A,B;C,D               exponent sum mod 12\n"
         "  real-check A,B;C,D        decide realness\n"
         "  real-decompose A,B;C,D    find involutions c, c' with c c' = M\n"
         "  involutions [N]           involutions with entries in [-N, N]\n"
         "  eigen A,B;C,D             eigenlattice basis of an involution\n"
         "  cutting-cycle A,B;C,D     cutting period cycle of a hyperbolic matrix\n"
         "  bipalindromic [A1,...]    odd-bipalindromic test\n"
         "  conjugate M N             conjugacy of hyperbolic matrices\n"
         "  two-twist A,B;C,D         two-twist factorizations and Hurwitz classes\n"
         "  hurwitz-equiv F G         Hurwitz equivalence of two-twist factorizations\n"
         "  obstruction F             obstruction to a real structure on F\n"
         "  boundary F                boundary open book (matrix, deg) of F\n"
         "  fill A,B;C,D DEG          fillings and their realness\n"
         "  verify-paper              reproduce the reference computation\n"
         "factorizations are written P,Q/P,Q with the first-applied cycle first\n";
}

Result run(const std::vector<std::string>& args) {
  Result result;
  Invocation inv;
  try {
    inv = parse_args(args);
    if (inv.command == "help") {
      result.out = usage();
      return result;
    }
    auto it = handlers().find(inv.command);
    if (it == handlers().end()) throw UsageError("unknown subcommand '" + inv.command + "'");
    Output out = it->second(inv);
    result.exit_code = out.exit_code;
    if (!inv.quiet) {
      result.out = inv.json ? render_json(inv.command, std::move(out.doc)) : out.text;
    }
  } catch (const UsageError& e) {
    result = {kBadInput, "", std::string("error: ") + e.what() + "\n"};
    if (inv.command.empty() || !handlers().contains(inv.command)) result.err += usage();
  } catch (const std::invalid_argument& e) {
    result = {kPrecondition, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    result = {kCheckFailed, "", std::string("internal error: ") + e.what() + "\n"};
  }
  return result;
}

}  // namespace realfill::cli
