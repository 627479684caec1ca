// goe: command-line front end. Machine output on stdout (JSON or CSV),
// a short human summary on stderr. Exit codes: 0 ok, 2 parse, 3 resource,
// 4 precondition, 1 internal.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "goe/goe.hpp"

#ifndef GOE_VERSION
#define GOE_VERSION "dev"
#endif

namespace {

using nlohmann::json;
using namespace goe;

struct Options {
  bool json_report = false;
  double precision = kDefaultPrecision;
  double tol = kDefaultTolerance;
  std::uint64_t seed = 1;
};

struct Outcome {
  json inputs = json::object();
  json verdicts = json::object();
  std::optional<std::string> payload;  // native stdout format; verdicts JSON when empty
  std::string summary;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',' || ch == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

IntegerVector parse_integer_list(const std::string& s) {
  IntegerVector v;
  for (const auto& t : split_list(s)) v.push_back(parse_integer(t));
  return v;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

json roots_to_json(const std::vector<LocatedRoot>& roots) {
  json out = json::array();
  for (const auto& r : roots) {
    const char* side = r.side == DiskSide::Inside ? "inside" : r.side == DiskSide::On ? "on" : "outside";
    out.push_back({{"re", r.value.real().convert_to<double>()},
                   {"im", r.value.imag().convert_to<double>()},
                   {"modulus", abs(r.value).convert_to<double>()},
                   {"multiplicity", r.multiplicity},
                   {"side", side}});
  }
  return out;
}

// ---- classify ---------------------------------------------------------------

Outcome run_classify(const std::string& path) {
  const IntegerMatrix a = parse_matrix(read_file(path));
  const auto cls = classify_matrix(a);
  Outcome o;
  o.inputs = {{"matrix", matrix_to_json(a)}};
  o.verdicts = to_json(cls);
  o.verdicts["roots"] = roots_to_json(locate_roots(cls.char_poly));
  o.summary = "char poly " + to_string(cls.char_poly) + "; det " + to_string(cls.det) + "; hyperbolic " +
              yes_no(cls.is_hyperbolic) + "; ergodic " + yes_no(cls.is_ergodic) + "; circle roots " +
              std::to_string(cls.unit_circle_roots);
  return o;
}

// ---- endo -------------------------------------------------------------------

Outcome run_endo(const std::string& matrix_path, const std::string& map_path, std::optional<std::int64_t> oracle_k,
                 const Options& opt) {
  const IntegerMatrix a = parse_matrix(read_file(matrix_path));
  const AffineToralMap tau = parse_affine_map(read_file(map_path));
  Outcome o;
  o.inputs = {{"matrix", matrix_to_json(a)}, {"tau", to_json(tau)}};
  if (oracle_k) o.inputs["oracle"] = {{"K", *oracle_k}, {"tol", opt.tol}};
  if (tau.dim() != a.size()) throw PreconditionError("map and automorphism have different dimensions");
  if (!commutes(tau, a)) throw PreconditionError("the map does not commute with the automorphism");
  const auto cls = classify_matrix(a);
  const auto v = goe_verdict(tau, a, cls);
  o.verdicts = to_json(v);
  o.verdicts["base"] = {{"hyperbolic", cls.is_hyperbolic}, {"ergodic", cls.is_ergodic}};
  o.summary = "surjective " + yes_no(v.surjective) + ", pre-injective " + to_string(v.pre_injective) +
              ", injective " + yes_no(v.injective) + ", Moore " + (v.moore_consistent ? "consistent" : "VIOLATED") +
              ", Myhill " + (v.myhill_consistent ? "consistent" : "violated");
  if (oracle_k) {
    const auto split = stable_splitting(a, opt.precision);
    const auto r = pre_injectivity_oracle(split, tau, *oracle_k, opt.tol);
    const bool agrees = v.pre_injective != Tristate::Unknown && (v.pre_injective == Tristate::True) == r.pre_injective;
    o.verdicts["oracle"] = {{"pre_injective", r.pre_injective},
                            {"witness", r.witness ? integer_vector_to_json(*r.witness) : json(nullptr)},
                            {"examined", r.examined},
                            {"agrees", agrees}};
    o.summary += "; oracle (K=" + std::to_string(*oracle_k) + ") " + (agrees ? "agrees" : "DISAGREES");
  }
  return o;
}

// ---- homoclinic -------------------------------------------------------------

Outcome run_sample(const std::string& path, const std::string& k_text, std::int64_t box, int random_count,
                   const Options& opt) {
  const IntegerMatrix a = parse_matrix(read_file(path));
  const auto split = stable_splitting(a, opt.precision);
  const std::size_t n = a.size();
  std::vector<IntegerVector> ks;
  Outcome o;
  o.inputs = {{"matrix", matrix_to_json(a)}, {"precision", opt.precision}};
  if (!k_text.empty()) {
    ks.push_back(parse_integer_list(k_text));
    o.inputs["k"] = integer_vector_to_json(ks.back());
  } else if (random_count > 0) {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::int64_t> dist(-box, box);
    for (int i = 0; i < random_count; ++i) {
      IntegerVector k(n);
      for (auto& x : k) x = dist(rng);
      ks.push_back(std::move(k));
    }
    o.inputs["random"] = random_count;
    o.inputs["box"] = box;
    o.inputs["seed"] = opt.seed;
  } else {
    if (detail::box_volume(n, box, 100000) == 0) throw ResourceError("sample box too large");
    std::vector<std::int64_t> lo(n, -box), hi(n, box);
    detail::BoxOdometer odo(lo, hi);
    do ks.emplace_back(odo.value().begin(), odo.value().end());
    while (odo.next([](std::size_t, std::int64_t) {}));
    o.inputs["box"] = box;
  }
  json samples = json::array();
  std::string lines;
  for (const auto& k : ks) {
    const json s = to_json(homoclinic_point(split, k));
    lines += s.dump() + "\n";
    samples.push_back(s);
  }
  o.verdicts = {{"split", to_json(split)}, {"samples", samples}};
  o.payload = lines;
  o.summary = std::to_string(ks.size()) + " homoclinic sample(s); contraction rate " +
              std::to_string(split.contraction_rate.convert_to<double>());
  return o;
}

Outcome run_coverage(const std::string& path, std::int64_t max_k, std::int64_t grid, const Options& opt) {
  const IntegerMatrix a = parse_matrix(read_file(path));
  const auto split = stable_splitting(a, opt.precision);
  const double c = density_coverage(split, max_k, grid);
  Outcome o;
  o.inputs = {{"matrix", matrix_to_json(a)}, {"K", max_k}, {"grid", grid}};
  o.verdicts = coverage_to_json(max_k, grid, c);
  o.summary = "coverage " + std::to_string(c) + " of " + std::to_string(grid) + "^" + std::to_string(a.size()) +
              " cells at K=" + std::to_string(max_k);
  return o;
}

Outcome run_decay(const std::string& path, const std::string& k_text, const std::string& point_text, int horizon,
                  const Options& opt) {
  const IntegerMatrix a = parse_matrix(read_file(path));
  const auto split = stable_splitting(a, opt.precision);
  Outcome o;
  o.inputs = {{"matrix", matrix_to_json(a)}, {"horizon", horizon}, {"tol", opt.tol}};
  HomoclinicSample sample;
  if (!point_text.empty()) {
    // an arbitrary torus point, given by rationals; no lattice index
    RationalVector q;
    for (const auto& t : split_list(point_text)) q.push_back(parse_rational(t));
    if (q.size() != a.size()) throw PreconditionError("point has the wrong dimension");
    sample.k = IntegerVector(a.size(), Integer(0));
    for (const auto& x : q) sample.point.push_back(to_real(frac_of(x)));
    o.inputs["point"] = rational_vector_to_json(q);
  } else {
    const IntegerVector k = k_text.empty() ? IntegerVector(a.size(), Integer(0)) : parse_integer_list(k_text);
    sample = homoclinic_point(split, k);
    o.inputs["k"] = integer_vector_to_json(k);
  }
  const auto d = check_decay(split, sample, horizon, opt.tol);
  o.verdicts = to_json(d);
  o.verdicts["sample"] = to_json(sample);
  o.summary = std::string("decay ") + (d.holds ? "holds" : "FAILS") + " up to horizon " + std::to_string(horizon) +
              " (worst step " + std::to_string(d.worst_step) + ")";
  return o;
}

// ---- ca ---------------------------------------------------------------------

Outcome run_census() {
  const auto rows = elementary_census();
  Outcome o;
  json table = json::array();
  int surjective = 0;
  bool agree = true;
  for (const auto& r : rows) {
    table.push_back({{"rule", r.rule}, {"surjective", r.surjective}, {"pre_injective", r.pre_injective}});
    surjective += r.surjective;
    agree = agree && r.surjective == r.pre_injective;
  }
  o.verdicts = {{"rows", table}, {"surjective_count", surjective}, {"columns_agree", agree}};
  o.payload = census_csv(rows);
  o.summary = std::to_string(surjective) + " of 256 rules surjective; columns " + (agree ? "agree" : "DISAGREE");
  return o;
}

Outcome run_check(const std::string& code_path, const std::string& shift_path) {
  const auto code = code_from_json(read_json_file(code_path));
  Outcome o;
  o.inputs = {{"code", code_to_json(code)}};
  bool surjective = false, pre_injective = false;
  if (shift_path.empty()) {
    const auto full = full_shift(code.alphabet_in());
    o.inputs["shift"] = "full";
    surjective = surjective_on_full_shift(code);
    pre_injective = pre_injective_code(code, full);
  } else {
    const auto pres = presentation_from_json(read_json_file(shift_path));
    o.inputs["shift"] = presentation_to_json(pres);
    pre_injective = pre_injective_code(code, pres);  // rejects codes leaving the shift
    surjective = surjective_onto(code, pres);
  }
  o.verdicts = {{"surjective", surjective}, {"pre_injective", pre_injective}, {"agree", surjective == pre_injective}};
  o.summary = "surjective " + yes_no(surjective) + ", pre-injective " + yes_no(pre_injective);
  return o;
}

Outcome run_moore_search(int radius, const std::string& shift_path) {
  const auto pres = shift_path.empty() ? even_shift_cover() : presentation_from_json(read_json_file(shift_path));
  Outcome o;
  o.inputs = {{"radius", radius}, {"shift", presentation_to_json(pres)}};
  const auto r = moore_counterexample_search(pres, radius);
  o.verdicts = {{"found", r.code.has_value()}, {"candidates", r.candidates}};
  if (r.code) {
    const bool s = surjective_onto(*r.code, pres);
    const bool p = pre_injective_code(*r.code, pres);
    o.verdicts["radius"] = r.radius;
    o.verdicts["code"] = code_to_json(*r.code);
    o.verdicts["replay"] = {{"surjective", s}, {"pre_injective", p}};
    o.summary = "counterexample at radius " + std::to_string(r.radius) + " after " + std::to_string(r.candidates) +
                " candidates; replay: surjective " + yes_no(s) + ", pre-injective " + yes_no(p);
  } else {
    o.verdicts["radius"] = nullptr;
    o.verdicts["code"] = nullptr;
    o.summary = "no counterexample up to radius " + std::to_string(radius);
  }
  return o;
}

// ---- sft --------------------------------------------------------------------

Outcome run_sft_build(int alphabet, int window, const std::string& allowed_text) {
  std::vector<Word> allowed;
  for (const auto& t : split_list(allowed_text)) allowed.push_back(word_from_string(t));
  Outcome o;
  o.inputs = {{"alphabet", alphabet}, {"window", window}, {"allowed", split_list(allowed_text)}};
  for (const auto& w : allowed)
    if (static_cast<int>(w.size()) != window) throw ParseError("allowed word of the wrong length");
  const auto p = sft_from_allowed_words(alphabet, window, allowed);
  o.verdicts = presentation_to_json(p);
  o.summary = std::to_string(p.num_states()) + " states, " + std::to_string(p.edges().size()) + " edges";
  return o;
}

Outcome run_sft_props(const std::string& path, int max_period) {
  const auto p = presentation_from_json(read_json_file(path));
  if (max_period < 1 || max_period > 24) throw ResourceError("max period must lie in [1, 24]");
  const auto m = irreducibility_and_mixing(p);
  Outcome o;
  o.inputs = {{"presentation", presentation_to_json(p)}, {"max_period", max_period}};
  json periodic = json::array();
  for (int k = 1; k <= max_period; ++k) periodic.push_back(periodic_point_count(p, k));
  o.verdicts = {{"states", p.num_states()},
                {"deterministic", p.is_deterministic()},
                {"irreducible", m.irreducible},
                {"mixing", m.mixing},
                {"period", m.irreducible ? json(m.period) : json(nullptr)},
                {"witness", m.witness ? json(*m.witness) : json(nullptr)},
                {"periodic_points", periodic}};
  o.summary = "irreducible " + yes_no(m.irreducible) + ", mixing " + yes_no(m.mixing);
  if (m.witness) o.summary += " (A^" + std::to_string(*m.witness) + " > 0)";
  return o;
}

json error_json(const std::string& kind, const std::string& message, int code) {
  return {{"kind", kind}, {"message", message}, {"exit_code", code}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Garden-of-Eden analyses for toral automorphisms and shift spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json_report, "print the full run report as JSON");
  app.add_option("--precision", opt.precision, "residual bound for the stable/unstable splitting")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol", opt.tol, "tolerance for numeric comparisons")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "seed for random sampling");
  app.set_version_flag("--version", GOE_VERSION);

  std::string command;
  std::function<Outcome()> job;

  std::string matrix_path, map_path, code_path, shift_path, k_text, point_text, allowed_text;
  std::int64_t oracle_k = 20, box = 1, coverage_k = 200, grid = 32;
  int horizon = kDefaultHorizon, random_count = 0, radius = 2, alphabet = 2, window = 2, max_period = 6;

  auto* classify = app.add_subcommand("classify", "exact invariants of an integer matrix");
  classify->add_option("matrix", matrix_path, "matrix file")->required();
  classify->callback([&] {
    command = "classify";
    job = [&] { return run_classify(matrix_path); };
  });

  auto* endo = app.add_subcommand("endo", "Garden-of-Eden verdict for an affine map commuting with A");
  endo->add_option("matrix", matrix_path, "matrix file for A")->required();
  endo->add_option("map", map_path, "affine map file (matrix B, then translation c)")->required();
  auto* oracle_opt = endo->add_option("--oracle", oracle_k, "cross-check with the homoclinic oracle over |k| <= K")
                         ->check(CLI::NonNegativeNumber);
  endo->callback([&] {
    command = "endo";
    const auto k = oracle_opt->count() ? std::optional<std::int64_t>(oracle_k) : std::nullopt;
    job = [&, k] { return run_endo(matrix_path, map_path, k, opt); };
  });

  auto* hom = app.add_subcommand("homoclinic", "homoclinic points of a hyperbolic automorphism");
  hom->require_subcommand(1);
  auto* sample = hom->add_subcommand("sample", "dump h_k as JSON lines");
  sample->add_option("matrix", matrix_path)->required();
  sample->add_option("--k", k_text, "single lattice index, comma separated");
  sample->add_option("--box", box, "sup-norm box for k")->check(CLI::NonNegativeNumber);
  sample->add_option("--random", random_count, "draw this many k uniformly from the box")->check(CLI::NonNegativeNumber);
  sample->callback([&] {
    command = "homoclinic sample";
    job = [&] { return run_sample(matrix_path, k_text, box, random_count, opt); };
  });
  auto* coverage = hom->add_subcommand("coverage", "fraction of grid cells hit by h_k, |k| <= K");
  coverage->add_option("matrix", matrix_path)->required();
  coverage->add_option("-K,--K", coverage_k)->check(CLI::NonNegativeNumber);
  coverage->add_option("--grid", grid)->check(CLI::PositiveNumber);
  coverage->callback([&] {
    command = "homoclinic coverage";
    job = [&] { return run_coverage(matrix_path, coverage_k, grid, opt); };
  });
  auto* decay = hom->add_subcommand("decay", "check orbit decay of h_k or of a given point");
  decay->add_option("matrix", matrix_path)->required();
  auto* k_opt = decay->add_option("--k", k_text, "lattice index");
  decay->add_option("--point", point_text, "torus point as rationals, e.g. 1/3,0")->excludes(k_opt);
  decay->add_option("--horizon", horizon)->check(CLI::PositiveNumber);
  decay->callback([&] {
    command = "homoclinic decay";
    job = [&] { return run_decay(matrix_path, k_text, point_text, horizon, opt); };
  });

  auto* ca = app.add_subcommand("ca", "cellular automata and sliding block codes");
  ca->require_subcommand(1);
  auto* census = ca->add_subcommand("census", "surjectivity and pre-injectivity of all elementary rules (CSV)");
  census->callback([&] {
    command = "ca census";
    job = [] { return run_census(); };
  });
  auto* check = ca->add_subcommand("check", "decide surjectivity and pre-injectivity of a code");
  check->add_option("code", code_path, "code file (JSON)")->required();
  check->add_option("--shift", shift_path, "presentation file; full shift when omitted");
  check->callback([&] {
    command = "ca check";
    job = [&] { return run_check(code_path, shift_path); };
  });
  auto* moore = ca->add_subcommand("moore-search", "look for a surjective, non-pre-injective code");
  moore->add_option("--radius", radius)->check(CLI::Range(0, 3));
  moore->add_option("--shift", shift_path, "presentation file; even shift when omitted");
  moore->callback([&] {
    command = "ca moore-search";
    job = [&] { return run_moore_search(radius, shift_path); };
  });

  auto* sft = app.add_subcommand("sft", "sofic presentations");
  sft->require_subcommand(1);
  auto* build = sft->add_subcommand("build", "presentation of the SFT with the given allowed windows");
  build->add_option("--alphabet", alphabet)->check(CLI::Range(1, 10));
  build->add_option("--window", window)->check(CLI::Range(1, 12));
  build->add_option("--allowed", allowed_text, "allowed words, comma separated")->required();
  build->callback([&] {
    command = "sft build";
    job = [&] { return run_sft_build(alphabet, window, allowed_text); };
  });
  auto* props = sft->add_subcommand("props", "irreducibility, mixing and periodic point counts");
  props->add_option("presentation", shift_path)->required();
  props->add_option("--max-period", max_period)->check(CLI::Range(1, 24));
  props->callback([&] {
    command = "sft props";
    job = [&] { return run_sft_props(shift_path, max_period); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  json report = {{"command", command}, {"version", GOE_VERSION}};
  if (opt.json_report) report["seed"] = opt.seed;
  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  };
  auto fail = [&](const std::string& kind, const std::string& message, int code) {
    std::cerr << "goe " << command << ": " << kind << ": " << message << "\n";
    const json err = error_json(kind, message, code);
    if (opt.json_report) {
      report["inputs"] = json::object();
      report["verdicts"] = nullptr;
      report["error"] = err;
      report["timing_ms"] = elapsed();
      std::cout << report.dump(2) << "\n";
    } else {
      std::cout << json{{"error", err}}.dump(2) << "\n";
    }
    return code;
  };
  try {
    Outcome o = job();
    report["inputs"] = o.inputs;
    report["verdicts"] = o.verdicts;
    report["timing_ms"] = elapsed();
    if (opt.json_report)
      std::cout << report.dump(2) << "\n";
    else if (o.payload)
      std::cout << *o.payload;
    else
      std::cout << o.verdicts.dump(2) << "\n";
    std::cerr << command << ": " << o.summary << "\n";
    return 0;
  } catch (const ParseError& e) {
    return fail("parse", e.what(), 2);
  } catch (const ResourceError& e) {
    return fail("resource", e.what(), 3);
  } catch (const PreconditionError& e) {
    return fail("precondition", e.what(), 4);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), 1);
  }
}
