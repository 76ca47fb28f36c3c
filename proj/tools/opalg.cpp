// Command-line front end for the opalg library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "opalg/opalg.hpp"
#include "opalg/report.hpp"

namespace {

using namespace opalg;

struct RunConfig {
  std::string alphabet = "z1,z2";
  std::string base_order;
  std::vector<std::string> catalogs;
  std::vector<std::string> identities;
  std::vector<std::string> gens;
  std::string gens_file;
  std::string order;
  std::string bounds = "2,1";
  std::size_t fuel = 10000;
  std::uint64_t seed = 0;
  bool trace = false;
  std::size_t jobs = 1;
  std::string report;
  std::size_t trials = 10000;
  std::string theta;
  std::vector<std::string> args;
  std::string demo;
};

/// The verdict of a command: 0 pass/success, 1 verified failure.
struct Outcome {
  int code = 0;
  Json report;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) {
    auto b = cur.find_first_not_of(" \t");
    auto e = cur.find_last_not_of(" \t\r");
    if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
  }
  return out;
}

Bounds parse_bounds(const std::string& s) {
  auto parts = split(s, ',');
  if (parts.size() != 2) throw UsageError("bounds must be 'D,P', got '" + s + "'");
  try {
    std::size_t used = 0;
    Bounds b{std::stoul(parts[0], &used), 0};
    if (used != parts[0].size()) throw std::invalid_argument(parts[0]);
    b.op_degree = std::stoul(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
    return b;
  } catch (const std::logic_error&) {
    throw UsageError("bounds must be two non-negative integers 'D,P', got '" + s + "'");
  }
}

/// Everything a command needs, resolved from the flags.
struct Setup {
  Alphabet alphabet;
  OrderSpec order;
  std::vector<CatalogEntry> catalogs;
  std::vector<Opi> opis;
  std::vector<OPoly> gens;
  Bounds bounds;

  GeneratorSet generators() const {
    GeneratorSet gs(order, alphabet.letters());
    for (const auto& phi : opis) gs.add_identity(phi);
    for (const auto& g : gens) gs.add_concrete(g);
    return gs;
  }
};

Setup resolve(const RunConfig& cfg) {
  Setup s;
  s.alphabet = Alphabet::parse(cfg.alphabet);
  Alphabet base = s.alphabet;
  if (!cfg.base_order.empty()) {
    base = Alphabet::parse(cfg.base_order);
    bool same = base.size() == s.alphabet.size();
    for (Symbol l : s.alphabet.letters()) same = same && base.contains(l);
    if (!same) throw AlphabetMismatch("base order '" + cfg.base_order + "' is not an ordering of the alphabet '" + cfg.alphabet + "'");
  }
  for (const auto& sel : cfg.catalogs) {
    s.catalogs.push_back(resolve_catalog(sel));
    for (const auto& phi : s.catalogs.back().opis) s.opis.push_back(phi);
  }
  for (std::size_t i = 0; i < cfg.identities.size(); ++i)
    s.opis.push_back(Opi::parse("identity" + std::to_string(i + 1), cfg.identities[i]));
  Preset preset = Preset::db;
  if (!cfg.order.empty())
    preset = parse_preset(cfg.order);
  else if (!s.catalogs.empty())
    preset = s.catalogs.front().declared_order;
  s.order = OrderSpec(preset, base, true);
  for (const auto& g : cfg.gens)
    for (const auto& p : split(g, ';')) s.gens.push_back(parse_poly(p, s.alphabet));
  if (!cfg.gens_file.empty()) {
    std::ifstream in(cfg.gens_file);
    if (!in) throw UsageError("cannot read generator file '" + cfg.gens_file + "'");
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      s.gens.push_back(parse_poly(line, s.alphabet));
    }
  }
  s.bounds = parse_bounds(cfg.bounds);
  if (cfg.fuel == 0) throw UsageError("fuel must be positive");
  return s;
}

Json config_json(const RunConfig& cfg, const Setup& s) {
  Json j;
  j["alphabet"] = cfg.alphabet;
  Json base = Json::array();
  for (Symbol l : s.order.base().letters()) base.push_back(l.name());
  j["base_order"] = base;
  j["order"] = to_string(s.order.preset());
  j["catalogs"] = cfg.catalogs;
  j["identities"] = cfg.identities;
  Json gens = Json::array();
  for (const auto& g : s.gens) gens.push_back(to_string(g, s.order));
  j["gens"] = gens;
  j["bounds"] = bounds_json(s.bounds);
  j["fuel"] = cfg.fuel;
  j["seed"] = cfg.seed;
  return j;
}

std::string sigma_text(const Opi& phi, const Assignment& sigma) {
  std::string out = "{";
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i) out += ", ";
    out += phi.variables()[i].name() + "=" + to_string(sigma[i]);
  }
  return out + "}";
}

// --- commands --------------------------------------------------------------

Outcome cmd_nf(const RunConfig& cfg, const Setup& s) {
  if (cfg.args.size() != 1) throw UsageError("nf takes exactly one polynomial");
  OPoly f = parse_poly(cfg.args[0], s.alphabet);
  RuleSet rules = s.generators().rules();
  ReduceOptions opt;
  opt.fuel = cfg.fuel;
  opt.trace = cfg.trace;
  opt.descent = DescentCheck::require;
  auto nf = normal_form(f, rules, opt);
  std::cout << to_string(nf.value, s.order) << "\n";
  if (cfg.trace)
    for (const auto& step : nf.trace) std::cout << to_string(step) << "\n";
  if (nf.exhausted) std::cout << "fuel exhausted after " << nf.steps << " steps; the result above is not a normal form\n";
  Outcome o;
  o.code = nf.exhausted ? 1 : 0;
  o.report["input"] = to_string(f, s.order);
  o.report["normal_form"] = to_string(nf.value, s.order);
  o.report["steps"] = nf.steps;
  o.report["exhausted"] = nf.exhausted;
  if (cfg.trace) {
    Json t = Json::array();
    for (const auto& step : nf.trace) t.push_back(to_string(step));
    o.report["trace"] = t;
  }
  return o;
}

Outcome cmd_compare(const RunConfig& cfg, const Setup& s) {
  if (cfg.args.size() != 2) throw UsageError("compare takes two words");
  Word u = parse_word(cfg.args[0], s.alphabet);
  Word v = parse_word(cfg.args[1], s.alphabet);
  auto c = s.order.compare(u, v);
  std::string r = c < 0 ? "LT" : (c > 0 ? "GT" : "EQ");
  std::cout << r << "\n";
  Outcome o;
  o.report = Json{{"u", to_string(u)}, {"v", to_string(v)}, {"result", r}};
  return o;
}

Outcome cmd_instantiate(const RunConfig& cfg, const Setup& s) {
  if (s.opis.empty()) throw UsageError("instantiate needs --catalog or --identity");
  Assignment sigma;
  for (const auto& a : cfg.args) sigma.push_back(parse_word(a, s.alphabet));
  Outcome o;
  o.report["instances"] = Json::array();
  for (const auto& phi : s.opis) {
    OPoly v = phi.instantiate(sigma);
    std::cout << phi.name() << " " << sigma_text(phi, sigma) << " = " << to_string(v, s.order) << "\n";
    o.report["instances"].push_back(Json{{"identity", phi.name()}, {"sigma", assignment_json(sigma)}, {"value", to_string(v, s.order)}});
  }
  return o;
}

Outcome cmd_compositions(const RunConfig& cfg, const Setup& s) {
  auto gs = s.generators();
  auto gens = bounded_generators(gs, s.bounds);
  auto records = all_compositions(gens);
  decide_all(records, gs.rules(), cfg.fuel, cfg.jobs);
  Outcome o;
  o.report["records"] = Json::array();
  std::size_t i = 0;
  for (const auto& r : records) {
    std::cout << "record " << ++i << ": " << describe(r, s.order) << "\n";
    o.report["records"].push_back(to_json(r, s.order));
  }
  std::cout << records.size() << " compositions among " << gens.size() << " generators within bounds "
            << bounds_text(s.bounds) << "\n";
  return o;
}

Outcome cmd_check_gs(const RunConfig& cfg, const Setup& s) {
  auto rep = check_gs(s.generators(), s.bounds, cfg.fuel, cfg.jobs);
  std::cout << to_text(rep, s.order);
  Outcome o;
  o.code = rep.passed ? 0 : 1;
  o.report = to_json(rep, s.order);
  return o;
}

Outcome cmd_check_type(const RunConfig& cfg, const Setup& s) {
  if (s.opis.empty()) throw UsageError("check-type needs --catalog or --identity");
  Outcome o;
  o.report["checks"] = Json::array();
  for (const auto& phi : s.opis) {
    std::optional<TypeReport> rep = check_type(phi, s.alphabet.letters(), s.bounds, cfg.fuel);
    std::cout << phi.name() << ": " << to_text(*rep);
    Json j = to_json(*rep);
    j["identity"] = phi.name();
    o.report["checks"].push_back(j);
    if (!rep->passed()) o.code = 1;
  }
  return o;
}

Outcome cmd_check_stability(const RunConfig&, const Setup& s) {
  if (s.opis.empty()) throw UsageError("check-stability needs --catalog or --identity");
  Outcome o;
  o.report["checks"] = Json::array();
  for (const auto& phi : s.opis) {
    auto ns = check_lm_no_subword(phi, s.order);
    auto st = check_lm_stability(phi, s.order, s.alphabet.letters(), s.bounds);
    std::cout << phi.name() << ": lead " << ns.lead << "; no variable product in lead: " << (ns.passed ? "yes" : "no");
    if (!ns.passed) std::cout << " (" << ns.witness << " at " << to_string(*ns.witness_context) << ")";
    std::cout << "; lead stable on " << st.checked << " assignments: " << (st.passed() ? "yes" : "no") << "\n";
    for (const auto& v : st.violations)
      std::cout << "  violation " << sigma_text(phi, v.sigma) << ": expected lead " << v.expected << ", got " << v.actual << "\n";
    if (!st.passed()) o.code = 1;
    Json j;
    j["identity"] = phi.name();
    j["no_variable_product_in_lead"] = to_json(ns);
    j["stability"] = to_json(st);
    o.report["checks"].push_back(j);
  }
  return o;
}

Outcome cmd_check_order(const RunConfig& cfg, const Setup& s) {
  auto rep = check_order_axioms(s.order, s.bounds, cfg.trials, cfg.seed);
  std::cout << "order " << to_string(s.order.preset()) << ", bounds " << bounds_text(s.bounds) << ", " << rep.trials
            << " trials, seed " << cfg.seed << "\n";
  for (const auto& v : rep.violations) std::cout << "  violation: " << v << "\n";
  std::cout << "result: " << (rep.passed() ? "PASS" : "FAIL") << "\n";
  Outcome o;
  o.code = rep.passed() ? 0 : 1;
  o.report = to_json(rep);
  return o;
}

Outcome cmd_basis(const RunConfig&, const Setup& s) {
  auto words = enumerate_irr(s.generators().rules(), s.alphabet.letters(), s.bounds);
  Outcome o;
  o.report["bounds"] = bounds_json(s.bounds);
  o.report["count"] = words.size();
  o.report["words"] = Json::array();
  for (const auto& w : words) {
    std::cout << to_string(w) << "\n";
    o.report["words"].push_back(to_string(w));
  }
  std::cout << words.size() << " irreducible words within bounds " << bounds_text(s.bounds) << "\n";
  return o;
}

Outcome cmd_quotient_eval(const RunConfig& cfg, const Setup& s) {
  if (cfg.args.size() != 1) throw UsageError("quotient-eval takes exactly one polynomial");
  OPoly f = parse_poly(cfg.args[0], s.alphabet);
  auto q = QuotientAlgebra::build(s.generators(), s.bounds, cfg.fuel, cfg.jobs);
  std::map<Symbol, OPoly> theta;
  for (Symbol l : s.alphabet.letters()) theta[l] = OPoly(Word::letter(l));
  for (const auto& item : split(cfg.theta, ';')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("theta entries look like 'z1=POLY', got '" + item + "'");
    Symbol l(split(item.substr(0, eq), ' ').at(0));
    if (!s.alphabet.contains(l)) throw AlphabetMismatch("theta maps unknown letter '" + l.name() + "'");
    theta[l] = parse_poly(item.substr(eq + 1), s.alphabet);
  }
  OPoly v = q.evaluate(f, theta);
  std::cout << to_string(v, s.order) << "\n";
  bool certified = q.within_verified_bounds(f);
  if (!certified) std::cout << "note: input lies outside the verified bounds " << bounds_text(s.bounds) << "\n";
  Outcome o;
  o.report["input"] = to_string(f, s.order);
  o.report["value"] = to_string(v, s.order);
  o.report["gs"] = q.report().label();
  o.report["within_verified_bounds"] = certified;
  return o;
}

Outcome run_gs_demo(const std::string& title, const GeneratorSet& gs, const Bounds& b, const RunConfig& cfg,
                    std::optional<Bounds> basis_bounds = std::nullopt) {
  std::cout << title << "\n";
  auto rep = check_gs(gs, b, cfg.fuel, cfg.jobs);
  std::cout << to_text(rep, gs.order());
  Outcome o;
  o.code = rep.passed ? 0 : 1;
  o.report["gs"] = to_json(rep, gs.order());
  if (basis_bounds) {
    auto words = enumerate_irr(gs.rules(), gs.letters(), *basis_bounds);
    std::cout << "irreducible words within " << bounds_text(*basis_bounds) << ": " << words.size() << "\n";
    Json ws = Json::array();
    for (const auto& w : words) {
      std::cout << "  " << to_string(w) << "\n";
      ws.push_back(to_string(w));
    }
    o.report["irreducible"] = ws;
  }
  return o;
}

Outcome cmd_demo(const RunConfig& cfg) {
  const Alphabet z = Alphabet::parse("z1,z2");
  Outcome o;
  if (cfg.demo == "diff-counterexample") {
    OrderSpec dt(Preset::dt, z, true);
    auto entry = resolve_catalog("diff:1?a=1,b=0,c=0");
    const Opi& phi = entry.opis.front();
    GeneratorSet gs(dt, z.letters());
    gs.add_identity(phi);
    gs.add_concrete(parse_poly("z1*z2 - 1", z), "g");
    Assignment sigma{parse_word("z1"), parse_word("z2")};
    Generator f = make_generator(phi.instantiate(sigma), dt, instance_label(phi, sigma), true);
    Generator g = make_generator(parse_poly("z1*z2 - 1", z), dt, "g", false);
    std::cout << "weight-0 differential identity " << to_string(phi.body(), dt) << " with g = " << to_string(g.poly, dt)
              << ", order dt\n";
    auto records = compositions(f, g, 0, 1);
    auto more = compositions(g, f, 1, 0);
    records.insert(records.end(), more.begin(), more.end());
    decide_all(records, gs.rules(), cfg.fuel, 1);
    bool any_failure = false;
    o.report["records"] = Json::array();
    for (const auto& r : records) {
      std::cout << describe(r, dt) << "\n";
      o.report["records"].push_back(to_json(r, dt));
      any_failure = any_failure || r.triviality->verdict != Triviality::trivial;
    }
    std::cout << "result: " << (any_failure ? "NOT TRIVIAL, so S_phi(Z) together with g is not a GS basis" : "trivial") << "\n";
    o.code = any_failure ? 1 : 0;
    return o;
  }
  if (cfg.demo == "rb-commutator") {
    Outcome total;
    for (const char* sel : {"rb:6?lambda=0", "rb:6?lambda=1"}) {
      GeneratorSet gs(OrderSpec(Preset::db, z, true), z.letters());
      gs.add_identity(resolve_catalog(sel).opis.front());
      gs.add_concrete(parse_poly("z2*z1 - z1*z2", z), "commutator");
      auto r = run_gs_demo(std::string(sel) + " with z2*z1 - z1*z2 over z1 < z2, order db", gs, {3, 2}, cfg);
      total.report[sel] = r.report;
      total.code = std::max(total.code, r.code);
    }
    return total;
  }
  if (cfg.demo == "averaging") {
    GeneratorSet gs(OrderSpec(Preset::dt, z, true), z.letters());
    for (const auto& phi : resolve_catalog("averaging").opis) gs.add_identity(phi);
    return run_gs_demo("averaging identities, order dt", gs, {2, 2}, cfg, Bounds{1, 2});
  }
  if (cfg.demo == "reynolds") {
    GeneratorSet gs(OrderSpec(Preset::dt, z, true), z.letters());
    for (const auto& phi : resolve_catalog("reynolds?n=4").opis) gs.add_identity(phi);
    return run_gs_demo("Reynolds identities with 2..4 operands, order dt", gs, {2, 2}, cfg, Bounds{1, 2});
  }
  if (cfg.demo == "diffprime") {
    OrderSpec dt(Preset::dt, z, true);
    GeneratorSet gs(dt, z.letters());
    gs.add_identity(resolve_catalog("diffprime?c=1").opis.front());
    RuleSet rules = gs.rules();
    o.report["normal_forms"] = Json::array();
    for (const char* text : {"[[z1]*z2]", "[z1]*[[z2]]", "[1]", "2*[z1*[z2]] - z1*z2"}) {
      OPoly f = parse_poly(text, z);
      auto nf = normal_form(f, rules, ReduceOptions{cfg.fuel, false, DescentCheck::require, std::nullopt});
      std::cout << "nf(" << to_string(f, dt) << ") = " << to_string(nf.value, dt) << "\n";
      o.report["normal_forms"].push_back(Json{{"input", to_string(f, dt)}, {"value", to_string(nf.value, dt)}});
    }
    auto r = run_gs_demo("identity [x1] - x1, order dt", gs, {2, 2}, cfg, Bounds{2, 1});
    r.report["normal_forms"] = o.report["normal_forms"];
    return r;
  }
  throw UsageError("unknown demo '" + cfg.demo + "' (expected diff-counterexample, rb-commutator, averaging, reynolds, diffprime)");
}

void write_report(const RunConfig& cfg, const std::string& command, const Setup* s, const Outcome& o) {
  if (cfg.report.empty()) return;
  Json j;
  j["command"] = command;
  if (s) j["config"] = config_json(cfg, *s);
  j["exit_code"] = o.code;
  j["output"] = o.report;
  std::ofstream out(cfg.report);
  if (!out) throw UsageError("cannot write report '" + cfg.report + "'");
  out << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computing in free operated algebras: normal forms, compositions, GS checks, bases."};
  app.require_subcommand(1);
  app.allow_extras();
  app.set_config("--config", "", "flat 'key = value' file with default flag values");
  // values are taken verbatim: no array syntax, so "2,1" and "[z1]*[z2]" stay whole
  app.get_config_formatter_base()->arrayBounds('\x02', '\x03')->arrayDelimiter('\x1f');
  RunConfig cfg;

  app.add_option("--alphabet", cfg.alphabet, "letters, comma-separated")->capture_default_str();
  app.add_option("--base-order", cfg.base_order, "base letter order (default: alphabet order)");
  app.add_option("--catalog", cfg.catalogs, "catalog selector, e.g. rb:6?lambda=1 (repeatable)")->expected(1)->allow_extra_args(false);
  app.add_option("--identity", cfg.identities, "identity polynomial over x1, x2, ... (repeatable)")->expected(1)->allow_extra_args(false);
  app.add_option("--gens", cfg.gens, "generator polynomials, ';'-separated (repeatable)")->expected(1)->allow_extra_args(false);
  app.add_option("--gens-file", cfg.gens_file, "file with one generator polynomial per line");
  app.add_option("--order", cfg.order, "order preset: deglex, db or dt")->check(CLI::IsMember({"deglex", "db", "dt"}));
  app.add_option("--bounds", cfg.bounds, "z-degree and op-degree bounds 'D,P'")->capture_default_str();
  app.add_option("--fuel", cfg.fuel, "maximal number of rewriting steps per reduction")->capture_default_str();
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_flag("--trace", cfg.trace, "print rewriting traces");
  app.add_option("--jobs", cfg.jobs, "worker threads for composition checks")->capture_default_str()->check(CLI::Range(1, 256));
  app.add_option("--report", cfg.report, "write a JSON report to this path");

  auto positional = [&](CLI::App* sub, const char* what) {
    sub->footer(std::string("Positional arguments: ") + what);
    sub->allow_extras();
    sub->fallthrough();
  };
  auto* nf = app.add_subcommand("nf", "reduce a polynomial to normal form");
  positional(nf, "polynomial");
  auto* compare = app.add_subcommand("compare", "compare two words under the order");
  positional(compare, "two words");
  auto* inst = app.add_subcommand("instantiate", "substitute words into the identities");
  positional(inst, "one word per variable");
  auto* comps = app.add_subcommand("compositions", "list compositions within bounds with their verdicts");
  comps->fallthrough();
  auto* gs = app.add_subcommand("check-gs", "bounded Groebner-Shirshov check");
  gs->fallthrough();
  auto* type = app.add_subcommand("check-type", "Rota-Baxter-type or differential-type conditions");
  type->fallthrough();
  auto* stab = app.add_subcommand("check-stability", "leading-monomial hypotheses of the identities");
  stab->fallthrough();
  auto* ord = app.add_subcommand("check-order", "randomized monomial-order axiom check");
  ord->add_option("--trials", cfg.trials, "number of random trials")->capture_default_str();
  ord->fallthrough();
  auto* basis = app.add_subcommand("basis", "irreducible words within bounds");
  basis->fallthrough();
  auto* qe = app.add_subcommand("quotient-eval", "evaluate a polynomial in the quotient algebra");
  qe->add_option("--theta", cfg.theta, "letter images 'z1=POLY;z2=POLY' (default: identity)");
  positional(qe, "polynomial");
  auto* demo = app.add_subcommand("demo", "worked examples: diff-counterexample, rb-commutator, averaging, reynolds, diffprime");
  demo->add_option("name", cfg.demo, "demo name")->required();
  demo->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  // Positional arguments are taken verbatim so that bracketed words survive.
  cfg.args = app.remaining(true);
  for (const auto& a : cfg.args)
    if (a.rfind("--", 0) == 0) {
      std::cerr << "unknown option " << a << "\nRun with --help for more information.\n";
      return 2;
    }
  const bool takes_positionals = command == "nf" || command == "compare" || command == "instantiate" || command == "quotient-eval";
  if (!takes_positionals && !cfg.args.empty()) {
    std::cerr << command << " takes no positional arguments, got '" << cfg.args.front() << "'\n";
    return 2;
  }
  try {
    if (command == "demo") {
      Outcome o = cmd_demo(cfg);
      write_report(cfg, command + " " + cfg.demo, nullptr, o);
      return o.code;
    }
    Setup s = resolve(cfg);
    Outcome o;
    if (command == "nf") o = cmd_nf(cfg, s);
    else if (command == "compare") o = cmd_compare(cfg, s);
    else if (command == "instantiate") o = cmd_instantiate(cfg, s);
    else if (command == "compositions") o = cmd_compositions(cfg, s);
    else if (command == "check-gs") o = cmd_check_gs(cfg, s);
    else if (command == "check-type") o = cmd_check_type(cfg, s);
    else if (command == "check-stability") o = cmd_check_stability(cfg, s);
    else if (command == "check-order") o = cmd_check_order(cfg, s);
    else if (command == "basis") o = cmd_basis(cfg, s);
    else if (command == "quotient-eval") o = cmd_quotient_eval(cfg, s);
    write_report(cfg, command, &s, o);
    return o.code;
  } catch (const FuelExhausted& e) {
    std::cerr << "fuel exhausted: " << e.what() << "\n";
    return 1;
  } catch (const QuotientRefused& e) {
    std::cerr << "quotient refused: " << e.what() << "\n";
    return 1;
  } catch (const OrderViolation& e) {
    std::cerr << "order violation: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
