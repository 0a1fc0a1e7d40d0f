#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "io.hpp"
#include "simplexcover/errors.hpp"
#include "simplexcover/shapes.hpp"

namespace simplexcover::cli {

namespace {

using io::json;

struct Flags {
  std::string body, simplex, lattice, config, out, history, point;
  std::string mu = "1", nu = "1";
  unsigned depth = 12;
  std::size_t samples = 100000;
  std::optional<std::uint64_t> seed;
  unsigned workers = 1;
  std::size_t n = 0;
  std::optional<std::size_t> restarts, iterations;
  bool bruteforce = false;
};

struct Outcome {
  json report;
  int code = Ok;
};

int log_level() {
  const char* v = std::getenv("COVER_LOG");
  if (!v || !*v) return 0;
  std::string s(v);
  if (s == "debug" || s == "2") return 2;
  if (s == "info" || s == "1") return 1;
  return 0;
}

Rational flag_rational(const std::string& text, const char* name) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw io::InputError(std::string("--") + name + ": " + e.what());
  }
}

RationalPoint flag_point(const std::string& text) {
  std::vector<Rational> coords;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    coords.push_back(flag_rational(text.substr(start, comma - start), "point"));
    start = comma + 1;
  }
  return RationalPoint(coords);
}

VPolytope load_body(const std::string& path) { return io::polytope_from_json(io::load_json(path), path); }
Lattice load_lattice(const std::string& path) { return io::lattice_from_json(io::load_json(path), path); }

void same_dim(const VPolytope& k, const Lattice& l) {
  if (k.dim() != l.dim())
    throw DimensionMismatch("body has dimension " + std::to_string(k.dim()) + " but lattice has " +
                            std::to_string(l.dim()));
}

Outcome audit_outcome(const AuditReport& report) {
  return {io::to_json(report), report.all_satisfied() ? Ok : AuditFailure};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const int verbosity = log_level();
  auto log = [&](int level, const std::string& msg) {
    if (verbosity >= level) err << (level >= 2 ? "[debug] " : "[info] ") << msg << "\n";
  };

  Flags f;
  CLI::App app{"Exact difference bodies and certified simplex coverings", "simplexcover"};
  app.require_subcommand(1);
  std::map<std::string, std::function<Outcome()>> handlers;

  auto body_opt = [&](CLI::App* c) { c->add_option("--body", f.body, "Polytope JSON")->required(); };
  auto simplex_opt = [&](CLI::App* c) { c->add_option("--simplex", f.simplex, "Simplex JSON")->required(); };
  auto lattice_opt = [&](CLI::App* c) { c->add_option("--lattice", f.lattice, "Lattice JSON")->required(); };
  auto ratio_opts = [&](CLI::App* c) {
    c->add_option("--mu", f.mu, "Positive rational p/q");
    c->add_option("--nu", f.nu, "Positive rational p/q");
  };
  auto depth_opt = [&](CLI::App* c) { c->add_option("--depth", f.depth, "Subdivision depth of the verifier"); };
  auto sub = [&](const std::string& name, const std::string& help, std::function<Outcome()> h) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("--out", f.out, "Write the report here instead of stdout");
    handlers[name] = std::move(h);
    return c;
  };

  {
    auto* c = sub("diffbody", "mu K - nu K with its volume ratio", [&] {
      VPolytope k = load_body(f.body);
      Rational mu = flag_rational(f.mu, "mu"), nu = flag_rational(f.nu, "nu");
      VPolytope d = general_difference_body(k, mu, nu);
      Rational vk = volume(k), vd = volume(d);
      json r{{"mu", io::to_json(mu)}, {"nu", io::to_json(nu)}, {"body", io::polytope_to_json(d)},
             {"volume", io::exact_value(vd)}, {"body_volume", io::exact_value(vk)}};
      r["ratio"] = sgn(vk) > 0 ? io::exact_value(Rational(vd / vk)) : json(nullptr);
      return Outcome{r};
    });
    body_opt(c);
    ratio_opts(c);
  }
  {
    auto* c = sub("verify-theorem1", "Hull volume of mu T - nu T against the closed form", [&] {
      Rational mu = flag_rational(f.mu, "mu"), nu = flag_rational(f.nu, "nu");
      VPolytope t = standard_simplex(f.n);
      Rational formula = rs_ratio_formula(f.n, mu, nu);
      Rational geometric = volume(general_difference_body(t, mu, nu)) * Rational(factorial(unsigned(f.n)));
      bool match = formula == geometric;
      json r{{"n", f.n},
             {"mu", io::to_json(mu)},
             {"nu", io::to_json(nu)},
             {"formula", io::to_json(formula)},
             {"geometric", io::to_json(geometric)},
             {"match", match}};
      return Outcome{r, match ? Ok : AuditFailure};
    });
    c->add_option("--n", f.n, "Dimension")->required()->check(CLI::Range(1, 12));
    ratio_opts(c);
  }
  {
    auto* c = sub("decompose", "Face-pair decomposition of mu T - nu T", [&] {
      Rational mu = flag_rational(f.mu, "mu"), nu = flag_rational(f.nu, "nu");
      auto pieces = simplex_decomposition(f.n, mu, nu);
      AuditReport audit = verify_decomposition(pieces, general_difference_body(standard_simplex(f.n), mu, nu));
      json list = json::array();
      for (const auto& p : pieces)
        list.push_back({{"i", p.pair.i},
                        {"j", p.pair.j},
                        {"subset", p.pair.subset},
                        {"claimed_volume", io::to_json(p.claimed_volume)},
                        {"volume", io::to_json(volume(p.body))},
                        {"piece", io::polytope_to_json(p.body)}});
      return Outcome{{{"n", f.n}, {"pieces", list}, {"audit", io::to_json(audit)}},
                     audit.all_satisfied() ? Ok : AuditFailure};
    });
    c->add_option("--n", f.n, "Dimension")->required()->check(CLI::Range(1, 6));
    ratio_opts(c);
  }
  {
    auto* c = sub("mixed-volumes", "Mixed-volume profile of K and -K", [&] {
      VPolytope k = load_body(f.body);
      auto profile = mixed_volume_profile(k);
      RatioPolynomial poly = ratio_polynomial(k);
      json w = json::array(), coef = json::array();
      for (const auto& x : profile) w.push_back(io::to_json(x));
      for (const auto& x : poly.coefficients) coef.push_back(io::to_json(x));
      return Outcome{{{"dim", k.dim()}, {"profile", w}, {"ratio_coefficients", coef}}};
    });
    body_opt(c);
  }
  {
    auto* c = sub("bounds-audit", "Brunn-Minkowski and Rogers-Shephard bounds", [&] {
      VPolytope k = load_body(f.body);
      auto grid = default_bound_grid();
      if (f.mu != "1" || f.nu != "1") grid = {{flag_rational(f.mu, "mu"), flag_rational(f.nu, "nu")}};
      return audit_outcome(bound_audit(k, grid));
    });
    body_opt(c);
    ratio_opts(c);
  }
  {
    auto* c = sub("covering-check", "Certify that K + L covers space", [&] {
      VPolytope k = load_body(f.body);
      Lattice l = load_lattice(f.lattice);
      same_dim(k, l);
      CoveringCertificate cert = is_covering(k, l, f.depth);
      log(1, "verdict " + to_string(cert.verdict) + " with " + std::to_string(cert.boxes_accepted) + " boxes");
      json r = io::to_json(cert);
      r["density"] = io::exact_value(density(k, l));
      return Outcome{r, cert.covered() ? Ok : AuditFailure};
    });
    body_opt(c);
    lattice_opt(c);
    depth_opt(c);
  }
  {
    auto* c = sub("density", "vol(K) / det(L)", [&] {
      VPolytope k = load_body(f.body);
      Lattice l = load_lattice(f.lattice);
      same_dim(k, l);
      return Outcome{{{"density", io::exact_value(density(k, l))}, {"det", io::exact_value(l.det())}}};
    });
    body_opt(c);
    lattice_opt(c);
  }
  {
    auto* c = sub("star-number", "Translates K + u meeting K", [&] {
      VPolytope k = load_body(f.body);
      Lattice l = load_lattice(f.lattice);
      same_dim(k, l);
      auto hits = star_neighbors(k, l);
      json nb = json::array();
      for (const auto& h : hits) nb.push_back(io::to_json(h.coefficients));
      json r{{"star_number", hits.size()}, {"neighbors", nb}};
      int code = Ok;
      if (f.bruteforce) {
        std::size_t brute = star_number_bruteforce(k, l);
        r["bruteforce"] = brute;
        r["match"] = brute == hits.size();
        if (brute != hits.size()) code = AuditFailure;
      }
      return Outcome{r, code};
    });
    body_opt(c);
    lattice_opt(c);
    c->add_flag("--bruteforce", f.bruteforce, "Also count by pairwise intersection");
  }
  {
    auto* c = sub("hadwiger-audit", "Star number against the covering density", [&] {
      VPolytope k = load_body(f.body);
      Lattice l = load_lattice(f.lattice);
      same_dim(k, l);
      return audit_outcome(hadwiger_audit(k, l, f.depth));
    });
    body_opt(c);
    lattice_opt(c);
    depth_opt(c);
  }
  {
    auto* c = sub("lemma3-estimate", "Monte-Carlo det(L) from covering multiplicities", [&] {
      VPolytope t = load_body(f.simplex);
      Lattice l = load_lattice(f.lattice);
      same_dim(t, l);
      MultiplicityEstimate e = multiplicity_density_estimate(t, l, f.samples, *f.seed, f.workers);
      AuditReport audit = lemma3_audit(l, e);
      json r = io::to_json(e);
      r["seed"] = *f.seed;
      r["det"] = io::exact_value(l.det());
      r["audit"] = io::to_json(audit);
      return Outcome{r, audit.all_satisfied() ? Ok : AuditFailure};
    });
    simplex_opt(c);
    lattice_opt(c);
    c->add_option("--samples", f.samples, "Sample count")->check(CLI::PositiveNumber);
    c->add_option("--seed", f.seed, "RNG seed")->required();
    c->add_option("--workers", f.workers, "Threads")->check(CLI::PositiveNumber);
  }
  {
    auto* c = sub("homothety", "Whether K n (K + x) is a homothet of K", [&] {
      VPolytope k = load_body(f.body);
      RationalPoint x = flag_point(f.point);
      if (x.dim() != k.dim()) throw DimensionMismatch("--point has the wrong dimension");
      auto h = homothety_check(k, x);
      json r{{"point", io::to_json(x)}, {"homothetic", h.has_value()}};
      if (h) {
        r["lambda"] = io::exact_value(h->lambda);
        r["y"] = io::to_json(h->y);
      }
      return Outcome{r};
    });
    body_opt(c);
    c->add_option("--point", f.point, "Comma-separated rationals")->required();
  }
  {
    auto* c = sub("theorem2-audit", "Case analysis of the simplex covering lower bound", [&] {
      VPolytope t = load_body(f.simplex);
      Lattice l = load_lattice(f.lattice);
      same_dim(t, l);
      return audit_outcome(theorem2_audit(t, l, f.depth));
    });
    simplex_opt(c);
    lattice_opt(c);
    depth_opt(c);
  }
  {
    auto* c = sub("optimize", "Search for a thin lattice covering", [&] {
      VPolytope k = load_body(f.simplex);
      SearchConfig cfg;
      if (!f.config.empty()) cfg = io::search_config_from_json(io::load_json(f.config), f.config);
      cfg.dim = k.dim();
      cfg.seed = *f.seed;
      if (f.restarts) cfg.restarts = *f.restarts;
      if (f.iterations) cfg.iterations = *f.iterations;
      if (f.workers != 1) cfg.workers = f.workers;
      if (f.depth != 12) cfg.depth = f.depth;
      log(1, "searching with " + std::to_string(cfg.restarts) + " restarts of " + std::to_string(cfg.iterations) +
                 " iterations");
      SearchResult result = optimize_lattice(k, cfg);
      log(1, "best density " + to_decimal(result.best_density));
      if (!f.history.empty()) {
        std::ofstream h(f.history);
        if (!h) throw io::InputError(f.history + ": cannot write history");
        h << io::history_csv(result.history);
      }
      json r = io::to_json(result);
      r["config"] = io::to_json(cfg);
      return Outcome{r, result.audits.all_satisfied() ? Ok : AuditFailure};
    });
    c->add_option("--simplex,--body", f.simplex, "Polytope JSON")->required();
    c->add_option("--seed", f.seed, "RNG seed")->required();
    c->add_option("--config", f.config, "SearchConfig JSON");
    c->add_option("--restarts", f.restarts, "Override restarts");
    c->add_option("--iterations", f.iterations, "Override iterations");
    c->add_option("--workers", f.workers, "Threads")->check(CLI::PositiveNumber);
    depth_opt(c);
    c->add_option("--history", f.history, "Write the search history as CSV");
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : InputFailure;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  log(2, "running " + name);
  Outcome outcome;
  try {
    outcome = handlers.at(name)();
  } catch (const io::InputError& e) {
    err << "error: " << e.what() << "\n";
    return InputFailure;
  } catch (const NotACovering& e) {
    err << "audit failed: " << e.what() << "\n";
    outcome = {{{"error", e.what()}, {"covered", false}}, AuditFailure};
  } catch (const NoCoveringFound& e) {
    err << "audit failed: " << e.what() << "\n";
    outcome = {{{"error", e.what()}}, AuditFailure};
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << "\n";
    return InputFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return InputFailure;
  }

  const std::string text = outcome.report.dump(2) + "\n";
  if (f.out.empty()) {
    out << text;
  } else {
    std::ofstream file(f.out);
    if (!file) {
      err << "error: cannot write " << f.out << "\n";
      return InputFailure;
    }
    file << text;
  }
  log(1, name + " exit " + std::to_string(outcome.code));
  return outcome.code;
}

}  // namespace simplexcover::cli
