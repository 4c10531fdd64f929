// suq2: expression calculator and verification front end.
//
//   suq2 <command> [args] [flags]
//
// Expression commands (one quoted expression argument):
//   nf star deg eps haar S R theta tau sigma delta flip mu kappa deltaB
//   haarB psi pi
// Representation commands (optional tensor power, default 1):
//   lift validate-rep tensor-rep
// Suites:
//   verify <hopf|haar|polar|witness|reps|boson|crossmode|qtorus|all>
//   qtorus <flip|rho|boca|star|spectrum|norm|all>
// Flags:
//   --mode exact|numeric   --sigma +1|-1   --r <p/q>   --q <re,im>
//   --seed <int>   --max-degree <int>   --format text|json
//
// Exit codes: 0 pass, 1 identity failure, 2 usage error.
// SUQ2_THREADS caps the parallelism of the numeric experiment suite.

#include <suq2/json_io.hpp>
#include <suq2/render.hpp>
#include <suq2/verify.hpp>

#include <complex>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace suq2;

namespace {

struct Flags {
  Mode mode = Mode::exact;
  int sigma = +1;
  bool sigma_set = false;
  std::optional<Rat> r_sub;
  std::optional<std::complex<double>> q0;
  unsigned seed = 7;
  int maxdeg = 0;
  bool json = false;
  std::vector<std::string> pos;
};

int usage(std::ostream& os) {
  os << "usage: suq2 <command> [args] [flags]\n"
        "\n"
        "expression commands (one quoted expression):\n"
        "  nf        normal form\n"
        "  star      adjoint\n"
        "  deg       total degree (or 'mixed')\n"
        "  eps       counit\n"
        "  haar      invariant state (z-free input)\n"
        "  haarB     invariant state on the crossed product\n"
        "  S         antipode\n"
        "  R         unitary antipode\n"
        "  theta     grading twist\n"
        "  tau       scaling group at i s/2; optional integer 2s, default 1\n"
        "  sigma     modular group at i s/2; optional integer 2s, default 1\n"
        "  delta     comultiplication into the braided square\n"
        "  flip      braided exchange of a two-leg tensor\n"
        "  mu        multiply the legs of a two-leg tensor\n"
        "  kappa     embed into the crossed product\n"
        "  deltaB    crossed-product comultiplication\n"
        "  psi       braided square into the crossed square\n"
        "  pi        winding character (Laurent polynomial in t)\n"
        "\n"
        "representation commands (optional tensor power, default 1):\n"
        "  tensor-rep   print the power of the fundamental corepresentation\n"
        "  validate-rep check corepresentation, unitarity, counit, antipode\n"
        "  lift         boson lift of the power\n"
        "\n"
        "suites:\n"
        "  verify <hopf|haar|polar|witness|reps|boson|crossmode|qtorus|all>\n"
        "  qtorus <flip|rho|boca|star|spectrum|norm|all>\n"
        "\n"
        "flags: --mode exact|numeric  --sigma +1|-1  --r <p/q>  --q <re,im>\n"
        "       --seed <int>  --max-degree <int>  --format text|json\n"
        "\n"
        "grammar: atoms a a* g g* z r v q qb zeta, integers, p/q; powers with ^;\n"
        "  juxtaposition multiplies; '(x)' separates tensor legs; a '*' glued to\n"
        "  a, g or ')' is the adjoint, a spaced one multiplies.\n"
        "\n"
        "examples:\n"
        "  suq2 haar \"g g*\" --r 1/2 --sigma +1\n"
        "  suq2 S \"g\"\n"
        "  suq2 verify hopf --max-degree 2 --seed 7\n";
  return 2;
}

int fail_usage(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::cerr << "run 'suq2 --help' for usage\n";
  return 2;
}

bool parse_flags(int argc, char** argv, Flags& f, std::string& err) {
  for (int i = 2; i < argc; ++i) {
    std::string a = argv[i];
    std::string val;
    auto eq = a.find('=');
    bool has_eq = a.rfind("--", 0) == 0 && eq != std::string::npos;
    std::string name = has_eq ? a.substr(0, eq) : a;
    auto need = [&](const char* what) {
      if (has_eq) {
        val = a.substr(eq + 1);
        return true;
      }
      if (i + 1 >= argc) {
        err = std::string(what) + " needs a value";
        return false;
      }
      val = argv[++i];
      return true;
    };
    if (name == "--mode") {
      if (!need("--mode")) return false;
      if (val == "exact") f.mode = Mode::exact;
      else if (val == "numeric") f.mode = Mode::numeric;
      else {
        err = "--mode must be exact or numeric";
        return false;
      }
    } else if (name == "--sigma") {
      if (!need("--sigma")) return false;
      if (val == "+1" || val == "1") f.sigma = +1;
      else if (val == "-1") f.sigma = -1;
      else {
        err = "--sigma must be +1 or -1";
        return false;
      }
      f.sigma_set = true;
    } else if (name == "--r") {
      if (!need("--r")) return false;
      Rat r;
      if (r.set_str(val, 10) != 0) {
        err = "--r wants a rational like 1/2";
        return false;
      }
      r.canonicalize();
      if (!(r > 0 && r < 1)) {
        err = "--r must lie strictly between 0 and 1";
        return false;
      }
      f.r_sub = r;
    } else if (name == "--q") {
      if (!need("--q")) return false;
      auto comma = val.find(',');
      try {
        double re = std::stod(val.substr(0, comma));
        double im = comma == std::string::npos ? 0.0 : std::stod(val.substr(comma + 1));
        f.q0 = std::complex<double>(re, im);
      } catch (...) {
        err = "--q wants re,im";
        return false;
      }
    } else if (name == "--seed") {
      if (!need("--seed")) return false;
      try {
        f.seed = (unsigned)std::stoul(val);
      } catch (...) {
        err = "--seed wants an integer";
        return false;
      }
    } else if (name == "--max-degree") {
      if (!need("--max-degree")) return false;
      try {
        f.maxdeg = std::stoi(val);
      } catch (...) {
        err = "--max-degree wants an integer";
        return false;
      }
      if (f.maxdeg < 1) {
        err = "--max-degree must be positive";
        return false;
      }
    } else if (name == "--format") {
      if (!need("--format")) return false;
      if (val == "json") f.json = true;
      else if (val == "text") f.json = false;
      else {
        err = "--format must be text or json";
        return false;
      }
    } else if (name.rfind("--", 0) == 0) {
      err = "unknown flag '" + name + "'";
      return false;
    } else {
      f.pos.push_back(a);
    }
  }
  return true;
}

bool setup_session(const Flags& f, std::string& err) {
  if (f.mode == Mode::exact) {
    if (f.q0) {
      err = "--q requires --mode numeric";
      return false;
    }
    set_exact_mode(f.sigma);
    return true;
  }
  if (!f.q0) {
    err = "--mode numeric requires --q re,im";
    return false;
  }
  if (f.r_sub) {
    err = "--r only applies in exact mode";
    return false;
  }
  try {
    set_numeric_mode(*f.q0, f.sigma_set ? f.sigma : 0);
  } catch (const std::exception& e) {
    err = e.what();
    return false;
  }
  return true;
}

Parsed subst_coeffs(const Parsed& p, const Rat& r) {
  Parsed out;
  out.order = p.order;
  for (const auto& [legs, c] : p.terms) out.add(legs, c.subst_r(r));
  return out;
}

std::string render_at_q(const Parsed& p) {
  std::vector<render_detail::TermText> terms;
  for (const auto& [legs, c] : p.terms)
    terms.push_back(render_detail::body_term(legs, NScalar{c.numeric_eval()}));
  return render_detail::join_sum(terms);
}

json numeric_json(const Parsed& p) {
  json terms = json::array();
  for (const auto& [legs, c] : p.terms) {
    json ja = json::array();
    for (const auto& m : legs) ja.push_back({m.n, m.m, m.k, m.l});
    std::complex<double> z = c.numeric_eval();
    terms.push_back({{"legs", ja}, {"c", {{"re", z.real()}, {"im", z.imag()}}}});
  }
  return {{"order", p.order}, {"terms", terms}};
}

int emit(Parsed p, const Flags& f) {
  if (f.r_sub) p = subst_coeffs(p, *f.r_sub);
  if (f.json)
    std::cout << (f.mode == Mode::numeric ? numeric_json(p) : to_json(p)).dump(2) << "\n";
  else
    std::cout << (f.mode == Mode::numeric ? render_at_q(p) : render(p)) << "\n";
  return 0;
}

int emit_scalar(Scalar s, const Flags& f) {
  if (f.r_sub) s = s.subst_r(*f.r_sub);
  if (f.json) {
    if (f.mode == Mode::numeric)
      std::cout << to_json(NScalar{s.numeric_eval()}).dump(2) << "\n";
    else
      std::cout << to_json(s).dump(2) << "\n";
  } else {
    std::cout << (f.mode == Mode::numeric ? render(NScalar{s.numeric_eval()}) : render(s))
              << "\n";
  }
  return 0;
}

int run_deg(const Parsed& p, const Flags& f) {
  std::optional<int> d;
  bool mixed = false;
  for (const auto& [legs, c] : p.terms) {
    int t = 0;
    for (const auto& m : legs) t += bdeg(m);
    if (!d) d = t;
    else if (*d != t) mixed = true;
  }
  if (f.json) {
    json j;
    if (mixed || !d) j = {{"deg", nullptr}, {"mixed", mixed}};
    else j = {{"deg", *d}, {"mixed", false}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (mixed ? "mixed" : d ? std::to_string(*d) : "0") << "\n";
  }
  return 0;
}

int run_pi(const Parsed& p, const Flags& f) {
  auto ch = pi_char(as_belement(p));
  if (f.json) {
    json terms = json::array();
    for (const auto& [l, c] : ch) terms.push_back({{"l", l}, {"c", to_json(c)}});
    std::cout << json{{"terms", terms}}.dump(2) << "\n";
    return 0;
  }
  if (ch.empty()) {
    std::cout << "0\n";
    return 0;
  }
  std::vector<render_detail::TermText> terms;
  for (const auto& [l, c] : ch) {
    auto t = render_detail::coeff_prefix(c);
    if (l == 0) {
      if (t.body.empty()) t.body = "1";
      else t.body.pop_back(); // drop the trailing separator space
    } else {
      t.body += "t" + (l == 1 ? std::string() : "^" + std::to_string(l));
    }
    terms.push_back(std::move(t));
  }
  std::cout << render_detail::join_sum(terms) << "\n";
  return 0;
}

int rep_power_arg(const Flags& f) {
  if (f.pos.empty()) return 1;
  int k = std::stoi(f.pos[0]);
  if (k < 1 || k > 6) throw std::invalid_argument("tensor power must be in 1..6");
  return k;
}

Rep<Scalar> rep_power(int k) {
  Rep<Scalar> w = Rep<Scalar>::fundamental();
  for (int j = 2; j <= k; ++j) w = tensor_rep(w, Rep<Scalar>::fundamental());
  return w;
}

int run_tensor_rep(const Flags& f) {
  auto w = rep_power(rep_power_arg(f));
  if (f.json) {
    std::cout << to_json(w).dump(2) << "\n";
    return 0;
  }
  std::cout << "dim " << w.dim() << ", weights";
  for (int x : w.weights) std::cout << " " << x;
  std::cout << "\n";
  for (int i = 0; i < w.dim(); ++i)
    for (int j = 0; j < w.dim(); ++j)
      std::cout << "u[" << i << "][" << j << "] = " << render(w.u[i][j]) << "\n";
  return 0;
}

int run_validate_rep(const Flags& f) {
  auto w = rep_power(rep_power_arg(f));
  auto bad = validate_rep(w);
  if (!antipode_entries_match(w)) bad.push_back("antipode does not match the conjugate transpose");
  auto lifted = validate_boson_corep(boson_lift(w));
  for (const auto& s : lifted) bad.push_back("lift: " + s);
  if (f.json) {
    std::cout << json{{"dim", w.dim()}, {"violations", bad}, {"pass", bad.empty()}}.dump(2)
              << "\n";
  } else {
    for (const auto& s : bad) std::cout << "FAIL " << s << "\n";
    std::cout << (bad.empty() ? "ok" : "invalid") << "\n";
  }
  return bad.empty() ? 0 : 1;
}

int run_lift(const Flags& f) {
  auto w = rep_power(rep_power_arg(f));
  auto v = boson_lift(w);
  if (f.json) {
    json rows = json::array();
    for (const auto& row : v) {
      json cols = json::array();
      for (const auto& e : row) cols.push_back(to_json(e));
      rows.push_back(cols);
    }
    std::cout << json{{"dim", w.dim()}, {"weights", w.weights}, {"entries", rows}}.dump(2)
              << "\n";
    return 0;
  }
  for (int i = 0; i < w.dim(); ++i)
    for (int j = 0; j < w.dim(); ++j)
      std::cout << "v[" << i << "][" << j << "] = " << render(v[i][j]) << "\n";
  return 0;
}

int run_verify(const Flags& f) {
  if (f.pos.empty()) return fail_usage("verify needs a suite name");
  std::vector<std::string> names;
  if (f.pos[0] == "all") names = verify_suite_names();
  else names = {f.pos[0]};
  VerifyOptions opt{f.maxdeg, f.seed, 0};

  bool all_ok = true;
  json out = json::array();
  for (const auto& name : names) {
    SuiteReport rep = run_suite(name, opt);
    all_ok = all_ok && rep.ok();
    if (f.json) {
      json checks = json::array();
      for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
      out.push_back({{"suite", rep.suite}, {"pass", rep.ok()}, {"checks", checks}});
    } else {
      for (const auto& c : rep.checks) {
        if (c.pass)
          std::cout << "ok   " << rep.suite << ": " << c.name << "\n";
        else
          std::cout << "FAIL " << rep.suite << ": " << c.name
                    << (c.witness.empty() ? "" : " [counterexample: " + c.witness + "]")
                    << "\n";
      }
    }
  }
  if (f.json) std::cout << out.dump(2) << "\n";
  else std::cout << (all_ok ? "all identities hold" : "identities failed") << "\n";
  return all_ok ? 0 : 1;
}

struct QReport {
  std::string experiment;
  json params;
  double max_ratio = 0.0;
  double bound = 0.0;
  bool pass = false;
  json series = json::array();
};

void print_qreport(const QReport& r, bool as_json) {
  if (as_json) {
    json j{{"experiment", r.experiment},
           {"params", r.params},
           {"max_ratio", r.max_ratio},
           {"bound", r.bound},
           {"pass", r.pass}};
    if (!r.series.empty()) j["series"] = r.series;
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << r.experiment << ": max " << r.max_ratio << " vs bound " << r.bound << " -> "
            << (r.pass ? "pass" : "FAIL") << "\n";
  for (const auto& row : r.series)
    std::cout << "  " << row.value("d", 0) << "," << row.value("value", 0.0) << "\n";
}

QReport q_flip(unsigned seed) {
  QReport r;
  r.experiment = "flip";
  r.params = {{"dims", {2, 3, 5}}, {"trials", 100}, {"seed", seed}};
  r.pass = true;
  double worst_norm = 0.0;
  for (int d : {2, 3, 5}) {
    auto b = qtorus::flip_bound_check(qtorus::boca(d), 100, seed + d);
    r.series.push_back({{"d", d}, {"value", b.max_ratio}, {"bound", b.bound}});
    r.pass = r.pass && b.pass;
    if (b.max_ratio / b.bound > worst_norm) {
      worst_norm = b.max_ratio / b.bound;
      r.max_ratio = b.max_ratio;
      r.bound = b.bound;
    }
  }
  return r;
}

QReport q_rho() {
  QReport r;
  r.experiment = "rho";
  r.params = {{"dims", {2, 3, 5}}, {"tol", 1e-9}};
  r.bound = 1e-9;
  r.pass = true;
  for (int d : {2, 3, 5}) {
    auto m = qtorus::rho_measure(qtorus::boca(d), 1e-9);
    double err = std::max(m.max_pairing_err, std::abs(m.variation - d));
    r.series.push_back({{"d", d}, {"value", err}});
    r.max_ratio = std::max(r.max_ratio, err);
    r.pass = r.pass && m.pass;
  }
  r.pass = r.pass && r.max_ratio <= r.bound;
  return r;
}

QReport q_boca() {
  QReport r;
  r.experiment = "boca";
  r.params = {{"dims", {2, 3, 5, 7, 8, 12, 16}}};
  r.bound = 1e-12;
  r.pass = true;
  for (int d : {2, 3, 5, 7, 8, 12, 16}) {
    auto rp = qtorus::boca(d);
    qtorus::Mat O = qtorus::fourier_o(rp), T = qtorus::index_negation(rp);
    double res = 0.0;
    res = std::max(res, (O * rp.U0 * O.adjoint() - qtorus::v_pow(rp, -1)).norm());
    res = std::max(res, (O * rp.V0 * O.adjoint() - rp.U0).norm());
    res = std::max(res, (T * rp.U0 * T.adjoint() - rp.U0.adjoint()).norm());
    res = std::max(res, (T * rp.V0 * T.adjoint() - rp.V0.adjoint()).norm());
    r.series.push_back({{"d", d}, {"value", res}});
    r.max_ratio = std::max(r.max_ratio, res);
  }
  r.pass = r.max_ratio <= r.bound;
  return r;
}

QReport q_star() {
  QReport r;
  r.experiment = "star";
  r.params = {{"stages", 6}, {"angle_num", golden_angle_num}, {"angle_den", dyadic_den}};
  r.bound = 1.0;
  auto s = qtorus::star_sequence_dyadic(golden_angle_num, dyadic_den, 6, 1000000000000000LL);
  r.pass = s.ok;
  for (int stage = 1; stage <= (int)s.stages.size(); ++stage) {
    const auto& st = s.stages[stage - 1];
    double norm = stage * std::max(st.worst_one, st.worst_minus_one);
    r.series.push_back({{"d", stage}, {"value", norm}, {"n", st.n}, {"m", st.m}});
    r.max_ratio = std::max(r.max_ratio, norm);
  }
  r.pass = r.pass && r.max_ratio <= r.bound;
  return r;
}

QReport q_spectrum(unsigned seed) {
  QReport r;
  r.experiment = "spectrum";
  r.params = {{"d", 5}, {"absq", 0.5}, {"samples", 8}, {"seed", seed}};
  auto s = qtorus::spectrum_eval_bound(qtorus::boca(5), 0.5, 8, seed);
  r.max_ratio = s.max_norm;
  r.bound = s.bound;
  r.pass = s.pass;
  return r;
}

QReport q_norm() {
  QReport r;
  r.experiment = "norm";
  r.params = {{"d", 2}, {"element", "U + V"}};
  auto rp = qtorus::boca(2);
  auto x = qtorus::TorusElement::mono(1, 0, 1.0);
  x.add_term(0, 1, 1.0);
  double n = qtorus::torus_norm(x, rp);
  r.max_ratio = std::abs(n - 2.0);
  r.bound = 1e-9;
  r.pass = r.max_ratio <= r.bound;
  return r;
}

int run_qtorus(const Flags& f) {
  if (f.pos.empty()) return fail_usage("qtorus needs an experiment name");
  const std::string& e = f.pos[0];
  std::vector<QReport> reports;
  if (e == "flip" || e == "all") reports.push_back(q_flip(f.seed));
  if (e == "rho" || e == "all") reports.push_back(q_rho());
  if (e == "boca" || e == "all") reports.push_back(q_boca());
  if (e == "star" || e == "all") reports.push_back(q_star());
  if (e == "spectrum" || e == "all") reports.push_back(q_spectrum(f.seed));
  if (e == "norm" || e == "all") reports.push_back(q_norm());
  if (reports.empty()) return fail_usage("unknown experiment '" + e + "'");
  bool ok = true;
  for (const auto& r : reports) {
    print_qreport(r, f.json);
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  if (argc < 2) return usage(std::cerr);
  std::string cmd = argv[1];
  if (cmd == "--help" || cmd == "-h" || cmd == "help") {
    usage(std::cout);
    return 0;
  }

  Flags f;
  std::string err;
  if (!parse_flags(argc, argv, f, err)) return fail_usage(err);
  if (!setup_session(f, err)) return fail_usage(err);

  try {
    if (cmd == "verify") return run_verify(f);
    if (cmd == "qtorus") return run_qtorus(f);
    if (cmd == "tensor-rep") return run_tensor_rep(f);
    if (cmd == "validate-rep") return run_validate_rep(f);
    if (cmd == "lift") return run_lift(f);

    // everything below takes one expression argument
    if (f.pos.empty()) return fail_usage("command '" + cmd + "' needs an expression");
    Parsed p = parse(f.pos[0]);

    if (cmd == "nf") return emit(p, f);
    if (cmd == "star") return emit(parse_detail::p_star(p, 0), f);
    if (cmd == "deg") return run_deg(p, f);
    if (cmd == "pi") return run_pi(p, f);

    if (cmd == "eps") {
      if (p.has_z()) return emit_scalar(counit(as_belement(p)), f);
      return emit_scalar(counit(as_element(p)), f);
    }
    if (cmd == "haar") {
      if (p.has_z())
        return fail_usage("haar takes a z-free expression; use haarB on the crossed product");
      return emit_scalar(haar(as_element(p)), f);
    }
    if (cmd == "haarB") return emit_scalar(haar_B(as_belement(p)), f);

    if (cmd == "S") return emit(from_element(antipode(as_element(p))), f);
    if (cmd == "R") return emit(from_element(unitary_R(as_element(p))), f);
    if (cmd == "theta") return emit(from_element(theta(as_element(p))), f);
    if (cmd == "tau" || cmd == "sigma") {
      int s2 = 1;
      if (f.pos.size() > 1) s2 = std::stoi(f.pos[1]);
      Element<Scalar> x = as_element(p);
      return emit(from_element(cmd == "tau" ? tau_is(x, s2) : sigma_is(x, s2)), f);
    }
    if (cmd == "delta") return emit(from_braided(delta(as_element(p))), f);
    if (cmd == "flip") {
      Braided<Scalar> b = as_braided(p);
      if (b.order != 2) return fail_usage("flip needs a two-leg tensor");
      return emit(from_braided(flip(b)), f);
    }
    if (cmd == "mu") {
      Braided<Scalar> b = as_braided(p);
      if (b.order != 2) return fail_usage("mu needs a two-leg tensor");
      return emit(from_element(mu(b)), f);
    }
    if (cmd == "kappa") return emit(from_belement(kappa(as_element(p))), f);
    if (cmd == "deltaB") return emit(from_btensor(delta_B(as_belement(p))), f);
    if (cmd == "psi") {
      Braided<Scalar> b = as_braided(p);
      if (b.order != 2) return fail_usage("psi needs a two-leg tensor");
      return emit(from_btensor(psi(b)), f);
    }

    return fail_usage("unknown command '" + cmd + "'");
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
