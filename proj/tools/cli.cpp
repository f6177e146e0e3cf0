#include "halphen/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "halphen/bianchi.hpp"
#include "halphen/dh_core.hpp"
#include "halphen/frobenius.hpp"
#include "halphen/qseries.hpp"
#include "halphen/ramanujan.hpp"
#include "halphen/report.hpp"
#include "halphen/theta.hpp"
#include "halphen/verify.hpp"

namespace halphen::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

cplx parse_complex(const std::string& s) {
  const auto comma = s.find(',');
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) {
      const double re = std::stod(s, &used);
      if (used != s.size()) {
        throw UsageError("");
      }
      return {re, 0.0};
    }
    const std::string a = s.substr(0, comma);
    const std::string b = s.substr(comma + 1);
    const double re = std::stod(a, &used);
    if (used != a.size()) {
      throw UsageError("");
    }
    const double im = std::stod(b, &used);
    if (used != b.size()) {
      throw UsageError("");
    }
    return {re, im};
  } catch (const std::exception&) {
    throw UsageError("expected RE,IM but got '" + s + "'");
  }
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
  return os.str();
}

/// Output of one command: a JSON result plus an optional table for CSV.
struct Outcome {
  bool passed = true;
  json result = json::object();
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::string raw_csv;  // used instead of header/rows when non-empty
};

struct Config {
  std::string command;
  std::string format = "json";
  std::string out_path;
  double tol = 0.0;
  int order = 30;
  int k = 2;
  int which = 3;
  std::string tau = "0,1";
  std::string tau1 = "0,2";
  double t0 = 0.7;
  double t1 = 2.0;
  double q0 = 0.3;
  std::size_t samples = 100;
  std::uint64_t seed = 7;
  int steps = 20;
  double scale = 1.0;
  double x = 1.0;
  std::string p = "0.25";
  std::string q = "0.5,0.1";
  double lambda = -1.0;
  std::string initial = "theta";

  json to_json() const {
    return {{"tol", tol},     {"order", order}, {"k", k},         {"which", which},
            {"tau", tau},     {"tau1", tau1},   {"t0", t0},       {"t1", t1},
            {"q0", q0},       {"samples", samples}, {"seed", seed}, {"steps", steps},
            {"scale", scale}, {"x", x},         {"p", p},         {"q", q},
            {"lambda", lambda}, {"initial", initial}, {"format", format}};
  }
};

// ---------------------------------------------------------------- series

Outcome series_table(const PiGradedQSeries& s) {
  Outcome o;
  o.result["series"] = s;
  o.header = {"exponent", "coefficient"};
  for (const auto& [n, c] : s.terms()) {
    o.rows.push_back({std::to_string(n), report::rational_string(c)});
  }
  return o;
}

Outcome cmd_series_eisenstein(const Config& c) {
  if (c.k != 2 && c.k != 4 && c.k != 6) {
    throw UsageError("--k must be 2, 4 or 6");
  }
  return series_table(eisenstein_series(c.k, c.order));
}

Outcome cmd_series_theta(const Config& c) {
  if (c.which < 2 || c.which > 4) {
    throw UsageError("--which must be 2, 3 or 4");
  }
  return series_table(theta_series(c.which, c.order));
}

// ---------------------------------------------------------------- dh

void dh_state_rows(Outcome& o, const std::string& label, const DHState& t) {
  for (int i = 0; i < 3; ++i) {
    o.rows.push_back({label + "_t" + std::to_string(i + 1), fmt(t[i].real()), fmt(t[i].imag())});
  }
}

Outcome cmd_dh_theta(const Config& c) {
  const TauPoint tau(parse_complex(c.tau));
  const DHState t = dh_theta_solution(tau);
  const double ode = verify::dh_theta_ode_residual(tau);
  const cplx sum_gap = t[0] + t[1] + t[2] - pi_i / 2.0 * eisenstein_eval(tau)[0];
  Outcome o;
  o.result["state"] = report::triple_json(t);
  o.result["ode_residual"] = ode;
  o.result["sum_identity_residual"] = std::abs(sum_gap);
  o.passed = ode <= c.tol && std::abs(sum_gap) <= c.tol;
  o.header = {"quantity", "re", "im"};
  dh_state_rows(o, "theta", t);
  o.rows.push_back({"ode_residual", fmt(ode), "0"});
  o.rows.push_back({"sum_identity_residual", fmt(std::abs(sum_gap)), "0"});
  return o;
}

DHState parse_initial(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) {
        throw UsageError("");
      }
    } catch (const std::exception&) {
      throw UsageError("--initial expects 'theta' or six comma-separated reals");
    }
  }
  if (v.size() != 6) {
    throw UsageError("--initial expects 'theta' or six comma-separated reals");
  }
  return {cplx(v[0], v[1]), cplx(v[2], v[3]), cplx(v[4], v[5])};
}

Outcome cmd_dh_integrate(const Config& c) {
  const TauPoint tau0(parse_complex(c.tau));
  const TauPoint tau1(parse_complex(c.tau1));
  const bool from_theta = c.initial == "theta";
  const DHState init = from_theta ? dh_theta_solution(tau0) : parse_initial(c.initial);
  const DHTrajectory traj = dh_integrate(init, tau0, tau1, c.tol);
  Outcome o;
  o.result["final_state"] = report::triple_json(traj.final_state());
  o.result["steps"] = traj.points().size() - 1;
  if (from_theta) {
    const DHState ref = dh_theta_solution(tau1);
    double gap = 0.0;
    for (int i = 0; i < 3; ++i) {
      gap = std::max(gap, std::abs(traj.final_state()[i] - ref[i]));
    }
    o.result["closed_form_gap"] = gap;
    o.passed = gap <= 100.0 * c.tol;
  }
  json pts = json::array();
  for (const auto& p : traj.points()) {
    pts.push_back({{"tau", report::complex_json(p.tau)},
                   {"state", report::triple_json(p.state)},
                   {"err_est", p.err_est}});
  }
  o.result["trajectory"] = pts;
  std::ostringstream csv;
  traj.write_csv(csv);
  o.raw_csv = csv.str();
  return o;
}

// ---------------------------------------------------------------- verify

Outcome sweep_outcome(const verify::ExactSweep& s) {
  Outcome o;
  o.passed = s.all_zero();
  o.result["samples"] = s.samples.size();
  o.result["failures"] = s.failures();
  o.result["max_abs_residual"] = s.worst();
  json bad = json::array();
  o.header = {"sample", "t1", "t2", "t3", "exact_zero", "max_abs"};
  for (std::size_t i = 0; i < s.samples.size(); ++i) {
    const auto& t = s.samples[i];
    const auto& r = s.outcomes[i];
    o.rows.push_back({std::to_string(i), report::rational_string(t[0]), report::rational_string(t[1]),
                      report::rational_string(t[2]), r.exact_zero ? "1" : "0", fmt(r.max_abs)});
    if (!r.exact_zero) {
      bad.push_back(report::triple_json(t));
    }
  }
  o.result["failing_samples"] = bad;
  return o;
}

Outcome exact_series_outcome(const std::vector<std::pair<std::string, PiGradedQSeries>>& parts) {
  Outcome o;
  o.header = {"residual", "nonzero_terms", "trunc_order"};
  std::size_t nonzero = 0;
  for (const auto& [name, s] : parts) {
    const auto n = s.terms().size();
    nonzero += n;
    o.result["residuals"][name] = s;
    o.rows.push_back({name, std::to_string(n), std::to_string(s.trunc_order())});
  }
  o.passed = nonzero == 0;
  o.result["summary"] = o.passed ? "all coefficients zero" : "nonzero residual coefficients";
  return o;
}

Outcome cmd_verify_ramanujan(const Config& c) {
  const auto r = ramanujan_series_residual(c.order);
  return exact_series_outcome({{"E2", r[0]}, {"E4", r[1]}, {"E6", r[2]}});
}

Outcome cmd_verify_chazy(const Config& c) {
  Outcome o = exact_series_outcome({{"chazy_E2", frobenius::chazy_e2_exact(c.order)}});
  const TauPoint tau(parse_complex(c.tau));
  const double num = std::abs(frobenius::chazy_residual(frobenius::e2_gamma_jet(tau)));
  o.result["numeric_residual"] = num;
  o.rows.push_back({"numeric_at_tau", fmt(num), ""});
  o.passed = o.passed && num <= c.tol;
  return o;
}

Outcome cmd_verify_gauss_manin(const Config& c) {
  return sweep_outcome(verify::gauss_manin_sweep(c.samples, c.seed));
}

Outcome cmd_verify_darboux(const Config& c) {
  return sweep_outcome(verify::darboux_sweep(c.samples, c.seed));
}

// ---------------------------------------------------------------- bianchi

void require_times(const Config& c) {
  if (!(c.t0 > 0.0) || !(c.t1 > 0.0)) {
    throw UsageError("--t0 and --t1 must be positive");
  }
  if (c.steps < 1) {
    throw UsageError("--steps must be at least 1");
  }
}

Outcome cmd_bianchi_flow(const Config& c) {
  require_times(c);
  const auto traj = bianchi::omega_theta_flow(bianchi::flat_family(c.t0, c.q0), c.t0, c.t1, c.tol);
  Outcome o;
  o.header = {"t", "omega1", "omega2", "omega3", "flat_family_gap", "F"};
  double worst = 0.0;
  json rows = json::array();
  for (int i = 0; i <= c.steps; ++i) {
    const double t = c.t0 + (c.t1 - c.t0) * i / c.steps;
    const auto w = traj.at(t);
    const auto ref = bianchi::flat_family(t, c.q0);
    double gap = 0.0;
    for (int k = 0; k < 3; ++k) {
      gap = std::max(gap, std::abs(w[k] - ref[k]));
    }
    worst = std::max(worst, gap);
    const double f = c.scale * (t + c.q0) * (t + c.q0) * w[0] * w[1] * w[2];
    o.rows.push_back({fmt(t), fmt(w[0]), fmt(w[1]), fmt(w[2]), fmt(gap), fmt(f)});
    rows.push_back({{"t", t}, {"omega", report::triple_json(w)}, {"gap", gap}, {"F", f}});
  }
  o.result["profile"] = rows;
  o.result["max_flat_family_gap"] = worst;
  o.result["steps"] = traj.nodes().size() - 1;
  o.passed = worst <= 1000.0 * c.tol;
  return o;
}

Outcome cmd_bianchi_flat_family(const Config& c) {
  require_times(c);
  Outcome o;
  o.header = {"t", "omega1", "omega2", "omega3", "residual", "F"};
  double worst = 0.0;
  json rows = json::array();
  for (int i = 0; i <= c.steps; ++i) {
    const double t = c.t0 + (c.t1 - c.t0) * i / c.steps;
    const auto w = bianchi::flat_family(t, c.q0);
    const double r = verify::omegasolution_residual(t, c.q0);
    const double f = bianchi::flat_conformal_factor(t, c.q0, c.scale);
    worst = std::max(worst, r);
    o.rows.push_back({fmt(t), fmt(w[0]), fmt(w[1]), fmt(w[2]), fmt(r), fmt(f)});
    rows.push_back({{"t", t}, {"omega", report::triple_json(w)}, {"residual", r}, {"F", f}});
  }
  o.result["profile"] = rows;
  o.result["max_residual"] = worst;
  o.passed = worst <= c.tol;
  return o;
}

Outcome cmd_bianchi_verify_constraint(const Config& c) {
  require_times(c);
  const bianchi::TodHitchinParams prm{parse_complex(c.p), parse_complex(c.q), c.lambda};
  Outcome o;
  o.header = {"t", "flat_constraint_re", "flat_constraint_im", "omega1_re", "omega1_im"};
  double worst = 0.0;
  json rows = json::array();
  for (int i = 0; i <= c.steps; ++i) {
    const double t = c.t0 + (c.t1 - c.t0) * i / c.steps;
    const auto w = bianchi::flat_family(t, c.q0);
    const cplx r = bianchi::constraint_residual({w[0], w[1], w[2]}, t);
    const cplx w1 = bianchi::tod_hitchin_omega1(prm, t);
    worst = std::max(worst, std::abs(r));
    o.rows.push_back({fmt(t), fmt(r.real()), fmt(r.imag()), fmt(w1.real()), fmt(w1.imag())});
    rows.push_back({{"t", t},
                    {"flat_constraint_residual", report::complex_json(r)},
                    {"omega1", report::complex_json(w1)}});
  }
  o.result["profile"] = rows;
  o.result["max_flat_constraint_residual"] = worst;
  o.result["omega2_omega3_resolved"] = bianchi::CandidateOmega23::resolved;
  o.passed = worst <= c.tol;
  return o;
}

// ---------------------------------------------------------------- frobenius

Outcome cmd_frobenius_wdvv(const Config& c) {
  const TauPoint tau(parse_complex(c.tau));
  const auto g = frobenius::e2_gamma_jet(tau);
  const auto jet = frobenius::chazy_potential_jet(c.x, g);
  const double w = frobenius::wdvv_residual_3d(frobenius::third_partials(jet), frobenius::example_metric());
  const double a = std::abs(frobenius::associativity_residual(jet));
  Outcome o;
  o.result["wdvv_residual"] = w;
  o.result["associativity_residual"] = a;
  o.header = {"quantity", "value"};
  o.rows = {{"wdvv_residual", fmt(w)}, {"associativity_residual", fmt(a)}};
  o.passed = w <= c.tol && a <= c.tol;
  return o;
}

Outcome cmd_frobenius_cubic(const Config& c) {
  const TauPoint tau(parse_complex(c.tau));
  const auto roots = frobenius::cubic_roots(frobenius::dh_cubic(frobenius::e2_gamma_jet(tau)));
  const auto ref = dh_theta_solution(tau);
  const double d = frobenius::root_set_distance(roots, ref);
  Outcome o;
  o.result["roots"] = report::triple_json(roots);
  o.result["dh_theta_solution"] = report::triple_json(ref);
  o.result["root_set_distance"] = d;
  o.header = {"quantity", "re", "im"};
  dh_state_rows(o, "root", roots);
  o.rows.push_back({"root_set_distance", fmt(d), "0"});
  o.passed = d <= c.tol;
  return o;
}

// ---------------------------------------------------------------- output

void write_csv(std::ostream& os, const Outcome& o) {
  if (!o.raw_csv.empty()) {
    os << o.raw_csv;
    return;
  }
  auto line = [&os](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      os << (i ? "," : "") << cells[i];
    }
    os << '\n';
  };
  line(o.header);
  for (const auto& r : o.rows) {
    line(r);
  }
}

struct Command {
  std::string name;
  double default_tol;
  std::function<Outcome(const Config&)> fn;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Darboux-Halphen toolkit: series, integration and identity checks", "halphen"};
  app.require_subcommand(1);
  Config cfg;

  std::vector<Command> commands;
  std::string selected;
  std::optional<double> tol_flag;

  auto add_common = [&](CLI::App* sub, bool with_tol) {
    sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.out_path, "write the report here instead of stdout");
    if (with_tol) {
      sub->add_option_function<double>("--tol", [&](double v) { tol_flag = v; }, "tolerance")
          ->check(CLI::PositiveNumber);
    }
  };
  auto leaf = [&](CLI::App* group, const std::string& name, const std::string& desc, double tol,
                  std::function<Outcome(const Config&)> fn, bool with_tol = true) {
    CLI::App* sub = group->add_subcommand(name, desc);
    add_common(sub, with_tol);
    const std::string full = group->get_name() + " " + name;
    commands.push_back({full, tol, std::move(fn)});
    sub->callback([&selected, full] { selected = full; });
    return sub;
  };
  auto order_opt = [&](CLI::App* s) {
    s->add_option("--order", cfg.order, "truncation order")->check(CLI::NonNegativeNumber);
  };

  CLI::App* dh = app.add_subcommand("dh", "Darboux-Halphen system")->require_subcommand(1);
  auto* dh_int = leaf(dh, "integrate", "integrate along a segment in the upper half-plane", 1e-10,
                      cmd_dh_integrate);
  dh_int->add_option("--tau", cfg.tau, "start point RE,IM");
  dh_int->add_option("--tau1", cfg.tau1, "end point RE,IM");
  dh_int->add_option("--initial", cfg.initial, "'theta' or t1re,t1im,t2re,t2im,t3re,t3im");
  leaf(dh, "theta", "closed-form theta solution", 1e-6, cmd_dh_theta)
      ->add_option("--tau", cfg.tau, "RE,IM");

  CLI::App* series = app.add_subcommand("series", "exact q-series")->require_subcommand(1);
  auto* se = leaf(series, "eisenstein", "E_k in q", 0.0, cmd_series_eisenstein, false);
  se->add_option("--k", cfg.k, "weight 2, 4 or 6");
  order_opt(se);
  auto* st = leaf(series, "theta", "theta_2, theta_3 or theta_4 in w = q^(1/8)", 0.0,
                  cmd_series_theta, false);
  st->add_option("--which", cfg.which, "2, 3 or 4");
  order_opt(st);

  CLI::App* ver = app.add_subcommand("verify", "identity checks")->require_subcommand(1);
  order_opt(leaf(ver, "ramanujan", "Ramanujan relations, exact", 0.0, cmd_verify_ramanujan, false));
  auto* vc = leaf(ver, "chazy", "Chazy equation for E2, exact and numeric", 1e-8, cmd_verify_chazy);
  order_opt(vc);
  vc->add_option("--tau", cfg.tau, "numeric check point RE,IM");
  for (auto* s : {leaf(ver, "gauss-manin", "R property at random rational points", 0.0,
                       cmd_verify_gauss_manin, false),
                  leaf(ver, "darboux", "orthogonality condition at random rational points", 0.0,
                       cmd_verify_darboux, false)}) {
    s->add_option("--samples", cfg.samples, "number of random triples");
    s->add_option("--seed", cfg.seed, "random seed");
  }

  CLI::App* bi = app.add_subcommand("bianchi", "self-dual Bianchi IX reductions")->require_subcommand(1);
  auto time_opts = [&](CLI::App* s) {
    s->add_option("--t0", cfg.t0, "first t");
    s->add_option("--t1", cfg.t1, "last t");
    s->add_option("--q0", cfg.q0, "shift of the flat family");
    s->add_option("--steps", cfg.steps, "profile intervals");
  };
  auto* bf = leaf(bi, "flow", "integrate the Omega system from the flat family", 1e-10, cmd_bianchi_flow);
  time_opts(bf);
  bf->add_option("--scale", cfg.scale, "constant C in the conformal factor");
  auto* bff = leaf(bi, "flat-family", "closed-form flat family profile", 1e-8, cmd_bianchi_flat_family);
  time_opts(bff);
  bff->add_option("--scale", cfg.scale, "constant C in the conformal factor");
  auto* bvc = leaf(bi, "verify-constraint", "constraint of the two-parameter family", 1e-10,
                   cmd_bianchi_verify_constraint);
  time_opts(bvc);
  bvc->add_option("--p", cfg.p, "characteristic p, RE[,IM]");
  bvc->add_option("--q", cfg.q, "characteristic q, RE[,IM]");
  bvc->add_option("--lambda", cfg.lambda, "cosmological constant");

  CLI::App* fr = app.add_subcommand("frobenius", "Frobenius manifold checks")->require_subcommand(1);
  auto* fw = leaf(fr, "wdvv", "WDVV for f = -x^4 gamma / 16 with gamma = (pi i / 3) E2", 1e-8,
                  cmd_frobenius_wdvv);
  fw->add_option("--tau", cfg.tau, "RE,IM");
  fw->add_option("--x", cfg.x, "x coordinate");
  auto* fc = leaf(fr, "chazy", "Chazy equation for E2, exact and numeric", 1e-8, cmd_verify_chazy);
  order_opt(fc);
  fc->add_option("--tau", cfg.tau, "numeric check point RE,IM");
  leaf(fr, "cubic", "roots of the cubic against the DH solution", 1e-8, cmd_frobenius_cubic)
      ->add_option("--tau", cfg.tau, "RE,IM");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitCode::ok : ExitCode::usage_error;
  }

  const auto it = std::find_if(commands.begin(), commands.end(),
                               [&](const Command& c) { return c.name == selected; });
  if (it == commands.end()) {
    err << "no command selected\n";
    return ExitCode::usage_error;
  }
  cfg.command = it->name;
  cfg.tol = tol_flag.value_or(it->default_tol);

  Outcome o;
  try {
    o = it->fn(cfg);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return ExitCode::usage_error;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return ExitCode::usage_error;
  } catch (const ode::IntegrationError& e) {
    err << "numeric failure at path parameter " << e.at() << ": " << e.what() << '\n';
    return ExitCode::numeric_failure;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << '\n';
    return ExitCode::numeric_failure;
  }

  std::ofstream file;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path);
    if (!file) {
      err << "cannot open " << cfg.out_path << '\n';
      return ExitCode::usage_error;
    }
  }
  std::ostream& dest = cfg.out_path.empty() ? out : file;
  if (cfg.format == "csv") {
    write_csv(dest, o);
  } else {
    dest << report::envelope(cfg.command, cfg.to_json(), cfg.tol, o.passed, o.result).dump(2) << '\n';
  }
  if (!o.passed) {
    err << cfg.command << ": residual above tolerance " << cfg.tol << '\n';
  }
  return o.passed ? ExitCode::ok : ExitCode::residual_over_tolerance;
}

}  // namespace halphen::cli
