#include "commands.hpp"

#include <functional>
#include <iostream>
#include <limits>

#include "fuzzbet/checks.hpp"
#include "report.hpp"
#include "workspace.hpp"

namespace fuzzbet::cli {

namespace {

int exit_for(errc code) {
  switch (code) {
    case errc::unknown_label:
      return 2;
    case errc::universe_mismatch:
      return 3;
    default:
      return 4;
  }
}

int run_with_report(const GlobalOpts& g, const std::string& command,
                    const std::function<void(Report&)>& body) {
  Report rep;
  rep.command = command;
  try {
    body(rep);
  } catch (const Error& e) {
    rep.error = e.what();
    rep.exit_status = exit_for(e.code());
    std::cerr << "error: " << e.what() << "\n";
  } catch (const nlohmann::json::exception& e) {
    rep.error = e.what();
    rep.exit_status = 4;
    std::cerr << "error: " << e.what() << "\n";
  }
  emit_report(std::cout, rep, g.format);
  return rep.exit_status;
}

Workspace load_workspace(const GlobalOpts& g, Report& rep) {
  if (g.workspace.empty()) {
    throw Error(errc::input, "this command needs --workspace <file-or-directory>");
  }
  auto ws = Workspace::load(g.workspace);
  for (const auto& w : ws.warnings()) rep.warnings.push_back(w);
  return ws;
}

// The weights of the universe an object was built on, unless overridden.
const WeightedMeasure& resolve_measure(const Workspace& ws, const std::string& override_name,
                                       const UniversePtr& universe) {
  if (!override_name.empty()) {
    const auto& m = ws.measure(override_name);
    if (!same_universe(m.universe(), universe)) {
      throw Error(errc::universe_mismatch,
                  "measure '" + override_name + "' lives on a different universe");
    }
    return m;
  }
  for (const auto& [name, m] : ws.universes()) {
    if (m.universe() == universe) return m;
  }
  throw Error(errc::input, "no measure available for the operands' universe");
}

struct ParsedMetric {
  enum class Kind { jaccard, dsigma, dr, metric_d, metric_dh, kernel } kind;
  double r = 2.0;
};

ParsedMetric parse_metric(const std::string& text) {
  if (text == "jaccard") return {ParsedMetric::Kind::jaccard};
  if (text == "dsigma") return {ParsedMetric::Kind::dsigma};
  if (text == "D") return {ParsedMetric::Kind::metric_d};
  if (text == "DH") return {ParsedMetric::Kind::metric_dh};
  if (text == "kernel") return {ParsedMetric::Kind::kernel};
  if (text.rfind("dr:", 0) == 0) {
    const auto body = text.substr(3);
    if (body == "inf") return {ParsedMetric::Kind::dr, std::numeric_limits<double>::infinity()};
    try {
      std::size_t used = 0;
      const double r = std::stod(body, &used);
      if (used != body.size()) throw std::invalid_argument(body);
      return {ParsedMetric::Kind::dr, r};
    } catch (const std::logic_error&) {
      throw Error(errc::input, "dist: cannot parse norm order '" + body + "'");
    }
  }
  throw Error(errc::input,
              "dist: unknown metric '" + text +
                  "' (expected jaccard, dsigma, dr:<r>, dr:inf, D, DH, or kernel)");
}

const char* degeneracy_warning =
    "the level measure cannot separate the operands: distance is 0 for distinct functions";

}  // namespace

int run_dist(const GlobalOpts& g, const DistOpts& o) {
  return run_with_report(g, "dist", [&](Report& rep) {
    rep.inputs = json{{"metric", o.metric}, {"lhs", o.lhs}, {"rhs", o.rhs}};
    const auto ws = load_workspace(g, rep);
    const auto metric = parse_metric(o.metric);
    if (!o.measure.empty()) rep.inputs["measure"] = o.measure;

    switch (metric.kind) {
      case ParsedMetric::Kind::jaccard: {
        const auto result = jaccard(ws.set(o.lhs), ws.set(o.rhs));
        rep.results = json{{"index", result.index}, {"distance", result.distance}};
        break;
      }
      case ParsedMetric::Kind::dsigma: {
        const auto& a = ws.set(o.lhs);
        const auto& b = ws.set(o.rhs);
        const auto& m = resolve_measure(ws, o.measure, a.universe());
        rep.results = json{{"distance", d_sigma(m, a, b)}};
        break;
      }
      case ParsedMetric::Kind::dr: {
        const auto& f = ws.membership(o.lhs);
        const auto& h = ws.membership(o.rhs);
        const auto& m = resolve_measure(ws, o.measure, f.universe());
        rep.inputs["r"] = std::isinf(metric.r) ? json("inf") : json(metric.r);
        rep.results = json{{"distance", d_r(m, f, h, metric.r)}};
        break;
      }
      case ParsedMetric::Kind::metric_d: {
        const auto& f = ws.membership(o.lhs);
        const auto& h = ws.membership(o.rhs);
        const auto& m = resolve_measure(ws, o.measure, f.universe());
        const auto eta = io::level_measure_from_spec(o.eta);
        rep.inputs["eta"] = o.eta;
        const auto result = metric_D(m, eta, f, h);
        rep.results = json{{"distance", result.value}};
        if (result.identity_warning) rep.warnings.emplace_back(degeneracy_warning);
        break;
      }
      case ParsedMetric::Kind::metric_dh: {
        const auto& f = ws.hmembership(o.lhs);
        const auto& h = ws.hmembership(o.rhs);
        const auto& m = resolve_measure(ws, o.measure, f.universe());
        const auto eta = io::level_measure_from_spec(o.eta);
        rep.inputs["eta"] = o.eta;
        const auto result = h_metric_D(m, eta, f, h);
        rep.results = json{{"distance", io::to_json_idempotent(result.value)}};
        if (result.identity_warning) rep.warnings.emplace_back(degeneracy_warning);
        break;
      }
      case ParsedMetric::Kind::kernel: {
        if (o.kernel.empty()) {
          throw Error(errc::input, "dist: --metric kernel needs --kernel <name>");
        }
        rep.inputs["kernel"] = o.kernel;
        const auto& k = ws.kernel(o.kernel);
        rep.results = json{{"distance", kernel_metric(k, o.lhs, o.rhs)}};
        break;
      }
    }
  });
}

int run_between(const GlobalOpts& g, const BetweenOpts& o) {
  return run_with_report(g, "between", [&](Report& rep) {
    rep.inputs = json{{"mode", o.mode}, {"lhs", o.a}, {"rhs", o.b}, {"candidate", o.c}};
    const auto ws = load_workspace(g, rep);
    if (!o.measure.empty()) rep.inputs["measure"] = o.measure;

    if (o.mode == "crisp") {
      const auto& a = ws.set(o.a);
      const auto& b = ws.set(o.b);
      const auto& c = ws.set(o.c);
      const bool between = is_between(a, b, c);
      rep.verdicts["between"] = between;
      if (o.witness) {
        const auto z = between_decomposition(a, b, c);
        rep.results["witness"] = z ? json(z->members()) : json(nullptr);
      }
      if (o.gap) {
        const auto& m = resolve_measure(ws, o.measure, a.universe());
        rep.results["triangle_gap"] = triangle_gap(m, a, b, c);
        rep.results["sqrt_triangle_gap"] = sqrt_triangle_gap(m, a, b, c);
      }
      return;
    }

    if (o.mode == "pointwise" || o.mode == "alpha") {
      const auto& f = ws.membership(o.a);
      const auto& h = ws.membership(o.b);
      const auto& c = ws.membership(o.c);
      const bool pointwise = is_pointwise_between(f, h, c);
      rep.verdicts["pointwise"] = pointwise;
      if (o.mode == "alpha") {
        const bool alpha = is_alpha_between(f, h, c);
        rep.verdicts["alpha"] = alpha;
        if (alpha != pointwise) {
          // The two notions provably coincide; disagreement means a defect.
          rep.counterexamples.push_back(json{{"f", io::to_json(f).at("values")},
                                             {"g", io::to_json(h).at("values")},
                                             {"c", io::to_json(c).at("values")}});
          rep.exit_status = 5;
        }
      }
      if (o.witness) {
        const auto z = witness_decomposition(f, h, c);
        rep.results["witness"] = z ? io::to_json(*z).at("values") : json(nullptr);
      }
      if (o.gap) {
        const auto& m = resolve_measure(ws, o.measure, f.universe());
        const auto eta = io::level_measure_from_spec(o.eta);
        rep.inputs["eta"] = o.eta;
        rep.results["metric_gap"] = metric_D_triangle_gap(m, eta, f, h, c);
      }
      return;
    }

    if (o.mode == "hyper" || o.mode == "h-alpha") {
      const auto& a = ws.hmembership(o.a);
      const auto& b = ws.hmembership(o.b);
      const auto& c = ws.hmembership(o.c);
      const bool between = h_is_between(a, b, c);
      rep.verdicts["between"] = between;
      if (o.mode == "h-alpha") {
        const bool alpha = h_is_a_between(a, b, c);
        rep.verdicts["alpha"] = alpha;
        if (alpha != between) {
          rep.counterexamples.push_back(
              json{{"A", io::to_json(a)}, {"B", io::to_json(b)}, {"C", io::to_json(c)}});
          rep.exit_status = 5;
        }
      }
      if (o.witness) {
        const auto z = h_witness_decomposition(a, b, c);
        rep.results["witness"] = z ? io::to_json(*z) : json(nullptr);
      }
      if (o.gap) {
        const auto& m = resolve_measure(ws, o.measure, a.universe());
        const auto eta = io::level_measure_from_spec(o.eta);
        rep.inputs["eta"] = o.eta;
        const auto gap = h_metric_D(m, eta, a, c).value + h_metric_D(m, eta, c, b).value -
                         h_metric_D(m, eta, a, b).value;
        rep.results["metric_gap"] = io::to_json_idempotent(gap);
      }
      return;
    }

    throw Error(errc::input, "between: unknown mode '" + o.mode +
                                 "' (expected crisp, pointwise, alpha, hyper, or h-alpha)");
  });
}

int run_cut(const GlobalOpts& g, const CutOpts& o) {
  return run_with_report(g, "cut", [&](Report& rep) {
    rep.inputs = json{{"name", o.name}};
    const auto ws = load_workspace(g, rep);
    if (ws.memberships().count(o.name)) {
      if (!o.alpha) throw Error(errc::input, "cut: membership functions need --alpha <level>");
      rep.inputs["alpha"] = *o.alpha;
      rep.results["members"] = strong_alpha_cut(ws.membership(o.name), *o.alpha).members();
      return;
    }
    if (ws.hmemberships().count(o.name)) {
      if (!o.alpha1 || !o.alpha2) {
        throw Error(errc::input, "cut: h-membership functions need --alpha1 and --alpha2");
      }
      rep.inputs["alpha1"] = *o.alpha1;
      rep.inputs["alpha2"] = *o.alpha2;
      const HLevel level(*o.alpha1, *o.alpha2);
      rep.results["members"] = h_alpha_cut(ws.hmembership(o.name), level).members();
      return;
    }
    ws.membership(o.name);  // raises the right unknown/mismatch error
  });
}

int run_show(const GlobalOpts& g, const ShowOpts& o) {
  return run_with_report(g, "show", [&](Report& rep) {
    const auto ws = load_workspace(g, rep);
    if (o.name.empty()) {
      auto names = [](const auto& m) {
        json out = json::array();
        for (const auto& [name, value] : m) out.push_back(name);
        return out;
      };
      rep.results = json{{"universes", names(ws.universes())}, {"measures", names(ws.measures())},
                         {"sets", names(ws.sets())},           {"memberships", names(ws.memberships())},
                         {"hmemberships", names(ws.hmemberships())}, {"kernels", names(ws.kernels())}};
      return;
    }
    rep.inputs["name"] = o.name;
    json matches = json::array();
    if (auto it = ws.universes().find(o.name); it != ws.universes().end()) {
      matches.push_back(json{{"kind", "universe"}, {"value", io::universe_to_json(it->second)}});
    }
    if (auto it = ws.measures().find(o.name); it != ws.measures().end()) {
      matches.push_back(json{{"kind", "measure"}, {"value", io::universe_to_json(it->second)}});
    }
    if (auto it = ws.sets().find(o.name); it != ws.sets().end()) {
      matches.push_back(json{{"kind", "set"}, {"value", io::to_json(it->second)}});
    }
    if (auto it = ws.memberships().find(o.name); it != ws.memberships().end()) {
      matches.push_back(json{{"kind", "membership"}, {"value", io::to_json(it->second)}});
    }
    if (auto it = ws.hmemberships().find(o.name); it != ws.hmemberships().end()) {
      matches.push_back(json{{"kind", "hmembership"}, {"value", io::to_json(it->second)}});
    }
    if (auto it = ws.kernels().find(o.name); it != ws.kernels().end()) {
      matches.push_back(json{{"kind", "kernel"}, {"value", io::to_json(it->second)}});
    }
    if (matches.empty()) {
      throw Error(errc::unknown_label, "unknown object '" + o.name + "'");
    }
    rep.results["matches"] = std::move(matches);
  });
}

int run_check(const GlobalOpts& g, const CheckCmdOpts& o) {
  return run_with_report(g, "check", [&](Report& rep) {
    rep.inputs = json{{"suite", o.suite},
                      {"seed", g.seed},
                      {"exhaustive", o.exhaustive},
                      {"grid", o.grid},
                      {"tol", g.tol}};
    if (o.trials) rep.inputs["trials"] = *o.trials;
    checks::CheckOptions opts;
    opts.seed = g.seed;
    opts.max_exhaustive = o.exhaustive;
    opts.grid_levels = o.grid;
    opts.trials = o.trials;
    opts.tol = g.tol;
    std::vector<std::string> suites;
    if (o.suite == "all") {
      suites = checks::suite_names();
    } else {
      suites.push_back(o.suite);
    }
    const auto results = checks::run_suites(suites, opts);
    bool all_passed = true;
    json out = json::array();
    for (const auto& suite : results) {
      json props = json::array();
      for (const auto& prop : suite.properties) {
        json p{{"name", prop.name}, {"passed", prop.passed}, {"cases", prop.cases}};
        if (!prop.passed) {
          p["counterexample"] = prop.counterexample;
          rep.counterexamples.push_back(json{{"suite", suite.suite},
                                             {"property", prop.name},
                                             {"counterexample", prop.counterexample}});
        }
        props.push_back(std::move(p));
      }
      out.push_back(json{{"suite", suite.suite}, {"passed", suite.passed}, {"properties", props}});
      all_passed = all_passed && suite.passed;
    }
    rep.results["suites"] = std::move(out);
    rep.verdicts["all_passed"] = all_passed;
    rep.exit_status = all_passed ? 0 : 1;
  });
}

}  // namespace fuzzbet::cli
