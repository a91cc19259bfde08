#include "molsens/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <random>
#include <sstream>

#include "molsens/classify.hpp"
#include "molsens/efficient_set.hpp"
#include "molsens/errors.hpp"
#include "molsens/problem_io.hpp"
#include "molsens/random_instance.hpp"
#include "molsens/sensitivity.hpp"
#include "molsens/svg.hpp"

namespace molsens {

namespace {

using nlohmann::json;

std::string deg(double radians) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3f", degrees(radians));
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s + "°";
}

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  std::string s(buf);
  return s == "-0" ? "0" : s;
}

std::string point(Vec2 p) { return "(" + num(p.x) + ", " + num(p.y) + ")"; }

std::string vertex_set(const std::vector<std::size_t>& ids) {
  std::string s = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? ", v" : "v") + std::to_string(ids[i]);
  return s + "}";
}

std::string open_interval(const AngularInterval& iv) {
  return std::string(iv.lo_open ? "]" : "[") + deg(iv.lo) + ", " + deg(iv.hi) + (iv.hi_open ? "[" : "]");
}

json vec_json(Vec2 v) { return json::array({v.x, v.y}); }

json interval_json(const AngularInterval& iv) {
  return {{"lo", iv.lo}, {"hi", iv.hi}, {"lo_open", iv.lo_open}, {"hi_open", iv.hi_open}};
}

json chain_json(const Polygon& polygon, const Chain& chain) {
  return {{"start", chain.start},
          {"count", chain.count},
          {"name", chain_name(chain)},
          {"vertices", chain_vertices(polygon, chain)}};
}

struct Loaded {
  ProblemFile file;
  Polygon polygon;
};

Loaded load(const std::string& path, Tolerance tol) {
  ProblemFile file = read_problem_file(path);
  Polygon polygon = enumerate_vertices(file.constraints, file.nonneg, tol);
  return {std::move(file), std::move(polygon)};
}

std::vector<double> parse_degree_list(const std::string& text) {
  std::vector<double> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  for (std::string token; std::getline(in, token, ',');) {
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    try {
      out.push_back(radians(parse_number(token)));
    } catch (const std::invalid_argument& e) {
      throw CLI::ValidationError("--angles", e.what());
    }
  }
  return out;
}

// Shared state for all subcommands.
struct Context {
  double epsilon = 1e-9;
  bool as_json = false;
  std::ostream* out = nullptr;

  Tolerance tol() const { return Tolerance{epsilon}; }
  void emit(const json& j) const { *out << j.dump(2) << '\n'; }
};

int cmd_vertices(const Context& ctx, const std::string& path) {
  const Loaded in = load(path, ctx.tol());
  const Polygon& P = in.polygon;
  if (ctx.as_json) {
    json vs = json::array();
    for (const Vec2& v : P.vertices()) vs.push_back(vec_json(v));
    ctx.emit({{"command", "vertices"}, {"count", P.size()}, {"vertices", vs}});
    return kExitOk;
  }
  std::ostream& out = *ctx.out;
  out << "polygon: " << P.size() << " vertices, counterclockwise\n";
  for (std::size_t j = 1; j <= P.size(); ++j) {
    out << "v" << j << " = " << point(P.vertex(j)) << "  exterior angle " << deg(exterior_angle(P, j)) << '\n';
  }
  return kExitOk;
}

int cmd_cone(const Context& ctx, const std::string& path) {
  const ProblemFile file = read_problem_file(path);
  const ObjectiveBundle bundle(file.gradients);
  const GradientCone cone = extreme_rays(bundle, ctx.tol());
  const std::vector<double> phis = branch_angles(bundle, cone);
  if (ctx.as_json) {
    json gs = json::array();
    for (std::size_t k = 1; k <= bundle.size(); ++k) {
      gs.push_back({{"k", k}, {"gradient", vec_json(bundle.gradient(k))}, {"r", norm(bundle.gradient(k))},
                    {"phi", phis[k - 1]}});
    }
    ctx.emit({{"command", "cone"},
              {"gradients", gs},
              {"k1", cone.k1},
              {"k2", cone.k2},
              {"phi1", cone.phi1},
              {"phi2", cone.phi2},
              {"width", cone.width()}});
    return kExitOk;
  }
  std::ostream& out = *ctx.out;
  for (std::size_t k = 1; k <= bundle.size(); ++k) {
    out << "c" << k << " = " << point(bundle.gradient(k)) << "  r = " << num(norm(bundle.gradient(k)))
        << "  phi = " << deg(phis[k - 1]) << '\n';
  }
  out << "k1 = " << cone.k1 << ", phi1 = " << deg(cone.phi1) << '\n';
  out << "k2 = " << cone.k2 << ", phi2 = " << deg(cone.phi2) << '\n';
  out << "width = " << deg(cone.width()) << '\n';
  return kExitOk;
}

int cmd_efficient(const Context& ctx, const std::string& path, const std::string& svg_path) {
  const Loaded in = load(path, ctx.tol());
  const ObjectiveBundle bundle(in.file.gradients);
  const EfficientSet eff = efficient_chain(in.polygon, bundle, ctx.tol());
  const std::vector<Segment> segments = boundary_curve(in.polygon, eff.chain);
  if (!svg_path.empty()) emit_svg(in.polygon, eff.cone, eff.chain, svg_path);

  if (ctx.as_json) {
    json segs = json::array();
    for (const Segment& s : segments) {
      segs.push_back({{"from", s.from}, {"to", s.to}, {"a", vec_json(s.a)}, {"b", vec_json(s.b)}});
    }
    ctx.emit({{"command", "efficient"},
              {"k1", eff.cone.k1},
              {"k2", eff.cone.k2},
              {"first_face", to_string(eff.first_face)},
              {"last_face", to_string(eff.last_face)},
              {"vs", eff.vs},
              {"chain", chain_json(in.polygon, eff.chain)},
              {"segments", segs}});
    return kExitOk;
  }
  std::ostream& out = *ctx.out;
  out << "extreme rays: k1 = " << eff.cone.k1 << ", k2 = " << eff.cone.k2 << '\n';
  out << "argmax c" << eff.cone.k1 << ": " << to_string(eff.first_face) << '\n';
  out << "argmax c" << eff.cone.k2 << ": " << to_string(eff.last_face) << '\n';
  out << "VS = " << vertex_set(eff.vs) << '\n';
  for (std::size_t j : eff.vs) out << "  v" << j << " = " << point(in.polygon.vertex(j)) << '\n';
  out << "chain: " << chain_name(eff.chain) << '\n';
  if (segments.empty()) {
    out << "segments: none, single vertex v" << eff.chain.start << '\n';
  } else {
    out << "segments:\n";
    for (const Segment& s : segments) {
      out << "  [v" << s.from << ", v" << s.to << "] " << point(s.a) << " -> " << point(s.b) << '\n';
    }
  }
  if (!svg_path.empty()) out << "svg: " << svg_path << '\n';
  return kExitOk;
}

int cmd_sensitivity(const Context& ctx, const std::string& path) {
  const Loaded in = load(path, ctx.tol());
  const ObjectiveBundle bundle(in.file.gradients);
  const SensitivityClass cls = molp_sensitivity(in.polygon, bundle, ctx.tol());
  const AngularInterval single = single_gradient_window(cls);
  const std::size_t end = chain_vertices(in.polygon, cls.chain).back();

  if (ctx.as_json) {
    ctx.emit({{"command", "sensitivity"},
              {"k1", cls.k1},
              {"k2", cls.k2},
              {"g1", vec_json(cls.g1)},
              {"g2", vec_json(cls.g2)},
              {"phi1", cls.phi1},
              {"phi2", cls.phi2},
              {"theta1", cls.theta1},
              {"theta2", cls.theta2},
              {"tolerance", interval_json(cls.tolerance)},
              {"single_gradient_window", interval_json(single)},
              {"chain", chain_json(in.polygon, cls.chain)}});
    return kExitOk;
  }
  std::ostream& out = *ctx.out;
  out << "generators: g1 = c" << cls.k1 << " = " << point(cls.g1) << ", g2 = c" << cls.k2 << " = "
      << point(cls.g2) << '\n';
  out << "phi1 = " << deg(cls.phi1) << ", phi2 = " << deg(cls.phi2) << '\n';
  out << "theta1(" << cls.chain.start << ") = " << deg(cls.theta1) << ", theta2(" << end << ") = "
      << deg(cls.theta2) << '\n';
  out << "Î = " << open_interval(cls.tolerance) << '\n';
  out << "single extra gradient window: " << open_interval(single) << '\n';
  out << "chain: " << chain_name(cls.chain) << " = " << vertex_set(chain_vertices(in.polygon, cls.chain)) << '\n';
  out << "members, any K >= 2:\n"
      << "  (<g1,.>, <g2,.>, <|g1| u(w_1),.>, ..., <|g1| u(w_{K-2}),.>)\n"
      << "  every w_i in Î, and g1, g2, w_1, ... spanning less than 180°\n";
  return kExitOk;
}

int cmd_member(const Context& ctx, const std::string& path, std::size_t K, const std::string& angles) {
  const Loaded in = load(path, ctx.tol());
  const SensitivityClass cls = molp_sensitivity(in.polygon, ObjectiveBundle(in.file.gradients), ctx.tol());
  const std::vector<double> thetas = parse_degree_list(angles);
  const ObjectiveBundle member = sample_member(cls, K, thetas, ctx.tol());
  if (ctx.as_json) {
    json gs = json::array();
    for (const Vec2& g : member.gradients()) gs.push_back(vec_json(g));
    ctx.emit({{"command", "member"}, {"k", K}, {"gradients", gs}});
    return kExitOk;
  }
  for (const Vec2& g : member.gradients()) *ctx.out << format_number(g.x) << ' ' << format_number(g.y) << '\n';
  return kExitOk;
}

int cmd_equiv(const Context& ctx, const std::string& a, const std::string& b) {
  const Loaded first = load(a, ctx.tol());
  const ProblemFile second = read_problem_file(b);
  const ObjectiveBundle g(first.file.gradients);
  const ObjectiveBundle h(second.gradients);
  const Chain cg = efficient_chain(first.polygon, g, ctx.tol()).chain;
  const Chain ch = efficient_chain(first.polygon, h, ctx.tol()).chain;
  const bool same = is_equivalent(first.polygon, g, h, ctx.tol());
  if (ctx.as_json) {
    ctx.emit({{"command", "equiv"},
              {"equivalent", same},
              {"chain_a", chain_json(first.polygon, cg)},
              {"chain_b", chain_json(first.polygon, ch)}});
    return kExitOk;
  }
  *ctx.out << "chain A: " << chain_name(cg) << '\n'
           << "chain B: " << chain_name(ch) << '\n'
           << "equivalent: " << (same ? "true" : "false") << '\n';
  return kExitOk;
}

int cmd_classify(const Context& ctx, const std::string& path) {
  const Loaded in = load(path, ctx.tol());
  const ClassLabel label = classify(in.polygon, ObjectiveBundle(in.file.gradients), ctx.tol());
  if (ctx.as_json) {
    ctx.emit({{"command", "classify"},
              {"j0", label.j0},
              {"j", label.j},
              {"chain", chain_json(in.polygon, label.chain())}});
    return kExitOk;
  }
  *ctx.out << "class: (" << label.j0 << ", " << label.j << ")\n"
           << "chain: " << chain_name(label.chain()) << " = "
           << vertex_set(chain_vertices(in.polygon, label.chain())) << '\n';
  return kExitOk;
}

int cmd_classes(const Context& ctx, const std::string& path) {
  const Loaded in = load(path, ctx.tol());
  const std::vector<ClassLabel> labels = enumerate_ns(in.polygon);
  std::size_t realizable = 0;
  json rows = json::array();
  std::ostringstream text;
  text << "|V(S)| = " << in.polygon.size() << ", labels = " << labels.size() << '\n';
  for (const ClassLabel& label : labels) {
    const Realization r = realize_label(in.polygon, label, ctx.tol());
    json row = {{"j0", label.j0}, {"j", label.j}, {"required_turning", r.required_turning},
                {"realizable", r.witness.has_value()}};
    text << "(" << label.j0 << ", " << label.j << ")  " << chain_name(label.chain()) << "  turning "
         << deg(r.required_turning) << "  ";
    if (r.witness) {
      ++realizable;
      const bool check = classify(in.polygon, *r.witness, ctx.tol()) == label;
      row["witness"] = {vec_json(r.witness->gradient(1)), vec_json(r.witness->gradient(2))};
      row["witness_checked"] = check;
      text << "realizable  witness " << point(r.witness->gradient(1)) << " " << point(r.witness->gradient(2))
           << (check ? "" : "  CHECK FAILED") << '\n';
    } else {
      row["gap"] = r.required_turning - kPi;
      text << "unrealizable  gap " << deg(r.required_turning - kPi) << '\n';
    }
    rows.push_back(row);
  }
  text << "summary: " << realizable << " realizable, " << labels.size() - realizable << " unrealizable\n";
  if (ctx.as_json) {
    ctx.emit({{"command", "classes"},
              {"vertices", in.polygon.size()},
              {"labels", rows},
              {"realizable", realizable},
              {"unrealizable", labels.size() - realizable}});
  } else {
    *ctx.out << text.str();
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string path;
  std::size_t grid = 500;
  std::size_t samples = 100;
  std::size_t trials = 0;
  std::uint64_t seed = 1;
};

int cmd_verify(const Context& ctx, const VerifyArgs& args) {
  if (args.path.empty() && args.trials == 0) {
    throw CLI::ValidationError("verify", "give a problem file, --trials N, or both");
  }
  bool all_ok = true;
  json report = {{"command", "verify"}};
  std::ostringstream text;

  if (!args.path.empty()) {
    const Loaded in = load(args.path, ctx.tol());
    const VerifyOutcome v =
        verify_instance(in.polygon, ObjectiveBundle(in.file.gradients), args.grid, args.samples, ctx.tol());
    all_ok = all_ok && v.ok();
    report["file"] = {{"path", args.path}, {"pipeline_vs", v.pipeline_vs}, {"oracle_vs", v.oracle_vs},
                      {"problems", v.problems}, {"ok", v.ok()}};
    text << args.path << ": pipeline VS = " << vertex_set(v.pipeline_vs)
         << ", oracle VS = " << vertex_set(v.oracle_vs) << (v.ok() ? ", ok" : ", MISMATCH") << '\n';
    for (const std::string& p : v.problems) text << "  " << p << '\n';
  }

  if (args.trials > 0) {
    // Instance i draws from its own seed, so results do not depend on scheduling.
    std::vector<std::string> failures(args.trials);
    const auto trials = static_cast<long long>(args.trials);
    const Tolerance tol = ctx.tol();
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < trials; ++i) {
      std::seed_seq seq{args.seed, static_cast<std::uint64_t>(i)};
      std::mt19937_64 rng(seq);
      try {
        const RandomInstance inst = random_instance(rng);
        const VerifyOutcome v =
            verify_instance(inst.polygon, inst.bundle, args.grid, args.samples, tol, oracle::Execution::Serial);
        std::string joined;
        for (const std::string& p : v.problems) joined += (joined.empty() ? "" : "; ") + p;
        failures[static_cast<std::size_t>(i)] = joined;
      } catch (const std::exception& e) {
        failures[static_cast<std::size_t>(i)] = std::string("exception: ") + e.what();
      }
    }
    json bad = json::array();
    for (std::size_t i = 0; i < failures.size(); ++i) {
      if (failures[i].empty()) continue;
      bad.push_back({{"trial", i}, {"problem", failures[i]}});
      text << "trial " << i << ": " << failures[i] << '\n';
    }
    all_ok = all_ok && bad.empty();
    report["trials"] = {{"count", args.trials}, {"seed", args.seed}, {"grid", args.grid}, {"failures", bad}};
    text << "trials: " << args.trials << ", seed " << args.seed << ", mismatches: " << bad.size() << '\n';
  }

  report["ok"] = all_ok;
  if (ctx.as_json) {
    ctx.emit(report);
  } else {
    *ctx.out << text.str() << (all_ok ? "verify: ok" : "verify: MISMATCH") << '\n';
  }
  return all_ok ? kExitOk : kExitMismatch;
}

int cmd_plot(const Context& ctx, const std::string& path, const std::string& svg_path) {
  const Loaded in = load(path, ctx.tol());
  const EfficientSet eff = efficient_chain(in.polygon, ObjectiveBundle(in.file.gradients), ctx.tol());
  emit_svg(in.polygon, eff.cone, eff.chain, svg_path);
  if (ctx.as_json) {
    ctx.emit({{"command", "plot"}, {"out", svg_path}, {"chain", chain_json(in.polygon, eff.chain)}});
  } else {
    *ctx.out << "wrote " << svg_path << " (" << chain_name(eff.chain) << ")\n";
  }
  return kExitOk;
}

}  // namespace

VerifyOutcome verify_instance(const Polygon& polygon, const ObjectiveBundle& bundle, std::size_t grid,
                              std::size_t samples, Tolerance tol, oracle::Execution mode) {
  VerifyOutcome v;
  const EfficientSet eff = efficient_chain(polygon, bundle, tol);
  v.pipeline_vs = eff.vs;
  std::sort(v.pipeline_vs.begin(), v.pipeline_vs.end());
  v.oracle_vs = oracle::face_vertices(oracle::bruteforce_efficient(polygon, bundle, grid, tol, mode));
  if (v.pipeline_vs != v.oracle_vs) {
    v.problems.push_back("vertex sets differ: pipeline " + vertex_set(v.pipeline_vs) + ", oracle " +
                         vertex_set(v.oracle_vs));
  }

  const Chain reduced = efficient_chain(polygon, reduce_to_tolp(bundle, tol), tol).chain;
  if (!(reduced == eff.chain)) {
    v.problems.push_back("two-objective reduction changes the chain to " + chain_name(reduced));
  }

  // The chain end facing an edge-normal generator is only weakly efficient.
  std::vector<std::size_t> exempt_vertices;
  std::vector<Face> exempt_edges;
  if (!eff.first_face.is_vertex()) {
    exempt_vertices.push_back(eff.first_face.first);
    exempt_edges.push_back(eff.first_face);
  }
  if (!eff.last_face.is_vertex()) {
    exempt_vertices.push_back(eff.last_face.second);
    exempt_edges.push_back(eff.last_face);
  }
  auto exempt_vertex = [&](std::size_t j) {
    return std::find(exempt_vertices.begin(), exempt_vertices.end(), j) != exempt_vertices.end();
  };

  for (std::size_t i = 0; i < eff.vs.size(); ++i) {
    const std::size_t j = eff.vs[i];
    if (!exempt_vertex(j) && oracle::is_dominated(polygon, bundle, polygon.vertex(j), samples, tol)) {
      v.problems.push_back("efficient vertex v" + std::to_string(j) + " is dominated");
    }
    if (i + 1 == eff.vs.size()) break;
    const Face edge = Face::edge(j, eff.vs[i + 1]);
    if (std::find(exempt_edges.begin(), exempt_edges.end(), edge) != exempt_edges.end()) continue;
    const Vec2 mid = 0.5 * (polygon.vertex(j) + polygon.vertex(eff.vs[i + 1]));
    if (oracle::is_dominated(polygon, bundle, mid, samples, tol)) {
      v.problems.push_back("midpoint of " + to_string(edge) + " is dominated");
    }
  }
  auto in_chain = [&](std::size_t j) { return std::find(eff.vs.begin(), eff.vs.end(), j) != eff.vs.end(); };
  for (std::size_t j = 1; j <= polygon.size(); ++j) {
    const std::size_t next = polygon.wrap(static_cast<long long>(j) + 1);
    const bool chain_edge = eff.vs.size() > 1 && in_chain(j) && in_chain(next) && j != eff.vs.back();
    if (!chain_edge) {
      const Vec2 mid = 0.5 * (polygon.vertex(j) + polygon.vertex(next));
      if (!oracle::is_dominated(polygon, bundle, mid, samples, tol)) {
        v.problems.push_back("midpoint of non-chain edge " + to_string(Face::edge(j, next)) + " is not dominated");
      }
    }
    if (in_chain(j)) continue;
    if (!oracle::is_dominated(polygon, bundle, polygon.vertex(j), samples, tol)) {
      v.problems.push_back("vertex v" + std::to_string(j) + " is outside the chain but not dominated");
    }
  }
  return v;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Efficient sets and gradient sensitivity of two-variable multiobjective linear programs",
               "molsens"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Context ctx;
  ctx.out = &out;
  app.add_option("--epsilon", ctx.epsilon, "Geometric tolerance")->check(CLI::PositiveNumber);
  app.add_flag("--json", ctx.as_json, "Structured output, angles in radians");

  std::string file;
  std::string file_b;
  std::string svg_path;
  std::size_t K = 2;
  std::string angles;
  VerifyArgs verify;

  auto* vertices = app.add_subcommand("vertices", "Vertices of the feasible region");
  vertices->add_option("file", file, "Problem file")->required();
  auto* cone = app.add_subcommand("cone", "Polar forms of the gradients and the extreme rays");
  cone->add_option("file", file, "Problem file")->required();
  auto* efficient = app.add_subcommand("efficient", "Efficient extreme points and boundary chain");
  efficient->add_option("file", file, "Problem file")->required();
  efficient->add_option("--svg", svg_path, "Also write an SVG sketch");
  auto* sensitivity = app.add_subcommand("sensitivity", "Tolerance interval and class of equivalent bundles");
  sensitivity->add_option("file", file, "Problem file")->required();
  auto* member = app.add_subcommand("member", "Sample a bundle from the sensitivity class");
  member->add_option("file", file, "Problem file")->required();
  member->add_option("--k", K, "Number of objectives")->required()->check(CLI::Range(2, 1 << 20));
  member->add_option("--angles", angles, "Comma-separated extra gradient angles, degrees");
  auto* equiv = app.add_subcommand("equiv", "Do two bundles share the efficient chain on the first polygon");
  equiv->add_option("file_a", file, "Problem file giving the polygon and first bundle")->required();
  equiv->add_option("file_b", file_b, "Problem file giving the second bundle")->required();
  auto* classify_cmd = app.add_subcommand("classify", "Class label (j0, j) of the bundle");
  classify_cmd->add_option("file", file, "Problem file")->required();
  auto* classes = app.add_subcommand("classes", "All n^2 labels with realizability");
  classes->add_option("file", file, "Problem file")->required();
  auto* verify_cmd = app.add_subcommand("verify", "Compare the pipeline with the brute-force oracle");
  verify_cmd->add_option("file", verify.path, "Problem file");
  verify_cmd->add_option("--grid", verify.grid, "Weight grid resolution")->check(CLI::Range(2, 100000));
  verify_cmd->add_option("--samples", verify.samples, "Dominance samples per edge");
  verify_cmd->add_option("--trials", verify.trials, "Random instances to check");
  verify_cmd->add_option("--seed", verify.seed, "Seed for --trials");
  auto* plot = app.add_subcommand("plot", "Write an SVG sketch");
  plot->add_option("file", file, "Problem file")->required();
  plot->add_option("--out", svg_path, "Output path")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (vertices->parsed()) return cmd_vertices(ctx, file);
    if (cone->parsed()) return cmd_cone(ctx, file);
    if (efficient->parsed()) return cmd_efficient(ctx, file, svg_path);
    if (sensitivity->parsed()) return cmd_sensitivity(ctx, file);
    if (member->parsed()) return cmd_member(ctx, file, K, angles);
    if (equiv->parsed()) return cmd_equiv(ctx, file, file_b);
    if (classify_cmd->parsed()) return cmd_classify(ctx, file);
    if (classes->parsed()) return cmd_classes(ctx, file);
    if (verify_cmd->parsed()) return cmd_verify(ctx, verify);
    if (plot->parsed()) return cmd_plot(ctx, file, svg_path);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << '\n';
    return kExitGeometry;
  }
}

}  // namespace molsens
