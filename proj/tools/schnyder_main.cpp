// Copyright 2026 The schnyder-greedy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: generation, realizers, drawings, validation and
// routing experiments. Exit codes: 0 success, 1 check or delivery failure,
// 2 usage or input error.

#include <cctype>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "sgr/drawing.hpp"
#include "sgr/generate.hpp"
#include "sgr/geometry_checks.hpp"
#include "sgr/io.hpp"
#include "sgr/pipeline.hpp"
#include "sgr/realizer.hpp"
#include "sgr/reports.hpp"
#include "sgr/routing.hpp"
#include "sgr/svg.hpp"
#include "sgr/vrac.hpp"

namespace fs = std::filesystem;
using namespace sgr;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheck = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string subcommand;
  std::string input;
  std::string output;
  std::optional<std::size_t> n;
  std::uint64_t seed = 0;
  std::string seeds;
  std::optional<std::size_t> flips;
  std::string strategy = "sector";
  std::size_t max_hops = 0;
  std::string format = "text";
  std::string from;
  std::string to;
  std::string svg;
  std::string bary;
  std::string sat;
  std::string report;
  std::string cex_dir;
  double scale = 600.0;
  bool no_tree_colors = false;
  std::string inject_fault;
  // Not echoed: results never depend on it.
  unsigned threads = 0;

  std::size_t flips_for(std::size_t size) const { return flips.value_or(10 * size); }
  bool json() const { return format == "json"; }

  Json echo() const {
    Json j{{"subcommand", subcommand},
           {"input", input},
           {"output", output},
           {"n", n ? Json(*n) : Json(nullptr)},
           {"seed", seed},
           {"seeds", seeds},
           {"flips", flips ? Json(*flips) : (n ? Json(10 * *n) : Json(nullptr))},
           {"strategy", strategy},
           {"max_hops", max_hops},
           {"format", format},
           {"svg", {{"path", svg}, {"scale", scale}, {"tree_colors", !no_tree_colors}}}};
    if (!from.empty()) j["from"] = from;
    if (!to.empty()) j["to"] = to;
    if (!inject_fault.empty()) j["inject_fault"] = inject_fault;
    return j;
  }
};

std::uint64_t parse_u64(const std::string& s, const char* what) {
  std::uint64_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw UsageError(fmt::format("bad {} '{}'", what, s));
  return v;
}

// "a..b" (inclusive) or a single seed.
std::vector<std::uint64_t> parse_seed_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) return {parse_u64(text, "seed")};
  const std::uint64_t lo = parse_u64(text.substr(0, dots), "seed");
  const std::uint64_t hi = parse_u64(text.substr(dots + 2), "seed");
  if (hi < lo) throw UsageError(fmt::format("empty seed range '{}'", text));
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = lo; s <= hi; ++s) out.push_back(s);
  return out;
}

VertexId parse_vertex(const std::string& s, std::size_t n) {
  if (s == "A1" || s == "a1") return kA1;
  if (s == "A2" || s == "a2") return kA2;
  if (s == "A3" || s == "a3") return kA3;
  const std::uint64_t v = parse_u64(s, "vertex id");
  if (v >= n) throw UsageError(fmt::format("vertex {} out of range for n = {}", v, n));
  return static_cast<VertexId>(v);
}

Strategy strategy_of(const RunConfig& cfg) {
  const auto s = parse_strategy(cfg.strategy);
  if (!s) throw UsageError(fmt::format("unknown strategy '{}'", cfg.strategy));
  return *s;
}

struct Loaded {
  std::string descriptor;
  Triangulation t;
};

Loaded load(const RunConfig& cfg) {
  if (!cfg.input.empty()) return {fs::path(cfg.input).filename().string(), read_tri(cfg.input)};
  if (!cfg.n) throw UsageError("give an input .tri file or -n to generate one");
  if (*cfg.n < 4) throw UsageError(fmt::format("n must be at least 4, got {}", *cfg.n));
  const std::size_t flips = cfg.flips_for(*cfg.n);
  return {instance_descriptor(*cfg.n, flips, cfg.seed), generate_instance(*cfg.n, flips, cfg.seed)};
}

void emit(const RunConfig& cfg, const Json& body, const std::string& text) {
  if (cfg.json()) {
    std::cout << body.dump(2) << '\n';
  } else {
    std::cout << text;
  }
  if (!cfg.report.empty()) write_file_atomic(cfg.report, body.dump(2) + "\n");
}

Json with_config(const RunConfig& cfg, Json body) {
  body["config"] = cfg.echo();
  return body;
}

std::string sanitize(std::string s) {
  for (char& c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') c = '_';
  return s;
}

fs::path cex_path(const RunConfig& cfg, const std::string& stem) {
  const fs::path dir = cfg.cex_dir.empty() ? fs::path("counterexamples") : fs::path(cfg.cex_dir);
  fs::create_directories(dir);
  return dir / (sanitize(stem) + ".json");
}

void write_route_counterexamples(const RunConfig& cfg, const std::string& descriptor, const Triangulation& t,
                                 const Drawing& d, const SaturatedGraph* sg, Strategy strategy,
                                 const DeliveryReport& report) {
  for (const RouteTrace& tr : report.failures) {
    Json cex = counterexample_json(descriptor, t, d, sg, strategy, tr);
    cex["config"] = cfg.echo();
    const auto path = cex_path(cfg, fmt::format("{}_{}_{}_{}", descriptor, to_string(strategy), tr.source,
                                                tr.destination));
    write_file_atomic(path, cex.dump(2) + "\n");
  }
}

// Test hook: "swap-coords:a,b" exchanges two coordinate rows;
// "shift:v" moves vertex v one unit from its first to its second coordinate.
void apply_fault(const std::string& spec, Drawing& d) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError(fmt::format("bad fault '{}'", spec));
  const std::string kind = spec.substr(0, colon);
  const std::string args = spec.substr(colon + 1);
  if (kind == "swap-coords") {
    const auto comma = args.find(',');
    if (comma == std::string::npos) throw UsageError("swap-coords needs two vertices");
    const auto a = parse_vertex(args.substr(0, comma), d.n());
    const auto b = parse_vertex(args.substr(comma + 1), d.n());
    std::swap(d.coords[a], d.coords[b]);
  } else if (kind == "shift") {
    const auto v = parse_vertex(args, d.n());
    d.coords[v][0] -= 1;
    d.coords[v][1] += 1;
  } else {
    throw UsageError(fmt::format("unknown fault '{}'", kind));
  }
}

int cmd_gen(const RunConfig& cfg) {
  if (!cfg.n) throw UsageError("gen needs -n");
  if (*cfg.n < 4) throw UsageError(fmt::format("n must be at least 4, got {}", *cfg.n));
  const std::size_t flips = cfg.flips_for(*cfg.n);
  const Triangulation t = generate_instance(*cfg.n, flips, cfg.seed);
  const ValidationReport check = validate_triangulation(t);
  if (!check.ok()) throw std::logic_error("generator produced an invalid triangulation");
  const std::string descriptor = instance_descriptor(*cfg.n, flips, cfg.seed);
  Json body{{"instance", descriptor}, {"n", t.n()}, {"edges", t.edge_count()}, {"faces", t.face_count()}};
  if (cfg.output.empty()) {
    std::cout << format_tri(t);
    std::cerr << fmt::format("n {} edges {} faces {}\n", t.n(), t.edge_count(), t.face_count());
    return kExitOk;
  }
  write_tri(t, cfg.output);
  emit(cfg, with_config(cfg, body),
       fmt::format("{}\nn {} edges {} faces {}\nwrote {}\n", descriptor, t.n(), t.edge_count(), t.face_count(),
                   cfg.output));
  return kExitOk;
}

int cmd_realize(const RunConfig& cfg) {
  const Loaded in = load(cfg);
  const Realizer r = compute_realizer(in.t);
  const ValidationReport check = validate_realizer(in.t, r);
  Json body{{"instance", in.descriptor}, {"n", in.t.n()}, {"realizer", to_json(r)}, {"validation", to_json(check)}};
  body = with_config(cfg, std::move(body));
  std::string text = fmt::format("{}\n# v parent_T1 parent_T2 parent_T3\n", in.descriptor);
  for (std::size_t v = 3; v < in.t.n(); ++v)
    text += fmt::format("{} {} {} {}\n", v, r.parent[v][0], r.parent[v][1], r.parent[v][2]);
  text += check.ok() ? "realizer valid\n" : fmt::format("realizer INVALID: {}\n", check.issues.front().message);
  if (!cfg.output.empty()) write_file_atomic(cfg.output, body.dump(2) + "\n");
  emit(cfg, body, text);
  return check.ok() ? kExitOk : kExitCheck;
}

int cmd_draw(const RunConfig& cfg) {
  const Loaded in = load(cfg);
  const Realizer r = compute_realizer(in.t);
  const Drawing d = compute_drawing(in.t, r);
  const ValidationReport check = validate_drawing(d);
  SvgOptions opts;
  opts.scale = cfg.scale;
  opts.tree_colors = !cfg.no_tree_colors;
  const std::string svg_path = !cfg.svg.empty() ? cfg.svg : cfg.output;
  if (!cfg.bary.empty()) write_file_atomic(cfg.bary, format_bary(d));
  if (!cfg.sat.empty()) write_file_atomic(cfg.sat, format_sat(extract_saturated(in.t, d)));
  const std::string svg = render_svg(in.t, d, &r, opts);
  if (svg_path.empty() && cfg.bary.empty() && cfg.sat.empty()) {
    std::cout << svg;
    return check.ok() ? kExitOk : kExitCheck;
  }
  if (!svg_path.empty()) write_file_atomic(svg_path, svg);
  Json body{{"instance", in.descriptor}, {"n", in.t.n()}, {"denom", d.denom}, {"validation", to_json(check)}};
  emit(cfg, with_config(cfg, std::move(body)),
       fmt::format("{}\nn {} denom {} drawing {}\n", in.descriptor, in.t.n(), d.denom, check.ok() ? "valid" : "INVALID"));
  return check.ok() ? kExitOk : kExitCheck;
}

struct CheckResult {
  std::string name;
  bool ok = true;
  bool skipped = false;
  Json detail;
};

int cmd_verify(const RunConfig& cfg) {
  const Loaded in = load(cfg);
  const Triangulation& t = in.t;
  std::vector<CheckResult> checks;
  auto record = [&](std::string name, const ValidationReport& rep) {
    checks.push_back({std::move(name), rep.ok(), false, to_json(rep)});
    return rep.ok();
  };

  record("triangulation", validate_triangulation(t));
  const Realizer r = compute_realizer(t);
  record("realizer", validate_realizer(t, r));
  Drawing d = compute_drawing(t, r);
  if (!cfg.inject_fault.empty()) apply_fault(cfg.inject_fault, d);
  record("drawing", validate_drawing(d));
  record("three_wedge", validate_three_wedge(t, r, d));
  record("enclosing_triangle", validate_enclosing_triangle(t, r, d));
  record("planarity", validate_planarity(t, d));

  std::optional<SaturatedGraph> sg;
  try {
    sg = extract_saturated(t, d);
    checks.push_back({"saturated_extraction", true, false,
                      {{"boundary_hits", sg->boundary_hits.size()}}});
  } catch (const SaturationError& e) {
    Json problems = Json::array();
    for (const SaturationProblem& p : e.problems()) {
      problems.push_back({{"kind", p.kind == SaturationProblem::Kind::kEmptySector ? "EmptySector" : "NoUniqueMinimum"},
                          {"u", p.u},
                          {"sector", 2 * p.k - 1},
                          {"candidates", p.candidates}});
    }
    checks.push_back({"saturated_extraction", false, false, {{"problems", std::move(problems)}}});
  }

  std::optional<DeliveryReport> delivery;
  if (sg) {
    record("saturated_check", check_saturated(t, *sg));
    const SaturationDiff diff = saturated_equals_realizer(*sg, r);
    Json mismatches = Json::array();
    for (const SaturationMismatch& m : diff.mismatches)
      mismatches.push_back({{"u", m.u}, {"k", m.k}, {"saturated", m.saturated}, {"parent", m.parent}});
    checks.push_back({"saturated_equals_realizer", diff.equal, false, {{"mismatches", std::move(mismatches)}}});
    delivery = verify_all_pairs(RoutingGraph{t, d, &*sg}, Strategy::kSectorGreedy, in.descriptor, cfg.threads);
    const bool routed = delivery->failed == 0 && delivery->non_simple_delivered == 0;
    checks.push_back({"sector_routing", routed, false, to_json(*delivery)});
  } else {
    checks.push_back({"saturated_check", false, true, Json::object()});
    checks.push_back({"saturated_equals_realizer", false, true, Json::object()});
    checks.push_back({"sector_routing", false, true, Json::object()});
  }

  bool all_ok = true;
  Json check_json = Json::array();
  std::string text = fmt::format("{} (n = {})\n", in.descriptor, t.n());
  for (const CheckResult& c : checks) {
    all_ok &= c.ok;
    check_json.push_back({{"name", c.name}, {"ok", c.ok}, {"skipped", c.skipped}, {"detail", c.detail}});
    std::string why;
    if (c.skipped) {
      why = " (skipped)";
    } else if (!c.ok && c.detail.contains("issues") && !c.detail["issues"].empty()) {
      why = ": " + c.detail["issues"][0]["message"].get<std::string>();
    }
    text += fmt::format("{} {}{}\n", c.ok ? "PASS" : "FAIL", c.name, why);
  }
  Json body{{"instance", in.descriptor}, {"n", t.n()}, {"ok", all_ok}, {"checks", std::move(check_json)}};
  body = with_config(cfg, std::move(body));

  if (!all_ok) {
    Json cex{{"instance", in.descriptor},
             {"n", t.n()},
             {"rotation", t.rotation()},
             {"drawing", to_json(d)},
             {"realizer", to_json(r)},
             {"checks", body["checks"]},
             {"config", cfg.echo()}};
    const fs::path path = cex_path(cfg, in.descriptor + "_verify");
    write_file_atomic(path, cex.dump(2) + "\n");
    if (delivery) write_route_counterexamples(cfg, in.descriptor, t, d, &*sg, Strategy::kSectorGreedy, *delivery);
    text += fmt::format("counterexample written to {}\n", path.string());
  }
  emit(cfg, body, text);
  return all_ok ? kExitOk : kExitCheck;
}

int cmd_route(const RunConfig& cfg) {
  const Strategy strategy = strategy_of(cfg);
  if (cfg.from.empty() || cfg.to.empty()) throw UsageError("route needs --from and --to");
  const Loaded in = load(cfg);
  const VertexId s = parse_vertex(cfg.from, in.t.n());
  const VertexId dst = parse_vertex(cfg.to, in.t.n());
  if (s == dst) throw UsageError("source and destination coincide");
  const Instance inst = make_instance(in.descriptor, in.t);
  const RouteTrace tr = route(inst.graph(), s, dst, strategy, cfg.max_hops);
  Json body{{"instance", in.descriptor}, {"n", in.t.n()}, {"strategy", to_string(strategy)}, {"trace", to_json(tr)}};
  emit(cfg, with_config(cfg, std::move(body)), format_trace(tr));
  return tr.delivered() ? kExitOk : kExitCheck;
}

int cmd_allpairs(const RunConfig& cfg) {
  const Strategy strategy = strategy_of(cfg);
  const Loaded in = load(cfg);
  const Instance inst = make_instance(in.descriptor, in.t);
  const DeliveryReport rep = verify_all_pairs(inst.graph(), strategy, in.descriptor, cfg.threads);
  Json body = to_json(rep);
  if (!rep.failures.empty() && !cfg.cex_dir.empty())
    write_route_counterexamples(cfg, in.descriptor, inst.t, inst.d, &inst.sg, strategy, rep);
  emit(cfg, with_config(cfg, std::move(body)), format_delivery(rep));
  const bool must_deliver = strategy == Strategy::kSectorGreedy;
  const bool failed = rep.failed > 0 || rep.non_simple_delivered > 0 || rep.distance_audit_failures > 0;
  return must_deliver && failed ? kExitCheck : (rep.distance_audit_failures > 0 ? kExitCheck : kExitOk);
}

int cmd_compare(const RunConfig& cfg, const std::vector<std::string>& inputs) {
  std::vector<Instance> instances;
  if (!inputs.empty()) {
    for (const std::string& path : inputs) instances.push_back(make_instance(fs::path(path).filename().string(), read_tri(path)));
  } else {
    if (!cfg.n) throw UsageError("compare needs input files or -n with --seeds");
    if (*cfg.n < 4) throw UsageError(fmt::format("n must be at least 4, got {}", *cfg.n));
    const std::string range = cfg.seeds.empty() ? std::to_string(cfg.seed) : cfg.seeds;
    const std::size_t flips = cfg.flips_for(*cfg.n);
    for (std::uint64_t seed : parse_seed_range(range)) {
      instances.push_back(make_instance(instance_descriptor(*cfg.n, flips, seed), generate_instance(*cfg.n, flips, seed)));
    }
  }
  const ComparisonReport rep = compare_strategies(instances, cfg.threads);
  std::string text = fmt::format("{:<48} {:>8} {:>10} {:>10}\n", "instance", "pairs", "sector", "euclidean");
  for (const ComparisonRow& row : rep.rows) {
    text += fmt::format("{:<48} {:>8} {:>10} {:>10}\n", row.sector.instance, row.sector.pairs_tested,
                        row.sector.delivered, row.euclidean.delivered);
  }
  const double pairs = rep.pairs == 0 ? 1.0 : static_cast<double>(rep.pairs);
  text += fmt::format("total: {} pairs, sector {:.4f}%, euclidean {:.4f}%, audit failures {}\n", rep.pairs,
                      100.0 * static_cast<double>(rep.sector_delivered) / pairs,
                      100.0 * static_cast<double>(rep.euclidean_delivered) / pairs, rep.euclidean_audit_failures);
  emit(cfg, with_config(cfg, to_json(rep)), text);
  const bool ok = rep.sector_delivered == rep.pairs && rep.euclidean_audit_failures == 0;
  return ok ? kExitOk : kExitCheck;
}

void add_instance_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("input", cfg.input, "Input .tri file (omit to generate with -n)");
  sub->add_option("-n", cfg.n, "Generate an instance with n vertices");
  sub->add_option("--seed", cfg.seed, "Generator seed");
  sub->add_option("--flips", cfg.flips, "Random flip attempts (default 10n)");
}

void add_report_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--report", cfg.report, "Also write the JSON report to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schnyder drawings and greedy routing"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::vector<std::string> compare_inputs;

  auto* gen = app.add_subcommand("gen", "Generate a random triangulation (.tri)");
  gen->add_option("-n", cfg.n, "Number of vertices")->required();
  gen->add_option("--seed", cfg.seed, "Generator seed");
  gen->add_option("--flips", cfg.flips, "Random flip attempts (default 10n)");
  gen->add_option("-o,--output", cfg.output, "Output .tri path (stdout if omitted)");
  add_report_options(gen, cfg);

  auto* realize = app.add_subcommand("realize", "Compute and validate the Schnyder realizer");
  add_instance_options(realize, cfg);
  realize->add_option("-o,--output", cfg.output, "Write the realizer JSON here");
  add_report_options(realize, cfg);

  auto* draw = app.add_subcommand("draw", "Schnyder drawing as .bary/.sat/.svg");
  add_instance_options(draw, cfg);
  draw->add_option("-o,--output", cfg.output, "SVG output path");
  draw->add_option("--svg", cfg.svg, "SVG output path");
  draw->add_option("--bary", cfg.bary, "Exact coordinates output path");
  draw->add_option("--sat", cfg.sat, "Saturated edges output path");
  draw->add_option("--scale", cfg.scale, "SVG side length")->check(CLI::PositiveNumber);
  draw->add_flag("--no-tree-colors", cfg.no_tree_colors, "Draw all internal edges in one colour");
  add_report_options(draw, cfg);

  auto* verify = app.add_subcommand("verify", "Run every validator and all-pairs sector routing");
  add_instance_options(verify, cfg);
  verify->add_option("--cex-dir", cfg.cex_dir, "Directory for counterexample files");
  verify->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
  verify->add_option("--inject-fault", cfg.inject_fault)->group("");
  add_report_options(verify, cfg);

  auto* route_cmd = app.add_subcommand("route", "Route one packet and print the trace");
  add_instance_options(route_cmd, cfg);
  route_cmd->add_option("--from", cfg.from, "Source vertex (id or A1/A2/A3)")->required();
  route_cmd->add_option("--to", cfg.to, "Destination vertex (id or A1/A2/A3)")->required();
  route_cmd->add_option("--strategy", cfg.strategy, "sector | sector-adjacent | euclidean");
  route_cmd->add_option("--max-hops", cfg.max_hops, "Hop budget (0 = n)");
  add_report_options(route_cmd, cfg);

  auto* allpairs = app.add_subcommand("allpairs", "Route every ordered pair");
  add_instance_options(allpairs, cfg);
  allpairs->add_option("--strategy", cfg.strategy, "sector | sector-adjacent | euclidean");
  allpairs->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
  allpairs->add_option("--cex-dir", cfg.cex_dir, "Write failing routes here");
  add_report_options(allpairs, cfg);

  auto* compare = app.add_subcommand("compare", "Sector versus Euclidean greedy over a corpus");
  compare->add_option("inputs", compare_inputs, "Input .tri files");
  compare->add_option("-n", cfg.n, "Generate instances with n vertices");
  compare->add_option("--seeds", cfg.seeds, "Seed range a..b (inclusive)");
  compare->add_option("--flips", cfg.flips, "Random flip attempts (default 10n)");
  compare->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
  add_report_options(compare, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    for (CLI::App* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();
    if (*gen) return cmd_gen(cfg);
    if (*realize) return cmd_realize(cfg);
    if (*draw) return cmd_draw(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*route_cmd) return cmd_route(cfg);
    if (*allpairs) return cmd_allpairs(cfg);
    if (*compare) return cmd_compare(cfg, compare_inputs);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: line " << e.line() << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const TriangulationError& e) {
    std::cerr << "error: invalid triangulation: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RealizerError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SaturationError& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kExitCheck;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
