#include "badladder/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "badladder/bundle.hpp"
#include "badladder/cayley.hpp"
#include "badladder/errors.hpp"
#include "badladder/hyperbolicity.hpp"
#include "badladder/word.hpp"

namespace badladder {

using Json = nlohmann::ordered_json;

namespace {

Json config_json(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  j["radius"] = c.radius;
  j["truncation"] = c.truncation;
  j["variant"] = c.variant;
  j["end"] = to_string(c.end);
  j["x"] = to_string(c.x);
  j["y"] = to_string(c.y);
  j["format"] = c.format;
  j["vertex_cap"] = c.vertex_cap;
  j["seed"] = c.seed;
  j["graph"] = c.graph;
  j["samples"] = c.samples;
  j["exhaustive"] = c.exhaustive;
  j["presentation"] = c.presentation.empty() ? "default" : c.presentation;
  return j;
}

Json report_header(const RunConfig& c) {
  Json j;
  j["tool"] = "badladder";
  j["version"] = kVersion;
  j["config"] = config_json(c);
  return j;
}

void write_csv_header(std::ostream& out, const RunConfig& c) {
  out << "# tool=badladder\n# version=" << kVersion << '\n';
  const Json config = config_json(c);
  for (const auto& [key, value] : config.items()) {
    out << "# " << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump())
        << '\n';
  }
}

std::string format_or(const RunConfig& c, const char* fallback) {
  const std::string f = c.format.empty() ? fallback : c.format;
  if (f != "json" && f != "csv" && f != "text") throw UsageError("unknown format '" + f + "'");
  return f;
}

PresentationSpec load_presentation(const RunConfig& c) {
  if (c.presentation.empty()) return default_presentation();
  std::ifstream in(c.presentation);
  if (!in) throw UsageError("cannot read presentation file '" + c.presentation + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

Json coord_list(const std::vector<LadderCoord>& coords) {
  Json arr = Json::array();
  for (auto c : coords) arr.push_back(to_string(c));
  return arr;
}

// Flattens a JSON value into one CSV cell: top-level lists are joined by
// ';', nested lists (tuples) by ':', objects become key=value.
std::string flatten(const Json& value, int depth) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_primitive()) return value.dump();
  std::string text;
  const char sep = depth == 0 ? ';' : ':';
  for (const auto& [k, item] : value.items()) {
    if (!text.empty()) text += sep;
    if (value.is_object()) text += k + "=";
    text += flatten(item, depth + 1);
  }
  return text;
}

std::string csv_cell(const Json& value) {
  std::string text = flatten(value, 0);
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return quoted + "\"";
}

LadderCoord mirrored(LadderCoord c) { return {-c.index, c.level}; }

// ---------------------------------------------------------------- ladder-exact

struct VariantResult {
  LadderGraph graph;
  IndexWindow window;
  std::vector<LadderCoord> bx, by, diff;
  std::vector<std::pair<int, std::size_t>> growth;
  bool end_symmetric = true;
};

VariantResult run_variant(const RunConfig& c, bool cubulated) {
  VariantResult r;
  r.graph = LadderGraph{c.truncation, cubulated};
  r.window = default_window(r.graph, c.end);
  r.bx = ray_bundle_exact(r.graph, c.x, c.end, r.window);
  r.by = ray_bundle_exact(r.graph, c.y, c.end, r.window);
  r.diff = sym_diff_exact(r.graph, c.x, c.y, c.end, r.window);
  r.growth = sym_diff_growth(r.diff, c.end, c.truncation - 2);

  // The mirror image towards the opposite end must be the negated result.
  const LadderEnd other = c.end == LadderEnd::Plus ? LadderEnd::Minus : LadderEnd::Plus;
  const IndexWindow mirror_window{-r.window.hi, -r.window.lo};
  auto mirror_diff = sym_diff_exact(r.graph, mirrored(c.x), mirrored(c.y), other, mirror_window);
  std::transform(mirror_diff.begin(), mirror_diff.end(), mirror_diff.begin(), mirrored);
  std::sort(mirror_diff.begin(), mirror_diff.end());
  r.end_symmetric = mirror_diff == r.diff;
  return r;
}

}  // namespace

int cmd_ladder_exact(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.truncation < 3) throw UsageError("--N must be at least 3 (window margin of 2)");
  const std::string format = format_or(c, "json");
  std::vector<bool> variants;
  if (c.variant == "plain" || c.variant == "both") variants.push_back(false);
  if (c.variant == "cubulated" || c.variant == "both") variants.push_back(true);
  if (variants.empty()) throw UsageError("unknown variant '" + c.variant + "'");

  std::vector<VariantResult> results;
  for (bool cub : variants) results.push_back(run_variant(c, cub));
  const bool ok = std::all_of(results.begin(), results.end(),
                              [](const VariantResult& r) { return r.end_symmetric; });

  if (format == "csv") {
    write_csv_header(out, c);
    for (const auto& r : results) {
      out << "# variant=" << (r.graph.cubulated ? "cubulated" : "plain") << '\n';
      out << "index,level,in_bundle_x,in_bundle_y,in_symdiff\n";
      auto has = [](const std::vector<LadderCoord>& s, LadderCoord x) {
        return std::binary_search(s.begin(), s.end(), x) ? 1 : 0;
      };
      for (int n = r.window.lo; n <= r.window.hi; ++n) {
        for (Level l : {Level::Top, Level::Mid, Level::Bot}) {
          const LadderCoord w{n, l};
          out << n << ',' << to_string(l) << ',' << has(r.bx, w) << ',' << has(r.by, w) << ','
              << has(r.diff, w) << '\n';
        }
      }
    }
  } else {
    Json j = report_header(c);
    j["command"] = "ladder-exact";
    Json arr = Json::array();
    for (const auto& r : results) {
      Json v;
      v["cubulated"] = r.graph.cubulated;
      v["truncation"] = r.graph.truncation;
      v["end"] = to_string(c.end);
      v["x"] = to_string(c.x);
      v["y"] = to_string(c.y);
      v["window"] = {r.window.lo, r.window.hi};
      v["bundle_x"] = coord_list(r.bx);
      v["bundle_y"] = coord_list(r.by);
      v["symdiff"] = coord_list(r.diff);
      Json rows = Json::array();
      for (auto [n, count] : r.growth) rows.push_back({n, count});
      v["symdiff_counts"] = rows;
      v["end_symmetric"] = r.end_symmetric;
      arr.push_back(v);
    }
    j["variants"] = arr;
    j["status"] = ok ? "ok" : "failed";
    out << j.dump(2) << '\n';
  }
  if (!ok) {
    err << "error: ray bundles are not symmetric under exchanging the ends\n";
    return kExitAssertion;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------- cayley

int cmd_cayley(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const std::string format = format_or(c, "json");
  const CayleyBall ball = build_ball(load_presentation(c), c.radius, {c.vertex_cap});
  const EmbeddedLadder ladder = locate_ladder(ball);
  const ConvexityReport convexity = check_convexity(ball, ladder);

  const auto vx = ladder.vertex(c.x);
  const auto vy = ladder.vertex(c.y);
  if (!vx || !vy) {
    throw UsageError("source " + to_string(vx ? c.y : c.x) + " is not in the radius-" +
                     std::to_string(c.radius) + " ball; lower its index or raise --radius");
  }

  std::optional<RayBundleReport> rx, ry;
  std::vector<GrowthRow> growth;
  std::optional<CrossModelReport> cross;
  std::string bundle_note;
  try {
    rx = truncated_ray_bundle(ball, ladder, *vx, c.end);
    ry = truncated_ray_bundle(ball, ladder, *vy, c.end);
    growth = symdiff_growth(ball, *rx, *ry);
    cross = compare_with_ladder_model(ball, ladder, *rx, *ry, growth);
  } catch (const PreconditionError& e) {
    rx.reset();
    ry.reset();
    bundle_note = e.what();
  }

  std::vector<std::string> failures;
  if (!convexity.violations.empty()) failures.push_back("convexity violations");
  if (!convexity.distance_mismatches.empty()) failures.push_back("ladder distance mismatches");
  if (rx && (!rx->off_ladder.empty() || !ry->off_ladder.empty())) {
    failures.push_back("bundle members off the ladder");
  }
  if (cross && !cross->mismatches.empty()) failures.push_back("cross-model mismatches");

  Json j = report_header(c);
  j["command"] = "cayley";
  j["radius"] = ball.radius();
  j["vertices"] = ball.vertex_count();
  j["edges"] = ball.edge_count();
  j["ladder"] = {{"coordinates", ladder.size()},
                 {"relator_loops", ladder.relator_loops},
                 {"skipped_loops", ladder.skipped_loops}};
  j["source"] = *vx;
  j["source_coord"] = to_string(c.x);
  j["source_y"] = *vy;
  j["source_y_coord"] = to_string(c.y);
  j["end"] = to_string(c.end);
  auto ids = [](const std::optional<RayBundleReport>& r) {
    Json arr = Json::array();
    if (r) {
      for (const auto& m : r->members) arr.push_back(m.vertex);
    }
    return arr;
  };
  j["bundle"] = ids(rx);
  j["bundle_y"] = ids(ry);
  if (rx) {
    j["margins"] = {rx->margin, ry->margin};
    j["certified_radii"] = {rx->certified_radius, ry->certified_radius};
  } else {
    j["bundle_note"] = bundle_note;
  }
  Json rows = Json::array();
  for (const auto& row : growth) rows.push_back({row.radius, row.count});
  j["symdiff_counts"] = rows;
  j["pairs_checked"] = convexity.pairs_checked;
  Json viol = Json::array();
  for (const auto& v : convexity.violations) viol.push_back({v.u, v.v, v.w});
  j["violations"] = viol;
  j["uncertified_pairs"] = convexity.uncertified_pairs;
  Json dm = Json::array();
  for (const auto& m : convexity.distance_mismatches) dm.push_back({m.u, m.v, m.cayley, m.ladder});
  j["distance_mismatches"] = dm;
  j["cross_model_mismatches"] = cross ? Json(cross->mismatches) : Json::array();
  j["status"] = failures.empty() ? "ok" : "failed";

  if (format == "csv") {
    write_csv_header(out, c);
    out << "field,value\n";
    for (const auto& [key, value] : j.items()) {
      if (key == "tool" || key == "version" || key == "config") continue;
      out << key << ',' << csv_cell(value) << '\n';
    }
  } else {
    out << j.dump(2) << '\n';
  }

  if (!failures.empty()) {
    for (const auto& f : failures) err << "error: " << f << '\n';
    return kExitAssertion;
  }
  return kExitOk;
}

// ----------------------------------------------------------------------- delta

int cmd_delta(const RunConfig& c, std::ostream& out, std::ostream&) {
  const std::string format = format_or(c, "text");
  int delta = 0;
  TriangleSample sample;
  if (c.graph == "ladder") {
    if (c.truncation < 3) throw UsageError("--N must be at least 3");
    const FiniteLadder ladder = make_finite_ladder({c.truncation, c.variant == "cubulated"});
    std::vector<VertexId> inner;
    for (VertexId v = 0; v < ladder.coords.size(); ++v) {
      if (std::abs(ladder.coords[v].index) <= c.truncation - 2) inner.push_back(v);
    }
    sample = c.exhaustive ? exhaustive_triples(inner) : random_triples(inner, c.samples, c.seed);
    delta = slim_constant(ladder.graph, sample);
  } else if (c.graph == "cayley" || c.graph == "free-tree") {
    const PresentationSpec spec = c.graph == "free-tree" ? free_presentation() : load_presentation(c);
    const CayleyBall ball = build_ball(spec, c.radius, {c.vertex_cap});
    sample = c.exhaustive ? exhaustive_certified_triples(ball)
                          : random_triples(inner_vertices(ball), c.samples, c.seed);
    delta = slim_constant(ball, sample);
  } else {
    throw UsageError("unknown graph '" + c.graph + "' (expected free-tree, ladder or cayley)");
  }

  if (format == "json") {
    Json j = report_header(c);
    j["command"] = "delta";
    j["delta_hat"] = delta;
    j["triples"] = sample.triples.size();
    j["mode"] = sample.mode == SampleMode::Exhaustive ? "exhaustive" : "random";
    j["seed"] = sample.seed ? Json(*sample.seed) : Json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    write_csv_header(out, c);
    out << report_line(delta, sample) << '\n';
  }
  return kExitOk;
}

// ------------------------------------------------------------------ export-ball

int cmd_export_ball(const RunConfig& c, std::ostream& out, std::ostream&) {
  const CayleyBall ball = build_ball(load_presentation(c), c.radius, {c.vertex_cap});
  write_ball(out, ball);
  return kExitOk;
}

// ------------------------------------------------------------------------ main

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-scale checks of ray bundles on bad ladders in Cayley graphs", "badladder"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  RunConfig c;
  std::string end = "+", x = "TOP:0", y = "MID:0";
  bool cubulated = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "Output format: json, csv or text");
    sub->add_option("--out", c.out, "Write the report to this path instead of stdout");
    sub->add_option("--cap", c.vertex_cap, "Vertex cap for ball construction");
    return sub;
  };

  auto* ladder = common(app.add_subcommand("ladder-exact", "Exact bundles on the abstract ladder"));
  ladder->add_option("--N", c.truncation, "Truncation: indices range over [-N, N]");
  ladder->add_option("--end", end, "End of the ladder: + or -");
  ladder->add_option("--x", x, "Side source, LEVEL:index");
  ladder->add_option("--y", y, "Rung source, LEVEL:index");
  ladder->add_option("--variant", c.variant, "plain, cubulated or both");
  ladder->add_flag("--cubulated", cubulated, "Only the cubulated ladder");

  auto* cayley = common(app.add_subcommand("cayley", "Ladder convexity and bundles in a Cayley ball"));
  cayley->add_option("--radius", c.radius, "Ball radius");
  cayley->add_option("--end", end, "End of the ladder: + or -");
  cayley->add_option("--x", x, "Side source, LEVEL:index");
  cayley->add_option("--y", y, "Rung source, LEVEL:index");
  cayley->add_option("--presentation", c.presentation, "Presentation file");

  auto* delta = common(app.add_subcommand("delta", "Empirical slim-triangle constant"));
  delta->add_option("--graph", c.graph, "free-tree, ladder or cayley");
  delta->add_option("--radius", c.radius, "Ball radius");
  delta->add_option("--N", c.truncation, "Ladder truncation");
  delta->add_flag("--cubulated", cubulated, "Use the cubulated ladder");
  delta->add_flag("--exhaustive", c.exhaustive, "All (certified) triples");
  delta->add_option("--samples", c.samples, "Random triples to draw");
  delta->add_option("--seed", c.seed, "Seed for random triples");
  delta->add_option("--presentation", c.presentation, "Presentation file");

  auto* exporter = common(app.add_subcommand("export-ball", "Write a Cayley ball as an edge list"));
  exporter->add_option("--radius", c.radius, "Ball radius");
  exporter->add_option("--presentation", c.presentation, "Presentation file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    c.end = parse_end(end);
    c.x = parse_coord(x);
    c.y = parse_coord(y);
    if (cubulated) c.variant = "cubulated";
    if (c.radius < 0) throw UsageError("--radius must be nonnegative");

    std::ofstream file;
    std::ostream* sink = &out;
    if (!c.out.empty()) {
      file.open(c.out);
      if (!file) throw UsageError("cannot open '" + c.out + "' for writing");
      sink = &file;
    }

    if (ladder->parsed()) {
      c.command = "ladder-exact";
      return cmd_ladder_exact(c, *sink, err);
    }
    if (cayley->parsed()) {
      c.command = "cayley";
      return cmd_cayley(c, *sink, err);
    }
    if (delta->parsed()) {
      c.command = "delta";
      return cmd_delta(c, *sink, err);
    }
    c.command = "export-ball";
    return cmd_export_ball(c, *sink, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\nhint: lower the source indices or raise --radius\n";
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::bad_alloc&) {
    err << "resource limit: out of memory; lower --radius\n";
    return kExitResource;
  } catch (const std::exception& e) {
    err << "assertion failed: " << e.what() << '\n';
    return kExitAssertion;
  }
}

}  // namespace badladder
