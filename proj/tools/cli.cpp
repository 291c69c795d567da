#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <ostream>

#include "shadowcalc/error.hpp"
#include "shadowcalc/io.hpp"

namespace shadowcalc::cli {

namespace {

using io::Json;

struct BodyInput {
  std::string file;
  std::string builtin;
  int dim = 3;
};

void add_body_input(CLI::App* cmd, BodyInput& in) {
  cmd->add_option("input", in.file, "Polytope JSON file");
  cmd->add_option("--builtin", in.builtin, "cube | simplex | cross | ball:<L> | random:<m>,<seed>");
  cmd->add_option("--dim", in.dim, "Dimension of a builtin body")->capture_default_str();
}

BodySpec load_spec(const BodyInput& in) {
  if (!in.builtin.empty()) {
    if (!in.file.empty()) fail(ErrorCode::kInvalidArgument, "give either a file or --builtin");
    return builtin_body(in.builtin, in.dim);
  }
  if (in.file.empty()) fail(ErrorCode::kInvalidArgument, "no input body");
  return io::parse_body_spec(io::read_json_file(in.file), in.file);
}

Polytope load_polytope(const BodyInput& in) { return hull(load_spec(in).points); }

// A file path, segment:<x,y,...>, ball:<L>, or a builtin name.
Body resolve_body(const std::string& token, int dim) {
  if (std::filesystem::exists(token)) return io::parse_body(io::read_json_file(token));
  if (token.starts_with("segment:")) return Segment::from_origin(io::parse_vec_list(token.substr(8)));
  if (token.starts_with("ball:")) {
    int level = -1;
    const auto [ptr, ec] = std::from_chars(token.data() + 5, token.data() + token.size(), level);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      fail(ErrorCode::kParseError, "bad ball level in '" + token + "'");
    }
    return ball_approx(dim, level);
  }
  return hull(builtin_body(token, dim).points);
}

const Polytope& as_polytope(const Body& b) {
  if (const auto* p = std::get_if<Polytope>(&b)) return *p;
  if (const auto* ball = std::get_if<BallApprox>(&b)) return ball->poly;
  fail(ErrorCode::kInvalidArgument, "a full-dimensional body is required here");
}

std::optional<std::uint64_t> env_seed() {
  const char* raw = std::getenv("SHADOWCALC_SEED");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  const std::string_view text(raw);
  std::uint64_t seed = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    fail(ErrorCode::kParseError, "SHADOWCALC_SEED is not a non-negative integer");
  }
  return seed;
}

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "pretty") return OutputFormat::kPretty;
  fail(ErrorCode::kInvalidArgument, "unknown format '" + name + "'");
}

int report_exit_code(const std::vector<VerificationReport>& reports) {
  bool input_error = false;
  bool internal_error = false;
  bool failed = false;
  for (const auto& r : reports) {
    if (r.error_code) {
      (*r.error_code == error_code_name(ErrorCode::kInternal) ? internal_error : input_error) = true;
    }
    failed = failed || !r.pass;
  }
  if (input_error) return kExitInput;
  if (internal_error) return kExitInternal;
  return failed ? kExitTolerance : kExitOk;
}

void emit_error(std::ostream& out, std::string_view code, const std::string& detail) {
  out << Json{{"error", code}, {"detail", detail}}.dump() << '\n';
}

}  // namespace

std::optional<std::uint64_t> resolve_seed(std::optional<std::uint64_t> flag,
                                          std::optional<std::uint64_t> config) {
  if (flag) return flag;
  if (config) return config;
  return env_seed();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convex polytope shadows, Minkowski derivatives and projection-formula checks",
               "shadowcalc"};
  app.require_subcommand(1);
  std::function<int()> action;
  auto emit = [&out](const Json& j) {
    out << j.dump(2) << '\n';
    return kExitOk;
  };

  BodyInput body;
  std::string dir_text;
  std::vector<std::string> tokens;
  double eps = 1.0;
  bool boundary = false;
  bool volume_moment_flag = false;
  std::string theorem = "all";
  std::string config_file;
  std::string format;
  std::uint64_t seed_flag = 0;
  int workers = 0;
  bool timings = false;
  std::int64_t samples = 100000;

  auto* hull_cmd = app.add_subcommand("hull", "Canonical hull with facets");
  add_body_input(hull_cmd, body);
  hull_cmd->callback([&] { action = [&] { return emit(io::to_json(load_polytope(body))); }; });

  auto* volume_cmd = app.add_subcommand("volume", "n-volume");
  add_body_input(volume_cmd, body);
  volume_cmd->callback([&] {
    action = [&] { return emit(Json{{"volume", volume(load_polytope(body))}}); };
  });

  auto* surface_cmd = app.add_subcommand("surface", "Surface area");
  add_body_input(surface_cmd, body);
  surface_cmd->callback([&] {
    action = [&] { return emit(Json{{"surface_area", surface_area(load_polytope(body))}}); };
  });

  auto* project_cmd = app.add_subcommand("project", "Shadow along a direction");
  add_body_input(project_cmd, body);
  project_cmd->add_option("--dir", dir_text, "Direction, e.g. 1,1,1")->required();
  project_cmd->callback([&] {
    action = [&] {
      const Polytope k = load_polytope(body);
      const Vec u = io::parse_vec_list(dir_text);
      if (u.dim() != k.dim()) fail(ErrorCode::kDimensionMismatch, "--dir has the wrong dimension");
      return emit(io::shadow_json(k, Direction(u)));
    };
  });

  auto* minkowski_cmd = app.add_subcommand("minkowski", "A + eps B");
  minkowski_cmd->add_option("bodies", tokens, "A and B: file, builtin, segment:<u> or ball:<L>")
      ->required()
      ->expected(2);
  minkowski_cmd->add_option("--dim", body.dim, "Dimension of builtin bodies")->capture_default_str();
  minkowski_cmd->add_option("--eps", eps, "Scale of B")->capture_default_str();
  minkowski_cmd->callback([&] {
    action = [&] {
      const Body a = resolve_body(tokens[0], body.dim);
      const Body b = resolve_body(tokens[1], body.dim);
      return emit(io::to_json(minkowski_sum(as_polytope(a), b, eps)));
    };
  });

  auto* derivative_cmd = app.add_subcommand("derivative", "Derivative of the volume along a body");
  add_body_input(derivative_cmd, body);
  derivative_cmd->add_option("--along", tokens, "file, builtin, segment:<u> or ball:<L>")
      ->required()
      ->expected(1);
  derivative_cmd->callback([&] {
    action = [&] {
      const Polytope k = load_polytope(body);
      const Body u = resolve_body(tokens[0], k.dim());
      const Moment m = dir_derivative_moment(k, u);
      return emit(Json{{"volume_derivative", dir_derivative_volume(k, u)},
                       {"moment_derivative", io::to_json(m.first_moment)}});
    };
  });

  auto* moment_cmd = app.add_subcommand("moment", "First moment of the boundary or the volume");
  add_body_input(moment_cmd, body);
  auto* boundary_opt = moment_cmd->add_flag("--boundary", boundary, "Boundary moment (default)");
  moment_cmd->add_flag("--volume", volume_moment_flag, "Volume moment")->excludes(boundary_opt);
  moment_cmd->callback([&] {
    action = [&] {
      const Polytope k = load_polytope(body);
      const Moment m = volume_moment_flag ? volume_moment(k) : boundary_moment(k);
      return emit(Json{{"kind", volume_moment_flag ? "volume" : "boundary"},
                       {"measure", m.measure},
                       {"first_moment", io::to_json(m.first_moment)},
                       {"centroid", io::to_json(m.centroid())}});
    };
  });

  auto* mc_cmd = app.add_subcommand("mc-volume", "Rejection-sampling volume estimate");
  add_body_input(mc_cmd, body);
  mc_cmd->add_option("--samples", samples, "Sample count (>= 1000)")->capture_default_str();
  auto* mc_seed = mc_cmd->add_option("--seed", seed_flag, "Seed (falls back to SHADOWCALC_SEED)");
  mc_cmd->callback([&] {
    action = [&] {
      const Polytope k = load_polytope(body);
      const auto seed = resolve_seed(
          mc_seed->count() ? std::optional<std::uint64_t>(seed_flag) : std::nullopt, std::nullopt);
      if (!seed) fail(ErrorCode::kMissingSeed, "mc-volume needs --seed or SHADOWCALC_SEED");
      const McEstimate e = mc_volume(k, samples, *seed);
      return emit(Json{{"estimate", e.estimate},
                       {"stderr", e.standard_error},
                       {"samples", samples},
                       {"seed", *seed}});
    };
  });

  auto* mixed_cmd = app.add_subcommand("mixed", "Mixed volumes of two or three bodies");
  mixed_cmd->add_option("bodies", tokens, "Bodies: file, builtin or ball:<L>")->required();
  mixed_cmd->add_option("--dim", body.dim, "Dimension of builtin bodies")->capture_default_str();
  mixed_cmd->callback([&] {
    action = [&] {
      std::vector<Body> bodies;
      for (const auto& t : tokens) bodies.push_back(resolve_body(t, body.dim));
      const auto grid = default_lambda_grid(static_cast<int>(bodies.size()));
      return emit(io::to_json(mixed_volume_fit(bodies, grid, tokens)));
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "Run verification checkers");
  add_body_input(verify_cmd, body);
  verify_cmd->add_option("--theorem", theorem,
                         "all | cauchy | moment | lemma-projection | lemma-linearity | "
                         "mixed-volume | surface-eq2")
      ->capture_default_str();
  verify_cmd->add_option("--config", config_file, "Config JSON");
  auto* verify_seed = verify_cmd->add_option("--seed", seed_flag, "Seed for Monte Carlo rules");
  verify_cmd->add_option("--format", format, "json | csv | pretty (overrides the config)");
  verify_cmd->add_option("--workers", workers, "Worker threads (overrides the config)");
  verify_cmd->add_flag("--timings", timings, "Include runtime_ms in the report");
  verify_cmd->callback([&] {
    action = [&] {
      Config config = config_file.empty() ? Config{} : io::parse_config(io::read_json_file(config_file));
      config.seed = resolve_seed(
          verify_seed->count() ? std::optional<std::uint64_t>(seed_flag) : std::nullopt, config.seed);
      if (!format.empty()) config.output = parse_format(format);
      if (workers != 0) config.workers = workers;
      config.timings = config.timings || timings;
      config.validate();

      std::vector<Theorem> selected;
      if (theorem == "all") {
        selected.assign(std::begin(kAllTheorems), std::end(kAllTheorems));
      } else {
        selected.push_back(parse_theorem(theorem));
      }
      const auto reports = verify_batch(load_spec(body), selected, config);
      switch (config.output) {
        case OutputFormat::kJson:
          out << io::reports_json(reports, config.timings).dump(2) << '\n';
          break;
        case OutputFormat::kCsv:
          out << io::reports_csv(reports, config.timings);
          break;
        case OutputFormat::kPretty:
          out << io::reports_pretty(reports);
          break;
      }
      return report_exit_code(reports);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    emit_error(out, "usage", e.what());
    return kExitInput;
  }

  try {
    return action();
  } catch (const Error& e) {
    emit_error(out, error_code_name(e.code()), e.what());
    return e.code() == ErrorCode::kInternal ? kExitInternal : kExitInput;
  } catch (const std::exception& e) {
    emit_error(out, "internal", e.what());
    return kExitInternal;
  }
}

}  // namespace shadowcalc::cli
