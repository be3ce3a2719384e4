#include "cli.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "squares/big_clique.hpp"
#include "squares/error.hpp"
#include "squares/generators.hpp"
#include "squares/report.hpp"
#include "squares/square_ops.hpp"
#include "squares/structure_checks.hpp"

namespace squares::cli {

namespace fs = std::filesystem;

namespace {

struct RunConfig {
  std::string kind;
  std::string input;
  std::optional<int> D;
  std::uint64_t seed = 0;
  int n = 0;
  int s = 0;
  int pendants = 0;
  double keep = 0.5;
  int hub = 36;
  std::string out;
  std::string format = "json";
  int jobs = 1;
  std::uint64_t budget = kDefaultCliqueBudget;
  bool exact = false;
  std::string method = "both";
};

std::shared_ptr<spdlog::logger> logger() {
  static auto log = [] {
    auto l = spdlog::stderr_color_mt("squares");
    const char* env = std::getenv("SQUARES_LOG");
    l->set_level(env ? spdlog::level::from_str(env) : spdlog::level::warn);
    return l;
  }();
  return log;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Io, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) fail(ErrorKind::Io, "cannot write " + cfg.out);
  f << text;
}

bool looks_like_rotation(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    line = line.substr(0, line.find('#'));
    if (line.find(':') != std::string_view::npos) return true;
    pos = end + 1;
  }
  return false;
}

int default_budget_d(int max_degree) { return std::max(kMinDegreeBudget, max_degree); }

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// Runs task(i) for i in [0, count) on `jobs` threads; results land by index.
void parallel_for(int count, int jobs, const std::function<void(int)>& task) {
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) task(i);
  };
  std::vector<std::jthread> pool;
  for (int t = 1; t < std::min(jobs, count); ++t) pool.emplace_back(worker);
  worker();
}

std::vector<fs::path> instance_files(const fs::path& path) {
  std::vector<fs::path> files;
  if (fs::is_directory(path)) {
    for (const auto& entry : fs::directory_iterator(path))
      if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
  } else if (fs::is_regular_file(path)) {
    files.push_back(path);
  } else {
    fail(ErrorKind::Io, "no such file or directory: " + path.string());
  }
  return files;
}

std::string text_of(const Json& j) {
  std::string out;
  auto line = [&](const std::string& key, const Json& value) {
    out += key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
  };
  if (j.contains("records")) {
    for (const auto& r : j["records"]) {
      out += "[" + r.value("instance", std::string{}) + "]\n";
      for (const auto& [key, value] : r.items())
        if (key != "instance" && key != "S" && key != "colors") line("  " + key, value);
    }
    for (const auto& [key, value] : j["summary"].items()) line(key, value);
    return out;
  }
  for (const auto& [key, value] : j.items()) line(key, value);
  return out;
}

std::string render(const RunConfig& cfg, const Json& j) { return cfg.format == "text" ? text_of(j) : dump(j); }

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
  PlaneGraph g;
  if (cfg.kind == "wegner") {
    g = wegner_even(cfg.s).graph;
  } else if (cfg.kind == "wegner-odd") {
    if (!cfg.D) fail(ErrorKind::InvalidArgument, "wegner-odd needs --d");
    g = wegner_odd(*cfg.D).graph;
  } else if (cfg.kind == "perturbed") {
    g = wegner_perturbed(cfg.s, cfg.pendants, cfg.seed).graph;
  } else if (cfg.kind == "random") {
    g = random_triangulation({cfg.seed, cfg.n});
  } else if (cfg.kind == "sparse") {
    g = sparsify(random_triangulation({cfg.seed, cfg.n}), cfg.keep, cfg.seed);
  } else if (cfg.kind == "hub") {
    g = hub_triangulation({cfg.seed, cfg.n}, cfg.hub);
  } else {
    fail(ErrorKind::InvalidArgument, "unknown generator " + cfg.kind);
  }
  std::string text = serialize_rotation(g);
  if (!(parse_rotation(text) == g)) fail(ErrorKind::InvariantViolation, "rotation serialization does not round-trip");
  emit(cfg, text, out);
  return kExitOk;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  const fs::path path(cfg.input);
  const std::string text = read_file(path);
  const auto start = std::chrono::steady_clock::now();
  Json report;
  if (looks_like_rotation(text) && !cfg.exact) {
    PlaneGraph g = parse_rotation(text);
    const int D = cfg.D.value_or(default_budget_d(g.max_degree()));
    auto result = omega_square_structured(g, D, cfg.budget);
    report = solve_report(path.filename().string(), g.to_simple(), D, result, ms_since(start));
    report["mode"] = "structured";
  } else {
    SimpleGraph g = looks_like_rotation(text) ? parse_rotation(text).to_simple() : parse_edge_list(text);
    const int D = cfg.D.value_or(default_budget_d(g.max_degree()));
    if (g.max_degree() > D) fail(ErrorKind::DegreeBudgetViolated, "maximum degree exceeds D");
    auto search = max_clique_exact(square(g), cfg.budget);
    if (search.budget_exceeded) fail(ErrorKind::BudgetExceeded, "clique search budget exhausted");
    StructuredOmega result;
    result.omega = static_cast<int>(search.clique.members.size());
    result.certificate = search.clique;
    if (result.omega >= D + 20) result.pattern = find_defining_triple(g, search.clique.members);
    report = solve_report(path.filename().string(), g, D, result, ms_since(start));
    report["mode"] = "exact";
  }
  emit(cfg, render(cfg, report), out);
  return kExitOk;
}

Json verify_one(const fs::path& path, const RunConfig& cfg, bool& parse_error) {
  const auto start = std::chrono::steady_clock::now();
  const std::string name = path.filename().string();
  try {
    PlaneGraph g = parse_rotation(read_file(path));
    const SimpleGraph simple = g.to_simple();
    const int delta = g.max_degree();
    const int D = cfg.D.value_or(default_budget_d(delta));
    auto characterization = verify_characterization(g, D, cfg.budget);
    Json r = characterization_report(name, simple, D, characterization, 0.0);

    bool ok = characterization.status != CharacterizationReport::Status::fail;
    if (characterization.certificate && characterization.certificate->slack < 0) ok = false;
    Json checks;
    checks["characterization"] = characterization.status != CharacterizationReport::Status::fail;
    checks["corollary_slack"] = !characterization.certificate || characterization.certificate->slack >= 0;
    try {
      r["lemma_a"] = to_json(lemma_a_witness(g));
      checks["lemma_a"] = true;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::WitnessNotFound) throw;
      r["lemma_a"] = nullptr;
      checks["lemma_a"] = false;
      ok = false;
    }
    const int k = degeneracy_order(simple).k;
    r["degeneracy"] = k;
    checks["degeneracy"] = k <= 5;
    ok = ok && k <= 5;
    r["checks"] = checks;
    r["delta"] = delta;
    r["bound_excess"] = characterization.omega - (3 * delta / 2 + 1);
    if (!ok) r["status"] = "FAIL";
    r["elapsed_ms"] = ms_since(start);
    logger()->info("{}: {}", name, r["status"].get<std::string>());
    return r;
  } catch (const Error& e) {
    logger()->warn("{}: {}", name, e.what());
    if (e.kind() != ErrorKind::BudgetExceeded) parse_error = true;
    return Json{{"v", kReportSchemaVersion}, {"instance", name}, {"status", "ERROR"},
                {"error", std::string(to_string(e.kind())) + ": " + e.what()}, {"elapsed_ms", ms_since(start)}};
  }
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  auto files = instance_files(cfg.input);
  std::vector<Json> records(files.size());
  std::vector<char> bad_input(files.size(), 0);
  parallel_for(static_cast<int>(files.size()), cfg.jobs, [&](int i) {
    bool parse_error = false;
    records[static_cast<std::size_t>(i)] = verify_one(files[static_cast<std::size_t>(i)], cfg, parse_error);
    bad_input[static_cast<std::size_t>(i)] = parse_error;
  });

  int pass = 0, failed = 0, not_applicable = 0, errors = 0;
  Json max_excess = nullptr;
  for (const auto& r : records) {
    const auto status = r["status"].get<std::string>();
    if (status == "PASS") ++pass;
    else if (status == "FAIL") ++failed;
    else if (status == "NOT-APPLICABLE") ++not_applicable;
    else ++errors;
    if (r.contains("bound_excess") && (max_excess.is_null() || r["bound_excess"].get<int>() > max_excess.get<int>()))
      max_excess = r["bound_excess"];
  }
  Json report{{"v", kReportSchemaVersion},
              {"records", records},
              {"summary",
               {{"instances", records.size()},
                {"pass", pass},
                {"fail", failed},
                {"not_applicable", not_applicable},
                {"errors", errors},
                {"max_excess", max_excess}}}};
  emit(cfg, render(cfg, report), out);
  if (std::any_of(bad_input.begin(), bad_input.end(), [](char c) { return c != 0; })) return kExitUsage;
  return failed > 0 || errors > 0 ? kExitVerificationFailure : kExitOk;
}

int cmd_color(const RunConfig& cfg, std::ostream& out) {
  if (cfg.method != "greedy" && cfg.method != "contraction" && cfg.method != "both")
    fail(ErrorKind::InvalidArgument, "--method must be greedy, contraction or both");
  auto files = instance_files(cfg.input);
  std::vector<Json> records(files.size());
  std::vector<char> bad_input(files.size(), 0);
  std::atomic<bool> violated{false};
  parallel_for(static_cast<int>(files.size()), cfg.jobs, [&](int i) {
    const auto& path = files[static_cast<std::size_t>(i)];
    Json r{{"v", kReportSchemaVersion}, {"instance", path.filename().string()}};
    try {
      PlaneGraph g = parse_rotation(read_file(path));
      const SimpleGraph simple = g.to_simple();
      const int delta = g.max_degree();
      r["delta"] = delta;
      Json results = Json::array();
      auto check = [&](const ColoringResult& c, std::optional<int> limit) {
        Json j = to_json(c);
        const bool proper = is_proper_square_coloring(simple, c.color);
        j["proper"] = proper;
        j["limit"] = limit ? Json(*limit) : Json(nullptr);
        const bool within = !limit || c.count <= *limit;
        j["within_limit"] = within;
        if (!proper || !within) violated = true;
        results.push_back(std::move(j));
      };
      if (cfg.method != "contraction") check(greedy_square_color(g), 9 * delta + 1);
      if (cfg.method != "greedy")
        check(contraction_color(g), delta >= 13 ? std::optional<int>(2 * delta + 19) : std::nullopt);
      r["colorings"] = std::move(results);
      r["status"] = "OK";
    } catch (const Error& e) {
      r["status"] = "ERROR";
      r["error"] = std::string(to_string(e.kind())) + ": " + e.what();
      bad_input[static_cast<std::size_t>(i)] = 1;
    }
    records[static_cast<std::size_t>(i)] = std::move(r);
  });
  int ok = 0;
  for (const auto& r : records) ok += r["status"] == "OK";
  Json report{{"v", kReportSchemaVersion},
              {"records", records},
              {"summary", {{"instances", records.size()}, {"ok", ok}, {"violations", violated.load()}}}};
  emit(cfg, render(cfg, report), out);
  if (std::any_of(bad_input.begin(), bad_input.end(), [](char c) { return c != 0; })) return kExitUsage;
  return violated ? kExitVerificationFailure : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Big cliques in squares of plane graphs", "squares"};
  app.require_subcommand(1);
  RunConfig cfg;
  int d_value = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Write output to this file instead of stdout");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--budget", cfg.budget, "Node-expansion budget for exact clique search");
    sub->add_option("--d", d_value, "Degree budget D");
  };

  auto* gen = app.add_subcommand("generate", "Emit a plane graph in rotation format");
  gen->add_option("kind", cfg.kind, "wegner | wegner-odd | perturbed | random | sparse | hub")->required();
  gen->add_option("--s", cfg.s, "Half the even maximum degree");
  gen->add_option("--n", cfg.n, "Vertex count");
  gen->add_option("--seed", cfg.seed, "Random seed");
  gen->add_option("--pendants", cfg.pendants, "Pendant count for perturbed instances");
  gen->add_option("--keep", cfg.keep, "Edge keep probability for sparse instances");
  gen->add_option("--hub", cfg.hub, "Target hub degree for hub instances");
  add_common(gen);

  auto* solve = app.add_subcommand("solve", "Compute the clique number of the square");
  solve->add_option("input", cfg.input, "Rotation or edge-list file")->required();
  solve->add_flag("--exact", cfg.exact, "Run the exact search instead of the structured solver");
  add_common(solve);

  auto* verify = app.add_subcommand("verify", "Batch characterization checks over a directory");
  verify->add_option("input", cfg.input, "Directory of rotation files")->required();
  verify->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_common(verify);

  auto* color = app.add_subcommand("color", "Colour squares and validate the colourings");
  color->add_option("input", cfg.input, "Rotation file or directory")->required();
  color->add_option("--method", cfg.method, "greedy | contraction | both");
  color->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_common(color);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  for (auto* sub : {gen, solve, verify, color})
    if (sub->count("--d") > 0) cfg.D = d_value;

  try {
    if (*gen) return cmd_generate(cfg, out);
    if (*solve) return cmd_solve(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*color) return cmd_color(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::BudgetExceeded ? kExitVerificationFailure : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace squares::cli
