#include "tmc/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tmc/bfs.hpp"
#include "tmc/lower_bound.hpp"
#include "tmc/perm.hpp"
#include "tmc/solver.hpp"

namespace tmc {

Scramble scramble(const BoardDims& dims, std::uint64_t seed, int count) {
  if (count < 0) throw InvalidArgument("scramble length must be nonnegative");
  const std::vector<Move> gens = generators(dims);
  std::mt19937_64 rng(seed);
  MoveSequence moves;
  moves.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) moves.push_back(gens[static_cast<std::size_t>(rng() % gens.size())]);
  return Scramble{apply_sequence(solved_state(dims), moves, dims), std::move(moves)};
}

namespace {

enum class Format { kTable, kCsv, kJson };

struct Config {
  int rows = 0;
  int cols = 0;
  std::string state;
  std::string seq;
  std::uint64_t seed = 0;
  int moves = 50;
  Format format = Format::kTable;
  double memory_gib = 4.0;
  std::optional<int> max_level;
  bool omega = false;
  bool families = false;
  RecurrenceConvention convention = RecurrenceConvention::kTabulated;
  int max_rows = 8;
  int max_cols = 8;
};

// Space-padded columns, one line per row.
void print_aligned(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()), 0);
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c) line += "  ";
      line += std::string(width[c] - r[c].size(), ' ') + r[c];
    }
    out << line << '\n';
  }
}

unsigned threads_from_env() {
  const char* env = std::getenv("TMC_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  unsigned v = 0;
  const std::string_view s(env);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw InvalidArgument("TMC_THREADS must be a nonnegative integer");
  return v;
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

void cmd_order(const Config& cfg, std::ostream& out) {
  const BoardDims dims(cfg.rows, cfg.cols);
  const std::string order = to_string(group_order(dims));
  if (cfg.format == Format::kJson) {
    nlohmann::ordered_json j;
    j["rows"] = dims.rows();
    j["cols"] = dims.cols();
    j["group"] = is_alternating(dims) ? "alternating" : "symmetric";
    j["order"] = order;
    out << j.dump() << '\n';
  } else if (cfg.format == Format::kCsv) {
    out << "rows,cols,order\n" << dims.rows() << ',' << dims.cols() << ',' << order << '\n';
  } else {
    out << order << '\n';
  }
}

void cmd_solvable(const Config& cfg, std::ostream& out) {
  const BoardDims dims(cfg.rows, cfg.cols);
  const bool ok = is_solvable(parse_state(cfg.state, dims), dims);
  if (cfg.format == Format::kJson) {
    out << nlohmann::json{{"solvable", ok}}.dump() << '\n';
  } else {
    out << yes_no(ok) << '\n';
  }
}

void cmd_scramble(const Config& cfg, std::ostream& out) {
  const BoardDims dims(cfg.rows, cfg.cols);
  const Scramble s = scramble(dims, cfg.seed, cfg.moves);
  if (cfg.format == Format::kJson) {
    nlohmann::ordered_json j;
    j["state"] = format_state(s.state);
    j["moves"] = format_sequence(s.moves);
    j["count"] = s.moves.size();
    out << j.dump() << '\n';
  } else if (cfg.format == Format::kCsv) {
    out << "state,moves\n\"" << format_state(s.state) << "\"," << format_sequence(s.moves) << '\n';
  } else {
    out << "state: " << format_state(s.state) << '\n' << "moves: " << format_sequence(s.moves) << '\n';
  }
}

void cmd_solve(const Config& cfg, std::ostream& out) {
  const BoardDims dims(cfg.rows, cfg.cols);
  const Solution sol = solve(parse_state(cfg.state, dims), dims);
  if (cfg.format == Format::kJson) {
    nlohmann::ordered_json j;
    j["moves"] = format_sequence(sol.moves);
    j["steps"] = sol.length();
    out << j.dump() << '\n';
  } else if (cfg.format == Format::kCsv) {
    out << "moves,steps\n" << format_sequence(sol.moves) << ',' << sol.length() << '\n';
  } else {
    out << format_sequence(sol.moves) << '\n' << "steps: " << sol.length() << '\n';
  }
}

void cmd_verify(const Config& cfg, std::ostream& out) {
  const BoardDims dims(cfg.rows, cfg.cols);
  const bool ok = verify(parse_state(cfg.state, dims), parse_sequence(cfg.seq, dims), dims);
  if (cfg.format == Format::kJson) {
    out << nlohmann::json{{"solved", ok}}.dump() << '\n';
  } else {
    out << yes_no(ok) << '\n';
  }
}

void cmd_diameter(const Config& cfg, std::ostream& out) {
  const BoardDims dims(cfg.rows, cfg.cols);
  if (!(cfg.memory_gib > 0) || cfg.memory_gib > 1e9) throw InvalidArgument("--memory-gib must be positive");
  BfsLimits limits;
  limits.memory_bytes = static_cast<std::uint64_t>(std::ldexp(cfg.memory_gib, 30));
  limits.threads = threads_from_env();
  const LayerHistogram h = bfs_diameter(dims, limits);
  if (cfg.format == Format::kJson) {
    out << layer_counts_json(h) << '\n';
  } else if (cfg.format == Format::kCsv) {
    out << layer_counts_csv(h);
  } else {
    std::vector<std::vector<std::string>> rows{{"depth", "count", "cumulative"}};
    const std::vector<std::uint64_t> cum = h.cumulative();
    for (std::size_t i = 0; i < h.layers().size(); ++i) {
      rows.push_back({std::to_string(i), std::to_string(h.layers()[i]), std::to_string(cum[i])});
    }
    print_aligned(out, rows);
    out << "diameter: " << h.diameter() << '\n';
  }
}

void cmd_lower_bound(const Config& cfg, std::ostream& out) {
  const BoardDims dims(cfg.rows, cfg.cols);
  const int bound = lower_bound(dims, cfg.convention);
  if (!cfg.omega) {
    if (cfg.format == Format::kJson) {
      nlohmann::ordered_json j;
      j["rows"] = dims.rows();
      j["cols"] = dims.cols();
      j["lower_bound"] = bound;
      out << j.dump() << '\n';
    } else {
      out << bound << '\n';
    }
    return;
  }
  OmegaStop stop;
  stop.max_level = cfg.max_level;
  if (!cfg.max_level) stop.target = group_order(dims);
  const OmegaTable table = omega_series(dims, stop, cfg.convention);
  if (cfg.format == Format::kJson) {
    nlohmann::ordered_json j;
    j["rows"] = dims.rows();
    j["cols"] = dims.cols();
    j["lower_bound"] = bound;
    nlohmann::ordered_json levels = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < table.levels.size(); ++i) {
      const OmegaLevel& l = table.levels[i];
      nlohmann::ordered_json e;
      e["i"] = i;
      if (cfg.families) {
        std::vector<std::string> rf;
        std::vector<std::string> cf;
        for (const BigCount& v : l.row_family) rf.push_back(to_string(v));
        for (const BigCount& v : l.col_family) cf.push_back(to_string(v));
        e["row_family"] = rf;
        e["col_family"] = cf;
      }
      e["omega"] = to_string(l.omega);
      e["cumulative"] = to_string(l.cumulative);
      levels.push_back(e);
    }
    j["levels"] = levels;
    out << j.dump() << '\n';
    return;
  }
  const std::string csv = omega_table_csv(table, cfg.families);
  if (cfg.format == Format::kCsv) {
    out << csv;
    return;
  }
  std::vector<std::vector<std::string>> rows;
  std::istringstream lines(csv);
  for (std::string line; std::getline(lines, line);) {
    std::vector<std::string> fields;
    std::istringstream fs(line);
    for (std::string f; std::getline(fs, f, ',');) fields.push_back(f.empty() ? "/" : f);
    if (!line.empty() && line.back() == ',') fields.push_back("/");
    rows.push_back(std::move(fields));
  }
  print_aligned(out, rows);
  out << "lower bound: " << bound << '\n';
}

void cmd_table(const Config& cfg, std::ostream& out) {
  const BoundGrid grid = lower_bound_table(cfg.max_rows, cfg.max_cols, cfg.convention);
  if (cfg.format == Format::kJson) {
    nlohmann::ordered_json j;
    j["max_rows"] = grid.max_rows();
    j["max_cols"] = grid.max_cols();
    std::vector<std::vector<int>> bounds;
    for (int m = 2; m <= grid.max_rows(); ++m) {
      bounds.emplace_back();
      for (int n = 2; n <= grid.max_cols(); ++n) bounds.back().push_back(grid.at(m, n));
    }
    j["bounds"] = bounds;
    out << j.dump() << '\n';
    return;
  }
  const std::string csv = bound_grid_csv(grid);
  if (cfg.format == Format::kCsv) {
    out << csv;
    return;
  }
  std::vector<std::vector<std::string>> rows;
  std::istringstream lines(csv);
  for (std::string line; std::getline(lines, line);) {
    std::vector<std::string> fields;
    std::istringstream fs(line);
    for (std::string f; std::getline(fs, f, ',');) fields.push_back(f);
    rows.push_back(std::move(fields));
  }
  rows[0][0] = "rows\\cols";
  print_aligned(out, rows);
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Torus-sliding magic cube: group orders, solving, diameters and lower bounds", "tmc"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"table", Format::kTable}, {"csv", Format::kCsv}, {"json", Format::kJson}};
  const std::map<std::string, RecurrenceConvention> conventions{{"tabulated", RecurrenceConvention::kTabulated},
                                                                {"exact", RecurrenceConvention::kExactCount}};

  auto board_options = [&](CLI::App* sub) {
    sub->add_option("--rows", cfg.rows, "Board rows (>= 2)")->required()->check(CLI::Range(2, 255));
    sub->add_option("--cols", cfg.cols, "Board columns (>= 2)")->required()->check(CLI::Range(2, 255));
  };
  auto format_option = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format: table, csv or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  auto convention_option = [&](CLI::App* sub) {
    sub->add_option("--convention", cfg.convention, "Recurrence indexing: tabulated or exact")
        ->transform(CLI::CheckedTransformer(conventions, CLI::ignore_case));
  };

  CLI::App* order = app.add_subcommand("order", "Print the exact group order");
  board_options(order);
  format_option(order);

  CLI::App* solvable = app.add_subcommand("solvable", "Check whether a state is reachable");
  board_options(solvable);
  format_option(solvable);
  solvable->add_option("--state", cfg.state, "Comma-separated tiles, row-major, 0-based")->required();

  CLI::App* scr = app.add_subcommand("scramble", "Seeded random walk from the solved board");
  board_options(scr);
  format_option(scr);
  scr->add_option("--seed", cfg.seed, "PRNG seed (std::mt19937_64)");
  scr->add_option("--moves", cfg.moves, "Number of random moves")->check(CLI::NonNegativeNumber);

  CLI::App* slv = app.add_subcommand("solve", "Print a solving move sequence");
  board_options(slv);
  format_option(slv);
  slv->add_option("--state", cfg.state, "Comma-separated tiles, row-major, 0-based")->required();

  CLI::App* ver = app.add_subcommand("verify", "Check that a sequence solves a state");
  board_options(ver);
  format_option(ver);
  ver->add_option("--state", cfg.state, "Comma-separated tiles, row-major, 0-based")->required();
  ver->add_option("--seq", cfg.seq, "Whitespace-separated move tokens such as 'R1:+2 C3:-1'")->required();

  CLI::App* dia = app.add_subcommand("diameter", "Exact per-depth layer counts by breadth-first search");
  board_options(dia);
  format_option(dia);
  dia->add_option("--memory-gib", cfg.memory_gib, "Visited-set memory budget in GiB (default 4)");

  CLI::App* lb = app.add_subcommand("lower-bound", "Diameter lower bound from canonical word counts");
  board_options(lb);
  format_option(lb);
  convention_option(lb);
  lb->add_option("--max-level", cfg.max_level, "Print the count table up to this level")->check(CLI::NonNegativeNumber);
  lb->add_flag("--omega", cfg.omega, "Print the per-level count table");
  lb->add_flag("--families", cfg.families, "Include per-line family counts in the table");

  CLI::App* tbl = app.add_subcommand("table", "Grid of lower bounds for 2..max-rows x 2..max-cols");
  format_option(tbl);
  convention_option(tbl);
  tbl->add_option("--max-rows", cfg.max_rows, "Largest row count")->check(CLI::Range(2, 64));
  tbl->add_option("--max-cols", cfg.max_cols, "Largest column count")->check(CLI::Range(2, 64));

  std::vector<std::string> argv_store{"tmc"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return exit_code::kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return exit_code::kUsage;
  }

  try {
    if (*order) cmd_order(cfg, out);
    if (*solvable) cmd_solvable(cfg, out);
    if (*scr) cmd_scramble(cfg, out);
    if (*slv) cmd_solve(cfg, out);
    if (*ver) cmd_verify(cfg, out);
    if (*dia) cmd_diameter(cfg, out);
    if (*lb) cmd_lower_bound(cfg, out);
    if (*tbl) cmd_table(cfg, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kBudgetRefused;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kDomainError;
  }
  return exit_code::kOk;
}

}  // namespace tmc
