// Command-line surface for the box-ball system: evolution, the scattering
// transforms, exhaustive verification suites, enumeration, and ASCII
// rendering. All I/O is line-oriented plain text.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "bbs/kkr.hpp"
#include "bbs/qseries.hpp"
#include "bbs/scattering.hpp"
#include "bbs/text_io.hpp"
#include "bbs/verify.hpp"

namespace {

struct IoOptions {
  std::string input;
  std::string output;
};

void add_io_options(CLI::App* cmd, IoOptions& io) {
  cmd->add_option("--input", io.input, "read from a file instead of stdin");
  cmd->add_option("--output", io.output, "write to a file instead of stdout");
}

std::vector<std::string> read_lines(const IoOptions& io) {
  std::vector<std::string> lines;
  auto drain = [&](std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r\n") != std::string::npos) {
        lines.push_back(line);
      }
    }
  };
  if (io.input.empty()) {
    drain(std::cin);
  } else {
    std::ifstream file(io.input);
    if (!file) throw std::runtime_error("cannot open input file: " + io.input);
    drain(file);
  }
  if (lines.empty()) throw std::runtime_error("no input line");
  return lines;
}

std::string read_line(const IoOptions& io) { return read_lines(io).front(); }

void write_text(const IoOptions& io, const std::string& text) {
  if (io.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(io.output);
  if (!file) throw std::runtime_error("cannot open output file: " + io.output);
  file << text;
}

std::pair<bbs::Wall, bbs::Wall> parse_window(const std::string& range) {
  const std::size_t cut = range.find("..");
  if (cut == std::string::npos) {
    throw std::runtime_error("window must look like a..b");
  }
  const bbs::Wall lo = std::stoll(range.substr(0, cut));
  const bbs::Wall hi = std::stoll(range.substr(cut + 2));
  if (lo > hi) throw std::runtime_error("window must have a <= b");
  return {lo, hi};
}

// Default view: two boxes of margin around the state's extent.
std::pair<bbs::Wall, bbs::Wall> default_window(const bbs::State& state) {
  if (state.empty()) return {-2, 2};
  return {state.blocks().front().left - 2, state.blocks().back().right + 2};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact box-ball system toolkit"};
  app.require_subcommand(1);

  int exit_code = 0;

  // evolve
  auto* evolve_cmd = app.add_subcommand("evolve", "apply the update rule");
  IoOptions evolve_io;
  std::int64_t evolve_steps = 1;
  bool evolve_trace = false;
  evolve_cmd->add_option("--steps", evolve_steps, "number of update steps")
      ->check(CLI::NonNegativeNumber);
  evolve_cmd->add_flag("--trace", evolve_trace, "print every intermediate state");
  add_io_options(evolve_cmd, evolve_io);
  evolve_cmd->callback([&] {
    bbs::State state = bbs::parse_state(read_line(evolve_io));
    std::ostringstream out;
    if (evolve_trace) out << bbs::to_text(state) << '\n';
    for (std::int64_t t = 0; t < evolve_steps; ++t) {
      state = bbs::evolve(state);
      if (evolve_trace) out << bbs::to_text(state) << '\n';
    }
    if (!evolve_trace) out << bbs::to_text(state) << '\n';
    write_text(evolve_io, out.str());
  });

  // scatter
  auto* scatter_cmd =
      app.add_subcommand("scatter", "state -> rigged configuration");
  IoOptions scatter_io;
  add_io_options(scatter_cmd, scatter_io);
  scatter_cmd->callback([&] {
    const bbs::State state = bbs::parse_state(read_line(scatter_io));
    write_text(scatter_io,
               bbs::to_text(bbs::direct_transform(state)) + '\n');
  });

  // inverse
  auto* inverse_cmd =
      app.add_subcommand("inverse", "rigged configuration -> state");
  IoOptions inverse_io;
  add_io_options(inverse_cmd, inverse_io);
  inverse_cmd->callback([&] {
    const bbs::RiggedConfiguration rc = bbs::parse_rc(read_line(inverse_io));
    write_text(inverse_io, bbs::to_text(bbs::inverse_transform(rc)) + '\n');
  });

  // solve
  auto* solve_cmd = app.add_subcommand(
      "solve", "N-step evolution through the scattering data");
  IoOptions solve_io;
  std::int64_t solve_steps = 1;
  solve_cmd->add_option("--steps", solve_steps, "number of update steps")
      ->check(CLI::NonNegativeNumber);
  add_io_options(solve_cmd, solve_io);
  solve_cmd->callback([&] {
    const bbs::State state = bbs::parse_state(read_line(solve_io));
    write_text(solve_io,
               bbs::to_text(bbs::solve(state, solve_steps)) + '\n');
  });

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "run an exhaustive verification suite");
  std::string suite;
  std::int64_t max_width = -1;
  verify_cmd->add_option("--suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember(bbs::suite_names()));
  verify_cmd->add_option("--max-L", max_width,
                         "largest box width to sweep (suite default if omitted)");
  verify_cmd->callback([&] {
    const bbs::CheckList checks = bbs::run_suite(suite, max_width);
    for (const bbs::CheckLine& line : checks) {
      std::cout << (line.ok ? "OK " : "FAIL ") << line.id << '\n';
    }
    if (!bbs::all_ok(checks)) exit_code = 1;
  });

  // enumerate
  auto* enum_cmd =
      app.add_subcommand("enumerate", "list states in a finite box");
  IoOptions enum_io;
  std::int64_t enum_width = 0;
  std::int64_t enum_balls = 0;
  bool enum_highest = false;
  enum_cmd->add_option("--L", enum_width, "box width (walls 0..L)")
      ->required();
  enum_cmd->add_option("--balls", enum_balls, "number of balls")->required();
  enum_cmd->add_flag("--highest", enum_highest, "highest weight states only");
  add_io_options(enum_cmd, enum_io);
  enum_cmd->callback([&] {
    std::ostringstream out;
    for (const bbs::State& s :
         bbs::enumerate_states(enum_width, enum_balls, enum_highest)) {
      out << bbs::to_text(s) << '\n';
    }
    write_text(enum_io, out.str());
  });

  // render
  auto* render_cmd =
      app.add_subcommand("render", "draw states as . / o box rows");
  IoOptions render_io;
  std::string window_range;
  render_cmd->add_option("--window", window_range,
                         "wall range a..b (default: state extent plus margin)");
  add_io_options(render_cmd, render_io);
  render_cmd->callback([&] {
    std::ostringstream out;
    for (const std::string& line : read_lines(render_io)) {
      const bbs::State state = bbs::parse_state(line);
      const auto [lo, hi] = window_range.empty() ? default_window(state)
                                                : parse_window(window_range);
      out << bbs::render_occupancy(state, lo, hi) << '\n';
    }
    write_text(render_io, out.str());
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
