#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "knotid/egc.hpp"
#include "knotid/geometry.hpp"
#include "knotid/polynomial.hpp"
#include "knotid/simplify.hpp"

namespace knotid::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr const char* kUsage =
    "usage: knotid <command> [options] ...\n"
    "\n"
    "  coords2egc [--seed N] COORDS|-- [OUT]\n"
    "      coordinates -> extended Gauss code\n"
    "  xinger +r [--jobs N] EGCS|-- [OUT]\n"
    "      Reidemeister I/II simplification, one code per line\n"
    "  jhomfly [--jobs N] [--max-crossings N] [--max-nodes N] EGCS|-- [OUT]\n"
    "      HOMFLY-PT polynomial (LM normalization), one per line\n"
    "  jidknot -k [-j | -f TABLE] POLYS|-- [OUT]\n"
    "      polynomial -> matching chiral knot types, or 'unknown'\n"
    "  coords2knottype [-n] [-j | -f TABLE] [--seed N] COORDS|--\n"
    "      whole pipeline for one coordinate file\n"
    "  batch_coords2egc [--jobs N] [--seed N] FILE_OF_FILE_NAMES [OUT]\n"
    "  batch_coords2knottypes [-n] [-j | -f TABLE] [--jobs N] [--seed N] FILE_OF_FILE_NAMES [OUT]\n"
    "  egc2knottypes [-n] [-j | -f TABLE] [--jobs N] EGCS|-- [OUT]\n"
    "  build-table [--seeds FILE] [--max-crossing N] [OUT]\n"
    "      regenerate the lookup table from prime seeds\n"
    "\n"
    "The commands are also available under their own names (e.g. `jhomfly -- < in`).\n"
    "Without -f, lookups use the built-in table.\n";

struct Options {
  std::vector<std::string> positional;
  bool reduce = false;       // +r
  bool knot_mode = false;    // -k
  bool no_simplify = false;  // -n
  bool builtin = false;      // -j
  std::optional<std::string> table;
  std::optional<std::string> seeds;
  std::optional<std::uint64_t> seed;
  std::optional<int> max_crossing;
  unsigned jobs = 1;
  HomflyLimits limits;
};

template <class T>
T parse_number(const std::string& flag, const std::string& value) {
  T v{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw UsageError(flag + " expects a number, got '" + value + "'");
  }
  return v;
}

// Flags accepted by every command are parsed here; each command checks the
// ones that make sense for it.
Options parse_options(const std::vector<std::string>& args, std::size_t first) {
  Options o;
  for (std::size_t i = first; i < args.size(); ++i) {
    const std::string& a = args[i];
    auto value = [&]() -> const std::string& {
      if (i + 1 >= args.size()) throw UsageError(a + " needs a value");
      return args[++i];
    };
    if (a == "+r") {
      o.reduce = true;
    } else if (a == "-k") {
      o.knot_mode = true;
    } else if (a == "-n") {
      o.no_simplify = true;
    } else if (a == "-j") {
      o.builtin = true;
    } else if (a == "-f") {
      o.table = value();
    } else if (a == "--seeds") {
      o.seeds = value();
    } else if (a == "--seed") {
      o.seed = parse_number<std::uint64_t>(a, value());
    } else if (a == "--jobs") {
      o.jobs = std::max(1u, parse_number<unsigned>(a, value()));
    } else if (a == "--max-crossings") {
      o.limits.max_crossings = parse_number<int>(a, value());
    } else if (a == "--max-nodes") {
      o.limits.max_nodes = parse_number<std::uint64_t>(a, value());
    } else if (a == "--max-crossing") {
      o.max_crossing = parse_number<int>(a, value());
    } else if (a == kStdinMarker) {
      o.positional.push_back(a);
    } else if (a.size() > 1 && (a[0] == '-' || a[0] == '+')) {
      throw UsageError("unknown option " + a);
    } else {
      o.positional.push_back(a);
    }
  }
  if (o.table && o.builtin) throw UsageError("-f and -j are mutually exclusive");
  return o;
}

void expect_positional(const Options& o, std::size_t min, std::size_t max) {
  if (o.positional.size() < min || o.positional.size() > max) throw UsageError("wrong number of arguments");
}

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == kStdinMarker) return read_all(in);
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  return read_all(f);
}

// Lines without terminators; a final newline does not start a new line.
std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

void write_output(const std::optional<std::string>& path, std::ostream& out, const std::string& data) {
  if (!path) {
    out << data;
    out.flush();
    return;
  }
  std::ofstream f(*path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + *path);
  f << data;
  if (!f) throw std::runtime_error("error writing " + *path);
}

std::optional<std::string> output_arg(const Options& o, std::size_t index) {
  if (o.positional.size() > index) return o.positional[index];
  return std::nullopt;
}

// Runs fn(item, worker) for every item; results land at their item's index so
// output order never depends on scheduling.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t, unsigned)>& fn) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, jobs), std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i, 0);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = next++; i < count; i = next++) fn(i, w);
    });
  }
  for (auto& t : pool) t.join();
}

struct LineResult {
  std::string text;
  std::optional<std::string> error;
};

// Line-by-line transform that aborts on the first failing line.
int transform_lines(const std::string& command, const Options& o, std::istream& in, std::ostream& out,
                    std::ostream& err, const std::function<std::string(const std::string&, unsigned)>& fn) {
  const std::string& input = o.positional.at(0);
  const auto lines = split_lines(read_input(input, in));
  std::vector<LineResult> results(lines.size());
  parallel_for(lines.size(), o.jobs, [&](std::size_t i, unsigned worker) {
    try {
      results[i].text = fn(lines[i], worker);
    } catch (const std::exception& e) {
      results[i].error = e.what();
    }
  });
  std::string data;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (results[i].error) {
      err << command << ": " << input << ": line " << i + 1 << ": " << *results[i].error << '\n';
      return 1;
    }
    data += results[i].text;
    data.push_back('\n');
  }
  write_output(output_arg(o, 1), out, data);
  return 0;
}

PipelineConfig config_from(const Options& o) {
  PipelineConfig c;
  c.simplify_enabled = !o.no_simplify;
  c.table_path = o.table;
  c.builtin_table = o.builtin;
  c.projection_seed = o.seed.value_or(0);
  c.jobs = o.jobs;
  c.limits = o.limits;
  return c;
}

Diagram diagram_from_coords(const std::string& text, std::uint64_t seed) {
  return compute_egc(parse_coordinates(text), ProjectionFrame::identity(seed));
}

std::string identify(const Diagram& d, const PipelineConfig& c, HomflyEngine& engine, const KnotTable& table) {
  const Diagram reduced = c.simplify_enabled ? simplify(d) : d;
  return format_lookup(table.lookup(engine.compute(reduced)));
}

int cmd_coords2egc(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  expect_positional(o, 1, 2);
  const std::string& input = o.positional[0];
  try {
    const Diagram d = diagram_from_coords(read_input(input, in), o.seed.value_or(0));
    write_output(output_arg(o, 1), out, format_egc(d) + "\n");
  } catch (const std::exception& e) {
    err << "coords2egc: " << input << ": " << e.what() << '\n';
    return 1;
  }
  return 0;
}

int cmd_xinger(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  if (!o.reduce) throw UsageError("xinger needs +r");
  expect_positional(o, 1, 2);
  return transform_lines("xinger", o, in, out, err,
                         [](const std::string& line, unsigned) { return format_egc(simplify(parse_egc(line))); });
}

int cmd_jhomfly(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  expect_positional(o, 1, 2);
  std::vector<HomflyEngine> engines(std::max(1u, o.jobs), HomflyEngine(o.limits));
  return transform_lines("jhomfly", o, in, out, err, [&](const std::string& line, unsigned worker) {
    return format_poly(engines[worker].compute(parse_egc(line)));
  });
}

int cmd_jidknot(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  if (!o.knot_mode) throw UsageError("jidknot needs -k");
  expect_positional(o, 1, 2);
  KnotTable table;
  try {
    table = select_table(config_from(o));
  } catch (const std::exception& e) {
    err << "jidknot: " << e.what() << '\n';
    return 1;
  }
  return transform_lines("jidknot", o, in, out, err, [&](const std::string& line, unsigned) {
    return format_lookup(table.lookup(format_poly(parse_poly(line))));
  });
}

int cmd_coords2knottype(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  expect_positional(o, 1, 1);
  const PipelineConfig c = config_from(o);
  const std::string& input = o.positional[0];
  try {
    const KnotTable table = select_table(c);
    HomflyEngine engine(c.limits);
    const Diagram d = diagram_from_coords(read_input(input, in), c.projection_seed);
    write_output(std::nullopt, out, identify(d, c, engine, table) + "\n");
  } catch (const std::exception& e) {
    err << "coords2knottype: " << input << ": " << e.what() << '\n';
    return 1;
  }
  return 0;
}

// Processes every item, reporting failures and writing "error" in their
// place; the exit status is 1 if any item failed.
int batch(const std::string& command, const Options& o, const std::vector<std::string>& items,
          const std::function<std::string(const std::string&)>& describe,
          const std::function<std::string(const std::string&, unsigned)>& fn, std::ostream& out, std::ostream& err) {
  std::vector<LineResult> results(items.size());
  parallel_for(items.size(), o.jobs, [&](std::size_t i, unsigned worker) {
    try {
      results[i].text = fn(items[i], worker);
    } catch (const std::exception& e) {
      results[i].error = e.what();
    }
  });
  std::string data;
  int status = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (results[i].error) {
      err << command << ": " << describe(items[i]) << ": " << *results[i].error << '\n';
      data += "error\n";
      status = 1;
    } else {
      data += results[i].text;
      data.push_back('\n');
    }
  }
  write_output(output_arg(o, 1), out, data);
  return status;
}

std::vector<std::string> file_names(const std::string& list_path, std::istream& in) {
  std::vector<std::string> names;
  for (auto& line : split_lines(read_input(list_path, in))) {
    const auto b = line.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t");
    names.push_back(line.substr(b, e - b + 1));
  }
  return names;
}

int cmd_batch_coords2egc(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  expect_positional(o, 1, 2);
  const auto names = file_names(o.positional[0], in);
  const std::uint64_t seed = o.seed.value_or(0);
  return batch(
      "batch_coords2egc", o, names, [](const std::string& n) { return n; },
      [&](const std::string& name, unsigned) {
        std::ifstream f(name, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open file");
        return format_egc(diagram_from_coords(read_all(f), seed));
      },
      out, err);
}

int cmd_batch_coords2knottypes(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  expect_positional(o, 1, 2);
  const PipelineConfig c = config_from(o);
  KnotTable table;
  try {
    table = select_table(c);
  } catch (const std::exception& e) {
    err << "batch_coords2knottypes: " << e.what() << '\n';
    return 1;
  }
  const auto names = file_names(o.positional[0], in);
  std::vector<HomflyEngine> engines(std::max(1u, o.jobs), HomflyEngine(c.limits));
  return batch(
      "batch_coords2knottypes", o, names, [](const std::string& n) { return n; },
      [&](const std::string& name, unsigned worker) {
        std::ifstream f(name, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open file");
        return identify(diagram_from_coords(read_all(f), c.projection_seed), c, engines[worker], table);
      },
      out, err);
}

int cmd_egc2knottypes(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  expect_positional(o, 1, 2);
  const PipelineConfig c = config_from(o);
  KnotTable table;
  try {
    table = select_table(c);
  } catch (const std::exception& e) {
    err << "egc2knottypes: " << e.what() << '\n';
    return 1;
  }
  const auto lines = split_lines(read_input(o.positional[0], in));
  std::vector<std::string> numbered(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) numbered[i] = std::to_string(i + 1);
  std::vector<HomflyEngine> engines(std::max(1u, o.jobs), HomflyEngine(c.limits));
  return batch(
      "egc2knottypes", o, numbered,
      [&](const std::string& n) { return o.positional[0] + ": line " + n; },
      [&](const std::string& n, unsigned worker) {
        return identify(parse_egc(lines[std::stoul(n) - 1]), c, engines[worker], table);
      },
      out, err);
}

int cmd_build_table(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  expect_positional(o, 0, 1);
  try {
    const std::string seeds_text = o.seeds ? read_input(*o.seeds, in) : std::string(builtin_seeds_text());
    const auto seeds = load_seeds_text(seeds_text);
    int max_crossing = 0;
    for (const auto& s : seeds) max_crossing = std::max(max_crossing, s.crossing);
    const KnotTable t = generate_table(seeds, o.max_crossing.value_or(max_crossing));
    std::ostringstream buf;
    save_table(t, buf);
    write_output(output_arg(o, 0), out, buf.str());
  } catch (const std::exception& e) {
    err << "build-table: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

std::string basename_of(const std::string& path) {
  const auto pos = path.find_last_of('/');
  return pos == std::string::npos ? path : path.substr(pos + 1);
}

using Command = int (*)(const Options&, std::istream&, std::ostream&, std::ostream&);

Command find_command(const std::string& name) {
  static const std::pair<const char*, Command> commands[] = {
      {"coords2egc", cmd_coords2egc},
      {"xinger", cmd_xinger},
      {"jhomfly", cmd_jhomfly},
      {"jidknot", cmd_jidknot},
      {"coords2knottype", cmd_coords2knottype},
      {"batch_coords2egc", cmd_batch_coords2egc},
      {"batch_coords2knottypes", cmd_batch_coords2knottypes},
      {"egc2knottypes", cmd_egc2knottypes},
      {"build-table", cmd_build_table},
  };
  for (const auto& [n, c] : commands) {
    if (name == n) return c;
  }
  return nullptr;
}

}  // namespace

KnotTable select_table(const PipelineConfig& config) {
  if (config.table_path && config.builtin_table) throw UsageError("-f and -j are mutually exclusive");
  if (config.table_path) return load_table_file(*config.table_path);
  return builtin_table();
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  std::string name = args.empty() ? std::string() : basename_of(args[0]);
  std::size_t first = 1;
  Command cmd = find_command(name);
  if (cmd == nullptr) {
    if (args.size() < 2 || args[1] == "-h" || args[1] == "--help" || args[1] == "help") {
      (args.size() < 2 ? err : out) << kUsage;
      return args.size() < 2 ? 2 : 0;
    }
    name = args[1];
    cmd = find_command(name);
    first = 2;
    if (cmd == nullptr) {
      err << "knotid: unknown command '" << name << "'\n" << kUsage;
      return 2;
    }
  }
  try {
    return cmd(parse_options(args, first), in, out, err);
  } catch (const UsageError& e) {
    err << name << ": " << e.what() << "\n" << kUsage;
    return 2;
  } catch (const std::exception& e) {
    err << name << ": " << e.what() << '\n';
    return 1;
  }
}

}  // namespace knotid::cli
