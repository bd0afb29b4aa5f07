#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcmf/analytics.hpp"
#include "lcmf/errors.hpp"
#include "lcmf/qtriangle.hpp"
#include "lcmf/rhosigma.hpp"

namespace lcmf::cli {

namespace {

// Raised for bad combinations that CLI11 cannot express as validators.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ComputeArgs {
  std::string what;
  std::vector<std::uint64_t> positional;
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> k;
  std::string f = "m";
  std::optional<double> x;
  std::uint64_t budget = kDefaultNodeBudget;
  std::size_t digits = kDefaultDigitBudget;
};

struct VerifyArgs {
  std::string id;
  VerifyOptions options;
};

struct TriangleArgs {
  std::uint64_t nmax = 7;
  std::uint64_t budget = kDefaultNodeBudget;
  std::string format = "csv";
  std::optional<std::string> out;
};

struct ConstantArgs {
  double x = static_cast<double>(kReferenceTailCut);
  std::string format = "csv";
};

struct ScanArgs {
  std::string grid = "dyadic";
  std::uint64_t nmin = 1;
  std::uint64_t nmax = std::uint64_t{1} << 20;
  std::string format = "csv";
  std::optional<std::string> out;
  std::optional<std::string> blocks;
  std::optional<std::string> gnuplot;
  unsigned workers = 1;
  std::uint64_t checkpoint = kDefaultCheckpointInterval;
};

// Output stream that is either `fallback` or a file opened for writing.
class Sink {
 public:
  Sink(const std::optional<std::string>& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path) return;
    file_ = std::make_unique<std::ofstream>(*path, std::ios::binary);
    if (!*file_) throw std::runtime_error("cannot open '" + *path + "' for writing");
    stream_ = file_.get();
  }
  std::ostream& get() { return *stream_; }
  void close() {
    stream_->flush();
    if (file_ && !*file_) throw std::runtime_error("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << content)) throw std::runtime_error("cannot write '" + path + "'");
}

std::uint64_t take(const ComputeArgs& a, std::size_t index, const std::optional<std::uint64_t>& flag,
                   const char* name) {
  if (flag) return *flag;
  if (index < a.positional.size()) return a.positional[index];
  throw UsageError("compute " + a.what + " needs " + name);
}

int cmd_compute(const ComputeArgs& a, std::ostream& out) {
  FactoredNatural value;
  if (a.what == "rho") {
    value = rho(take(a, 0, a.n, "n"));
  } else if (a.what == "sigma") {
    value = sigma(take(a, 0, a.n, "n"));
  } else if (a.what == "pif") {
    if (!a.x) throw UsageError("compute pif needs --x");
    value = pi_f(WeightFunction::parse(a.f), *a.x);
  } else if (a.what == "q" || a.what == "d") {
    const auto n = take(a, 0, a.n, "n");
    const auto k = take(a, 1, a.k, "k");
    value = a.what == "q" ? q(n, k, a.budget) : d(n, k, a.budget);
  } else {
    throw UsageError("unknown compute target '" + a.what + "' (expected rho, sigma, pif, q or d)");
  }
  const std::string factored = value.to_string();
  std::string decimal;
  try {
    decimal = value.to_decimal(a.digits);
  } catch (const DigitBudgetExceeded&) {
    out << factored << '\n';
    return kExitOk;
  }
  if (decimal == factored) {
    out << factored << '\n';
  } else {
    out << factored << " = " << decimal << '\n';
  }
  return kExitOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto result = verify(a.id, a.options);
  if (result.passed()) {
    out << "verify " << result.id << ": pass (" << result.cases << " cases)\n";
    return kExitOk;
  }
  out << "verify " << result.id << ": FAIL (" << result.violations.size() << " of " << result.cases
      << " cases)\n";
  for (const auto& v : result.violations) out << "  " << v << '\n';
  return kExitFailure;
}

int cmd_triangle(const TriangleArgs& a, std::ostream& out) {
  const auto table = build_triangle(a.nmax, a.budget);
  Sink sink(a.out, out);
  if (parse_format(a.format) == OutputFormat::Csv) {
    sink.get() << render_triangle_csv(table);
  } else {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
      auto j = nlohmann::ordered_json::array();
      for (const auto& v : row) j.push_back(v.to_decimal());
      rows.push_back(std::move(j));
    }
    sink.get() << rows.dump() << '\n';
  }
  sink.close();
  return kExitOk;
}

int cmd_constant(const ConstantArgs& a, std::ostream& out) {
  const auto format = parse_format(a.format);
  const auto c = constant_c(a.x);
  if (format == OutputFormat::Csv) {
    out << "tail_cut,lo,hi,width\n"
        << format_double(std::floor(a.x)) << ',' << format_double(c.lo) << ',' << format_double(c.hi)
        << ',' << format_double(c.width()) << '\n';
  } else {
    nlohmann::ordered_json j;
    j["tail_cut"] = std::floor(a.x);
    j["lo"] = c.lo;
    j["hi"] = c.hi;
    j["width"] = c.width();
    out << j.dump() << '\n';
  }
  return kExitOk;
}

int cmd_scan(const ScanArgs& a, std::ostream& out) {
  const auto format = parse_format(a.format);
  const auto grid = ScanGrid::parse(a.grid, a.nmin, a.nmax);
  ScanOptions options;
  options.workers = a.workers;
  options.checkpoint = a.checkpoint;
  const auto& c = reference_constant();
  BlockStats stats(c.midpoint(), c.width());

  Sink sink(a.out, out);
  ScanWriter writer(sink.get(), format);
  scan_each(grid, options, [&](const ScanRecord& r) {
    writer.write(r);
    stats.add(r);
  });
  writer.finish();
  sink.close();

  if (a.blocks) {
    const auto blocks = stats.blocks();
    write_file(*a.blocks, format == OutputFormat::Csv ? render_blocks_csv(blocks) : render_blocks_json(blocks));
  }
  if (a.gnuplot) write_file(*a.gnuplot, gnuplot_script(a.out.value_or("scan.csv")));
  return kExitOk;
}

const auto kFormatCheck = CLI::IsMember({"csv", "json"});

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and empirical tools for lcm-of-products sequences", "lcmf"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Evaluate rho, sigma, pi_f, q or d exactly");
  c->add_option("what", compute.what, "rho | sigma | pif | q | d")->required();
  c->add_option("args", compute.positional, "n (and k for q, d)");
  c->add_option("--n", compute.n, "Index n");
  c->add_option("--k", compute.k, "Column k for q and d");
  c->add_option("--f", compute.f, "Weight: m | m-1 | m^A | log")->capture_default_str();
  c->add_option("--x", compute.x, "Real bound x for pif");
  c->add_option("--budget", compute.budget, "Enumeration node budget")->check(CLI::PositiveNumber)
      ->capture_default_str();
  c->add_option("--digits", compute.digits, "Largest decimal expansion to print")->capture_default_str();

  VerifyArgs verify_args;
  auto* v = app.add_subcommand("verify", "Check an identity over a range; exit 1 on any violation");
  v->add_option("id", verify_args.id, "theorem1 | prop1 | prop2 | prop3 | cor2 | theorem2 | eq14-16")
      ->required()
      ->check(CLI::IsMember(verify_ids()));
  v->add_option("--nmax", verify_args.options.nmax, "Largest n checked");
  v->add_option("--xmax", verify_args.options.xmax, "Largest x checked (theorem1)");
  v->add_option("--f", verify_args.options.f, "Restrict theorem1 to one weight");
  v->add_option("--budget", verify_args.options.budget, "Enumeration node budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  v->add_option("--out", verify_args.options.out, "theorem2: write n,p,v,witness_k CSV here");

  TriangleArgs triangle;
  auto* t = app.add_subcommand("triangle", "Print rows 0..nmax of the q(n, k) triangle");
  t->add_option("--nmax", triangle.nmax, "Last row")->capture_default_str();
  t->add_option("--budget", triangle.budget, "Enumeration node budget")->check(CLI::PositiveNumber)
      ->capture_default_str();
  t->add_option("--format", triangle.format)->check(kFormatCheck)->capture_default_str();
  t->add_option("--out", triangle.out, "Output path (default stdout)");

  ConstantArgs constant;
  auto* k = app.add_subcommand("constant", "Enclose c = sum_p log p / (p (p - 1))");
  k->add_option("--x", constant.x, "Tail cut (>= 100)")->capture_default_str();
  k->add_option("--format", constant.format)->check(kFormatCheck)->capture_default_str();

  ScanArgs scan_args;
  auto* s = app.add_subcommand("scan", "Stream log rho_n, log sigma_n and residuals over a grid");
  s->add_option("--grid", scan_args.grid, "dyadic | dyadic:A:B | step:K | dense | list:a,b,...")
      ->capture_default_str();
  s->add_option("--nmin", scan_args.nmin, "Smallest n")->capture_default_str();
  s->add_option("--nmax", scan_args.nmax, "Largest n")->capture_default_str();
  s->add_option("--format", scan_args.format)->check(kFormatCheck)->capture_default_str();
  s->add_option("--out", scan_args.out, "Output path (default stdout)");
  s->add_option("--blocks", scan_args.blocks, "Also write per-dyadic-block envelopes here");
  s->add_option("--gnuplot", scan_args.gnuplot, "Also write a gnuplot script here");
  s->add_option("--workers", scan_args.workers, "Worker threads")->check(CLI::PositiveNumber)
      ->capture_default_str();
  s->add_option("--checkpoint", scan_args.checkpoint, "Exact resync interval")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*c) return cmd_compute(compute, out);
    if (*v) return cmd_verify(verify_args, out);
    if (*t) return cmd_triangle(triangle, out);
    if (*k) return cmd_constant(constant, out);
    if (*s) return cmd_scan(scan_args, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace lcmf::cli
