#include "cliffhopf/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace cliffhopf;
using report::Json;

namespace {

struct Options {
  std::string config_path;
  std::string out_path;
  bool markdown = false;
  int truncation = -1;
  int samples = -1;
  long long seed = -1;
  int jobs = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

report::InstanceConfig load(const Options& o) {
  if (o.config_path.empty()) throw ParseError("--config is required for this command");
  auto c = report::parse_config(read_file(o.config_path), o.config_path);
  if (o.truncation >= 0) c.truncation = o.truncation;
  if (o.samples >= 0) c.samples = o.samples;
  if (o.seed >= 0) c.seed = static_cast<std::uint64_t>(o.seed);
  return c;
}

void emit(const Options& o, const std::string& title, const Json& j) {
  const std::string text = report::dump(j);
  if (!o.out_path.empty()) {
    std::ofstream out(o.out_path);
    if (!out) throw std::runtime_error(o.out_path + ": cannot write");
    out << text;
  }
  if (o.markdown) std::cout << report::markdown(title, j);
  else if (o.out_path.empty()) std::cout << text;
}

CliffordStructure structure(const report::InstanceConfig& c) { return CliffordStructure(c.n, c.eta, c.xi); }

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Clifford bi-gebra analysis"};
  app.require_subcommand(1);
  Options o;
  auto common = [&o](CLI::App* sub) {
    sub->add_option("--config", o.config_path, "Instance config (JSON)");
    sub->add_option("--out", o.out_path, "Write the JSON report here");
    sub->add_flag("--markdown", o.markdown, "Print a human summary");
    sub->add_option("--l", o.truncation, "Word truncation bound")->check(CLI::Range(0, 8));
    sub->add_option("--samples", o.samples, "Random instances for sweep")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", o.seed, "Sampling seed")->check(CLI::NonNegativeNumber);
    sub->add_option("--jobs", o.jobs, "Worker threads for sweep")->check(CLI::PositiveNumber);
  };
  auto* tables = app.add_subcommand("tables", "Product and co-product tables");
  auto* verify = app.add_subcommand("verify", "Run every invariant on the instance");
  auto* antipode = app.add_subcommand("antipode", "Solve for the antipode");
  auto* sigma = app.add_subcommand("sigma", "Solve the bi-gebra law for σ");
  auto* braided = app.add_subcommand("braided", "Braided flags for the solved σ");
  auto* shuffle = app.add_subcommand("shuffle", "Word algebra, lifts and symmetrizers");
  auto* sweep = app.add_subcommand("sweep", "Parameter sweep with aggregate counts");
  for (auto* sub : {tables, verify, antipode, sigma, braided, shuffle, sweep}) common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*tables) {
      emit(o, "tables", report::tables_section(structure(load(o))));
    } else if (*verify) {
      const auto outcome = report::verify(load(o));
      emit(o, "verify", outcome.report);
      return outcome.passed() ? 0 : 1;
    } else if (*antipode) {
      emit(o, "antipode", report::antipode_section(structure(load(o))));
    } else if (*sigma) {
      emit(o, "sigma", report::sigma_section(structure(load(o))));
    } else if (*braided) {
      emit(o, "braided", report::braided_section(structure(load(o))));
    } else if (*shuffle) {
      const auto c = load(o);
      emit(o, "shuffle", report::shuffle_section(structure(c), c.truncation));
    } else if (*sweep) {
      report::SweepRequest req;
      if (!o.config_path.empty()) {
        const auto c = load(o);
        req.pairs = c.sweep_pairs;
        req.random_samples = c.samples;
        req.seed = c.seed;
      } else {
        req.random_samples = std::max(o.samples, 0);
        req.seed = o.seed >= 0 ? static_cast<std::uint64_t>(o.seed) : 1;
      }
      req.jobs = o.jobs;
      emit(o, "sweep", report::sweep(req));
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
