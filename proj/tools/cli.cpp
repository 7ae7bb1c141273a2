#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "zcacs/correlation.hpp"
#include "zcacs/errors.hpp"
#include "zcacs/generator.hpp"
#include "zcacs/io.hpp"
#include "zcacs/table.hpp"

namespace zcacs::cli {

namespace {

struct Options {
  std::string config;
  std::string input;
  std::string out;
  std::string grid;
  std::string format = "text";
  std::optional<std::int64_t> z1, z2;
  double tol = 0.0;
  bool exact = false;
  bool verbose = false;
  int threads = 1;
  // bound
  std::int64_t sets = 0, set_size = 0, l1 = 0, l2 = 0;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path);
  f << text;
  if (!f.flush()) throw IoError("write failed for " + path);
}

Encoding encoding_of(const std::string& format) {
  if (format == "text") return Encoding::Text;
  if (format == "binary") return Encoding::Binary;
  throw ConfigError("--format", "code set files are written as text or binary");
}

GeneratorConfig read_config(const Options& o, std::ostream& err) {
  auto cfg = load_config(o.config);
  for (const auto& w : config_warnings(cfg)) err << "warning: " << w << '\n';
  return cfg;
}

int emit_codeset(const CodeSet& cs, const Options& o, std::ostream& out) {
  const auto enc = encoding_of(o.format);
  save_codeset(o.out, cs, enc);
  out << format_params(cs.meta) << "wrote " << o.out << '\n';
  return kOk;
}

int cmd_generate(const Options& o, std::ostream& out, std::ostream& err) {
  encoding_of(o.format);
  const auto cfg = read_config(o, err);
  return emit_codeset(generate(cfg, o.threads), o, out);
}

int cmd_reduce(const Options& o, std::ostream& out, std::ostream& err) {
  encoding_of(o.format);
  const auto cfg = read_config(o, err);
  return emit_codeset(reduce_to_1d(cfg, o.threads), o, out);
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.config.empty() == o.input.empty()) throw ConfigError("--in/--config", "give exactly one of --in or --config");
  const CodeSet cs = o.input.empty() ? generate(read_config(o, err), o.threads) : load_codeset(o.input);

  VerifyOptions vo;
  vo.tolerance = o.tol;
  vo.exact = o.exact;
  vo.threads = o.threads;
  vo.verbose = o.verbose;
  VerificationReport rep;
  if (cs.meta.kind == CodeKind::Ccc && !o.z1 && !o.z2) {
    rep = verify_ccc(cs, vo);
  } else {
    rep = verify_zcacs(cs, o.z1.value_or(cs.meta.zcz_rows), o.z2.value_or(cs.meta.zcz_cols), vo);
  }
  const auto text = format_report(rep);
  if (!o.out.empty()) write_text(o.out, text);
  out << text;
  return rep.pass ? kOk : kPropertyFailure;
}

int cmd_bound(const Options& o, std::ostream& out, std::ostream& err) {
  if (!o.config.empty()) {
    const auto p = derive_params(read_config(o, err));
    out << format_params(p);
    return kOk;
  }
  if (!o.z1 || !o.z2) throw ConfigError("--z1/--z2", "bound needs a zone (or --config)");
  const auto r = optimality(o.sets, o.set_size, o.l1, o.l2, *o.z1, *o.z2);
  out << "bound " << r.lhs << " <= " << r.rhs << ' ' << (r.bound_holds ? "holds" : "violated") << '\n'
      << "optimal_sets " << r.optimal_set_count << '\n'
      << "optimal " << (r.optimal ? "true" : "false") << '\n';
  return kOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  if (o.format != "text" && o.format != "csv") throw ConfigError("--format", "tables are written as text or csv");
  const auto rows = enumerate_table(parse_grid(slurp(o.grid)));
  const auto text = format_table(rows, o.format == "csv");
  if (!o.out.empty()) write_text(o.out, text);
  out << text;
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Construct and verify Z-complementary array code sets"};
  app.require_subcommand(1);

  auto threads = [&](CLI::App* sub) {
    sub->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  };

  auto* gen = app.add_subcommand("generate", "Build a code set from a config and write it");
  gen->add_option("--config", o.config, "Config document (JSON)")->required();
  gen->add_option("--out", o.out, "Output code set file")->required();
  gen->add_option("--format", o.format, "text or binary");
  threads(gen);

  auto* red = app.add_subcommand("reduce", "Build the single-row (1D) family of a config");
  red->add_option("--config", o.config, "Config document (JSON)")->required();
  red->add_option("--out", o.out, "Output code set file")->required();
  red->add_option("--format", o.format, "text or binary");
  threads(red);

  auto* ver = app.add_subcommand("verify", "Check correlation properties exhaustively");
  ver->add_option("--in", o.input, "Code set file");
  ver->add_option("--config", o.config, "Generate from this config, then verify");
  ver->add_option("--out", o.out, "Write the report here as well");
  ver->add_option("--z1", o.z1, "Zone height override")->check(CLI::PositiveNumber);
  ver->add_option("--z2", o.z2, "Zone width override")->check(CLI::PositiveNumber);
  ver->add_option("--tol", o.tol, "Zero tolerance")->check(CLI::PositiveNumber);
  ver->add_flag("--exact", o.exact, "Exact cyclotomic arithmetic");
  ver->add_flag("--verbose", o.verbose, "List every violation");
  threads(ver);

  auto* bnd = app.add_subcommand("bound", "Set-size bound and optimality");
  bnd->add_option("--config", o.config, "Derive parameters from a config");
  bnd->add_option("--sets", o.sets, "Number of sets");
  bnd->add_option("--set-size", o.set_size, "Arrays per set");
  bnd->add_option("--l1", o.l1, "Array rows");
  bnd->add_option("--l2", o.l2, "Array columns");
  bnd->add_option("--z1", o.z1, "Zone rows");
  bnd->add_option("--z2", o.z2, "Zone columns");

  auto* tab = app.add_subcommand("table", "Enumerate achievable parameters over a grid");
  tab->add_option("--grid", o.grid, "Grid document (JSON)")->required();
  tab->add_option("--format", o.format, "text or csv");
  tab->add_option("--out", o.out, "Write the table here as well");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    if (*gen) return cmd_generate(o, out, err);
    if (*red) return cmd_reduce(o, out, err);
    if (*ver) return cmd_verify(o, out, err);
    if (*bnd) return cmd_bound(o, out, err);
    if (*tab) return cmd_table(o, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return kIoError;
  } catch (const FormatError& e) {
    err << "corrupt input: " << e.what() << '\n';
    return kCorruptInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
  return kConfigError;
}

}  // namespace zcacs::cli
