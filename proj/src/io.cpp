#include "zcacs/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "zcacs/errors.hpp"
#include "zcacs/generator.hpp"

namespace zcacs {

namespace {

using nlohmann::json;

constexpr std::string_view kMagic = "zcacs-codeset";
constexpr int kVersion = 1;

std::string idx(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

std::int64_t as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ConfigError(path, "expected an integer");
  return j.get<std::int64_t>();
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw ConfigError(path, "expected an array");
  return j;
}

std::vector<std::int64_t> int_list(const json& j, const std::string& path) {
  std::vector<std::int64_t> out;
  const auto& arr = as_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(as_int(arr[i], idx(path, i)));
  return out;
}

std::vector<std::vector<std::int64_t>> int_matrix(const json& j, const std::string& path) {
  std::vector<std::vector<std::int64_t>> out;
  const auto& arr = as_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(int_list(arr[i], idx(path, i)));
  return out;
}

void read_blocks(const json& j, const std::string& path, std::vector<RadixBlock>& blocks, std::vector<int>& exps) {
  const auto rows = int_matrix(j, path);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != 3) throw ConfigError(idx(path, i), "expected [base, digits, exponent]");
    for (std::size_t k = 0; k < 3; ++k)
      if (rows[i][k] < 1 || rows[i][k] > 1'000'000)
        throw ConfigError(idx(idx(path, i), k), "expected a positive integer");
    blocks.push_back({rows[i][0], static_cast<int>(rows[i][1])});
    exps.push_back(static_cast<int>(rows[i][2]));
  }
}

std::vector<std::vector<int>> perm_list(const json& j, const std::string& path) {
  std::vector<std::vector<int>> out;
  for (auto& row : int_matrix(j, path)) {
    std::vector<int> p;
    for (auto v : row) p.push_back(static_cast<int>(std::clamp<std::int64_t>(v, -1, 1'000'000)));
    out.push_back(std::move(p));
  }
  return out;
}

json to_json(const GeneratorConfig& cfg) {
  const auto& spec = cfg.params.spec;
  json j;
  j["row_blocks"] = json::array();
  for (std::size_t i = 0; i < spec.row.blocks.size(); ++i)
    j["row_blocks"].push_back({spec.row.blocks[i].base, spec.row.blocks[i].digits, cfg.params.row_exponents[i]});
  j["col_blocks"] = json::array();
  for (std::size_t i = 0; i < spec.col.blocks.size(); ++i)
    j["col_blocks"].push_back({spec.col.blocks[i].base, spec.col.blocks[i].digits, cfg.params.col_exponents[i]});
  j["row_primed"] = spec.row.primed;
  j["col_primed"] = spec.col.primed;
  j["row_perms"] = cfg.row_perms;
  j["col_perms"] = cfg.col_perms;
  j["row_linear"] = cfg.row_linear;
  j["col_linear"] = cfg.col_linear;
  j["theta_offsets"] = cfg.theta_offsets;
  return j;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Header lines are "key value..."; this pulls the next one and checks its key.
std::string expect_line(std::istream& in, std::string_view key) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("truncated header: missing '" + std::string(key) + "'");
  if (line.compare(0, key.size(), key) != 0 || (line.size() > key.size() && line[key.size()] != ' '))
    throw FormatError("expected '" + std::string(key) + "', got '" + line.substr(0, 40) + "'");
  return line.size() > key.size() ? line.substr(key.size() + 1) : std::string{};
}

std::vector<std::int64_t> parse_ints(const std::string& text, std::size_t expected, std::string_view what) {
  std::istringstream ss(text);
  std::vector<std::int64_t> out;
  std::int64_t v;
  while (ss >> v) out.push_back(v);
  if (!ss.eof() || out.size() != expected)
    throw FormatError("malformed " + std::string(what) + ": '" + text.substr(0, 60) + "'");
  return out;
}

std::int64_t parse_one(std::istream& in, std::string_view key) {
  return parse_ints(expect_line(in, key), 1, key)[0];
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

GeneratorConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("", "config must be a JSON object");

  static const std::set<std::string> known = {"row_blocks", "col_blocks", "row_primed", "col_primed",
                                              "row_perms",  "col_perms",  "row_linear", "col_linear",
                                              "theta_offsets"};
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (!known.count(it.key())) throw ConfigError(it.key(), "unknown field");

  ConstructionParams params;
  if (doc.contains("row_blocks"))
    read_blocks(doc["row_blocks"], "row_blocks", params.spec.row.blocks, params.row_exponents);
  if (!doc.contains("col_blocks")) throw ConfigError("col_blocks", "required field missing");
  read_blocks(doc["col_blocks"], "col_blocks", params.spec.col.blocks, params.col_exponents);
  if (doc.contains("row_primed")) params.spec.row.primed = int_list(doc["row_primed"], "row_primed");
  if (doc.contains("col_primed")) params.spec.col.primed = int_list(doc["col_primed"], "col_primed");
  for (std::size_t i = 0; i < params.spec.row.primed.size(); ++i)
    if (params.spec.row.primed[i] < 1) throw ConfigError(idx("row_primed", i), "expected a positive integer");
  for (std::size_t i = 0; i < params.spec.col.primed.size(); ++i)
    if (params.spec.col.primed[i] < 1) throw ConfigError(idx("col_primed", i), "expected a positive integer");
  params.validate();

  auto cfg = GeneratorConfig::defaults_for(params);
  if (doc.contains("row_perms")) cfg.row_perms = perm_list(doc["row_perms"], "row_perms");
  if (doc.contains("col_perms")) cfg.col_perms = perm_list(doc["col_perms"], "col_perms");
  if (doc.contains("row_linear")) cfg.row_linear = int_matrix(doc["row_linear"], "row_linear");
  if (doc.contains("col_linear")) cfg.col_linear = int_matrix(doc["col_linear"], "col_linear");
  if (doc.contains("theta_offsets")) cfg.theta_offsets = int_list(doc["theta_offsets"], "theta_offsets");
  cfg.validate();
  return cfg;
}

GeneratorConfig load_config(const std::filesystem::path& path) { return parse_config(read_file(path)); }

std::string config_to_json(const GeneratorConfig& cfg, bool pretty) { return to_json(cfg).dump(pretty ? 2 : -1); }

int entry_width(std::int64_t modulus) {
  if (modulus <= 256) return 1;
  if (modulus <= 65536) return 2;
  return 4;
}

void write_codeset(std::ostream& out, const CodeSet& cs, Encoding encoding) {
  const auto& m = cs.meta;
  out << kMagic << ' ' << kVersion << '\n'
      << "kind " << to_string(m.kind) << '\n'
      << "sets " << m.set_count << '\n'
      << "set_size " << m.set_size << '\n'
      << "shape " << m.rows << ' ' << m.cols << '\n'
      << "zcz " << m.zcz_rows << ' ' << m.zcz_cols << '\n'
      << "lambda " << m.lambda << '\n'
      << "delta " << m.delta << '\n'
      << "alpha " << m.alpha << ' ' << m.alpha1 << '\n'
      << "optimal " << (m.optimal ? "true" : "false") << '\n'
      << "config " << config_to_json(cs.provenance) << '\n';
  if (encoding == Encoding::Binary) {
    const int width = entry_width(m.delta);
    out << "encoding binary " << width << '\n';
    std::string buf;
    for (const auto& set : cs.family)
      for (const auto& arr : set)
        for (auto e : arr.entries())
          for (int b = 0; b < width; ++b) buf.push_back(static_cast<char>((e >> (8 * b)) & 0xff));
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    return;
  }
  out << "encoding text\n";
  for (std::size_t k = 0; k < cs.family.size(); ++k) {
    out << "set " << k << '\n';
    for (std::size_t i = 0; i < cs.family[k].size(); ++i) {
      const auto& arr = cs.family[k][i];
      out << "array " << i << '\n';
      for (std::int64_t r = 0; r < arr.rows(); ++r) {
        for (std::int64_t c = 0; c < arr.cols(); ++c) out << (c ? " " : "") << arr.at(r, c);
        out << '\n';
      }
    }
  }
  out << "end\n";
}

void save_codeset(const std::filesystem::path& path, const CodeSet& cs, Encoding encoding) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  write_codeset(out, cs, encoding);
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

CodeSet read_codeset(std::istream& in) {
  const auto version = parse_one(in, kMagic);
  if (version != kVersion) throw FormatError("unsupported format version " + std::to_string(version));

  CodeSet cs;
  auto& m = cs.meta;
  m.kind = parse_code_kind(expect_line(in, "kind"));
  m.set_count = parse_one(in, "sets");
  m.set_size = parse_one(in, "set_size");
  auto shape = parse_ints(expect_line(in, "shape"), 2, "shape");
  m.rows = shape[0];
  m.cols = shape[1];
  auto zone = parse_ints(expect_line(in, "zcz"), 2, "zcz");
  m.zcz_rows = zone[0];
  m.zcz_cols = zone[1];
  m.lambda = parse_one(in, "lambda");
  m.delta = parse_one(in, "delta");
  auto alpha = parse_ints(expect_line(in, "alpha"), 2, "alpha");
  m.alpha = alpha[0];
  m.alpha1 = alpha[1];
  const auto optimal = expect_line(in, "optimal");
  if (optimal != "true" && optimal != "false") throw FormatError("malformed optimal flag");
  m.optimal = optimal == "true";
  try {
    cs.provenance = parse_config(expect_line(in, "config"));
  } catch (const ConfigError& e) {
    throw FormatError(std::string("embedded config: ") + e.what());
  }

  if (m.set_count < 1 || m.set_size < 1 || m.rows < 1 || m.cols < 1 || m.delta < 1 ||
      m.set_count * m.set_size * m.rows * m.cols > (std::int64_t{1} << 34))
    throw FormatError("implausible code set dimensions");
  auto expected = derive_params(cs.provenance);
  expected.kind = m.kind;
  if (m.kind != CodeKind::Ccc) expected.delta = cs.provenance.delta();
  if (!(expected == m)) throw FormatError("header disagrees with its embedded config");

  const auto encoding = expect_line(in, "encoding");
  cs.family.assign(static_cast<std::size_t>(m.set_count), {});
  auto check_entry = [&](std::int64_t v) {
    if (v < 0 || v >= m.delta) throw FormatError("entry " + std::to_string(v) + " outside Z_" + std::to_string(m.delta));
  };
  if (encoding.rfind("binary ", 0) == 0) {
    const auto width = parse_ints(encoding.substr(7), 1, "encoding")[0];
    if (width != entry_width(m.delta)) throw FormatError("binary width does not match delta");
    for (auto& set : cs.family)
      for (std::int64_t i = 0; i < m.set_size; ++i) {
        PhaseArray arr(m.rows, m.cols, m.delta);
        std::string buf(static_cast<std::size_t>(m.rows * m.cols * width), '\0');
        if (!in.read(buf.data(), static_cast<std::streamsize>(buf.size())))
          throw FormatError("truncated binary body");
        for (std::size_t e = 0; e < arr.entries().size(); ++e) {
          std::uint32_t v = 0;
          for (std::int64_t b = 0; b < width; ++b)
            v |= static_cast<std::uint32_t>(static_cast<unsigned char>(buf[e * static_cast<std::size_t>(width) + static_cast<std::size_t>(b)])) << (8 * b);
          check_entry(v);
          arr.entries()[e] = v;
        }
        set.push_back(std::move(arr));
      }
    if (in.peek() != std::char_traits<char>::eof()) throw FormatError("trailing bytes after binary body");
  } else if (encoding == "text") {
    for (std::size_t k = 0; k < cs.family.size(); ++k) {
      if (parse_one(in, "set") != static_cast<std::int64_t>(k)) throw FormatError("sets out of order");
      for (std::int64_t i = 0; i < m.set_size; ++i) {
        if (parse_one(in, "array") != i) throw FormatError("arrays out of order in set " + std::to_string(k));
        PhaseArray arr(m.rows, m.cols, m.delta);
        for (std::int64_t r = 0; r < m.rows; ++r) {
          std::string line;
          if (!std::getline(in, line)) throw FormatError("truncated array body");
          const auto row = parse_ints(line, static_cast<std::size_t>(m.cols), "array row");
          for (std::int64_t c = 0; c < m.cols; ++c) {
            check_entry(row[static_cast<std::size_t>(c)]);
            arr.set(r, c, row[static_cast<std::size_t>(c)]);
          }
        }
        cs.family[k].push_back(std::move(arr));
      }
    }
    expect_line(in, "end");
  } else {
    throw FormatError("unknown encoding '" + encoding + "'");
  }
  cs.check_shape();
  return cs;
}

CodeSet load_codeset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_codeset(in);
}

std::string format_params(const CodeSetParams& p) {
  const auto opt = optimality(p);
  std::ostringstream out;
  out << "kind " << to_string(p.kind) << '\n'
      << "sets " << p.set_count << '\n'
      << "set_size " << p.set_size << '\n'
      << "shape " << p.rows << ' ' << p.cols << '\n'
      << "zcz " << p.zcz_rows << ' ' << p.zcz_cols << '\n'
      << "lambda " << p.lambda << '\n'
      << "delta " << p.delta << '\n'
      << "alpha " << p.alpha << '\n'
      << "alpha1 " << p.alpha1 << '\n'
      << "bound " << opt.lhs << " <= " << opt.rhs << ' ' << (opt.bound_holds ? "holds" : "violated") << '\n'
      << "optimal_sets " << opt.optimal_set_count << '\n'
      << "optimal " << (p.optimal ? "true" : "false") << '\n';
  return out.str();
}

std::string format_report(const VerificationReport& r) {
  std::ostringstream out;
  out << "verdict " << (r.pass ? "pass" : "fail") << '\n'
      << "kind " << to_string(r.kind) << '\n'
      << "arithmetic " << (r.exact ? "exact" : "float") << '\n'
      << "zone " << r.zcz_rows << ' ' << r.zcz_cols << '\n'
      << "tolerance " << fmt_double(r.tolerance) << '\n'
      << "structure " << (r.structure_ok ? "ok" : "fail") << '\n';
  if (!r.structure_note.empty()) out << "structure_note " << r.structure_note << '\n';
  out << "peak_expected " << r.peak_expected << '\n'
      << "peak_observed " << fmt_double(r.peak_observed) << '\n'
      << "peak_set " << r.peak_set << '\n'
      << "peak " << (r.peak_ok ? "ok" : "fail") << '\n'
      << "shifts_checked " << r.shifts_checked << '\n';
  auto offender = [&](const char* name, const Offender& o, bool cross) {
    out << name << "_magnitude " << fmt_double(o.magnitude) << '\n';
    if (!o.found) return;
    out << name << "_shift " << o.tau1 << ' ' << o.tau2 << '\n';
    if (cross)
      out << name << "_sets " << o.set_a << ' ' << o.set_b << '\n';
    else
      out << name << "_set " << o.set_a << '\n';
    if (r.exact) out << name << "_nonzero " << (o.nonzero ? "true" : "false") << '\n';
  };
  offender("worst_auto", r.worst_auto, false);
  offender("worst_cross", r.worst_cross, true);
  if (!r.violations.empty()) {
    out << "violations " << r.violations.size() << '\n';
    for (const auto& v : r.violations)
      out << "violation " << (v.cross ? "cross " : "auto ") << v.set_a << ' ' << v.set_b << ' ' << v.tau1 << ' '
          << v.tau2 << ' ' << fmt_double(v.magnitude) << '\n';
  }
  return out.str();
}

}  // namespace zcacs
