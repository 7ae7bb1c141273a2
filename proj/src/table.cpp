#include "zcacs/table.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "zcacs/errors.hpp"
#include "zcacs/generator.hpp"

namespace zcacs {

namespace {

using nlohmann::json;

std::vector<std::int64_t> ints(const json& doc, const char* key, bool required) {
  if (!doc.contains(key)) {
    if (required) throw ConfigError(key, "required field missing");
    return {};
  }
  const auto& j = doc[key];
  if (!j.is_array()) throw ConfigError(key, "expected an array of integers");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer() || j[i].get<std::int64_t>() < 0)
      throw ConfigError(std::string(key) + "[" + std::to_string(i) + "]", "expected a non-negative integer");
    out.push_back(j[i].get<std::int64_t>());
  }
  return out;
}

std::int64_t scalar(const json& doc, const char* key) {
  if (!doc.contains(key)) return 0;
  const auto& j = doc[key];
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) throw ConfigError(key, "expected a non-negative integer");
  return j.get<std::int64_t>();
}

std::vector<std::vector<std::int64_t>> lists(const json& doc, const char* key) {
  const auto& j = doc[key];
  if (!j.is_array()) throw ConfigError(key, "expected an array");
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string path = std::string(key) + "[" + std::to_string(i) + "]";
    if (j[i].is_number_integer()) {
      out.push_back({j[i].get<std::int64_t>()});
    } else if (j[i].is_array()) {
      std::vector<std::int64_t> l;
      for (const auto& v : j[i]) {
        if (!v.is_number_integer()) throw ConfigError(path, "expected integers");
        l.push_back(v.get<std::int64_t>());
      }
      out.push_back(std::move(l));
    } else {
      throw ConfigError(path, "expected an integer or a list of integers");
    }
  }
  return out;
}

struct Triple {
  std::int64_t base, digits, exponent;
};

std::vector<Triple> triples(const std::vector<std::int64_t>& b, const std::vector<std::int64_t>& d,
                            const std::vector<std::int64_t>& e) {
  std::vector<Triple> out;
  for (auto x : b)
    for (auto y : d)
      for (auto z : e) out.push_back({x, y, z});
  return out;
}

// Every non-decreasing index tuple of the given length.
void multisets(std::size_t n, int count, std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
  if (static_cast<int>(cur.size()) == count) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = cur.empty() ? 0 : cur.back(); i < n; ++i) {
    cur.push_back(i);
    multisets(n, count, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<Triple>> side_choices(const std::vector<Triple>& pool, const std::vector<int>& counts) {
  std::vector<std::vector<Triple>> out;
  for (int c : counts) {
    std::vector<std::vector<std::size_t>> picks;
    std::vector<std::size_t> cur;
    if (c == 0) {
      out.emplace_back();
      continue;
    }
    if (pool.empty()) continue;
    multisets(pool.size(), c, cur, picks);
    for (const auto& pick : picks) {
      std::vector<Triple> blocks;
      for (auto i : pick) blocks.push_back(pool[i]);
      out.push_back(std::move(blocks));
    }
  }
  return out;
}

std::string describe(const std::vector<Triple>& row, const std::vector<Triple>& col,
                     const std::vector<std::int64_t>& pp, const std::vector<std::int64_t>& qp) {
  std::ostringstream s;
  auto blocks = [&](const char* name, const std::vector<Triple>& bs) {
    s << name << "=[";
    for (std::size_t i = 0; i < bs.size(); ++i)
      s << (i ? " " : "") << bs[i].base << '^' << bs[i].digits << '/' << bs[i].exponent;
    s << ']';
  };
  auto primes = [&](const char* name, const std::vector<std::int64_t>& ps) {
    s << ' ' << name << "=[";
    for (std::size_t i = 0; i < ps.size(); ++i) s << (i ? " " : "") << ps[i];
    s << ']';
  };
  blocks("p", row);
  s << ' ';
  blocks("q", col);
  primes("p'", pp);
  primes("q'", qp);
  return s.str();
}

}  // namespace

TableGrid parse_grid(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("", "grid must be a JSON object");
  TableGrid g;
  g.p = ints(doc, "p", false);
  g.m = ints(doc, "m", false);
  g.k = ints(doc, "k", false);
  g.q = ints(doc, "q", true);
  g.n = ints(doc, "n", true);
  g.r = ints(doc, "r", true);
  if (doc.contains("p_prime")) g.p_prime = lists(doc, "p_prime");
  if (doc.contains("q_prime")) g.q_prime = lists(doc, "q_prime");
  else g.q_prime = {{}};
  if (doc.contains("row_blocks")) {
    g.row_block_counts.clear();
    for (auto v : ints(doc, "row_blocks", true)) g.row_block_counts.push_back(static_cast<int>(v));
  } else if (g.p.empty()) {
    g.row_block_counts = {0};
  }
  if (doc.contains("col_blocks")) {
    g.col_block_counts.clear();
    for (auto v : ints(doc, "col_blocks", true)) g.col_block_counts.push_back(static_cast<int>(v));
  }
  g.max_sets = scalar(doc, "max_sets");
  g.max_area = scalar(doc, "max_area");
  for (auto c : g.col_block_counts)
    if (c < 1) throw ConfigError("col_blocks", "every q-side needs at least one block");
  return g;
}

std::vector<TableRow> enumerate_table(const TableGrid& grid) {
  const auto rows = side_choices(triples(grid.p, grid.m, grid.k), grid.row_block_counts);
  const auto cols = side_choices(triples(grid.q, grid.n, grid.r), grid.col_block_counts);

  using Key = std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t, std::int64_t, std::int64_t,
                         std::int64_t, int, bool>;
  std::map<Key, TableRow> unique;
  std::size_t points = 0;
  for (const auto& rb : rows)
    for (const auto& cb : cols)
      for (const auto& pp : grid.p_prime)
        for (const auto& qp : grid.q_prime) {
          ConstructionParams params;
          for (const auto& t : rb) {
            params.spec.row.blocks.push_back({t.base, static_cast<int>(t.digits)});
            params.row_exponents.push_back(static_cast<int>(t.exponent));
          }
          for (const auto& t : cb) {
            params.spec.col.blocks.push_back({t.base, static_cast<int>(t.digits)});
            params.col_exponents.push_back(static_cast<int>(t.exponent));
          }
          params.spec.row.primed = pp;
          params.spec.col.primed = qp;
          params.validate();
          const auto p = derive_params(GeneratorConfig::defaults_for(params));
          ++points;
          if (grid.max_sets > 0 && p.set_count > grid.max_sets) continue;
          if (grid.max_area > 0 && p.rows * p.cols > grid.max_area) continue;
          Key key{p.set_count, p.set_size, p.rows, p.cols, p.zcz_rows, p.zcz_cols, p.delta,
                  static_cast<int>(p.kind), p.optimal};
          unique.try_emplace(key, TableRow{p, describe(rb, cb, pp, qp)});
        }
  if (points == 0) throw ConfigError("", "parameter grid is empty");
  std::vector<TableRow> out;
  for (auto& [key, row] : unique) out.push_back(std::move(row));
  return out;
}

std::string format_table(const std::vector<TableRow>& rows, bool csv) {
  std::ostringstream out;
  if (csv) {
    out << "kind,sets,set_size,rows,cols,zcz_rows,zcz_cols,delta,optimal,source\n";
    for (const auto& r : rows) {
      const auto& p = r.params;
      out << to_string(p.kind) << ',' << p.set_count << ',' << p.set_size << ',' << p.rows << ',' << p.cols << ','
          << p.zcz_rows << ',' << p.zcz_cols << ',' << p.delta << ',' << (p.optimal ? "true" : "false") << ",\""
          << r.source << "\"\n";
    }
    return out.str();
  }
  char line[256];
  std::snprintf(line, sizeof line, "%-9s %7s %8s %11s %11s %6s %8s  %s\n", "kind", "sets", "set_size", "array",
                "zcz", "delta", "optimal", "source");
  out << line;
  for (const auto& r : rows) {
    const auto& p = r.params;
    const auto array = std::to_string(p.rows) + "x" + std::to_string(p.cols);
    const auto zone = std::to_string(p.zcz_rows) + "x" + std::to_string(p.zcz_cols);
    std::snprintf(line, sizeof line, "%-9s %7lld %8lld %11s %11s %6lld %8s  ", std::string(to_string(p.kind)).c_str(),
                  static_cast<long long>(p.set_count), static_cast<long long>(p.set_size), array.c_str(), zone.c_str(),
                  static_cast<long long>(p.delta), p.optimal ? "yes" : "no");
    out << line << r.source << '\n';
  }
  return out.str();
}

}  // namespace zcacs
