#include "imw/mtab.hpp"

#include <charconv>
#include <sstream>

namespace imw {

namespace {

struct Line {
  std::size_t number;  // 1-based
  std::size_t column;  // 1-based column of the first character of `text`
  std::string_view text;
};

[[noreturn]] void syntax_error(std::size_t line, std::size_t column,
                               const std::string& what) {
  fail(ErrorCode::SyntaxError,
       "line " + std::to_string(line) + ", column " + std::to_string(column) +
           ": " + what,
       {static_cast<Elem>(line), static_cast<Elem>(column)});
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    std::size_t b = 0;
    while (b < raw.size() && is_space(raw[b])) ++b;
    std::size_t e = raw.size();
    while (e > b && is_space(raw[e - 1])) --e;
    if (e > b) out.push_back({number, b + 1, raw.substr(b, e - b)});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

Elem parse_index(std::string_view token, std::size_t line, std::size_t column) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    syntax_error(line, column, "expected a non-negative integer, got '" +
                                   std::string(token) + "'");
  }
  if (value >= std::numeric_limits<Elem>::max()) {
    syntax_error(line, column, "integer too large");
  }
  return static_cast<Elem>(value);
}

/// Whitespace-separated tokens with their 1-based columns.
std::vector<std::pair<std::string_view, std::size_t>> tokens(const Line& l) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t i = 0;
  while (i < l.text.size()) {
    while (i < l.text.size() && is_space(l.text[i])) ++i;
    std::size_t b = i;
    while (i < l.text.size() && !is_space(l.text[i])) ++i;
    if (i > b) out.emplace_back(l.text.substr(b, i - b), l.column + b);
  }
  return out;
}

/// "key=value" -> value (with its column) or nullopt for another key.
std::optional<std::pair<std::string_view, std::size_t>> keyed(const Line& l,
                                                              std::string_view key) {
  auto eq = l.text.find('=');
  if (eq == std::string_view::npos) return std::nullopt;
  std::string_view k = l.text.substr(0, eq);
  while (!k.empty() && is_space(k.back())) k.remove_suffix(1);
  if (k != key) return std::nullopt;
  std::size_t v = eq + 1;
  while (v < l.text.size() && is_space(l.text[v])) ++v;
  return std::pair{l.text.substr(v), l.column + v};
}

std::vector<Elem> parse_index_csv(std::string_view value, std::size_t line,
                                  std::size_t column) {
  std::vector<Elem> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = value.find(',', start);
    std::string_view field =
        value.substr(start, comma == std::string_view::npos ? value.npos : comma - start);
    std::size_t lead = 0;
    while (lead < field.size() && is_space(field[lead])) ++lead;
    std::size_t trail = field.size();
    while (trail > lead && is_space(field[trail - 1])) --trail;
    out.push_back(parse_index(field.substr(lead, trail - lead), line,
                              column + start + lead));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}


template <typename F>
auto json_guard(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::SyntaxError, std::string("malformed JSON document: ") + e.what());
  }
}

void expect_kind(const Json& j, std::string_view kind) {
  if (j.at("schema").get<int>() != kJsonSchema) {
    fail(ErrorCode::SyntaxError, "unsupported schema version");
  }
  if (j.at("kind").get<std::string>() != kind) {
    fail(ErrorCode::SyntaxError, "expected a document of kind " + std::string(kind));
  }
}

std::vector<Elem> flatten(const std::vector<std::vector<Elem>>& rows,
                          std::size_t width, const char* what) {
  std::vector<Elem> out;
  for (const auto& r : rows) {
    if (r.size() != width) {
      fail(ErrorCode::BadShape, std::string(what) + " row has wrong width");
    }
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

std::vector<std::vector<Elem>> unflatten(const std::vector<Elem>& flat,
                                         std::size_t width) {
  std::vector<std::vector<Elem>> out;
  for (std::size_t i = 0; i < flat.size(); i += width) {
    out.emplace_back(flat.begin() + i, flat.begin() + i + width);
  }
  return out;
}

}  // namespace

std::vector<std::string> parse_csv(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (true) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::string field;
    if (i < text.size() && text[i] == '"') {
      ++i;
      while (true) {
        if (i >= text.size()) fail(ErrorCode::SyntaxError, "unterminated quoted label");
        if (text[i] == '"') {
          if (i + 1 < text.size() && text[i + 1] == '"') {
            field += '"';
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        field += text[i++];
      }
      while (i < text.size() && is_space(text[i])) ++i;
      if (i < text.size() && text[i] != ',') {
        fail(ErrorCode::SyntaxError, "unexpected text after quoted label");
      }
    } else {
      std::size_t b = i;
      while (i < text.size() && text[i] != ',') ++i;
      std::size_t e = i;
      while (e > b && is_space(text[e - 1])) --e;
      field = std::string(text.substr(b, e - b));
    }
    out.push_back(std::move(field));
    if (i >= text.size()) break;
    ++i;  // ','
  }
  return out;
}

std::string format_csv(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i != 0) out += ',';
    const auto& f = fields[i];
    bool quote = f.find_first_of(",\"#") != std::string::npos || f.empty() ||
                 is_space(f.front()) || is_space(f.back());
    if (!quote) {
      out += f;
      continue;
    }
    out += '"';
    for (char c : f) {
      if (c == '"') out += '"';
      out += c;
    }
    out += '"';
  }
  return out;
}

FiniteMonoid parse_mtab(std::string_view text) {
  auto lines = significant_lines(text);
  std::size_t at = 0;
  auto next = [&](const char* expected) -> const Line& {
    if (at >= lines.size()) {
      std::size_t last = lines.empty() ? 0 : lines.back().number;
      syntax_error(last + 1, 1, std::string("unexpected end of input, expected ") + expected);
    }
    return lines[at++];
  };

  const Line& header = next("header");
  auto head = tokens(header);
  if (head.size() != 2 || head[0].first != "mtab" || head[1].first != "v1") {
    syntax_error(header.number, header.column, "expected header 'mtab v1'");
  }
  const Line& n_line = next("n=<int>");
  auto n_value = keyed(n_line, "n");
  if (!n_value) syntax_error(n_line.number, n_line.column, "expected n=<int>");
  Elem n = parse_index(n_value->first, n_line.number, n_value->second);
  if (n == 0) syntax_error(n_line.number, n_value->second, "n must be positive");

  const Line& id_line = next("id=<int>");
  auto id_value = keyed(id_line, "id");
  if (!id_value) syntax_error(id_line.number, id_line.column, "expected id=<int>");
  Elem id = parse_index(id_value->first, id_line.number, id_value->second);

  std::vector<std::string> labels;
  if (at < lines.size()) {
    if (auto l = keyed(lines[at], "labels")) {
      try {
        labels = parse_csv(l->first);
      } catch (const Error& e) {
        syntax_error(lines[at].number, l->second, e.what());
      }
      if (labels.size() != n) {
        syntax_error(lines[at].number, l->second,
                     "expected " + std::to_string(n) + " labels, got " +
                         std::to_string(labels.size()));
      }
      ++at;
    }
  }

  std::vector<Elem> table;
  table.reserve(static_cast<std::size_t>(n) * n);
  for (Elem r = 0; r < n; ++r) {
    const Line& row = next("table row");
    auto toks = tokens(row);
    if (toks.size() != n) {
      std::size_t col = toks.size() > n ? toks[n].second
                                        : row.column + row.text.size();
      syntax_error(row.number, col,
                   "row " + std::to_string(r) + " has " + std::to_string(toks.size()) +
                       " entries, expected " + std::to_string(n));
    }
    for (const auto& [tok, col] : toks) table.push_back(parse_index(tok, row.number, col));
  }

  std::optional<std::vector<Elem>> inv;
  std::size_t inv_line = 0;
  if (at < lines.size()) {
    if (auto l = keyed(lines[at], "inv")) {
      inv = parse_index_csv(l->first, lines[at].number, l->second);
      inv_line = lines[at].number;
      if (inv->size() != n) {
        syntax_error(lines[at].number, l->second,
                     "expected " + std::to_string(n) + " inverse entries");
      }
      ++at;
    }
  }
  if (at < lines.size()) {
    syntax_error(lines[at].number, lines[at].column, "unexpected trailing content");
  }

  auto m = FiniteMonoid::validate(n, std::move(table), id, std::move(labels));
  if (inv) {
    auto computed = validate_inverse(m).inverses();
    if (computed != *inv) {
      fail(ErrorCode::InverseMismatch,
           "inv row on line " + std::to_string(inv_line) +
               " does not match the computed inverses " + join(computed),
           computed);
    }
  }
  return m;
}

std::string serialize_mtab(const FiniteMonoid& m) {
  std::ostringstream out;
  out << "mtab v1\n";
  out << "n=" << m.size() << "\n";
  out << "id=" << m.identity() << "\n";
  if (m.has_labels()) out << "labels=" << format_csv(m.labels()) << "\n";
  for (Elem x = 0; x < m.size(); ++x) {
    auto row = m.row(x);
    for (std::size_t y = 0; y < row.size(); ++y) {
      out << (y == 0 ? "" : " ") << row[y];
    }
    out << "\n";
  }
  std::optional<InverseMonoid> inv;
  try {
    inv = validate_inverse(m);
  } catch (const Error&) {
    // not inverse: no inv row
  }
  if (inv) out << "inv=" << join(inv->inverses()) << "\n";
  return out.str();
}

Json monoid_to_json(const FiniteMonoid& m) {
  Json j;
  j["n"] = m.size();
  j["id"] = m.identity();
  if (m.has_labels()) j["labels"] = m.labels();
  j["table"] = m.rows();
  return j;
}

FiniteMonoid monoid_from_json(const Json& j) {
  return json_guard([&] {
    auto rows = j.at("table").get<std::vector<std::vector<Elem>>>();
    if (rows.size() != j.at("n").get<std::size_t>()) {
      fail(ErrorCode::BadShape, "table does not have n rows");
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return FiniteMonoid::validate(rows, j.at("id").get<Elem>(), std::move(labels));
  });
}

Json almost_action_to_json(const AlmostAction& aa) {
  return Json{{"schema", kJsonSchema},
              {"kind", "almost_action"},
              {"group", monoid_to_json(aa.group())},
              {"semilattice", monoid_to_json(aa.semilattice().base())},
              {"dot", unflatten(aa.table(), aa.semilattice().size())}};
}

AlmostAction almost_action_from_json(const Json& j) {
  return json_guard([&] {
    expect_kind(j, "almost_action");
    auto g = monoid_from_json(j.at("group"));
    auto y = SemilatticeMonoid::validate(monoid_from_json(j.at("semilattice")));
    auto rows = j.at("dot").get<std::vector<std::vector<Elem>>>();
    if (rows.size() != g.size()) fail(ErrorCode::BadShape, "dot must have |G| rows");
    auto dot = flatten(rows, y.size(), "dot");
    return validate_almost_action(std::move(g), std::move(y), std::move(dot));
  });
}

Json gluing_map_to_json(const GluingMap& gm) {
  return Json{{"schema", kJsonSchema},
              {"kind", "gluing_map"},
              {"group", monoid_to_json(gm.group())},
              {"semilattice", monoid_to_json(gm.semilattice().base())},
              {"f", gm.values()}};
}

GluingMap gluing_map_from_json(const Json& j) {
  return json_guard([&] {
    expect_kind(j, "gluing_map");
    auto g = monoid_from_json(j.at("group"));
    auto y = SemilatticeMonoid::validate(monoid_from_json(j.at("semilattice")));
    return validate_gluing_map(std::move(g), std::move(y),
                               j.at("f").get<std::vector<Elem>>());
  });
}

Json factor_system_to_json(const FactorSystem& fs) {
  return Json{{"schema", kJsonSchema},
              {"kind", "factor_system"},
              {"acting", monoid_to_json(fs.acting())},
              {"kernel", monoid_to_json(fs.kernel())},
              {"sim", fs.sim_labels()},
              {"act", unflatten(fs.act_table(), fs.kernel().size())},
              {"chi", unflatten(fs.chi_table(), fs.acting().size())}};
}

FactorSystem factor_system_from_json(const Json& j) {
  return json_guard([&] {
    expect_kind(j, "factor_system");
    auto h = monoid_from_json(j.at("acting"));
    auto n = monoid_from_json(j.at("kernel"));
    auto sim = j.at("sim").get<std::vector<std::vector<Elem>>>();
    auto act_rows = j.at("act").get<std::vector<std::vector<Elem>>>();
    auto chi_rows = j.at("chi").get<std::vector<std::vector<Elem>>>();
    if (act_rows.size() != h.size() || chi_rows.size() != h.size()) {
      fail(ErrorCode::BadShape, "act and chi must have |H| rows");
    }
    auto act = flatten(act_rows, n.size(), "act");
    auto chi = flatten(chi_rows, h.size(), "chi");
    return validate_factor_system(std::move(h), std::move(n), sim, std::move(act),
                                  std::move(chi));
  });
}

}  // namespace imw
