#include "swinv/manifold_file.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace swinv {

namespace {

struct Field {
  std::string value;
  std::size_t line;
  std::size_t column; // of the value
};

struct Row {
  std::string text;
  std::size_t line;
  std::size_t column;
};

struct Section {
  std::size_t line = 0;
  std::map<std::string, std::vector<Field>> fields;
  std::vector<Row> rows;
};

const std::map<std::string, bool> &section_kinds() {
  // true: key = value section, false: row section
  static const std::map<std::string, bool> kinds = {
      {"manifold", true},   {"intersection_form", false}, {"w2", false},
      {"torsion", true},    {"triple_cup", false},        {"kahler", true},
      {"psc", true}};
  return kinds;
}

const std::map<std::string, std::set<std::string>> &allowed_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"manifold", {"name", "b1", "bplus", "bminus", "euler", "signature"}},
      {"torsion", {"tors2_order"}},
      {"kahler",
       {"canonical_class", "ns_basis", "effective_cone", "pg_zero",
        "kahler_ray", "kahler_component"}},
      {"psc", {"psc_ray", "component"}}};
  return keys;
}

bool repeatable(const std::string &key) {
  return key == "ns_basis" || key == "effective_cone";
}

std::size_t leading_space(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
    ++i;
  return i;
}

std::string_view rtrim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::map<std::string, Section> split_sections(std::string_view text) {
  std::map<std::string, Section> sections;
  Section *current = nullptr;
  bool keyed = false;
  std::string current_name;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r')
      raw.remove_suffix(1);
    const std::size_t indent = leading_space(raw);
    std::string_view line = rtrim(raw.substr(indent));
    if (line.empty() || line.front() == '#')
      continue;

    if (line.front() == '[') {
      if (line.back() != ']')
        throw ParseError("unterminated section header", line_no,
                         indent + line.size());
      std::string name(line.substr(1, line.size() - 2));
      auto kind = section_kinds().find(name);
      if (kind == section_kinds().end())
        throw ParseError("unknown section [" + name + "]", line_no, indent + 2);
      if (sections.count(name))
        throw ParseError("duplicate section [" + name + "]", line_no,
                         indent + 1);
      current = &sections[name];
      current->line = line_no;
      current_name = name;
      keyed = kind->second;
      continue;
    }
    if (!current)
      throw ParseError("content before the first section header", line_no,
                       indent + 1);
    if (!keyed) {
      current->rows.push_back({std::string(line), line_no, indent + 1});
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("expected 'key = value' in [" + current_name + "]",
                       line_no, indent + 1);
    std::string key(rtrim(line.substr(0, eq)));
    if (!allowed_keys().at(current_name).count(key))
      throw ParseError("unknown key '" + key + "' in [" + current_name + "]",
                       line_no, indent + 1);
    auto &slot = current->fields[key];
    if (!slot.empty() && !repeatable(key))
      throw ParseError("duplicate key '" + key + "'", line_no, indent + 1);
    std::string_view value = line.substr(eq + 1);
    const std::size_t vlead = leading_space(value);
    slot.push_back(
        {std::string(value.substr(vlead)), line_no, indent + eq + 2 + vlead});
  }
  return sections;
}

// Re-anchor a token-relative ParseError at a file position.
template <class F> auto at(std::size_t line, std::size_t column, F &&f) {
  try {
    return f();
  } catch (const ParseError &e) {
    throw ParseError(e.what(), line,
                     column + (e.column() ? e.column() - 1 : 0));
  }
}

const Field &required(const Section &s, const std::string &section,
                      const std::string &key) {
  auto it = s.fields.find(key);
  if (it == s.fields.end())
    throw ParseError("missing key '" + key + "' in [" + section + "]", s.line,
                     1);
  return it->second.front();
}

const Field *optional_field(const Section &s, const std::string &key) {
  auto it = s.fields.find(key);
  return it == s.fields.end() ? nullptr : &it->second.front();
}

Integer integer_field(const Field &f) {
  return at(f.line, f.column, [&] { return parse_integer(f.value); });
}

long small_field(const Field &f) {
  const Integer v = integer_field(f);
  if (v < -1000000 || v > 1000000)
    throw ParseError("value out of range", f.line, f.column);
  return static_cast<long>(v);
}

IntVector int_vector_field(const Field &f) {
  return at(f.line, f.column, [&] { return parse_int_vector(f.value); });
}

RatVector rat_vector_field(const Field &f) {
  return at(f.line, f.column, [&] { return parse_rat_vector(f.value); });
}

bool bool_field(const Field &f) {
  if (f.value == "true" || f.value == "1")
    return true;
  if (f.value == "false" || f.value == "0")
    return false;
  throw ParseError("expected true or false", f.line, f.column);
}

int sign_field(const Field *f) {
  if (!f)
    return 1;
  const Integer v = integer_field(*f);
  if (v != 1 && v != -1)
    throw ParseError("component sign must be 1 or -1", f->line, f->column);
  return static_cast<int>(v);
}

// Whitespace-separated integers with 1-based columns.
std::vector<std::pair<Integer, std::size_t>> row_tokens(const Row &r) {
  std::vector<std::pair<Integer, std::size_t>> out;
  std::size_t i = 0;
  const std::string &s = r.text;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
      ++i;
    if (i == s.size())
      break;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])))
      ++j;
    const std::size_t col = r.column + i;
    out.emplace_back(at(r.line, col, [&] {
                       return parse_integer(std::string_view(s).substr(i, j - i));
                     }),
                     col);
    i = j;
  }
  return out;
}

} // namespace

ManifoldFile parse_manifold_file(std::string_view text) {
  const auto sections = split_sections(text);
  auto need = [&](const std::string &name) -> const Section & {
    auto it = sections.find(name);
    if (it == sections.end())
      throw ParseError("missing section [" + name + "]", 0, 0);
    return it->second;
  };

  ManifoldTopology t;
  const Section &man = need("manifold");
  t.name = required(man, "manifold", "name").value;
  t.b1 = small_field(required(man, "manifold", "b1"));
  t.bplus = small_field(required(man, "manifold", "bplus"));
  t.bminus = small_field(required(man, "manifold", "bminus"));
  t.euler = integer_field(required(man, "manifold", "euler"));
  t.signature = integer_field(required(man, "manifold", "signature"));
  for (auto [key, value] : {std::pair{"b1", t.b1}, std::pair{"bplus", t.bplus},
                            std::pair{"bminus", t.bminus}})
    if (value < 0) {
      const Field &f = required(man, "manifold", key);
      throw ParseError(std::string(key) + " must be nonnegative", f.line,
                       f.column);
    }
  if (t.b1 > ExtForm::max_rank) {
    const Field &f = required(man, "manifold", "b1");
    throw ParseError("b1 larger than " + std::to_string(ExtForm::max_rank) +
                         " is not supported",
                     f.line, f.column);
  }
  const std::size_t b2 = t.b2();

  const Section &qs = need("intersection_form");
  if (qs.rows.size() != b2)
    throw ParseError("intersection form has " + std::to_string(qs.rows.size()) +
                         " rows, expected b2=" + std::to_string(b2),
                     qs.rows.empty() ? qs.line : qs.rows.back().line, 1);
  for (const Row &r : qs.rows) {
    auto tokens = row_tokens(r);
    if (tokens.size() != b2)
      throw ParseError("matrix row has " + std::to_string(tokens.size()) +
                           " entries, expected " + std::to_string(b2),
                       r.line, r.column);
    IntVector row;
    for (auto &[v, col] : tokens)
      row.push_back(std::move(v));
    t.form.push_back(std::move(row));
  }

  const Section &ws = need("w2");
  if (b2 == 0) {
    if (!ws.rows.empty())
      throw ParseError("[w2] must be empty when b2 = 0", ws.rows.front().line,
                       ws.rows.front().column);
  } else {
    if (ws.rows.size() != 1)
      throw ParseError("[w2] must contain exactly one row", ws.line, 1);
    auto tokens = row_tokens(ws.rows.front());
    if (tokens.size() != b2)
      throw ParseError("w2 has " + std::to_string(tokens.size()) +
                           " entries, expected " + std::to_string(b2),
                       ws.rows.front().line, ws.rows.front().column);
    for (auto &[v, col] : tokens) {
      if (v != 0 && v != 1)
        throw ParseError("w2 entries must be 0 or 1", ws.rows.front().line,
                         col);
      t.w2.push_back(v);
    }
  }

  if (auto it = sections.find("torsion"); it != sections.end())
    t.tors2_order = integer_field(required(it->second, "torsion", "tors2_order"));

  t.triple_cup = zero_triple_cup(t.b1, b2);
  if (auto it = sections.find("triple_cup"); it != sections.end()) {
    std::set<std::tuple<long, long, long>> listed;
    std::vector<std::tuple<long, long, long, Integer>> entries;
    for (const Row &r : it->second.rows) {
      auto tokens = row_tokens(r);
      if (tokens.size() != 4)
        throw ParseError("triple cup row must be 'i j k value'", r.line,
                         r.column);
      long idx[3];
      for (int n = 0; n < 3; ++n) {
        const long bound = n < 2 ? t.b1 : static_cast<long>(b2);
        if (tokens[n].first < 1 || tokens[n].first > bound)
          throw ParseError("index out of range 1.." + std::to_string(bound),
                           r.line, tokens[n].second);
        idx[n] = static_cast<long>(tokens[n].first) - 1;
      }
      if (!listed.emplace(idx[0], idx[1], idx[2]).second)
        throw ParseError("duplicate triple cup entry", r.line, r.column);
      entries.emplace_back(idx[0], idx[1], idx[2], tokens[3].first);
    }
    for (const auto &[i, j, k, v] : entries) {
      t.triple_cup[i][j][k] = v;
      if (!listed.count({j, i, k}))
        t.triple_cup[j][i][k] = -v;
    }
  }

  ManifoldFile out;
  out.topology = std::move(t);
  const ManifoldTopology &m = out.topology;

  if (auto it = sections.find("kahler"); it != sections.end()) {
    const Section &ks = it->second;
    IntVector canonical = int_vector_field(required(ks, "kahler", "canonical_class"));
    std::vector<IntVector> ns;
    if (auto f = ks.fields.find("ns_basis"); f != ks.fields.end())
      for (const Field &row : f->second)
        ns.push_back(int_vector_field(row));
    std::vector<RatVector> cone;
    if (auto f = ks.fields.find("effective_cone"); f != ks.fields.end())
      for (const Field &row : f->second)
        cone.push_back(rat_vector_field(row));
    const bool pg_zero = bool_field(required(ks, "kahler", "pg_zero"));
    RatVector ray = rat_vector_field(required(ks, "kahler", "kahler_ray"));
    const int sign = sign_field(optional_field(ks, "kahler_component"));
    out.kahler = KahlerFacts{std::move(canonical), std::move(ns),
                             std::move(cone), pg_zero,
                             PeriodRay(m, std::move(ray), sign)};
  }
  if (auto it = sections.find("psc"); it != sections.end()) {
    const Section &ps = it->second;
    RatVector ray = rat_vector_field(required(ps, "psc", "psc_ray"));
    out.psc_ray = PeriodRay(m, std::move(ray),
                            sign_field(optional_field(ps, "component")));
  }
  return out;
}

ManifoldFile read_manifold_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError("cannot read " + path.string(), 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_manifold_file(buf.str());
}

std::string write_manifold_file(const ManifoldFile &f) {
  const ManifoldTopology &t = f.topology;
  std::ostringstream out;
  out << "[manifold]\n"
      << "name = " << t.name << "\n"
      << "b1 = " << t.b1 << "\n"
      << "bplus = " << t.bplus << "\n"
      << "bminus = " << t.bminus << "\n"
      << "euler = " << t.euler << "\n"
      << "signature = " << t.signature << "\n\n";
  out << "[intersection_form]\n";
  for (const auto &row : t.form) {
    for (std::size_t j = 0; j < row.size(); ++j)
      out << (j ? " " : "") << row[j];
    out << "\n";
  }
  out << "\n[w2]\n";
  for (std::size_t j = 0; j < t.w2.size(); ++j)
    out << (j ? " " : "") << t.w2[j];
  if (!t.w2.empty())
    out << "\n";
  out << "\n[torsion]\ntors2_order = " << t.tors2_order << "\n";

  bool header = false;
  for (std::size_t i = 0; i < t.triple_cup.size(); ++i)
    for (std::size_t j = i + 1; j < t.triple_cup.size(); ++j)
      for (std::size_t k = 0; k < t.b2(); ++k)
        if (t.triple_cup[i][j][k] != 0) {
          if (!header)
            out << "\n[triple_cup]\n";
          header = true;
          out << i + 1 << " " << j + 1 << " " << k + 1 << " "
              << t.triple_cup[i][j][k] << "\n";
        }

  if (f.kahler) {
    const KahlerFacts &k = *f.kahler;
    out << "\n[kahler]\n"
        << "canonical_class = " << render(k.canonical_class) << "\n";
    for (const auto &v : k.ns_basis)
      out << "ns_basis = " << render(v) << "\n";
    for (const auto &v : k.effective_cone)
      out << "effective_cone = " << render(v) << "\n";
    out << "pg_zero = " << (k.pg_zero ? "true" : "false") << "\n"
        << "kahler_ray = " << render(k.kahler_ray.direction()) << "\n"
        << "kahler_component = " << k.kahler_ray.component_sign() << "\n";
  }
  if (f.psc_ray)
    out << "\n[psc]\n"
        << "psc_ray = " << render(f.psc_ray->direction()) << "\n"
        << "component = " << f.psc_ray->component_sign() << "\n";
  return out.str();
}

} // namespace swinv
