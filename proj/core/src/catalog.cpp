#include "archimedean/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace archimedean {

namespace {

CountData make_counts(std::int64_t v, std::int64_t e, std::int64_t f, int r,
                      std::initializer_list<std::pair<int, std::int64_t>> fp) {
  CountData c;
  c.vertices = v;
  c.edges = e;
  c.faces = f;
  for (const auto& [p, n] : fp) c.face_counts[p] = n;
  c.valence_counts[r] = v;  // uniform maps: every vertex has valence r
  return c;
}

CatalogEntry entry(std::string name, SolidClass cls, std::string symbol,
                   VertexFigure figure, CountData counts,
                   std::vector<ProofCase> cases, std::string notes = "") {
  CatalogEntry e;
  e.name = std::move(name);
  e.cls = cls;
  e.symbol = std::move(symbol);
  e.figure = std::move(figure);
  e.counts = std::move(counts);
  e.cases = std::move(cases);
  e.notes = std::move(notes);
  return e;
}

CatalogEntry family_entry(std::string name, SolidClass cls, std::string symbol,
                          int min, std::vector<ProofCase> cases,
                          std::string notes) {
  CatalogEntry e;
  e.name = std::move(name);
  e.cls = cls;
  e.symbol = std::move(symbol);
  e.family_min = min;
  e.cases = std::move(cases);
  e.notes = std::move(notes);
  return e;
}

std::vector<CatalogEntry> build_catalog() {
  using PC = ProofCase;
  using SC = SolidClass;
  std::vector<CatalogEntry> cat;

  // the five regular solids
  cat.push_back(entry("tetrahedron", SC::Platonic, "3^3", {3, 3, 3},
                      make_counts(4, 6, 4, 3, {{3, 4}}), {PC::R3Triangle}));
  cat.push_back(entry("octahedron", SC::Platonic, "3^4", {3, 3, 3, 3},
                      make_counts(6, 12, 8, 4, {{3, 8}}), {PC::R4Triangle}));
  cat.push_back(entry("icosahedron", SC::Platonic, "3^5", {3, 3, 3, 3, 3},
                      make_counts(12, 30, 20, 5, {{3, 20}}),
                      {PC::R5Triangle}));
  cat.push_back(entry("cube", SC::Platonic, "4^3", {4, 4, 4},
                      make_counts(8, 12, 6, 3, {{4, 6}}), {PC::R3Square}));
  cat.push_back(entry("dodecahedron", SC::Platonic, "5^3", {5, 5, 5},
                      make_counts(20, 30, 12, 3, {{5, 12}}),
                      {PC::R3Pentagon}));

  // the thirteen semiregular solids
  cat.push_back(entry("cuboctahedron", SC::Archimedean, "(3.4)^2",
                      {3, 4, 3, 4},
                      make_counts(12, 24, 14, 4, {{3, 8}, {4, 6}}),
                      {PC::R4Triangle}));
  cat.push_back(entry("great rhombicosidodecahedron", SC::Archimedean,
                      "4.6.10", {4, 6, 10},
                      make_counts(120, 180, 62, 3,
                                  {{4, 30}, {6, 20}, {10, 12}}),
                      {PC::R3Square}));
  cat.push_back(entry("great rhombicuboctahedron", SC::Archimedean, "4.6.8",
                      {4, 6, 8},
                      make_counts(48, 72, 26, 3, {{4, 12}, {6, 8}, {8, 6}}),
                      {PC::R3Square}));
  cat.push_back(entry("icosidodecahedron", SC::Archimedean, "(3.5)^2",
                      {3, 5, 3, 5},
                      make_counts(30, 60, 32, 4, {{3, 20}, {5, 12}}),
                      {PC::R4Triangle}));
  cat.push_back(entry("small rhombicosidodecahedron", SC::Archimedean,
                      "3.4.5.4", {3, 4, 5, 4},
                      make_counts(60, 120, 62, 4,
                                  {{3, 20}, {4, 30}, {5, 12}}),
                      {PC::R4Triangle}));
  cat.push_back(entry("small rhombicuboctahedron", SC::Archimedean, "3.4^3",
                      {3, 4, 4, 4},
                      make_counts(24, 48, 26, 4, {{3, 8}, {4, 18}}),
                      {PC::R4Triangle}));
  cat.push_back(entry("snub cube", SC::Archimedean, "3^4.4", {3, 3, 3, 3, 4},
                      make_counts(24, 60, 38, 5, {{3, 32}, {4, 6}}),
                      {PC::R5Triangle}));
  cat.push_back(entry("snub dodecahedron", SC::Archimedean, "3^4.5",
                      {3, 3, 3, 3, 5},
                      make_counts(60, 150, 92, 5, {{3, 80}, {5, 12}}),
                      {PC::R5Triangle}));
  cat.push_back(entry("truncated cube", SC::Archimedean, "3.8^2", {3, 8, 8},
                      make_counts(24, 36, 14, 3, {{3, 8}, {8, 6}}),
                      {PC::R3Triangle}));
  cat.push_back(entry("truncated dodecahedron", SC::Archimedean, "3.10^2",
                      {3, 10, 10},
                      make_counts(60, 90, 32, 3, {{3, 20}, {10, 12}}),
                      {PC::R3Triangle}));
  cat.push_back(entry(
      "truncated icosahedron", SC::Archimedean, "5.6^2", {5, 6, 6},
      make_counts(60, 90, 32, 3, {{5, 12}, {6, 20}}), {PC::R3Pentagon},
      "symbol corrected: the source table prints 4.6.10 for this row, "
      "inconsistent with its own face counts F5=12, F6=20"));
  cat.push_back(entry("truncated octahedron", SC::Archimedean, "4.6^2",
                      {4, 6, 6},
                      make_counts(24, 36, 14, 3, {{4, 6}, {6, 8}}),
                      {PC::R3Square}));
  cat.push_back(entry("truncated tetrahedron", SC::Archimedean, "3.6^2",
                      {3, 6, 6},
                      make_counts(12, 18, 8, 3, {{3, 4}, {6, 4}}),
                      {PC::R3Triangle}));

  // the two infinite families
  cat.push_back(family_entry(
      "prism", SC::PrismFamily, "4^2.m", 3, {PC::R3Triangle, PC::R3Square},
      "V=2m, E=3m, F=m+2 with F4=m, Fm=2; m=3 is the triangular prism, "
      "m=4 the cube"));
  cat.push_back(family_entry(
      "antiprism", SC::AntiprismFamily, "3^3.m", 4, {PC::R4Triangle},
      "V=2m, E=4m, F=2m+2 with F3=2m, Fm=2; m=3 gives the octahedron"));
  return cat;
}

}  // namespace

std::string CatalogEntry::kebab_name() const {
  std::string k = name;
  std::replace(k.begin(), k.end(), ' ', '-');
  return k;
}

const std::vector<CatalogEntry>& reference_catalog() {
  static const std::vector<CatalogEntry> cat = build_catalog();
  return cat;
}

const CatalogEntry* find_entry(std::string_view name) {
  for (const auto& e : reference_catalog())
    if (e.name == name || e.kebab_name() == name) return &e;
  return nullptr;
}

VertexFigure parse_symbol(std::string_view s) {
  std::vector<int> degrees;
  size_t i = 0;

  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("parse_symbol: " + why + " in \"" +
                                std::string(s) + "\"");
  };
  auto read_int = [&]() -> int {
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("number expected");
    return std::stoi(std::string(s.substr(start, i - start)));
  };
  auto read_exponent = [&]() -> int {
    if (i < s.size() && s[i] == '^') {
      ++i;
      const int k = read_int();
      if (k < 1) fail("exponent must be positive");
      return k;
    }
    return 1;
  };

  while (i < s.size()) {
    if (s[i] == '(') {
      ++i;
      std::vector<int> group;
      group.push_back(read_int());
      while (i < s.size() && s[i] == '.') {
        ++i;
        group.push_back(read_int());
      }
      if (i >= s.size() || s[i] != ')') fail("unclosed group");
      ++i;
      const int k = read_exponent();
      for (int rep = 0; rep < k; ++rep)
        degrees.insert(degrees.end(), group.begin(), group.end());
    } else {
      const int n = read_int();
      const int k = read_exponent();
      degrees.insert(degrees.end(), static_cast<size_t>(k), n);
    }
    if (i < s.size()) {
      if (s[i] != '.') fail("'.' expected");
      ++i;
      if (i == s.size()) fail("trailing separator");
    }
  }
  if (degrees.empty()) fail("empty symbol");
  return VertexFigure(degrees);
}

std::string format_symbol(const VertexFigure& figure) {
  const auto& d = figure.degrees();
  const int n = figure.valence();

  // a repeated whole pattern renders as a parenthesized power
  for (int period = 1; period < n; ++period) {
    if (n % period != 0) continue;
    bool repeats = true;
    for (int i = period; i < n && repeats; ++i)
      repeats = d[static_cast<size_t>(i)] == d[static_cast<size_t>(i % period)];
    if (!repeats) continue;
    if (period == 1)
      return std::to_string(d[0]) + "^" + std::to_string(n);
    std::string pattern;
    for (int i = 0; i < period; ++i) {
      if (i) pattern += '.';
      pattern += std::to_string(d[static_cast<size_t>(i)]);
    }
    return "(" + pattern + ")^" + std::to_string(n / period);
  }

  // otherwise run-length encode
  std::string out;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && d[static_cast<size_t>(j)] == d[static_cast<size_t>(i)]) ++j;
    if (!out.empty()) out += '.';
    out += std::to_string(d[static_cast<size_t>(i)]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string catalog_json() {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& e : reference_catalog()) {
    nlohmann::ordered_json row;
    row["name"] = e.name;
    row["class"] = std::string(to_string(e.cls));
    row["symbol"] = e.symbol;
    if (e.is_family()) {
      // parameterized: counts in terms of m
      row["figure"] = e.cls == SolidClass::PrismFamily ? "4.4.m" : "3.3.3.m";
      row["family_min"] = *e.family_min;
      if (e.cls == SolidClass::PrismFamily) {
        row["V"] = "2m";
        row["E"] = "3m";
        row["F"] = "m+2";
        row["face_counts"] = {{"4", "m"}, {"m", "2"}};
      } else {
        row["V"] = "2m";
        row["E"] = "4m";
        row["F"] = "2m+2";
        row["face_counts"] = {{"3", "2m"}, {"m", "2"}};
      }
    } else {
      row["figure"] = e.figure->degrees();
      row["V"] = e.counts->vertices;
      row["E"] = e.counts->edges;
      row["F"] = e.counts->faces;
      nlohmann::ordered_json fc;
      for (const auto& [p, count] : e.counts->face_counts)
        fc[std::to_string(p)] = count;
      row["face_counts"] = std::move(fc);
    }
    nlohmann::ordered_json cases = nlohmann::ordered_json::array();
    for (ProofCase pc : e.cases) cases.push_back(std::string(to_string(pc)));
    row["proof_case"] = std::move(cases);
    row["notes"] = e.notes;
    arr.push_back(std::move(row));
  }
  return arr.dump(2) + "\n";
}

namespace {

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

std::string catalog_csv() {
  static const int kDegreeColumns[] = {3, 4, 5, 6, 8, 10};
  std::ostringstream out;
  out << "name,class,symbol,V,E,F,F3,F4,F5,F6,F8,F10,proof_case,notes\n";
  for (const auto& e : reference_catalog()) {
    out << csv_quote(e.name) << ',' << to_string(e.cls) << ','
        << csv_quote(e.symbol) << ',';
    if (e.is_family()) {
      const bool prism = e.cls == SolidClass::PrismFamily;
      out << (prism ? "2m,3m,m+2" : "2m,4m,2m+2");
      for (int p : kDegreeColumns) {
        out << ',';
        if (prism && p == 4) out << 'm';
        if (!prism && p == 3) out << "2m";
      }
    } else {
      out << e.counts->vertices << ',' << e.counts->edges << ','
          << e.counts->faces;
      for (int p : kDegreeColumns) {
        out << ',';
        auto it = e.counts->face_counts.find(p);
        if (it != e.counts->face_counts.end()) out << it->second;
      }
    }
    out << ',';
    std::string cases;
    for (ProofCase pc : e.cases) {
      if (!cases.empty()) cases += '+';
      cases += std::string(to_string(pc));
    }
    out << cases << ',' << csv_quote(e.notes) << '\n';
  }
  return out.str();
}

}  // namespace archimedean
