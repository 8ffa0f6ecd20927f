// Command-line surface: enumerate the classification, verify it against the
// reference catalog, diff the brute-force oracle against the case analysis,
// realize any entry as a map, and export the catalog.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <archimedean/analyze.hpp>
#include <archimedean/catalog.hpp>
#include <archimedean/classify.hpp>
#include <archimedean/counts.hpp>
#include <archimedean/oracle.hpp>
#include <archimedean/realize.hpp>

namespace {

using namespace archimedean;
using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kUsage = 2;

std::string cases_string(const std::vector<ProofCase>& cases) {
  std::string s;
  for (ProofCase pc : cases) {
    if (!s.empty()) s += '+';
    s += std::string(to_string(pc));
  }
  return s;
}

std::string figure_string(const Classification& row) {
  if (!row.is_family()) return row.figure->str();
  return row.cls == SolidClass::PrismFamily ? "4.4.m" : "3.3.3.m";
}

ordered_json classification_json(const Classification& row) {
  ordered_json j;
  j["name"] = row.name;
  j["class"] = std::string(to_string(row.cls));
  if (row.is_family()) {
    j["figure"] = figure_string(row);
    j["family_min"] = *row.family_min;
  } else {
    j["figure"] = row.figure->degrees();
    const auto c = counts(*row.figure);
    const CountData& cd = *feasible_counts(c);
    j["V"] = cd.vertices;
    j["E"] = cd.edges;
    j["F"] = cd.faces;
    ordered_json fc;
    for (const auto& [p, n] : cd.face_counts) fc[std::to_string(p)] = n;
    j["face_counts"] = std::move(fc);
  }
  ordered_json pcs = ordered_json::array();
  for (ProofCase pc : row.cases) pcs.push_back(std::string(to_string(pc)));
  j["proof_case"] = std::move(pcs);
  return j;
}

int cmd_enumerate(std::optional<int> r, const std::string& format) {
  std::vector<Classification> rows;
  if (!r)
    rows = enumerate_all();
  else if (*r == 5)
    rows = enumerate_case_r5();
  else if (*r == 4)
    rows = enumerate_case_r4();
  else
    rows = enumerate_case_r3();

  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) arr.push_back(classification_json(row));
    std::cout << arr.dump(2) << "\n";
    return kOk;
  }

  for (const auto& row : rows) {
    std::ostringstream line;
    line << figure_string(row);
    if (row.is_family()) {
      line << " (m>=" << *row.family_min << ")";
    } else {
      const auto c = counts(*row.figure);
      const CountData& cd = *feasible_counts(c);
      line << "  V=" << cd.vertices << " E=" << cd.edges << " F=" << cd.faces;
    }
    line << "  [" << to_string(row.cls) << "; " << cases_string(row.cases)
         << "]  " << row.name;
    std::cout << line.str() << "\n";
  }
  return kOk;
}

bool check(bool ok, const std::string& what, int& failures) {
  std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
  failures += !ok;
  return ok;
}

int verify_entry(const CatalogEntry& e, int max_n, int& failures) {
  const auto all = enumerate_all();

  if (e.is_family()) {
    const Classification* row = nullptr;
    for (const auto& c : all)
      if (c.is_family() && c.cls == e.cls) row = &c;
    check(row != nullptr && row->cases == e.cases &&
              *row->family_min == *e.family_min,
          e.name + ": enumeration row with matching provenance", failures);
    for (int n = 3; n <= max_n; ++n) {
      const MapReport rep = analyze(realize(e, n));
      const bool prismlike = e.cls == SolidClass::PrismFamily;
      const std::int64_t v = 2 * n;
      const std::int64_t edges = prismlike ? 3 * n : 4 * n;
      const std::int64_t f = prismlike ? n + 2 : 2 * n + 2;
      const bool ok = rep.euler_ok && rep.lemma1_ok && rep.uniform &&
                      rep.figure() == family_figure(e.cls, n) &&
                      rep.counts.vertices == v && rep.counts.edges == edges &&
                      rep.counts.faces == f;
      check(ok, e.name + "(" + std::to_string(n) + "): realized map checks",
            failures);
    }
    return failures;
  }

  const Classification* row = nullptr;
  for (const auto& c : all)
    if (!c.is_family() && *c.figure == *e.figure) row = &c;
  check(row != nullptr && row->name == e.name && row->cases == e.cases,
        e.name + ": enumeration row with matching provenance", failures);

  const MapReport rep = analyze(realize(e));
  check(rep.euler_ok, e.name + ": Euler characteristic 2", failures);
  check(rep.lemma1_ok, e.name + ": face/valence balance", failures);
  check(rep.uniform && rep.figure() == *e.figure,
        e.name + ": uniform vertex figure " + e.figure->str(), failures);
  check(rep.counts.vertices == e.counts->vertices &&
            rep.counts.edges == e.counts->edges &&
            rep.counts.faces == e.counts->faces &&
            rep.counts.face_counts == e.counts->face_counts,
        e.name + ": exact count match", failures);
  return failures;
}

int cmd_verify(bool all, const std::string& entry_name,
               const std::string& family_name, int max_n) {
  int failures = 0;
  if (all) {
    for (const auto& e : reference_catalog()) verify_entry(e, max_n, failures);
  } else if (!entry_name.empty()) {
    const CatalogEntry* e = find_entry(entry_name);
    if (!e) {
      std::cerr << "unknown entry: " << entry_name << "\n";
      return kUsage;
    }
    verify_entry(*e, max_n, failures);
  } else if (!family_name.empty()) {
    const CatalogEntry* e = find_entry(family_name);
    if (!e || !e->is_family()) {
      std::cerr << "unknown family: " << family_name << "\n";
      return kUsage;
    }
    verify_entry(*e, max_n, failures);
  } else {
    std::cerr << "verify: select --all, --entry or --family\n";
    return kUsage;
  }
  std::cout << (failures ? "verification FAILED\n" : "all checks passed\n");
  return failures ? kVerifyFail : kOk;
}

int cmd_oracle(int max_p, bool diff) {
  if (!diff) {
    for (const auto& fig : oracle_enumerate(max_p)) {
      const auto c = counts(fig);
      const CountData& cd = *feasible_counts(c);
      std::cout << fig.str() << "  V=" << cd.vertices << " E=" << cd.edges
                << " F=" << cd.faces << "\n";
    }
    return kOk;
  }

  const OracleReport rep = oracle_diff(max_p);
  std::cout << "feasible " << rep.feasible.size() << "\n";
  std::cout << "realized " << rep.realized.size() << "\n";
  std::cout << "spurious " << rep.spurious.size() << "\n";
  for (const auto& s : rep.spurious)
    std::cout << "  " << s.figure.str() << "  [" << to_string(s.killed_by)
              << "]\n";
  if (!rep.complete()) {
    std::cout << "unexplained " << rep.unexplained.size() << "\n";
    for (const auto& fig : rep.unexplained)
      std::cout << "  " << fig.str() << "  [NO FILTER]\n";
    return kVerifyFail;
  }
  return kOk;
}

ordered_json map_json(const std::string& name, const MapReport& rep,
                      const PolyhedralMap& m) {
  ordered_json j;
  j["name"] = name;
  j["V"] = rep.counts.vertices;
  j["E"] = rep.counts.edges;
  j["F"] = rep.counts.faces;
  ordered_json fc;
  for (const auto& [p, n] : rep.counts.face_counts) fc[std::to_string(p)] = n;
  j["face_counts"] = std::move(fc);
  ordered_json vc;
  for (const auto& [d, n] : rep.counts.valence_counts)
    vc[std::to_string(d)] = n;
  j["valence_counts"] = std::move(vc);
  j["figure"] = rep.uniform ? rep.figure().degrees() : std::vector<int>{};
  j["uniform"] = rep.uniform;
  j["bipartite"] = rep.bipartite;
  j["faces"] = m.face_lists();
  return j;
}

int cmd_realize(const std::string& name, const std::string& family_name,
                std::optional<int> n, const std::string& out_format,
                const std::string& path) {
  if (name.empty() == family_name.empty()) {
    std::cerr << "realize: give a solid name or --family, not both\n";
    return kUsage;
  }

  std::string label;
  std::optional<PolyhedralMap> map;
  try {
    if (!name.empty()) {
      const CatalogEntry* e = find_entry(name);
      if (!e || e->is_family()) {
        std::cerr << "unknown solid: " << name << "\n";
        return kUsage;
      }
      label = e->name;
      map = realize(*e);
    } else {
      const CatalogEntry* e = find_entry(family_name);
      if (!e || !e->is_family()) {
        std::cerr << "unknown family: " << family_name << "\n";
        return kUsage;
      }
      if (!n) {
        std::cerr << "realize: --family needs --n\n";
        return kUsage;
      }
      label = e->name + "(" + std::to_string(*n) + ")";
      map = realize(*e, *n);
    }
  } catch (const std::invalid_argument& ex) {
    std::cerr << ex.what() << "\n";
    return kUsage;
  }

  const MapReport rep = analyze(*map);
  const std::string doc = out_format == "json"
                              ? map_json(label, rep, *map).dump(2) + "\n"
                              : map->face_document();

  std::ostringstream summary;
  summary << label << ": V=" << rep.counts.vertices
          << " E=" << rep.counts.edges << " F=" << rep.counts.faces
          << " uniform=" << (rep.uniform ? "yes" : "no")
          << " figure=" << (rep.uniform ? rep.figure().str() : "-")
          << " bipartite=" << (rep.bipartite ? "yes" : "no")
          << " euler=" << (rep.euler_ok ? "ok" : "FAIL")
          << " balance=" << (rep.lemma1_ok ? "ok" : "FAIL") << "\n";

  if (path.empty()) {
    std::cout << doc;
    std::cerr << summary.str();
  } else {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << path << "\n";
      return kUsage;
    }
    out << doc;
    std::cout << summary.str();
  }
  return (rep.euler_ok && rep.lemma1_ok && rep.uniform) ? kOk : kVerifyFail;
}

int cmd_catalog(const std::string& format) {
  if (format == "json") {
    std::cout << catalog_json();
    return kOk;
  }
  if (format == "csv") {
    std::cout << catalog_csv();
    return kOk;
  }
  // table: the reference layout, one face-count column per degree used
  static const int kCols[] = {3, 4, 5, 6, 8, 10};
  std::cout << "name                          V    E    F   ";
  for (int p : kCols) std::cout << " F" << p << (p < 10 ? "  " : " ");
  std::cout << " symbol\n";
  for (const auto& e : reference_catalog()) {
    std::ostringstream line;
    line << e.name;
    for (size_t i = e.name.size(); i < 29; ++i) line << ' ';
    auto num = [&](const std::string& s, int width) {
      line << ' ';
      for (size_t i = s.size(); i < static_cast<size_t>(width); ++i)
        line << ' ';
      line << s;
    };
    if (e.is_family()) {
      const bool prism = e.cls == SolidClass::PrismFamily;
      num(prism ? "2m" : "2m", 4);
      num(prism ? "3m" : "4m", 4);
      num(prism ? "m+2" : "2m+2", 4);
      for (int p : kCols) {
        std::string cell;
        if (prism && p == 4) cell = "m";
        if (!prism && p == 3) cell = "2m";
        num(cell, 4);
      }
    } else {
      num(std::to_string(e.counts->vertices), 4);
      num(std::to_string(e.counts->edges), 4);
      num(std::to_string(e.counts->faces), 4);
      for (int p : kCols) {
        auto it = e.counts->face_counts.find(p);
        num(it == e.counts->face_counts.end() ? ""
                                              : std::to_string(it->second),
            4);
      }
    }
    line << "  " << e.symbol;
    std::cout << line.str() << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exhaustive classification and verification of the "
               "semiregular (Archimedean) polyhedra"};
  app.require_subcommand(0, 1);

  bool list_names = false;
  app.add_flag("--list-names", list_names,
               "print the CLI name of every catalog entry and exit");

  // enumerate
  auto* enumerate = app.add_subcommand(
      "enumerate", "run the case analysis and print the classification");
  std::optional<int> opt_r;
  std::string enum_format = "table";
  enumerate->add_option("--r", opt_r, "restrict to one valence (3, 4 or 5)")
      ->check(CLI::IsMember({3, 4, 5}));
  enumerate->add_option("--format", enum_format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  // verify
  auto* verify = app.add_subcommand(
      "verify", "check enumeration and realized maps against the catalog");
  bool verify_all = false;
  std::string verify_name, verify_family;
  int verify_max_n = 12;
  verify->add_flag("--all", verify_all, "verify every catalog entry");
  verify->add_option("--entry", verify_name, "verify one entry by name");
  verify->add_option("--family", verify_family, "prism or antiprism");
  verify->add_option("--max-n", verify_max_n,
                     "largest family parameter to realize (default 12)");

  // oracle
  auto* oracle = app.add_subcommand(
      "oracle", "brute-force arithmetic sweep over vertex figures");
  int max_p = 0;
  bool diff = false;
  oracle->add_option("--max-p", max_p, "largest face degree to scan")
      ->required();
  oracle->add_flag("--diff", diff,
                   "diff the sweep against the case analysis");

  // realize
  auto* realize_cmd = app.add_subcommand(
      "realize", "construct an entry as a map and export it");
  std::string realize_name, realize_family, realize_path;
  std::string realize_out = "faces";
  std::optional<int> realize_n;
  realize_cmd->add_option("name", realize_name, "catalog entry name");
  realize_cmd->add_option("--family", realize_family, "prism or antiprism");
  realize_cmd->add_option("--n", realize_n, "family parameter (>= 3)");
  realize_cmd->add_option("--out", realize_out, "faces or json")
      ->check(CLI::IsMember({"faces", "json"}));
  realize_cmd->add_option("--path", realize_path,
                          "write the document here instead of stdout");

  // catalog
  auto* catalog_cmd =
      app.add_subcommand("catalog", "print the reference tables");
  std::string catalog_format = "table";
  catalog_cmd->add_option("--format", catalog_format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (list_names) {
      for (const auto& e : reference_catalog())
        std::cout << e.kebab_name() << "  ->  " << e.name
                  << (e.is_family() ? " (family)" : "") << "\n";
      return kOk;
    }
    if (*enumerate) return cmd_enumerate(opt_r, enum_format);
    if (*verify)
      return cmd_verify(verify_all, verify_name, verify_family, verify_max_n);
    if (*oracle) {
      if (max_p < 5 || (diff && max_p < 12)) {
        std::cerr << "oracle: --max-p too small (>= 5, or >= 12 with --diff)\n";
        return kUsage;
      }
      return cmd_oracle(max_p, diff);
    }
    if (*realize_cmd)
      return cmd_realize(realize_name, realize_family, realize_n, realize_out,
                         realize_path);
    if (*catalog_cmd) return cmd_catalog(catalog_format);
  } catch (const std::invalid_argument& ex) {
    std::cerr << ex.what() << "\n";
    return kUsage;
  }

  std::cout << app.help();
  return kOk;
}
