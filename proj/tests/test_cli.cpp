// Integration tests driving the installed command-line binary. The path
// comes in through ARCHIMEDEAN_CLI_PATH at compile time.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#ifndef ARCHIMEDEAN_CLI_PATH
#error "ARCHIMEDEAN_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd =
      std::string(ARCHIMEDEAN_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run("enumerate --r 6").exit_code == 2);
  CHECK(run("oracle --max-p 4").exit_code == 2);
  CHECK(run("oracle --max-p 10 --diff").exit_code == 2);
  CHECK(run("verify --entry snub-cuboid").exit_code == 2);
  CHECK(run("catalog --format yaml").exit_code == 2);
  CHECK(run("realize nonexistent-solid").exit_code == 2);
  CHECK(run("realize --family prism").exit_code == 2);
}

TEST_CASE("enumerate") {
  const auto r5 = run("enumerate --r 5");
  CHECK(r5.exit_code == 0);
  const auto rows = lines_of(r5.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].ends_with("icosahedron"));
  CHECK(rows[1].ends_with("snub cube"));
  CHECK(rows[2].ends_with("snub dodecahedron"));

  const auto js = run("enumerate --format json");
  CHECK(js.exit_code == 0);
  const auto parsed = nlohmann::json::parse(js.out);
  REQUIRE(parsed.is_array());
  CHECK(parsed.size() == 20);
  int sporadic = 0, family = 0;
  for (const auto& row : parsed)
    (row.contains("family_min") ? family : sporadic)++;
  CHECK(sporadic == 18);
  CHECK(family == 2);
}

TEST_CASE("verify") {
  const auto all = run("verify --all --max-n 12");
  CHECK(all.exit_code == 0);
  CHECK(all.out.find("FAIL") == std::string::npos);
  CHECK(all.out.find("all checks passed") != std::string::npos);

  const auto one = run("verify --entry snub-cube");
  CHECK(one.exit_code == 0);
  CHECK(one.out.find("snub cube") != std::string::npos);
}

TEST_CASE("oracle") {
  const auto diff = run("oracle --max-p 12 --diff");
  CHECK(diff.exit_code == 0);
  CHECK(diff.out.find("feasible 74") != std::string::npos);
  CHECK(diff.out.find("realized 36") != std::string::npos);
  CHECK(diff.out.find("spurious 38") != std::string::npos);
  CHECK(diff.out.find("3.9.9  [parity]") != std::string::npos);
  CHECK(diff.out.find("5.5.6  [equal-pair (pentagon)]") != std::string::npos);
  CHECK(diff.out.find("3.4.4.5  [triangle-neighbors]") != std::string::npos);
  CHECK(diff.out.find("unexplained") == std::string::npos);

  const auto plain = run("oracle --max-p 12");
  CHECK(plain.exit_code == 0);
  CHECK(lines_of(plain.out).size() == 74);
}

TEST_CASE("realize documents") {
  const auto tt = run("realize truncated-tetrahedron --out faces");
  CHECK(tt.exit_code == 0);
  const auto rows = lines_of(tt.out);
  REQUIRE(rows.size() == 9);
  CHECK(rows[0] == "12 18 8");
  int triangles = 0, hexagons = 0;
  for (size_t i = 1; i < rows.size(); ++i) {
    std::istringstream in(rows[i]);
    int idx, n = 0;
    while (in >> idx) ++n;
    triangles += n == 3;
    hexagons += n == 6;
  }
  CHECK(triangles == 4);
  CHECK(hexagons == 4);

  const auto cubocta = run("realize cuboctahedron --out faces");
  const auto clines = lines_of(cubocta.out);
  REQUIRE(clines.size() == 15);
  CHECK(clines[0] == "12 24 14");

  const auto anti = run("realize --family antiprism --n 3 --out json");
  CHECK(anti.exit_code == 0);
  const auto j = nlohmann::json::parse(anti.out);
  CHECK(j["V"] == 6);
  CHECK(j["E"] == 12);
  CHECK(j["F"] == 8);
  CHECK(j["uniform"] == true);
}

TEST_CASE("catalog formats") {
  const auto csv = run("catalog --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(lines_of(csv.out).size() == 21);  // header + 18 + 2 families

  const auto js = run("catalog --format json");
  CHECK(nlohmann::json::parse(js.out).size() == 20);

  const auto table = run("catalog");
  CHECK(table.exit_code == 0);
  CHECK(lines_of(table.out).size() == 21);
}

TEST_CASE("list-names") {
  const auto names = run("--list-names");
  CHECK(names.exit_code == 0);
  CHECK(names.out.find("great-rhombicosidodecahedron") != std::string::npos);
  CHECK(names.out.find("triangular") == std::string::npos);  // family covers it
}

TEST_CASE("identical invocations are byte-identical") {
  for (const char* cmd :
       {"catalog --format json", "catalog --format csv",
        "enumerate --format json", "enumerate --r 3", "oracle --max-p 12 --diff",
        "realize snub-dodecahedron --out faces",
        "realize great-rhombicosidodecahedron --out json"}) {
    const auto first = run(cmd);
    const auto second = run(cmd);
    CHECK(first.exit_code == second.exit_code);
    CHECK(first.out == second.out);
  }
}
