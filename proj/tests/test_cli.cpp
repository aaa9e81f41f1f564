#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "cli.hpp"
#include "helpers.hpp"
#include "mgrough/approximations.hpp"
#include "mgrough/partitions.hpp"
#include "mgrough/text_format.hpp"

namespace fs = std::filesystem;
using namespace mgrough;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "mgrough");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(MGROUGH_TEST_DATA_DIR) + "/" + name; }

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Compares against tests/golden/<name>. With MGROUGH_UPDATE_GOLDEN set the
/// file is rewritten instead.
void check_golden(const std::string& name, const std::string& actual) {
  const fs::path path = fs::path(MGROUGH_TEST_GOLDEN_DIR) / name;
  if (std::getenv("MGROUGH_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(path, std::ios::binary) << actual;
    return;
  }
  REQUIRE_MESSAGE(fs::exists(path), "missing golden file " << path);
  CHECK(read_file(path) == actual);
}

std::vector<std::vector<std::string>> tsv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, '\t')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_SUITE("cli output") {
  TEST_CASE("table re-parses to the library approximations") {
    const auto r = run({"table", data("table1.rel")});
    REQUIRE(r.code == 0);
    check_golden("table1.table.tsv", r.out);

    const auto file = parse_relation_file(read_file(data("table1.rel")));
    const auto& p = file.partitions[0].second;
    const auto& q = file.partitions[1].second;
    const auto& u = file.universe;
    const auto rows = tsv_rows(r.out);
    REQUIRE(rows.size() == 9);
    CHECK(rows[0].size() == 9);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      REQUIRE(rows[i].size() == 9);
      const auto x = u.parse_set(rows[i][0]);
      CHECK(x.bits() == i - 1);
      CHECK(u.parse_set(rows[i][1]) == lower_e(p, x));
      CHECK(u.parse_set(rows[i][2]) == lower_e(q, x));
      CHECK(u.parse_set(rows[i][3]) == upper_e(p, x));
      CHECK(u.parse_set(rows[i][4]) == upper_e(q, x));
      CHECK(u.parse_set(rows[i][5]) == opt_lower(p, q, x));
      CHECK(u.parse_set(rows[i][6]) == opt_upper(p, q, x));
      CHECK(u.parse_set(rows[i][7]) == pess_lower(p, q, x));
      CHECK(u.parse_set(rows[i][8]) == pess_upper(p, q, x));
    }
  }

  TEST_CASE("system listings") {
    auto r = run({"system", data("table1.rel")});
    REQUIRE(r.code == 0);
    check_golden("table1.system.tsv", r.out);
    CHECK(r.out.find("# NOT A LATTICE: (-, b) and (a, a) have no join\n") != std::string::npos);
    CHECK(r.out.find("# minimal upper bounds: (ab, ab) (ac, abc)\n") != std::string::npos);

    r = run({"system", "--system", "pess", data("table1.rel")});
    REQUIRE(r.code == 0);
    check_golden("table1.pess.system.tsv", r.out);
    CHECK(tsv_rows(r.out).size() == 1 + 7 + 1);

    r = run({"system", "--system", "irs", data("table1.rel")});
    REQUIRE(r.code == 0);
    CHECK(tsv_rows(r.out).size() == 1 + 10 + 1);
    CHECK(r.out.find("# lattice: yes") != std::string::npos);

    r = run({"system", data("nondistributive.rel")});
    REQUIRE(r.code == 0);
    check_golden("nondistributive.system.tsv", r.out);

    r = run({"system", "--system", "tol", data("path3.rel")});
    REQUIRE(r.code == 0);
    check_golden("path3.tol.system.tsv", r.out);

    r = run({"system", "--system", "equiv", data("table1.rel")});
    REQUIRE(r.code == 0);
    CHECK(tsv_rows(r.out).size() == 1 + 6 + 1);  // 2 × 3 pairs for ab|c

    r = run({"system", data("wide.rel")});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("{x1,x2}") != std::string::npos);
  }

  TEST_CASE("system json") {
    const auto r = run({"system", "--format", "json", data("table1.rel")});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["kind"] == "optimistic");
    CHECK(j["elements"].size() == 8);
    CHECK(j["is_lattice"] == false);
    CHECK(j["covers"].size() > 0);
  }

  TEST_CASE("diagrams") {
    auto r = run({"dm", data("table1.rel")});
    REQUIRE(r.code == 0);
    check_golden("table1.dm.dot", r.out);
    CHECK(r.out.find("// dm_size: 10\n") != std::string::npos);
    CHECK(r.out.find("// isomorphic_to_irs: true\n") != std::string::npos);

    r = run({"dm", "--format", "tsv", data("table1.rel")});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("dm_size\t10\n") != std::string::npos);

    r = run({"dot", data("table1.rel")});
    REQUIRE(r.code == 0);
    check_golden("table1.system.dot", r.out);

    r = run({"dot", "--family", "interior-pess", data("table1.rel")});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("label=\"abc\"") != std::string::npos);
    CHECK(r.out.find("label=\"ac\"") == std::string::npos);
  }

  TEST_CASE("approx") {
    auto r = run({"approx", data("table1.rel"), "--set", "ac"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("X_{P+Q}\tac\n") != std::string::npos);
    CHECK(r.out.find("X^{P+Q}\tabc\n") != std::string::npos);
    CHECK(r.out.find("X_{P∪Q}\t-\n") != std::string::npos);

    r = run({"approx", data("path3.rel"), "--set", "a"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "X\ta\nX_T\t-\nX^T\tab\n◇X\ta\n□X\t-\n");
  }

  TEST_CASE("report") {
    auto r = run({"report", data("table1.rel")});
    REQUIRE(r.code == 0);
    check_golden("table1.report.json", r.out);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["sizes"]["irs_opt"] == 10);

    r = run({"report", "--format", "tsv", data("nondistributive.rel")});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("condition_c\ttrue\n") != std::string::npos);
    CHECK(r.out.find("systems.rs_opt.lattice.is_lattice.holds\ttrue\n") != std::string::npos);
    CHECK(r.out.find("systems.rs_opt.lattice.is_distributive.holds\tfalse\n") != std::string::npos);
  }

  TEST_CASE("inline input and named partitions") {
    const auto a = run({"table", "--inline", "universe: a b c;partition P: a b | c;partition Q: a | b c"});
    const auto b = run({"table", data("table1.rel")});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const auto swapped = run({"table", "--p", "Q", "--q", "P", data("table1.rel")});
    REQUIRE(swapped.code == 0);
    CHECK(swapped.out != b.out);
  }

  TEST_CASE("output file") {
    const auto path = fs::temp_directory_path() / "mgrough_cli_test_out.tsv";
    fs::remove(path);
    const auto r = run({"table", data("table1.rel"), "--out", path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    CHECK(read_file(path) == run({"table", data("table1.rel")}).out);
    fs::remove(path);
  }

  TEST_CASE("repeated runs are byte-identical") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"table", data("redundant4.rel")},
             {"system", data("crossing4.rel")},
             {"dm", data("redundant4.rel")},
             {"report", data("crossing4.rel")},
             {"sweep", "--max-n", "3", "--random-pairs", "5"}}) {
      CHECK(run(args).out == run(args).out);
    }
    CHECK(run({"sweep", "--max-n", "4", "--random-pairs", "20", "--threads", "1"}).out ==
          run({"sweep", "--max-n", "4", "--random-pairs", "20", "--threads", "3"}).out);
  }
}

TEST_SUITE("cli sweep") {
  TEST_CASE("counts match an independent oracle count") {
    const auto r = run({"sweep", "--max-n", "4"});
    REQUIRE(r.code == 0);
    check_golden("sweep4.tsv", r.out);
    const auto rows = tsv_rows(r.out);
    REQUIRE(rows.size() == 1 + 5 + 1 + 1);
    for (std::size_t n = 0; n <= 4; ++n) {
      // Count by brute force: matrices, comparability of classes, and the
      // lattice test on the componentwise order of the oracle rough sets.
      std::size_t pairs = 0, coherent = 0, lattice = 0;
      const auto parts = all_partitions(letters_universe(n));
      for (const auto& p : parts) {
        for (const auto& q : parts) {
          ++pairs;
          const auto pm = testing_support::matrix(p);
          const auto qm = testing_support::matrix(q);
          bool comparable = true;
          for (std::size_t x = 0; x < n; ++x) {
            const auto a = oracle::row(pm, static_cast<int>(x));
            const auto b = oracle::row(qm, static_cast<int>(x));
            comparable &= oracle::subset(a, b) || oracle::subset(b, a);
          }
          coherent += comparable;
          const auto rs = oracle::rs_optimistic(static_cast<int>(n), pm, qm);
          lattice += oracle::is_lattice(oracle::componentwise({rs.begin(), rs.end()}));
        }
      }
      const auto& row = rows[1 + n];
      CAPTURE(n);
      CHECK(row[0] == "exhaustive");
      CHECK(row[2] == std::to_string(pairs));
      CHECK(row[3] == std::to_string(coherent));
      CHECK(row[6] == std::to_string(lattice));
      CHECK(row[8] == "0");
    }
    CHECK(rows.back() == std::vector<std::string>{"violations", "0"});
  }
}

TEST_SUITE("cli errors") {
  TEST_CASE("usage errors exit 1 with a message") {
    auto r = run({"system", data("bad.rel")});
    CHECK(r.code == cli::kUsageError);
    CHECK(r.err == "error: line 2, column 20: element 'b' appears in two classes\n");
    r = run({"system", data("path3.rel")});
    CHECK(r.code == cli::kUsageError);
    CHECK(r.err.find("no partition line") != std::string::npos);
    r = run({"system", data("does-not-exist.rel")});
    CHECK(r.code == cli::kUsageError);
    r = run({"approx", data("table1.rel")});
    CHECK(r.code == cli::kUsageError);
    r = run({"approx", data("table1.rel"), "--set", "az"});
    CHECK(r.code == cli::kUsageError);
    r = run({"system", "--format", "dot", "--system", "nope", data("table1.rel")});
    CHECK(r.code == cli::kUsageError);
    r = run({"table", "--format", "json", data("table1.rel")});
    CHECK(r.code == cli::kUsageError);
    r = run({"sweep", "--max-n", "7"});
    CHECK(r.code == cli::kUsageError);
    r = run({});
    CHECK(r.code == cli::kUsageError);
  }

  TEST_CASE("help exits 0") {
    const auto r = run({"--help"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("sweep") != std::string::npos);
  }

  TEST_CASE("size limit exits 3") {
    const auto r = run({"table", "--limit-exhaustive", "2", data("table1.rel")});
    CHECK(r.code == cli::kSizeLimit);
    CHECK(r.err.find("exceeds limit 2") != std::string::npos);
  }

  TEST_CASE("the installed binary reports the same exit codes") {
    auto status = [](const std::string& args) {
      const std::string cmd = std::string(MGROUGH_CLI_BINARY) + " " + args + " >/dev/null 2>&1";
      const int raw = std::system(cmd.c_str());
      return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    CHECK(status("table " + data("table1.rel")) == 0);
    CHECK(status("system " + data("bad.rel")) == 1);
    CHECK(status("table --limit-exhaustive 2 " + data("table1.rel")) == 3);
  }
}
