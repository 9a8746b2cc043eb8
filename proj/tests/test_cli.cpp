#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using namespace naples;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    cells.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) return cells;
    start = tab + 1;
  }
}

struct Golden {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

Golden load_golden() {
  std::ifstream file(std::string(NAPLES_GOLDEN_DIR) + "/convert.tsv");
  REQUIRE(file);
  Golden g;
  std::string line;
  std::getline(file, line);
  g.header = split_tabs(line);
  while (std::getline(file, line)) {
    if (!line.empty()) g.rows.push_back(split_tabs(line));
  }
  return g;
}

}  // namespace

TEST_CASE("parse examples") {
  auto p = cli::parse({"park", "--pref", "6,6,6,5,5,2,1", "--k", "2"});
  REQUIRE(p.plan);
  CHECK(p.plan->command == "park");
  CHECK(p.plan->pref == "6,6,6,5,5,2,1");
  CHECK(p.plan->k == 2);

  p = cli::parse({"convert", "--from", "pref-desc", "--to", "ncp", "--k", "2", "6,6,6,5,5,2,1"});
  REQUIRE(p.plan);
  CHECK(p.plan->from == "pref-desc");
  CHECK(p.plan->to == "ncp");
  CHECK(p.plan->value == "6,6,6,5,5,2,1");

  p = cli::parse({"count", "--table", "I", "--n", "12", "--k", "4", "--csv"});
  REQUIRE(p.plan);
  CHECK(p.plan->table == "I");
  CHECK(p.plan->n == 12);
  CHECK(p.plan->k == 4);

  p = cli::parse({"verify"});
  REQUIRE(p.plan);
  CHECK(p.plan->theorem == "all");
  CHECK_FALSE(p.plan->n_max);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run_cli({}).code == cli::kUsage);
  CHECK(run_cli({"fly"}).code == cli::kUsage);
  CHECK(run_cli({"park", "--pref", "1,2"}).code == cli::kUsage);
  CHECK(run_cli({"park", "--pref", "1,2", "--k", "1", "--bogus"}).code == cli::kUsage);
  CHECK(run_cli({"park", "--pref", "1,x", "--k", "1"}).code == cli::kUsage);
  CHECK(run_cli({"park", "--pref", "1,2", "--k", "-1"}).code == cli::kUsage);
  CHECK(run_cli({"convert", "--from", "moon", "--to", "ncp", "--k", "1", "1"}).code == cli::kUsage);
  CHECK(run_cli({"convert", "--from", "kdyck", "--to", "ncp", "--k", "1", "UXD"}).code == cli::kUsage);
  CHECK(run_cli({"render", "--tree", "(∅"}).code == cli::kUsage);
  CHECK(run_cli({"render"}).code == cli::kUsage);
  CHECK(run_cli({"render", "--path", "UD", "--dot"}).code == cli::kUsage);
  CHECK(run_cli({"count", "--csv", "--sequence"}).code == cli::kUsage);
  CHECK(run_cli({"count", "--table", "Q"}).code == cli::kUsage);
  const Outcome help = run_cli({"--help"});
  CHECK(help.code == cli::kOk);
  CHECK(help.out.find("convert") != std::string::npos);
}

TEST_CASE("domain errors exit 2") {
  CHECK(run_cli({"convert", "--from", "pref-desc", "--to", "ncp", "--k", "1", "6,6,6,5,5,2,1"}).code == cli::kDomain);
  CHECK(run_cli({"convert", "--from", "pref-desc", "--to", "ncp", "--k", "3", "6,6,6,5,5,2,1"}).code == cli::kDomain);
  CHECK(run_cli({"convert", "--from", "pref-desc", "--to", "kdyck", "--k", "2", "1,2"}).code == cli::kDomain);
  // The quadrilateral misses vertex 0.
  CHECK(run_cli({"convert", "--from", "dissection", "--to", "ncp", "--k", "1", "s=6;r=4;diag=(1,3),(1,5)"}).code ==
        cli::kDomain);
  // A Dyck path that does not start with U^k.
  CHECK(run_cli({"convert", "--from", "dyck", "--to", "kdyck", "--k", "2", "UDUUDD"}).code == cli::kDomain);
  CHECK(run_cli({"verify", "no-such-check"}).code == cli::kDomain);
  CHECK(run_cli({"verify", "rearrangement", "--n", "99"}).code == cli::kDomain);
  const Outcome o = run_cli({"convert", "--from", "kdyck", "--to", "pref-desc", "--k", "0", "DUUD"});
  CHECK(o.code == cli::kDomain);
  CHECK(o.err.starts_with("error: "));
}

TEST_CASE("park and check") {
  CHECK(run_cli({"park", "--pref", "6,6,6,5,5,2,1", "--k", "2"}).out == "ok: 6,5,4,3,7,2,1\n");
  CHECK(run_cli({"park", "--pref", "6,6,6,5,5,2,1", "--k", "1"}).out == "fail@5\n");
  CHECK(run_cli({"check", "--pref", "6,6,6,5,5,2,1", "--k", "2"}).out ==
        "k-naples: true\nstrictly-k-naples: true\nrearrangement-closed: false\n");
  const Outcome o = run_cli({"check", "--pref", "1,3,3,5,6,6", "--k", "2", "--json"});
  REQUIRE(o.code == 0);
  const json doc = json::parse(o.out);
  CHECK(doc["preference"] == "1,3,3,5,6,6");
  CHECK(doc["k"] == 2);
  CHECK(doc["k_naples"] == true);
  CHECK(doc["strictly_k_naples"] == true);
  CHECK(doc["rearrangement_closed"] == true);
  CHECK(doc["minimal_k"] == 2);
  CHECK(json::parse(run_cli({"check", "--pref", "", "--k", "0", "--json"}).out)["minimal_k"].is_null());
}

TEST_CASE("convert") {
  CHECK(run_cli({"convert", "--from", "pref-desc", "--to", "kdyck", "--k", "2", "6,6,6,5,5,2,1"}).out ==
        "UDUDDDUUDUUUDD\n");
  CHECK(run_cli({"convert", "--from", "pref-desc", "--to", "ncp", "--k", "2", "-"}, "6,6,6,5,5,2,1\n").out ==
        "root={1,4,5,7,8,10};blocks={2,3},{6},{9}\n");
  const Outcome o = run_cli({"convert", "--from", "kdyck", "--to", "dissection", "--k", "2", "--json", "UDUDDDUUDUUUDD"});
  REQUIRE(o.code == 0);
  const json doc = json::parse(o.out);
  CHECK(doc == json{{"from", "kdyck"},
                    {"to", "dissection"},
                    {"k", 2},
                    {"n", 7},
                    {"input", "UDUDDDUUDUUUDD"},
                    {"output", "s=10;r=6;diag=(0,3),(1,3),(4,6),(7,9)"}});
}

TEST_CASE("golden corpus round trips in process") {
  const Golden g = load_golden();
  REQUIRE(g.header.size() == 1 + cli::representations().size());
  CHECK(std::vector<std::string>(g.header.begin() + 1, g.header.end()) == cli::representations());
  REQUIRE(g.rows.size() >= 30);
  for (const auto& row : g.rows) {
    REQUIRE(row.size() == g.header.size());
    const std::string& k = row[0];
    for (std::size_t a = 1; a < row.size(); ++a) {
      if (row[a] == "-") continue;
      for (std::size_t b = 1; b < row.size(); ++b) {
        CAPTURE(row[a]);
        CAPTURE(g.header[b]);
        const Outcome o = run_cli({"convert", "--from", g.header[a], "--to", g.header[b], "--k", k, row[a]});
        if (row[b] == "-") {
          CHECK(o.code == cli::kDomain);
        } else {
          CHECK(o.code == cli::kOk);
          CHECK(o.out == row[b] + "\n");
        }
      }
    }
  }
}

TEST_CASE("count") {
  const Outcome csv = run_cli({"count", "--table", "I", "--n", "3", "--k", "1"});
  CHECK(csv.out == "n,k=0,k=1\n0,1,1\n1,1,1\n2,2,3\n3,5,8\n");
  CHECK(run_cli({"count", "--table", "catalan", "--n", "4"}).out == "n,value\n0,1\n1,1\n2,2\n3,5\n4,14\n");
  CHECK(run_cli({"count", "--table", "fine", "--n", "5", "--sequence"}).out == "0 1\n1 0\n2 1\n3 2\n4 6\n5 18\n");
  CHECK(run_cli({"count", "--table", "strict", "--n", "7", "--k", "2", "--sequence"}).out.ends_with("7 429\n"));
  CHECK(run_cli({"count", "--table", "total", "--n", "4", "--k", "1"}).out.find("\n3,5,9\n") != std::string::npos);

  const json table = json::parse(run_cli({"count", "--table", "total", "--n", "2", "--k", "1", "--json"}).out);
  CHECK(table == json::parse(R"({"table":"total","n_max":2,"k_max":1,"rows":[{"n":1,"values":["1","1"]},)"
                             R"({"n":2,"values":["2","3"]}]})"));
  const json seq = json::parse(run_cli({"count", "--table", "U", "--n", "2", "--k", "1", "--sequence", "--json"}).out);
  CHECK(seq["table"] == "U");
  CHECK(seq["k"] == 1);
  CHECK(seq["sequence"].size() == 3);
  CHECK(seq["sequence"][2] == json{{"n", 2}, {"value", "2"}});
  // Values beyond 64 bits stay exact.
  CHECK(run_cli({"count", "--table", "catalan", "--n", "40", "--sequence"}).out.ends_with("40 2622127042276492108820\n"));
}

TEST_CASE("render") {
  CHECK(run_cli({"render", "--path", "UUDUDD"}).out == " /\\/\\\n/    \\\n");
  CHECK(run_cli({"render", "--tree", "((∅∅)(∅∅))"}).out == "* 0\n  L 1\n  R 0\n");
  CHECK(run_cli({"render", "--tree", "(∅∅)", "--dot"}).out.starts_with("digraph tree {"));
  CHECK(run_cli({"render", "--path", "UD", "--svg"}).out.starts_with("<svg"));
}

TEST_CASE("verify") {
  const Outcome one = run_cli({"verify", "fine", "--n", "8", "--k", "1"});
  CHECK(one.code == cli::kOk);
  CHECK(one.out.starts_with("PASS fine n<=8 k<=1 cases="));
  CHECK(one.out.ends_with("all 1 checks passed\n"));
  const Outcome machine = run_cli({"verify", "strict-tree", "--n", "5", "--k", "2", "--machine"});
  CHECK(machine.out.starts_with("strict-tree\tpass\t5\t2\t"));
  const Outcome list = run_cli({"verify", "--list"});
  CHECK(list.out.starts_with("rearrangement (n<=6, k<=3): "));
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "naples_cli_test_output.txt";
  const Outcome o = run_cli({"-o", path.string(), "park", "--pref", "2,2,1,4", "--k", "0"});
  CHECK(o.code == 0);
  CHECK(o.out.empty());
  std::ifstream file(path);
  std::string line;
  std::getline(file, line);
  CHECK(line == "ok: 2,3,1,4");
  std::filesystem::remove(path);
}
