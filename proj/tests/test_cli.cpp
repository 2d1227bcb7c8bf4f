#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "wk/calibration.hpp"
#include "wk/oracle.hpp"
#include "wk/rng.hpp"

using namespace wk;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "wk_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

void write_file(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string read_file(const fs::path& p) {
  std::stringstream ss;
  ss << std::ifstream(p).rdbuf();
  return ss.str();
}

cli::RunSpec spec_for(const fs::path& in, const fs::path& out) {
  cli::RunSpec rs;
  rs.input_path = in.string();
  rs.output_path = out.string();
  rs.result_path = out.string();
  rs.limits.max_items_bruteforce = 24;
  return rs;
}

}  // namespace

TEST_CASE("decimals are exact") {
  CHECK(io::parse_decimal("1.5") == 1500000);
  CHECK(io::parse_decimal("0.000001") == 1);
  CHECK(io::parse_decimal("12") == 12000000);
  CHECK(io::parse_decimal("3.2500000") == 3250000);
  CHECK(io::parse_decimal("-2.5", 1) == -25);
  CHECK_THROWS_AS(io::parse_decimal("0.0000001"), io::ParseError);
  CHECK_THROWS_AS(io::parse_decimal("1e5"), io::ParseError);
  CHECK_THROWS_AS(io::parse_decimal("."), io::ParseError);
  CHECK_THROWS_AS(io::parse_decimal(""), io::ParseError);
  CHECK(io::format_decimal(1500000) == "1.5");
  CHECK(io::format_decimal(7) == "0.000007");
  CHECK(io::format_decimal(0) == "0");
  CHECK(io::format_decimal(-25, 1) == "-2.5");
  Rng rng(91);
  for (int i = 0; i < 1000; ++i) {
    i64 v = rng.range(0, i64{1} << 50);
    CHECK(io::parse_decimal(io::format_decimal(v)) == v);
  }
}

TEST_CASE("instance files") {
  std::istringstream ok("# hello\nt=10 eps=0.25\n\n1.5 2\n3 4.25\n");
  auto f = io::read_instance(ok);
  CHECK(f.inst.capacity == 10000000);
  CHECK(f.inst.eps == 0.25);
  CHECK(f.inst.items == PointSet{{1500000, 2000000}, {3000000, 4250000}});
  CHECK(f.comments == std::vector<std::string>{"hello"});
  std::ostringstream out;
  io::write_instance(out, f);
  CHECK(out.str() == "# hello\nt=10 eps=0.25\n1.5 2\n3 4.25\n");

  std::istringstream digits("t=10 eps=0.5 digits=2\n1.25 3\n");
  CHECK(io::read_instance(digits).inst.items == PointSet{{125, 300}});
  for (const char* bad : {"", "1 2\n", "t=1\n", "t=1 eps=0.1 x=2\n", "t=1 eps=0.1\n1 2 3\n", "t=1 eps=0.1\n1 a\n",
                          "t=1 eps=zero\n"}) {
    std::istringstream in(bad);
    CHECK_THROWS_AS(io::read_instance(in), io::ParseError);
  }
}

TEST_CASE("generator families") {
  GeneratorSpec g;
  g.n = 30;
  SUBCASE("banded with delta 0") {
    g.family = Family::Banded;
    g.delta = 0;
    g.lo = g.hi = 5'000'000;
    for (const auto& it : generate(g).inst.items) CHECK(it.profit == it.weight);
  }
  SUBCASE("cliff metadata") {
    g.family = Family::Cliff;
    g.tau = 8;
    g.n = 24;
    auto f = generate(g);
    REQUIRE(!f.comments.empty());
    CHECK(f.comments[0].find("cliffs=8,16 ") != std::string::npos);
  }
  SUBCASE("same seed, same bytes") {
    for (auto fam : all_families()) {
      g.family = fam;
      g.seed = 44;
      std::ostringstream a, b;
      io::write_instance(a, generate(g));
      io::write_instance(b, generate(g));
      CHECK(a.str() == b.str());
      g.seed = 45;
      std::ostringstream c;
      io::write_instance(c, generate(g));
      CHECK(a.str() != c.str());
    }
  }
}

TEST_CASE("solve command") {
  std::ostringstream err;
  SUBCASE("three items") {
    auto in = scratch("three.txt"), out = scratch("three.json");
    write_file(in, "t=5 eps=0.25\n2 3\n3 4\n4 5\n");
    REQUIRE(cli::cmd_solve(spec_for(in, out), err) == cli::kOk);
    auto j = nlohmann::json::parse(read_file(out));
    const i64 profit = io::parse_decimal(j["answer"]["profit"].get<std::string>());
    CHECK((double)profit * (1 + kWeakC * 0.25) >= 7'000'000.0);
    CHECK(j["audit"].contains("budget"));
  }
  SUBCASE("empty instance") {
    auto in = scratch("empty.txt"), out = scratch("empty.json");
    write_file(in, "t=5 eps=0.25\n");
    REQUIRE(cli::cmd_solve(spec_for(in, out), err) == cli::kOk);
    auto j = nlohmann::json::parse(read_file(out));
    CHECK(j["answer"]["weight"] == "0");
    CHECK(j["answer"]["profit"] == "0");
  }
  SUBCASE("eps above one") {
    auto in = scratch("big_eps.txt"), out = scratch("big_eps.json");
    write_file(in, "t=5 eps=1.5\n2 3\n");
    REQUIRE(cli::cmd_solve(spec_for(in, out), err) == cli::kOk);
    CHECK(err.str().find("clamped") != std::string::npos);
    auto j = nlohmann::json::parse(read_file(out));
    CHECK(j["eps"] == 1.0);
    CHECK(j["eps_clamped"] == true);
  }
  SUBCASE("exit codes") {
    auto in = scratch("bad.txt"), out = scratch("bad.json");
    write_file(in, "t=5 eps=0.25\n2 x\n");
    CHECK(cli::cmd_solve(spec_for(in, out), err) == cli::kParseError);
    write_file(in, "t=5 eps=0\n2 3\n");
    CHECK(cli::cmd_solve(spec_for(in, out), err) == cli::kInvalidSpec);
    write_file(in, "t=5 eps=0.2\n0 3\n");
    CHECK(cli::cmd_solve(spec_for(in, out), err) == cli::kInvalidSpec);
    auto missing = spec_for(scratch("does_not_exist.txt"), out);
    CHECK(cli::cmd_solve(missing, err) == cli::kParseError);
  }
  SUBCASE("csv output reads back") {
    auto in = scratch("csv.txt"), out = scratch("csv.out");
    write_file(in, "t=5 eps=0.25\n2 3\n3 4\n4 5\n");
    auto rs = spec_for(in, out);
    rs.format = cli::Format::Csv;
    REQUIRE(cli::cmd_solve(rs, err) == cli::kOk);
    std::ifstream r(out);
    auto res = cli::read_result(r);
    CHECK(res.eps == 0.25);
    CHECK(!res.set.empty());
    std::ostringstream rep;
    CHECK(cli::cmd_verify(rs, rep, err) == cli::kOk);
  }
}

TEST_CASE("verify command") {
  std::ostringstream err, rep;
  GeneratorSpec g;
  g.n = 14;
  g.seed = 5;
  auto in = scratch("v.txt"), out = scratch("v.json");
  REQUIRE(cli::cmd_gen(g, in.string(), err) == cli::kOk);
  auto rs = spec_for(in, out);
  REQUIRE(cli::cmd_solve(rs, err) == cli::kOk);
  CHECK(cli::cmd_verify(rs, rep, err) == cli::kOk);

  SUBCASE("inflated profit fails") {
    auto j = nlohmann::ordered_json::parse(read_file(out));
    const i64 p = io::parse_decimal(j["answer"]["profit"].get<std::string>());
    j["answer"]["profit"] = io::format_decimal(p * 2 + 1);
    write_file(out, j.dump());
    std::ostringstream r2;
    CHECK(cli::cmd_verify(rs, r2, err) == cli::kCheckFailed);
    CHECK(r2.str().find("dominated_by: FAIL") != std::string::npos);
  }
  SUBCASE("unknown fields are rejected") {
    auto j = nlohmann::ordered_json::parse(read_file(out));
    j["extra"] = 1;
    write_file(out, j.dump());
    CHECK(cli::cmd_verify(rs, rep, err) == cli::kParseError);
    j.erase("extra");
    j["answer"]["bonus"] = "1";
    write_file(out, j.dump());
    CHECK(cli::cmd_verify(rs, rep, err) == cli::kParseError);
  }
  SUBCASE("oracle limits") {
    rs.limits.max_items_bruteforce = 4;
    rs.limits.max_grid_dp = 1000;
    CHECK(cli::cmd_verify(rs, rep, err) == cli::kOracleLimit);
  }
}

TEST_CASE("verify takes the dp path for 40 integer items") {
  std::ostringstream err, rep;
  GeneratorSpec g;
  g.n = 40;
  g.seed = 9;
  g.lo = 1'000'000;
  g.hi = 30'000'000;
  g.digits = 0;
  auto in = scratch("dp.txt"), out = scratch("dp.json");
  REQUIRE(cli::cmd_gen(g, in.string(), err) == cli::kOk);
  auto rs = spec_for(in, out);
  rs.limits.max_grid_dp = 2'000'000'000;
  // integer units: weights 1..30, so the DP table stays small
  write_file(in, [&] {
    auto f = generate(g);
    for (auto& it : f.inst.items) {
      it.weight /= 1'000'000;
      it.profit = std::max<i64>(1, it.profit / 1'000'000);
    }
    f.inst.capacity /= 1'000'000;
    std::ostringstream os;
    io::write_instance(os, f);
    return os.str();
  }());
  REQUIRE(cli::cmd_solve(rs, err) == cli::kOk);
  CHECK(cli::cmd_verify(rs, rep, err) == cli::kOk);
  CHECK(rep.str().find("oracle: dp") != std::string::npos);
}

TEST_CASE("gen, solve, verify round trip") {
  std::ostringstream err;
  int runs = 0;
  for (auto fam : all_families())
    for (std::uint64_t seed = 0; seed < 6; ++seed)
      for (double eps : {0.5, 0.1}) {
        GeneratorSpec g;
        g.family = fam;
        g.n = 1 + (std::size_t)(seed * 4 % 20);
        g.seed = seed;
        g.eps = eps;
        auto in = scratch("rt.txt"), out = scratch("rt.json");
        REQUIRE(cli::cmd_gen(g, in.string(), err) == cli::kOk);
        auto rs = spec_for(in, out);
        rs.seed = seed;
        REQUIRE(cli::cmd_solve(rs, err) == cli::kOk);
        std::ostringstream rep;
        CHECK_MESSAGE(cli::cmd_verify(rs, rep, err) == cli::kOk, rep.str());
        ++runs;
      }
  CHECK(runs == 60);
}

TEST_CASE("bench command") {
  std::ostringstream err;
  BenchSpec bs;
  bs.eps = {0.25};
  bs.n = 10;
  auto out = scratch("bench.csv");
  REQUIRE(cli::cmd_bench(bs, out.string(), err) == cli::kOk);
  std::istringstream lines(read_file(out));
  std::vector<std::string> rows;
  for (std::string l; std::getline(lines, l);) rows.push_back(l);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == bench_csv_header());
  CHECK(rows[1].rfind("uniform,", 0) == 0);
  // oracle column filled for n = 10
  CHECK(rows[1].back() != ',');

  std::atomic<bool> stop{true};
  CHECK(cli::cmd_bench(bs, out.string(), err, &stop) == cli::kInterrupted);
  CHECK(read_file(out) == bench_csv_header() + "\n");
  bs.eps = {2};
  CHECK(cli::cmd_bench(bs, out.string(), err) == cli::kInvalidSpec);
}
