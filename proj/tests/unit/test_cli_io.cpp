#include "gzs/cli_io.hpp"
#include "gzs/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <sstream>

using namespace gzs;

namespace {

RunConfig config(Command c, const char* lambda) {
  RunConfig cfg;
  cfg.command = c;
  cfg.lambda = AmbientWeight::parse(lambda);
  return cfg;
}

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_SUITE("cli_io") {

TEST_CASE("command names") {
  for (auto c : {Command::Vertices, Command::Face, Command::Chevalley, Command::ChevalleyClassical,
                 Command::Admissible, Command::Verify, Command::LatticeCount, Command::OracleFaces}) {
    CHECK(parse_command(command_name(c)) == c);
  }
  CHECK_THROWS_AS(parse_command("bogus"), InvalidArgument);
  CHECK(parse_format("json") == Format::Json);
  CHECK_THROWS_AS(parse_format("xml"), InvalidArgument);
}

TEST_CASE("vertices") {
  const auto r = run(config(Command::Vertices, "0,1,3"));
  CHECK(r.exit_code == kExitOk);
  CHECK(line_count(r.output) == 6U);
  CHECK(r.output.find("1,2,3\t1,3;3\t0,1,3\n") == 0);
}

TEST_CASE("chevalley golden") {
  auto cfg = config(Command::Chevalley, "0,1,3");
  cfg.vertex = Permutation::parse("2,1,3");
  cfg.borel = Permutation::longest(3);
  const auto r = run(cfg);
  CHECK(r.exit_code == kExitOk);
  CHECK(r.output.find("admissible") != std::string::npos);
  CHECK(r.output.find("1,3,2\t3\t") != std::string::npos);
  CHECK(r.output.find("2,1,3\t2\t") != std::string::npos);

  cfg.format = Format::Json;
  const auto j = run(cfg);
  const auto report = report_from_json(j.output);
  REQUIRE(report.cells.size() == 1U);
  const auto& cell = report.cells[0];
  CHECK(cell.cls == Permutation::parse("2,3,1"));
  CHECK(cell.admissible);
  REQUIRE(cell.chevalley.size() == 2U);
  CHECK(cell.chevalley[0].cls == Permutation::parse("1,3,2"));
  CHECK(cell.chevalley[0].coefficient == 3);
  CHECK(cell.chevalley[1].cls == Permutation::parse("2,1,3"));
  CHECK(cell.chevalley[1].coefficient == 2);
}

TEST_CASE("non-admissible expansions are flagged") {
  auto cfg = config(Command::Chevalley, "0,1,3");
  cfg.vertex = Permutation::parse("1,3,2");
  cfg.borel = Permutation::longest(3);
  const auto r = run(cfg);
  CHECK(r.output.find("not admissible") != std::string::npos);
  cfg.command = Command::Admissible;
  CHECK(run(cfg).output == "3,1,2\tnot admissible\n");
}

TEST_CASE("verify output and exit status") {
  const auto r = run(config(Command::Verify, "0,1,3,7"));
  CHECK(r.exit_code == kExitOk);
  CHECK(r.output.rfind("576 pairs, 0 mismatches\n", 0) == 0);
}

TEST_CASE("structured round trip") {
  auto cfg = config(Command::Verify, "0,1,3");
  cfg.format = Format::Json;
  const auto r = run(cfg);
  CHECK(r.exit_code == kExitOk);
  const auto report = report_from_json(r.output);
  CHECK(report == verify(AmbientWeight{0, 1, 3}));
  CHECK(to_json(report) + "\n" == r.output);

  VerificationReport big;
  big.n = 2;
  big.lambda = AmbientWeight{0, 1};
  CellRecord cell;
  cell.sigma = Permutation::parse("2,1");
  cell.borel = Permutation::identity(2);
  cell.cls = cell.sigma;
  cell.dim = 1;
  cell.chevalley.push_back({Permutation::identity(2), Integer("123456789012345678901234567890"), 1});
  big.cells.push_back(cell);
  big.mismatches.push_back({"chevalley", cell.sigma, cell.borel, "made up"});
  CHECK(report_from_json(to_json(big)) == big);

  CHECK_THROWS_AS(report_from_json("{"), InvalidArgument);
  CHECK_THROWS_AS(report_from_json("{\"n\": 3}"), InvalidArgument);
}

TEST_CASE("deterministic output") {
  for (auto c : {Command::Vertices, Command::Verify, Command::Admissible, Command::OracleFaces}) {
    auto cfg = config(c, "0,1,3");
    cfg.format = Format::Json;
    CHECK(run(cfg).output == run(cfg).output);
  }
}

TEST_CASE("errors map to exit codes") {
  CHECK(run(config(Command::Vertices, "0,3,1")).exit_code == kExitUsage);
  CHECK(run(config(Command::OracleFaces, "0,1,2,3,4")).exit_code == kExitUsage);
  CHECK(run(config(Command::OracleFaces, "0,1,2,3,4")).output.rfind("capability error", 0) == 0);
  auto cfg = config(Command::Face, "0,1,3");
  CHECK(run(cfg).exit_code == kExitUsage);
  cfg.vertex = Permutation::parse("2,1");
  CHECK(run(cfg).exit_code == kExitUsage);
  auto wrong_n = config(Command::Vertices, "0,1,3");
  wrong_n.n = 4;
  CHECK(run(wrong_n).exit_code == kExitUsage);
}

TEST_CASE("other commands") {
  CHECK(run(config(Command::LatticeCount, "0,1,3")).output == "15 lattice points, weyl dimension 15\n");
  auto cls = config(Command::ChevalleyClassical, "0,1,3");
  cls.vertex = Permutation::longest(3);
  CHECK(run(cls).output == "class 3,2,1\n2,3,1\t1\n3,1,2\t2\n");
  const auto faces = run(config(Command::OracleFaces, "0,1,3"));
  CHECK(faces.output.rfind("f-vector 7,11,6,1\n", 0) == 0);
  auto face = config(Command::Face, "0,1,3");
  face.vertex = Permutation::parse("3,1,2");
  const auto f = run(face);
  CHECK(f.output.find("face dim=2") != std::string::npos);
  const auto census = run(config(Command::Admissible, "0,1,2,3"));
  CHECK(census.output.find("of 24 classes have no admissible representative") != std::string::npos);
}

}  // TEST_SUITE
