#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pspread/cli.hpp"
#include "pspread/spread_io.hpp"

using namespace pspread;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name)
      : path(std::filesystem::temp_directory_path() / name) {}
  ~TempFile() { std::error_code ec; std::filesystem::remove(path, ec); }
  std::string str() const { return path.string(); }
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("bounds subcommand") {
  auto r = run({"bounds", "--q", "2", "--n", "8", "--t", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("mu=34 exact") != std::string::npos);
  CHECK(r.out.find("EJSSS_THM3=34") != std::string::npos);
  CHECK(r.out.find("LEMMA11=34") != std::string::npos);
  CHECK(r.out.find("DF_THM1=34") != std::string::npos);

  auto m = run({"bounds", "--q", "2", "--n", "8", "--t", "3", "--machine"});
  CHECK(m.code == 0);
  CHECK(m.out.find("BOUND 2 8 3 34 34 34") == 0);

  auto range = run({"bounds", "--q", "3", "--n", "11", "--t", "4", "--machine"});
  CHECK(range.out.find("BOUND 3 11 4 2188 2202 -") == 0);

  auto sweep = run({"bounds", "--q", "2", "--n", "8", "--t", "3", "--sweep", "10"});
  CHECK(sweep.code == 0);
  // one row per n in (t, 10]
  int rows = 0;
  for (char c : sweep.out)
    if (c == '\n') ++rows;
  CHECK(rows == 7);
}

TEST_CASE("construct then verify round trip") {
  TempFile file("pspread_cli_s27.txt");
  auto c = run({"construct", "--q", "2", "--n", "7", "--t", "3", "-o", file.str()});
  CHECK(c.code == 0);
  CHECK(c.out.find("wrote 17 members") != std::string::npos);

  auto v = run({"verify", file.str()});
  CHECK(v.code == 0);
  CHECK(v.out == "size=17 holes=8 min_dist=6 OK\n");

  // re-serialization of the parsed file is byte-identical
  std::ifstream f(file.path);
  construct::PartialSpread sp = io::read_spread_file(f);
  std::ostringstream again;
  io::write_spread(again, sp);
  CHECK(again.str() == slurp(file.path));
}

TEST_CASE("verify rejects an overlapping spread with a witness pair") {
  TempFile file("pspread_cli_corrupt.txt");
  {
    construct::PartialSpread sp = construct::construct_partial_spread(2, 6, 2);
    sp.members.push_back(sp.members[3]);  // duplicate
    std::ofstream f(file.path, std::ios::binary);
    io::write_spread(f, sp);
  }
  auto v = run({"verify", file.str()});
  CHECK(v.code == 1);
  CHECK(v.err.find("OverlapError members (3,21) share point") != std::string::npos);
}

TEST_CASE("verify rejects malformed files") {
  TempFile file("pspread_cli_malformed.txt");
  {
    std::ofstream f(file.path, std::ios::binary);
    f << "q=2 n=4 t=2\n0 1 0 1;1 0 1 0\n";  // rows not in RREF order
  }
  auto v = run({"verify", file.str()});
  CHECK(v.code == 1);
  CHECK(v.err.find("ParseError line 2") != std::string::npos);
}

TEST_CASE("analyze reports identities and the s_b histogram") {
  TempFile file("pspread_cli_s252.txt");
  auto c = run({"construct", "--q", "2", "--n", "5", "--t", "2", "-o", file.str()});
  REQUIRE(c.code == 0);

  auto a = run({"analyze", file.str()});
  CHECK(a.code == 0);
  CHECK(a.out.find("type [2^9,1^4]") != std::string::npos);
  CHECK(a.out.find("average b_1 = 60/31") != std::string::npos);
  CHECK(a.out.find("ok") != std::string::npos);

  auto m = run({"analyze", file.str(), "--machine"});
  CHECK(m.code == 0);
  // machine histogram lines: s_b <b-vector> <count>, dims descending (b_2,b_1)
  CHECK(m.out.find("s_b 3,0 ") != std::string::npos);
  CHECK(m.out.find("s_b 2,2 ") != std::string::npos);
  CHECK(m.out.find("s_b 1,4 ") != std::string::npos);

  auto h = run({"analyze", file.str(), "--hyperplanes"});
  CHECK(h.code == 0);
  CHECK(h.out.find("H 0 b=[") != std::string::npos);
  CHECK(h.out.find("H 30 b=[") != std::string::npos);
}

TEST_CASE("descent subcommand prints the certificate trace") {
  auto d = run({"descent", "--q", "2", "--n", "10", "--t", "4"});
  CHECK(d.code == 0);
  CHECK(d.out.find("CONTRADICTION => mu_2(10,4) <= l*q^t + 1 = 65") != std::string::npos);

  auto nm = run({"descent", "--q", "2", "--n", "8", "--t", "3"});
  CHECK(nm.code == 0);
  CHECK(nm.out.find("HypothesisNotMet") != std::string::npos);
}

TEST_CASE("search subcommand") {
  auto s = run({"search", "--q", "2", "--n", "5", "--t", "2"});
  CHECK(s.code == 0);
  CHECK(s.out.find("size=9 optimal=yes") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run({"bounds", "--q", "2"}).code == 2);         // missing required flags
  CHECK(run({"frobnicate"}).code == 2);                 // unknown subcommand
  CHECK(run({}).code == 2);                             // no subcommand
  CHECK(run({"bounds", "--q", "6", "--n", "7", "--t", "2"}).code == 2);  // not a prime power
  CHECK(run({"verify", "/nonexistent/x.txt"}).code == 2);
  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("bounds") != std::string::npos);
}
