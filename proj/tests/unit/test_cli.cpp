#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "sefib/json_io.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " SEFIB_CLI_PATH " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

sefib::Json json_of(const Run& r) { return sefib::parse_json(r.out); }

}  // namespace

TEST_CASE("genus verbs") {
  const auto g = cli("fiber-genus --s 2 --n 13");
  CHECK(g.status == 0);
  CHECK(json_of(g).at("genus") == "20481");
  CHECK(json_of(g).at("regime") == "GENUS_GE_TWO");
  CHECK(cli("fiber-genus --s 2 --n 13 --format display").out == "20481\n");
  CHECK(json_of(cli("gonality-bound --s 3 --n 4")).at("gonality_lower_bound") == "18");
  CHECK(json_of(cli("family-genus --r 4 --s 2")).at("genus") == 2);
}

TEST_CASE("validate reports the offending pair") {
  const auto ok = cli("validate --r 2 --s 2 --alphas 1,2,3");
  CHECK(ok.status == 0);
  const auto dup = cli("validate --r 2 --s 2 --alphas 1,2,2");
  CHECK(dup.status == 1);
  const auto j = json_of(dup);
  CHECK(j.at("valid") == false);
  CHECK(j.at("violations").at(0).at("kind") == "duplicate");
  CHECK(j.at("violations").at(0).at("i") == 1);
  CHECK(j.at("violations").at(0).at("j") == 2);
}

TEST_CASE("usage errors are distinct") {
  const auto r = cli("validate --r 2 --s 2 --alphas 1,x");
  CHECK(r.status == 2);
  CHECK(json_of(r).at("error") == "usage");
  CHECK(cli("no-such-verb").status == 2);
  CHECK(cli("fiber-genus --s 2").status == 2);
  CHECK(cli("fiber-genus --s 2 --n 3", "SEFIB_WORKERS=zero").status == 2);
  CHECK(cli("fixtures nope --verify").status == 2);
}

TEST_CASE("fiber build and verify") {
  const auto b = cli("fiber-build --r 2 --s 2 --alphas 1,2,3 --convention printed");
  CHECK(b.status == 0);
  CHECK(json_of(b).at("equations").at(0).at("A") == "3");
  const auto d = cli("fiber-build --r 2 --s 2 --alphas 1,2,3 --convention printed --format display --display-style common");
  CHECK(d.out == "c Y_2^2 = -6 Y_0^2 + 6 Y_1^2\nwhere c = 2\n");
  CHECK(cli("fiber-verify --r 2 --s 2 --alphas 1,2,3 --convention printed --point 1,1,0").status == 0);
  const auto off = cli("fiber-verify --r 2 --s 2 --alphas 1,2,3 --point 1,1,0");
  CHECK(off.status == 1);
  CHECK(json_of(off).at("on_fiber") == false);
}

TEST_CASE("solve, lift and push") {
  const auto s = cli("solve-ab --r 2 --s 2 --p0 1,2 --p1 2,6");
  CHECK(s.status == 0);
  CHECK(json_of(s).at("a") == "14/3");
  CHECK(json_of(s).at("b") == "-2/3");
  CHECK(cli("solve-ab --r 2 --s 2 --p0 1,2 --p1 -1,2").status == 1);

  const auto p = cli("push --r 2 --s 2 --a 1 --b 3 --pt 1,2 --pt 3,6 --pt 12,42");
  CHECK(p.status == 0);
  const auto pj = json_of(p);
  CHECK(pj.at("on_fiber") == true);
  CHECK(pj.at("point") == sefib::Json::parse(R"(["1", "3", "21"])"));
  CHECK(cli("push --r 2 --s 2 --a 1 --b 3 --pt 1,2 --pt 3,5 --pt 12,42").status == 1);

  const auto l = cli("lift --r 2 --s 2 --alphas 1,3,12 --point 1,3,21 --scale 2");
  CHECK(l.status == 0);
  const auto lj = json_of(l);
  CHECK(lj.at("curve_with_points").at("curve").at("a") == "1");
  CHECK(lj.at("curve_with_points").at("curve").at("b") == "3");
  const auto lo = cli("lift --r 2 --s 2 --alphas 1,2,3 --point 1,1,0");
  CHECK(lo.status == 1);
  CHECK(json_of(lo).at("obstruction").at("kind") == "off_fiber");
}

TEST_CASE("conic enumeration, also spelled as two words") {
  const auto a = cli("conic-enumerate --r 2 --s 2 --alphas 1,2,3 --count 7");
  const auto b = cli("conic enumerate --r 2 --s 2 --alphas 1,2,3 --count 7 --workers 3");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(json_of(a).size() == 7);
  CHECK(cli("conic-enumerate --r 2 --s 2 --alphas 1,3,4 --count 2").status == 1);
}

TEST_CASE("search") {
  const auto a = cli("search-ab --r 2 --s 2 --alphas 1,3,12 --height 3 --table");
  const auto b = cli("search ab --r 2 --s 2 --alphas 1,3,12 --height 3 --table", "SEFIB_WORKERS=4");
  CHECK(a.status == 0);
  auto ja = json_of(a);
  auto jb = json_of(b);
  CHECK(ja.at("hits") == jb.at("hits"));
  CHECK(ja.at("note").get<std::string>().find("evidence only") != std::string::npos);
  bool planted = false;
  for (const auto& h : ja.at("hits")) planted = planted || (h.at("curve").at("a") == "1" && h.at("curve").at("b") == "3");
  CHECK(planted);
  CHECK(ja.at("square_classes").at("per_condition").size() == 3);
}

TEST_CASE("trivial points") {
  const auto t = cli("trivial-points --r 2 --s 2 --n 2");
  CHECK(t.status == 0);
  CHECK(json_of(t).at("checked") == 64);
  CHECK(json_of(t).at("convention") == "printed");
  CHECK(json_of(cli("trivial-points --r 2 --s 2 --n 2 --convention family")).at("convention") == "family");
  const auto cap = cli("trivial-points --r 7 --s 5 --n 2");
  CHECK(cap.status == 3);
  CHECK(json_of(cap).at("error") == "cap_exceeded");
  CHECK(cli("trivial-points --r 2 --s 2 --n 3 --max-tuples 10").status == 3);
  CHECK(cli("trivial-points --r 2 --s 2 --n 3 --max-tuples 10 --sample").status == 0);
}

TEST_CASE("fixtures") {
  const auto w = cli("fixtures watkins14 --verify");
  CHECK(w.status == 0);
  CHECK(json_of(w).at("passed") == true);
  CHECK(cli("fixtures rogers7 --verify --format display").status == 0);
  CHECK(json_of(cli("fixtures --list")).size() == 2);

  const auto src = cli("fixtures rogers7");
  CHECK(src.status == 0);
  std::string text = src.out;
  const auto pos = text.find("636018282314232937750225");
  REQUIRE(pos != std::string::npos);
  text[pos] = '7';
  const std::string path = "cli_corrupt_rogers7.json";
  std::ofstream(path) << text;
  const auto bad = cli("fixtures --file " + path + " --verify");
  CHECK(bad.status == 1);
  CHECK(json_of(bad).at("passed") == false);
  std::remove(path.c_str());
}
