#include <doctest.h>

#include <fstream>
#include <sstream>

#include "../tools/cli.hpp"
#include "geotwist/serialize.hpp"

using geotwist::Json;

namespace {
struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = geotwist::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("cli: curve j") {
  auto r = run_cli({"curve", "j", "--lambda", "0"});
  CHECK(r.code == 0);
  CHECK(r.json().at("j") == "0");

  auto r2 = run_cli({"curve", "j", "--lambda", "1+r3", "--tower", "qr3"});
  CHECK(r2.code == 0);
  CHECK(r2.json().at("j") == "1728");

  auto bad = run_cli({"curve", "j", "--lambda", "1"});
  CHECK(bad.code == 1);
  CHECK(bad.json().contains("error"));
}

TEST_CASE("cli: curve group ops") {
  auto r = run_cli({"curve", "add", "--lambda", "0", "--p", "1,0,-1", "--q",
                    "0,1,-1"});
  CHECK(r.code == 0);
  // (1,0,-1) + (0,1,-1) = o = (1,-1,0)
  Json o = r.json().at("result");
  CHECK(o.at(0).at("num") == "1");
  CHECK(o.at(1).at("num") == "-1");
  CHECK(o.at(2).at("num") == "0");

  auto m = run_cli({"curve", "mul", "--lambda", "5/3", "--n", "2", "--p",
                    "1,1,2"});
  CHECK(m.code == 0);
  CHECK(m.json().at("result").at(2).at("num") == "0");

  auto t = run_cli({"curve", "torsion", "--lambda", "0", "--n", "3",
                    "--tower", "qw"});
  CHECK(t.code == 0);
  CHECK(t.json().at("points").size() == 9);

  auto small = run_cli({"curve", "torsion", "--lambda", "0", "--n", "2",
                        "--tower", "qw"});
  CHECK(small.code == 1);
}

TEST_CASE("cli: classify") {
  auto r = run_cli({"classify", "--type", "CC"});
  CHECK(r.code == 0);
  Json j = r.json();
  CHECK(j.at("type") == "CC");
  CHECK(j.at("z_group").at("finite_order") == 1);
  CHECK(j.at("m_group").at("finite_order") == 1);
  CHECK(j.at("flags").at("z_equals_m") == true);
  CHECK(!j.contains("certificates"));

  auto rc = run_cli({"classify", "--type", "S", "--alpha", "2",
                     "--certificates"});
  CHECK(rc.code == 0);
  CHECK(rc.json().contains("certificates"));

  auto bad = run_cli({"classify", "--type", "S", "--alpha", "1"});
  CHECK(bad.code == 1);

  auto usage = run_cli({"classify", "--type", "S"});
  CHECK(usage.code == 2);
}

TEST_CASE("cli: twist with geometric check") {
  auto r = run_cli({"twist", "--type", "P", "--phi", "diag(1,1,2)",
                    "--check-geometric"});
  CHECK(r.code == 0);
  CHECK(r.json().at("geometric_check") == true);
  CHECK(r.json().at("twisted_relations").at("matrices").size() == 3);
}

TEST_CASE("cli: elliptic twist with geometric check") {
  // phi is the transpose of the cyclic translation matrix, so the twisting
  // automorphism of the point variety is the translation itself
  auto r = run_cli({"twist", "--type", "EC", "--p", "1,1,-c2", "--tower",
                    "qwc2", "--phi", "0,0,1;1,0,0;0,1,0", "--check-geometric"});
  CHECK(r.code == 0);
  CHECK(r.json().at("geometric_check") == true);
}

TEST_CASE("cli: catalog and pointvariety") {
  auto l = run_cli({"catalog", "list"});
  CHECK(l.code == 0);
  CHECK(l.json().at("types").size() == 8);

  auto s = run_cli({"catalog", "show", "--type", "S", "--alpha", "2"});
  CHECK(s.code == 0);
  Json js = s.json();
  CHECK(js.at("relations").at("matrices").size() == 3);
  CHECK(js.at("pair").at("components").size() == 3);

  // feed the relations back through pointvariety
  std::string path = "/tmp/geotwist_test_relations.json";
  {
    std::ofstream f(path);
    f << js.at("relations").dump();
  }
  auto pv = run_cli({"pointvariety", "--relations", path, "--at", "0,1,1"});
  CHECK(pv.code == 0);
  CHECK(pv.json().at("whole_plane") == false);
  Json sig = pv.json().at("sigma_at");
  CHECK(sig.at(2).at("num") == "2");  // sigma(0,1,1) = (0,1,2)
}

TEST_CASE("cli: exit codes") {
  auto usage = run_cli({"frobnicate"});
  CHECK(usage.code == 2);
  auto help = run_cli({"--help"});
  CHECK(help.code == 0);
}

TEST_CASE("cli: verify suite") {
  auto r = run_cli({"verify", "--suite", "lemma48"});
  CHECK(r.code == 0);
  CHECK(r.json().at("ok") == true);
  CHECK(r.json().at("checks").size() == 1);

  auto bad = run_cli({"verify", "--suite", "bogus"});
  CHECK(bad.code == 2);
}

TEST_CASE("cli: byte-identical output across runs") {
  std::vector<std::string> args{"classify", "--type", "S", "--alpha", "2",
                                "--certificates"};
  auto a = run_cli(args);
  auto b = run_cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  std::vector<std::string> curve_args{"curve", "torsion", "--lambda", "0",
                                      "--n", "6", "--tower", "qwc2"};
  auto c = run_cli(curve_args);
  auto d = run_cli(curve_args);
  CHECK(c.code == 0);
  CHECK(c.out == d.out);
}
