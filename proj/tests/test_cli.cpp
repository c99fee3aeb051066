#include <cstdio>
#include <fstream>

#include "adelic/cli.hpp"
#include "doctest.h"
#include "json.hpp"

using adelic::run_command;

namespace {
std::string last_line(const std::string& out) {
  auto end = out.find_last_not_of('\n');
  if (end == std::string::npos) return "";
  auto start = out.find_last_of('\n', end);
  return out.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}
}  // namespace

TEST_CASE("weil command, all methods") {
  for (std::string method : {"adelic", "disjoint-skip", "miller"}) {
    if (method == "disjoint-skip") continue;  // overlapping supports; covered below
    auto r = run_command({"weil", "--curve", "E/GF(5):a4=4,a6=0", "--m", "2", "--D",
                          "1*(0,0)-1*O", "--Dp", "1*(1,0)-1*O", "--method", method});
    CHECK(r.exit_code == 0);
    CHECK(last_line(r.output) == "4 (order 2)");
  }
  // disjoint method needs shifted representatives
  auto bad = run_command({"weil", "--curve", "E/GF(5):a4=4,a6=0", "--m", "2", "--D",
                          "1*(0,0)-1*O", "--Dp", "1*(1,0)-1*O", "--method", "disjoint"});
  CHECK(bad.exit_code == 3);
  CHECK(bad.output.find("shift") != std::string::npos);
}

TEST_CASE("reciprocity and tame commands") {
  auto r = run_command({"reciprocity", "--curve", "P1/GF(7)", "--f", "t", "--g", "1-t"});
  CHECK(r.exit_code == 0);
  CHECK(last_line(r.output) == "1");

  auto s = run_command({"tame", "--curve", "P1/GF(3)", "--f", "t+1", "--g", "t^2+1", "--place",
                        "(t^2+1)"});
  CHECK(s.exit_code == 0);
  CHECK(last_line(s.output) == "t+1");
  auto sn = run_command({"tame", "--curve", "P1/GF(3)", "--f", "t+1", "--g", "t^2+1", "--place",
                         "(t^2+1)", "--norm"});
  CHECK(last_line(sn.output) == "2");
}

TEST_CASE("exit code contract") {
  // char divides m: domain error, code 3, message cites coprimality
  auto r = run_command({"weil", "--curve", "E/GF(5):a4=4,a6=0", "--m", "10", "--D", "1*(0,0)-1*O",
                        "--Dp", "1*(1,0)-1*O"});
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("coprime") != std::string::npos);

  // parse errors: code 2
  CHECK(run_command({"weil", "--curve", "E/GF(5):a4=4,a6=0", "--m", "2", "--D", "1*(0,0",
                     "--Dp", "0"})
            .exit_code == 2);
  CHECK(run_command({"tame", "--curve", "P1/GF(6)", "--f", "t", "--g", "t", "--place", "(t)"})
            .exit_code == 2);
  CHECK(run_command({"nonsense"}).exit_code == 2);
  CHECK(run_command({"rr"}).exit_code == 2);  // missing required options

  // non-torsion input: code 3
  auto nt = run_command({"weil", "--curve", "E/GF(5):a4=4,a6=0", "--m", "2", "--D",
                         "1*(2,1)-1*O", "--Dp", "1*(1,0)-1*O"});
  CHECK(nt.exit_code == 3);
  CHECK(nt.output.find("torsion") != std::string::npos);
}

TEST_CASE("rr, torsion and commutator commands") {
  auto r = run_command({"rr", "--curve", "P1/GF(5)", "--D", "2*(inf)"});
  CHECK(r.exit_code == 0);
  CHECK(last_line(r.output) == "h0=3 h1=0");
  CHECK(r.output.find("basis: t^2") != std::string::npos);

  auto t = run_command({"torsion", "--curve", "P1/GF(5)", "--D", "1*(t)-1*(inf)", "--m", "3"});
  CHECK(t.exit_code == 0);
  CHECK(last_line(t.output) == "t^3");
  auto ab = run_command({"torsion", "--curve", "E/GF(5):a4=4,a6=0", "--D", "1*(2,1)-1*O", "--m", "2"});
  CHECK(ab.exit_code == 0);
  CHECK(last_line(ab.output) == "absent");

  auto cm = run_command({"commutator", "--curve", "P1/GF(5)", "--a", "tail=1; (t)=>t", "--b",
                         "tail=1; (t+4)=>t+4"});
  CHECK(cm.exit_code == 0);
  CHECK(last_line(cm.output) == "4");
}

TEST_CASE("json format wraps the same canonical strings") {
  auto r = run_command({"--format", "json", "weil", "--curve", "E/GF(5):a4=4,a6=0", "--m", "2",
                        "--D", "1*(0,0)-1*O", "--Dp", "1*(1,0)-1*O"});
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["result"] == "4 (order 2)");
  CHECK(j["value"] == "4");
  CHECK(j["order"] == 2);
}

TEST_CASE("biext subcommand drives setup files") {
  std::string path = "test_setup_z4.txt";
  {
    std::ofstream out(path);
    out << "A: 4\nN: 4\npairing:\n1\nB:\nC: (2)\n";
  }
  auto v = run_command({"biext", "validate", "--setup", path});
  CHECK(v.exit_code == 0);
  CHECK(last_line(v.output) == "pass");

  auto t = run_command({"biext", "transport", "--setup", path, "--a", "(1)", "--ap", "(1)",
                        "--value", "0", "--b", "(0)", "--c", "(2)", "--bp", "(0)", "--cp", "(2)"});
  CHECK(t.exit_code == 0);
  CHECK(last_line(t.output) == "[(3),(3),2]");

  auto w = run_command({"biext", "weil", "--setup", path, "--a", "(1)", "--ap", "(1)", "--m", "2"});
  CHECK(w.exit_code == 0);
  CHECK(last_line(w.output) == "2");

  auto missing = run_command({"biext", "validate", "--setup", "no_such_file.txt"});
  CHECK(missing.exit_code == 2);
  std::remove(path.c_str());
}

TEST_CASE("selftest runs quickly with few samples") {
  auto r = run_command({"selftest", "--samples", "4"});
  CHECK(r.exit_code == 0);
  CHECK(last_line(r.output) == "selftest: pass");
}
