#include <doctest.h>

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "klnet/cli.hpp"
#include "klnet/json_io.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = klnet::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("kl poly") {
  RunResult r = run({"poly", "e", "45312"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 + q^2\n");

  RunResult rj = run({"poly", "12345", "45312", "--json"});
  CHECK(rj.code == 0);
  json j = json::parse(rj.out);
  CHECK(j["poly"] == json::array({1, 0, 1}));

  CHECK(run({"poly", "e", "e", "--n", "3"}).out == "1\n");
  CHECK(run({"poly", "e", "e"}).code == 64);        // no degree to infer
  CHECK(run({"poly", "21", "123"}).code == 64);     // degree mismatch
  CHECK(run({"poly", "21"}).code == 64);            // missing argument
}

TEST_CASE("kl verify") {
  CHECK(run({"verify", "42315", "--intervals", "1-2,2-4,1-2"}).code == 0);
  RunResult bad = run({"verify", "45312", "--intervals", "1-2"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("does not verify") != std::string::npos);

  RunResult with_f = run({"verify", "35412", "--intervals", "2-4,3-5,1-2,2-3"});
  CHECK(with_f.code == 0);
  CHECK(with_f.out.find("f = 1 + q") != std::string::npos);

  CHECK(run({"verify", "42315"}).code == 64);
}

TEST_CASE("kl factor") {
  RunResult found = run({"factor", "4231"});
  CHECK(found.code == 0);
  CHECK(found.out.find("Found:") != std::string::npos);

  RunResult impossible = run({"factor", "45312"});
  CHECK(impossible.code == 2);
  CHECK(impossible.out.find("ProvedImpossible: gap 2") != std::string::npos);

  RunResult forced = run({"factor", "45312", "--force-search", "--max-factors", "3"});
  CHECK(forced.code == 1);
  CHECK(forced.out.find("NotFoundWithinBound") != std::string::npos);

  RunResult trivial = run({"factor", "e", "--n", "4"});
  CHECK(trivial.code == 0);

  // JSON output round-trips through verify --from-json.
  RunResult as_json = run({"factor", "42315", "--json"});
  CHECK(as_json.code == 0);
  const std::string path = "factor_output.json";
  {
    std::ofstream f(path);
    f << as_json.out;
  }
  CHECK(run({"verify", "42315", "--from-json", path}).code == 0);
  std::remove(path.c_str());
}

TEST_CASE("kl classify and singdeg") {
  CHECK(run({"classify", "2143"}).out == "FactorableByBW\n");
  RunResult proved = run({"classify", "45312"});
  CHECK(proved.code == 2);
  CHECK(proved.out == "ProvedUnfactorable (gap 2)\n");
  CHECK(run({"classify", "453129786"}).out == "ConjecturedUnfactorable\n");

  CHECK(run({"singdeg", "45312"}).out == "2\n");
  CHECK(run({"singdeg", "45312", "--brute"}).out == "2\n");
  CHECK(run({"singdeg", "2143"}).out == "infinity\n");
  json j = json::parse(run({"singdeg", "12345", "--json"}).out);
  CHECK(j["singdeg"] == "infinity");
}

TEST_CASE("kl table5") {
  RunResult r = run({"table5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("42315: ok") != std::string::npos);
  CHECK(r.out.find("52341: ok") != std::string::npos);
  CHECK(r.out.find("all rows verified") != std::string::npos);
  // Both prefactor rows print their 1+q.
  CHECK(r.out.find("35412: ok") != std::string::npos);
  CHECK(r.out.find("f = 1 + q") != std::string::npos);
}

TEST_CASE("kl network") {
  RunResult dot = run({"network", "--spec", "n=4; [1,3] * [2,4] * [1,3]", "--render", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.find("digraph") != std::string::npos);
  CHECK(dot.out.find("mult=2") != std::string::npos);

  RunResult ascii = run({"network", "--spec", "n=4; [2,4]", "--render", "ascii"});
  CHECK(ascii.code == 0);
  CHECK(ascii.out.find("x1") != std::string::npos);

  RunResult fams = run({"network", "--spec", "n=2; [1,2] o [1,2]", "--families"});
  CHECK(fams.code == 0);
  CHECK(fams.out.find("family 0:") != std::string::npos);
  CHECK(fams.out.find("family 3:") != std::string::npos);

  RunResult bad = run({"network", "--spec", "n=5; [1,5] * [2,3] * [1,5]"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("interleaves") != std::string::npos);

  CHECK(run({"network"}).code == 64);
  CHECK(run({"network", "--spec", "n=2; [1,2]", "--render", "png"}).code == 64);

  // JSON round-trip via --from-json.
  RunResult as_json = run({"network", "--spec", "n=4; [1,3] * [2,4]", "--json"});
  CHECK(as_json.code == 0);
  const std::string path = "network_output.json";
  {
    std::ofstream f(path);
    f << as_json.out;
  }
  RunResult round = run({"network", "--from-json", path});
  CHECK(round.code == 0);
  CHECK(round.out == "n=4; [1,3] * [2,4]\n");
  std::remove(path.c_str());
}

TEST_CASE("kl enumerate and reduce") {
  RunResult en = run({"enumerate", "--spec", "n=2; [1,2] o [1,2]", "--json"});
  CHECK(en.code == 0);
  int lines = 0, with_defect = 0;
  std::istringstream is(en.out);
  for (std::string line; std::getline(is, line); ++lines) {
    json j = json::parse(line);
    if (j["dfct"].get<int>() > 0) ++with_defect;
  }
  CHECK(lines == 4);
  CHECK(with_defect == 2);

  RunResult red = run({"reduce", "--spec", "n=2; [1,2] o [1,2]", "--type", "21", "--index", "1"});
  CHECK(red.code == 0);
  CHECK(red.out.find("phi:") != std::string::npos);
  CHECK(red.out.find("zero-defect representative: type=21") != std::string::npos);

  RunResult none = run({"reduce", "--spec", "n=3; [1,2]", "--type", "321"});
  CHECK(none.code == 1);
}

TEST_CASE("deterministic output") {
  for (auto args : {std::vector<std::string>{"factor", "35142", "--json"},
                    std::vector<std::string>{"enumerate", "--spec", "n=3; [1,3] o [1,3]", "--json"},
                    std::vector<std::string>{"table5", "--json"}}) {
    RunResult a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("emitted documents parse back") {
  using namespace klnet;
  const HeckeElement element = kl_basis_element(parse_permutation("4231"));
  CHECK(hecke_from_json(hecke_to_json(element)) == element);

  const QPoly p(std::vector<Int>{1, 0, 2});
  CHECK(poly_from_json(poly_to_json(p)) == p);
  // Oversized coefficients travel as strings.
  const QPoly big(std::vector<Int>{Int("123456789012345678901234567890")});
  CHECK(poly_from_json(poly_to_json(big)) == big);

  StarNetwork f = parse_network("n=4; [1,3] * [2,4]");
  StarNetwork round = network_from_json(network_to_json(f));
  CHECK(round.intervals() == f.intervals());
  CHECK(round.condensed() == f.condensed());

  const PathFamily fam = all_families(f).front();
  CHECK(family_from_json(family_to_json(f, fam)) == fam);

  const IntervalSequence seq{5, {{1, 2}, {2, 4}}};
  CHECK(interval_sequence_from_json(interval_sequence_to_json(seq)) == seq);
}

TEST_CASE("phi traces carry per-step defect counts") {
  RunResult red = run({"reduce", "--spec", "n=4; [2,4] * [1,2] * [2,4] * [1,2]", "--type", "1342",
                       "--index", "0", "--json"});
  CHECK(red.code == 0);
  std::istringstream is(red.out);
  std::string first_line, line;
  std::getline(is, first_line);  // the selected family
  int traces = 0;
  bool saw_reduced = false;
  while (std::getline(is, line)) {
    json j = json::parse(line);
    if (j.contains("reduced")) {
      saw_reduced = true;
      CHECK(j["dfct"] == 0);
      continue;
    }
    ++traces;
    CHECK(j["defects_before"].get<int>() == j["defects_after"].get<int>() + 1);
    for (const char* key : {"k", "r", "s", "t", "ell"}) CHECK(j.contains(key));
  }
  json head = json::parse(first_line);
  if (head["dfct"].get<int>() > 0) CHECK(traces > 0);
  CHECK(saw_reduced);
}

TEST_CASE("factor of the identity") {
  RunResult r = run({"factor", "e", "--n", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Found:") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 64);
  CHECK(run({"no-such-command"}).code == 64);
  RunResult help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("Usage") != std::string::npos);
}
