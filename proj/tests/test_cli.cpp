// End-to-end tests of the command-line tool: exit codes, JSON shape and
// stability, table output, and agreement with the library fixtures.  The
// path of the binary under test arrives as the first program argument.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

using json = nlohmann::ordered_json;

namespace {

std::string g_cli;

struct Run {
  int exit_code = -1;
  std::string out;
  std::string err;
};

Run run_cli(const std::string& args) {
  static int counter = 0;
  std::string err_path =
      "/tmp/schubloc_cli_err_" + std::to_string(++counter) + ".txt";
  std::string cmd = g_cli + " " + args + " 2>" + err_path;
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream err(err_path);
  std::stringstream ss;
  ss << err.rdbuf();
  r.err = ss.str();
  std::remove(err_path.c_str());
  return r;
}

json parse_out(const Run& r) {
  REQUIRE(r.exit_code == 0);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("roots output is well-formed and byte-stable") {
  Run r = run_cli("--type B2 roots");
  json doc = parse_out(r);
  CHECK(doc["type"] == "root_system");
  CHECK(doc["descriptor"] == "B2");
  CHECK(doc["rank"] == 2);
  CHECK(doc["weyl_order"] == 8);
  CHECK(doc["simply_laced"] == false);
  CHECK(doc["positive_roots"].size() == 4);
  CHECK(doc["positive_roots"][0]["coords"] == json::array({0, 1}));
  CHECK(doc["positive_roots"][0]["long"] == true);
  CHECK(doc["positive_roots"][1]["long"] == false);
  // Parsing and re-serializing reproduces the exact bytes.
  CHECK(doc.dump(2) + "\n" == r.out);
}

TEST_CASE("element reports canonical word, length, and descents") {
  Run r = run_cli("--type B2 element --word \"1 2 1\"");
  json doc = parse_out(r);
  CHECK(doc["type"] == "element");
  CHECK(doc["word"] == json::array({1, 2, 1}));
  CHECK(doc["length"] == 3);

  // A non-reduced word collapses to its canonical reduced form.
  json collapsed = parse_out(run_cli("--type B2 element --word \"1 1 2\""));
  CHECK(collapsed["word"] == json::array({2}));
  CHECK(collapsed["length"] == 1);

  json id = parse_out(run_cli("--type A3 element --word e"));
  CHECK(id["word"] == json::array());
  CHECK(id["length"] == 0);
}

TEST_CASE("interval lists the Bruhat interval with its rank table") {
  json doc = parse_out(run_cli("--type B2 interval --word \"1 2 1\""));
  CHECK(doc["type"] == "interval");
  CHECK(doc["size"] == 6);
  CHECK(doc["dimension"] == 3);
  CHECK(doc["poincare"] == json::array({1, 2, 2, 1}));
  CHECK(doc["elements"][0]["word"] == json::array({1, 2, 1}));
  CHECK(doc["elements"][5]["word"] == json::array());
}

TEST_CASE("tangent-weights matches the curve-weight fixture at the identity") {
  json doc = parse_out(run_cli("--type B2 tangent-weights --word \"1 2 1\" --at e"));
  CHECK(doc["type"] == "tangent_weights");
  CHECK(doc["count"] == 3);
  CHECK(doc["dimension"] == 3);
  json w = doc["weights"];
  REQUIRE(w.size() == 3);
  CHECK(w[0] == json::array({0, -1}));
  CHECK(w[1] == json::array({-1, 0}));
  CHECK(w[2] == json::array({-2, -1}));
}

TEST_CASE("translate reproduces the matching-curve fixture") {
  json doc = parse_out(run_cli(
      "--type B2 translate --word \"1 2 1\" --upper \"2 1\" --direction 1,1"));
  CHECK(doc["type"] == "translate");
  CHECK(doc["upper"] == json::array({2, 1}));
  CHECK(doc["lower"] == json::array({2}));
  CHECK(doc["direction"] == json::array({1, 1}));
  CHECK(doc["translate"] ==
        json::array({{0, 1}, {-1, 0}, {-1, -1}}));
  CHECK(doc["equals_curve_weights"] == true);

  // At the singular point the translate differs from the curve weights.
  json at_s1 = parse_out(run_cli(
      "--type B2 translate --word \"1 2 1\" --upper \"2 1\" --direction 0,1"));
  CHECK(at_s1["lower"] == json::array({1}));
  CHECK(at_s1["equals_curve_weights"] == false);
}

TEST_CASE("singular-locus reports the worked example verdicts") {
  json doc = parse_out(run_cli("--type B2 singular-locus --word \"1 2 1\""));
  CHECK(doc["type"] == "smoothness_report");
  CHECK(doc["smooth"] == false);
  CHECK(doc["rationally_smooth"] == true);
  CHECK(doc["max_singular"] == json::array({json::array({1})}));
  REQUIRE(doc["verdicts"].size() == 6);
  for (const json& v : doc["verdicts"]) {
    bool should_be_singular =
        v["word"] == json::array({1}) || v["word"] == json::array();
    CHECK(v["verdict"] == (should_be_singular ? "singular" : "smooth"));
  }
  CHECK_FALSE(doc.contains("g2_experimental"));
}

TEST_CASE("smooth-at and gp-smooth-at verdicts") {
  json at_s1 = parse_out(run_cli("--type B2 smooth-at --word \"1 2 1\" --at 1"));
  CHECK(at_s1["verdict"] == "singular");
  json at_s2 = parse_out(run_cli("--type B2 smooth-at --word \"1 2 1\" --at 2"));
  CHECK(at_s2["verdict"] == "smooth");

  json gp_e = parse_out(run_cli("--type B2 gp-smooth-at --word \"1 2\" --at e --J 1"));
  CHECK(gp_e["verdict"] == "singular");
  CHECK(gp_e["J"] == json::array({1}));
  json gp_b = parse_out(run_cli("--type B2 gp-smooth-at --word \"1 2\" --at 2 --J 1"));
  CHECK(gp_b["verdict"] == "smooth");
}

TEST_CASE("rationally-smooth separates 3412 from a smooth variety") {
  json bad = parse_out(run_cli("--type A3 rationally-smooth --word \"2 1 3 2\""));
  CHECK(bad["rationally_smooth"] == false);
  CHECK(bad["poincare_symmetric"] == false);
  json good = parse_out(run_cli("--type A3 rationally-smooth --word \"1 2 3\""));
  CHECK(good["rationally_smooth"] == true);
  CHECK(good["poincare_symmetric"] == true);
}

TEST_CASE("sweep finds exactly one singular variety in B2") {
  json doc = parse_out(run_cli("--type B2 sweep"));
  CHECK(doc["type"] == "sweep");
  CHECK(doc["tops"] == 8);
  CHECK(doc["singular"] == 1);
  REQUIRE(doc["entries"].size() == 8);

  json only = parse_out(run_cli("--type B2 sweep --singular-only"));
  REQUIRE(only["entries"].size() == 1);
  CHECK(only["entries"][0]["word"] == json::array({1, 2, 1}));
  CHECK(only["entries"][0]["max_singular"] ==
        json::array({json::array({1})}));

  // Filters and parallelism do not change the counts.
  json len3 = parse_out(run_cli("--type B2 sweep --length 3 --parallel 2"));
  CHECK(len3["tops"] == 2);
  CHECK(len3["singular"] == 1);
  json capped = parse_out(run_cli("--type B2 sweep --max-length 2"));
  CHECK(capped["tops"] == 5);
  CHECK(capped["singular"] == 0);
}

TEST_CASE("sweep rejects groups over the budget") {
  Run r = run_cli("--type E6 sweep --budget 2000");
  CHECK(r.exit_code == 3);
  CHECK(r.err.find("BudgetExceeded:") == 0);
}

TEST_CASE("table format produces readable text") {
  Run r = run_cli("--type B2 singular-locus --word \"1 2 1\" --format table");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("X(1 2 1): singular") != std::string::npos);
  CHECK(r.out.find("maximal singular points: 1") != std::string::npos);

  Run roots = run_cli("--type B2 roots --format table");
  CHECK(roots.exit_code == 0);
  CHECK(roots.out.find("|W| = 8") != std::string::npos);
}

TEST_CASE("--output writes the document to a file") {
  std::string path = "/tmp/schubloc_cli_out.json";
  std::remove(path.c_str());
  Run r = run_cli("--type A2 roots --output " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  json doc = json::parse(in);
  CHECK(doc["descriptor"] == "A2");
  std::remove(path.c_str());
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("").exit_code == 2);                       // no subcommand
  CHECK(run_cli("--type B2").exit_code == 2);              // still none
  CHECK(run_cli("--type B2 no-such-command").exit_code == 2);
  CHECK(run_cli("roots").exit_code == 2);                  // missing --type
  CHECK(run_cli("--type B2 roots --format yaml").exit_code == 2);
  CHECK(run_cli("--type B2 smooth-at --word \"1 2 1\"").exit_code == 2);
}

TEST_CASE("domain errors exit 3 and name the error on stderr") {
  Run bad_type = run_cli("--type Q7 roots");
  CHECK(bad_type.exit_code == 3);
  CHECK(bad_type.err.find("InvalidRank:") == 0);

  Run not_leq = run_cli("--type B2 tangent-weights --word \"1 2\" --at \"2 1\"");
  CHECK(not_leq.exit_code == 3);
  CHECK(not_leq.err.find("NotInInterval:") == 0);

  Run bad_letter = run_cli("--type B2 element --word 5");
  CHECK(bad_letter.exit_code == 3);
  CHECK(bad_letter.err.find("IndexOutOfRange:") == 0);

  Run bad_dir = run_cli(
      "--type B2 translate --word \"1 2 1\" --upper \"2 1\" --direction 7,7");
  CHECK(bad_dir.exit_code == 3);
  CHECK(bad_dir.err.find("IndexOutOfRange:") == 0);

  Run not_min = run_cli("--type B2 gp-smooth-at --word \"2 1\" --at e --J 1");
  CHECK(not_min.exit_code == 3);
  CHECK(not_min.err.find("NotMinimalRepresentative:") == 0);
}

TEST_CASE("G2 stays behind the experimental flag") {
  Run gated = run_cli("--type G2 roots");
  CHECK(gated.exit_code == 3);
  CHECK(gated.err.find("G2Disallowed:") == 0);

  json doc = parse_out(run_cli("--type G2 --allow-g2 singular-locus --word \"1 2\""));
  CHECK(doc["g2_experimental"] == true);
  CHECK(doc["smooth"] == true);

  json roots = parse_out(run_cli("--type G2 --allow-g2 roots"));
  CHECK(roots["positive_roots"].size() == 6);
}

int run_all(int argc, char** argv) {
  doctest::Context context;
  int first_doctest_arg = 1;
  if (argc > 1 && argv[1][0] != '-') {
    g_cli = argv[1];
    first_doctest_arg = 2;
  }
  if (g_cli.empty()) {
    std::fprintf(stderr, "usage: test_cli <path-to-cli> [doctest args]\n");
    return 2;
  }
  context.applyCommandLine(argc - first_doctest_arg + 1,
                           argv + first_doctest_arg - 1);
  return context.run();
}

int main(int argc, char** argv) { return run_all(argc, argv); }
