#include "doctest.h"

#include "charrig/report.hpp"

#include <cstdlib>

using namespace charrig;

namespace {

std::string corpus(const std::string& name) { return std::string(CHARRIG_CORPUS_DIR) + "/" + name + ".json"; }

}  // namespace

TEST_CASE("sha256 of known vectors") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("reports are deterministic across runs and thread counts") {
  auto x = load_complex_file(corpus("rp2"));
  for (const char* command : {"inspect", "diagram", "phi", "ring", "pseudo"}) {
    RunOptions one, four;
    four.threads = 4;
    Report a = run_command(command, x, one), b = run_command(command, x, one), c = run_command(command, x, four);
    CAPTURE(command);
    CHECK(canonical_text(a) == canonical_text(b));
    CHECK(canonical_text(a) == canonical_text(c));
    CHECK(a.doc.at("hash") == c.doc.at("hash"));
    CHECK(canonical_text(a).find("timing") == std::string::npos);
    Json stripped = a.doc;
    stripped.erase("hash");
    CHECK(sha256_hex(stripped.dump()) == a.doc.at("hash").get<std::string>());
  }
  RunOptions other;
  other.seed = 1;
  CHECK(run_command("ring", x, other).doc.at("hash") != run_command("ring", x, {}).doc.at("hash"));
}

TEST_CASE("report shape and summary") {
  auto x = load_complex_file(corpus("t2"));
  RunOptions o;
  o.degrees = {1};
  Report r = run_command("diagram", x, o);
  CHECK(r.doc.at("tool") == "charrig");
  CHECK(r.doc.at("version") == kToolVersion);
  CHECK(r.doc.at("complex").at("name") == "t2");
  const Json& s = r.doc.at("summary");
  CHECK(s.at("pass").get<std::size_t>() + s.at("fail").get<std::size_t>() + s.at("skipped").get<std::size_t>() ==
        r.doc.at("checks").size());
  CHECK(r.passed());
  CHECK(r.failures() == 0);
  CHECK(pretty_text(r).find("passed") != std::string::npos);
}

TEST_CASE("invalid options and commands") {
  auto x = load_complex_file(corpus("s1"));
  RunOptions o;
  CHECK_THROWS_AS(run_command("frobnicate", x, o), InvalidArgument);
  o.max_subdiv = 3;
  CHECK_THROWS_AS(run_command("phi", x, o), InvalidArgument);
  o = {};
  o.threads = 0;
  CHECK_THROWS_AS(run_command("inspect", x, o), InvalidArgument);
  o = {};
  o.degrees = {0};
  CHECK_THROWS_AS(run_command("diagram", x, o), InvalidArgument);
  o = {};
  o.cycle_path = corpus("s1");
  CHECK_THROWS_AS(run_command("ring", x, o), InvalidArgument);
}

TEST_CASE("complex paths resolve against CHARRIG_CORPUS") {
  ::setenv("CHARRIG_CORPUS", CHARRIG_CORPUS_DIR, 1);
  CHECK(resolve_complex_path("t2") == corpus("t2"));
  CHECK(resolve_complex_path("corpus/klein") == corpus("klein"));
  ::unsetenv("CHARRIG_CORPUS");
  CHECK(resolve_complex_path(corpus("t2")) == corpus("t2"));
  CHECK_THROWS_AS(resolve_complex_path("/nonexistent/t2"), IoError);
}
