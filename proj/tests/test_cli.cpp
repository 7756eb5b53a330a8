#include <array>
#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>

#include "doctest.h"
#include "specht/cli.hpp"

using namespace specht;
using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  json body() const { return json::parse(out); }
};

std::string binary() {
  const char* b = std::getenv("SPECHT_LAB_BIN");
  REQUIRE_MESSAGE(b != nullptr, "SPECHT_LAB_BIN must point at the specht-lab executable");
  return b;
}

Run lab(const std::string& args) {
  std::string cmd = binary() + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t k;
  while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), k);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("winding") {
  Run r = lab("winding --n 3 --braid \"1 1\"");
  CHECK(r.code == 0);
  CHECK(r.body() == json::parse(R"({"pure": true, "omega": {"12": 1, "13": 0, "23": 0}})"));
  Run a13 = lab("winding --n 3 --braid \"2 1 1 -2\"");
  CHECK(a13.body().at("omega") == json::parse(R"({"12": 0, "13": 1, "23": 0})"));
  Run np = lab("winding --n 3 --braid \"1\"");
  CHECK(np.code == 0);
  CHECK(np.body().at("pure") == false);
}

TEST_CASE("membership") {
  Run r = lab("membership --n 4 --subgroup N12 --braid \"1\"");
  CHECK(r.code == 2);
  CHECK(r.body().at("error") == "braid is not pure");
  Run z = lab("membership --n 4 --subgroup N0 --braid \"1 2 3 1 2 3 1 2 3 1 2 3\"");
  CHECK(z.code == 0);
  CHECK(z.body().at("member") == true);
  Run a = lab("membership --n 4 --subgroup N0 --braid \"1 1\"");
  CHECK(a.body().at("member") == false);
  Run t = lab("membership --n 4 --target IM_F1 --vector \"1 -1 0 0\"");
  CHECK(t.code == 0);
  CHECK(t.body().at("member") == false);
  CHECK(lab("membership --n 4 --target S1 --vector \"1 -1 0 0\"").body().at("member") == true);
  CHECK(lab("membership --n 4 --target S1 --vector \"1 -1 0\"").code == 2);
  CHECK(lab("membership --n 4 --subgroup N7 --braid \"1 1\"").code == 2);
  CHECK(lab("membership --n 4").code == 2);
}

TEST_CASE("classify") {
  Run full = lab("classify --n 4 --braid \"1 1\" --braid \"2 2\" --braid \"3 3\" --braid \"2 1 1 -2\" "
                 "--braid \"3 2 1 1 -2 -3\" --braid \"3 2 2 -3\"");
  CHECK(full.code == 0);
  CHECK(full.body().at("label") == "PBn");
  CHECK(lab("classify --n 4 --vector \"1 1 1 1 1 1\"").body().at("label") == "N0");
  CHECK(lab("classify --n 4").code == 2);
}

TEST_CASE("cohomology") {
  Run r = lab("cohomology --n 4 --module S1 --ring Z --degree 2");
  CHECK(r.code == 0);
  json j = r.body();
  CHECK(j.at("free_rank") == 0);
  CHECK(j.at("torsion") == json::array({2}));
  REQUIRE(j.at("generators").size() == 1);
  Cochain g = Cochain::from_json(j.at("generators")[0]);
  CHECK(is_cocycle(g));
  CHECK(cohomology_group(2, g.target()).class_of(g) == std::vector<Int>{1});

  Run m = lab("cohomology --n 5 --module S2 --ring Zmod:2 --degree 2");
  CHECK(m.body().at("torsion") == json::array({2, 2}));
  CHECK(lab("cohomology --n 4 --module S1 --ring Zmod:x --degree 2").code == 2);
  CHECK(lab("cohomology --n 4 --module S1 --degree 3").code == 2);
  CHECK(lab("cohomology --n 4 --module Q --degree 1").code == 2);
}

TEST_CASE("splitting and image index") {
  Run s = lab("splitting --n 5 --map f1 --ring Z");
  CHECK(s.code == 0);
  CHECK(s.body().at("splits") == true);
  CHECK(s.body().at("witness_verified") == true);
  Run ns = lab("splitting --n 4 --map pi:2");
  CHECK(ns.code == 0);
  CHECK(ns.body().at("splits") == false);
  CHECK(ns.body().at("certificate").at("H") == 2);
  CHECK(lab("splitting --n 4 --map pi:2 --ring Zmod:3").code == 2);
  CHECK(lab("splitting --n 4 --map g1").code == 2);
  CHECK(lab("image-index --n 5 --map f1").body().at("index") == 125);
  CHECK(lab("image-index --n 5 --map f2").body().at("index") == 48);
  CHECK(lab("image-index --n 5 --map f01").code == 2);
}

TEST_CASE("verify") {
  Run small = lab("verify --scope paper-full --n-max 3");
  CHECK(small.code == 0);
  json j = small.body();
  CHECK(j.at("all_pass") == true);
  for (const auto& c : j.at("checks")) CHECK(c.at("id").get<std::string>().find("/n3") != std::string::npos);

  CHECK(lab("verify --scope everything").code == 2);
  CHECK(lab("verify --scope paper-small --n-max 6").code == 2);
  CHECK(lab("verify").code == 2);

  Run a = lab("verify --scope paper-small --n-max 4 --quiet"), b = lab("verify --scope paper-small --n-max 4 --quiet");
  CHECK(a.out == b.out);
  json rep = a.body();
  CHECK(a.code == (rep.at("all_pass").get<bool>() ? 0 : 1));
  std::size_t fails = 0;
  for (const auto& c : rep.at("checks")) {
    for (const char* key : {"criterion", "id", "tag", "expected", "computed", "status"}) CHECK(c.contains(key));
    fails += c.at("status") == "FAIL";
  }
  CHECK(rep.at("summary").at("FAIL") == fails);
}

TEST_CASE("usage errors") {
  for (const char* args : {"", "frobnicate", "winding --braid \"1\"", "winding --n 3 --braid \"1 x\"",
                           "winding --n 3 --braid \"4\"", "winding --n 99 --braid \"1\""}) {
    CAPTURE(args);
    Run r = lab(args);
    CHECK(r.code == 2);
    CHECK(r.body().contains("error"));
  }
}

TEST_CASE("in-process entry point") {
  CliResult r = run_cli({"image-index", "--n", "4", "--map", "f1"});
  CHECK(r.code == 0);
  CHECK(r.body.at("index") == 4);
  CHECK(run_cli({"winding", "--n", "3"}).code == 2);
}

TEST_CASE("expected tables") {
  CHECK(invariant_factors({2, 3, 0, 4}) == std::make_pair(std::size_t{1}, std::vector<long>{2, 12}));
  CHECK(invariant_factors({}) == std::make_pair(std::size_t{0}, std::vector<long>{}));
  CHECK(invariant_factors({1, 1}).second.empty());
  auto s2 = expected_cohomology("S2", 4, 1, RingSpec::Z());
  REQUIRE(s2.cyclic.has_value());
  CHECK(s2.order == 3);
  CHECK_FALSE(expected_cohomology("K12", 6, 2, RingSpec::Z()).known);
  CHECK(expected_splitting(QuotientSpec::make(5, RingSpec::Z(), "f1")));
  CHECK_FALSE(expected_splitting(QuotientSpec::make(4, RingSpec::Z(), "f1")));
  CHECK(expected_splitting(QuotientSpec::make(4, RingSpec::Zmod(3), "f2")));
}
