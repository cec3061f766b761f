#include <cstdio>
#include <fstream>
#include <sstream>

#include "app.hpp"
#include "doctest.h"
#include "json_io.hpp"

namespace {

struct Outcome {
  int code;
  nlohmann::json body;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "ringcode");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int rc = ringcode::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  nlohmann::json body;
  if (!out.str().empty()) body = nlohmann::json::parse(out.str());
  return {rc, body, err.str()};
}

const std::vector<std::string> family{"--p", "3", "--m", "1", "--n", "5", "--alpha", "w^4"};

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

}  // namespace

TEST_CASE("factor") {
  const auto r = invoke(with({"factor"}, family));
  REQUIRE(r.code == 0);
  CHECK(r.body["N"] == 5);
  CHECK(r.body["beta"] == "w^4");
  REQUIRE(r.body["cosets"].size() == 3);
  CHECK(r.body["cosets"][0]["partner"] == 3);
  CHECK(r.body["cosets"][2]["kind"] == "sym");
  CHECK(r.body["polys"].size() == 3);
}

TEST_CASE("code and quantum") {
  const auto c = invoke(with({"code", "--distance"}, with(family, {"--exponents", "5=2,1=2"})));
  REQUIRE(c.code == 0);
  CHECK(c.body["code"]["size_log_q"] == 4);
  CHECK(c.body["hermitian_self_orthogonal"] == true);
  CHECK(c.body["torsion"]["dimension"] == 2);

  const auto q = invoke(with({"quantum"}, with(family, {"--exponents", "5=2,1=2"})));
  REQUIRE(q.code == 0);
  CHECK(q.body["params"] == "[[5,1,3]]_3");
  CHECK(q.body["mds"] == true);
  CHECK(q.body["d_exact"] == true);
}

TEST_CASE("dual of a dual") {
  const auto d = invoke(with({"dual"}, with(family, {"--exponents", "5=2,1=2"})));
  REQUIRE(d.code == 0);
  const auto path = std::string("ringcode_test_descriptor.json");
  {
    std::ofstream f(path);
    f << d.body["dual"].dump();
  }
  const auto dd = invoke({"dual", "--descriptor", path});
  std::remove(path.c_str());
  REQUIRE(dd.code == 0);
  const auto back = invoke(with({"code"}, with(family, {"--exponents", "5=2,1=2"})));
  CHECK(dd.body["dual"]["exponents"] == back.body["code"]["exponents"]);
  CHECK(dd.body["code"] == d.body["dual"]);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"factor", "--p", "4"}).code == 2);
  CHECK(invoke(with({"factor"}, {"--p", "3", "--n", "6", "--alpha", "w^4"})).code == 2);
  CHECK(invoke(with({"code"}, with(family, {"--exponents", "2=1"}))).code == 2);
  CHECK(invoke({"factor", "--alpha", "nonsense"}).code == 2);

  const auto full = invoke(with({"quantum"}, family));
  CHECK(full.code == 3);
  CHECK(full.body.contains("witness"));
  CHECK(full.body["error"] == "precondition");

  CHECK(invoke(with({"gray"}, family)).code == 3);

  const auto big = invoke({"search", "--p", "3", "--n", "82", "--alpha", "w^4"});
  CHECK(big.code == 5);

  CHECK(invoke({}).code != 0);
}

TEST_CASE("search") {
  const auto r = invoke(with({"search"}, family));
  REQUIRE(r.code == 0);
  REQUIRE(!r.body["results"].empty());
  CHECK(r.body["results"][0]["params"] == "[[5,1,3]]_3");

  const auto none = invoke({"search", "--p", "3", "--n", "1", "--alpha", "w^4", "--min-k", "2"});
  REQUIRE(none.code == 0);
  CHECK(none.body["results"].empty());

  const auto j1 = invoke(with({"search", "--jobs", "1"}, {"--p", "3", "--n", "10", "--alpha", "w^4"}));
  const auto j4 = invoke(with({"search", "--jobs", "4"}, {"--p", "3", "--n", "10", "--alpha", "w^4"}));
  CHECK(j1.body == j4.body);
}

TEST_CASE("reproduce") {
  const auto a = invoke({"reproduce", "example5.10"});
  REQUIRE(a.code == 0);
  CHECK(a.body["targets"][0]["status"] == "match");
  const auto b = invoke({"reproduce", "example4.13"});
  REQUIRE(b.code == 0);
  CHECK(b.body["targets"][0]["status"] == "discrepant");
  CHECK(invoke({"reproduce", "example9.9"}).code == 2);
}
