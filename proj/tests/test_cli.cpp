#include <sstream>

#include "doctest.h"
#include "hurwitz/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hurwitz::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli records") {
  auto r = run({"abelian", "bounds", "--n", "25"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"version\":1,\"record\":\"abelian-bounds\",\"n\":25,\"N\":15000,\"lower\":[625,3],\"upper\":[2500,1]}\n");

  r = run({"orbits", "count-h", "--group", "ab:5,5", "--type1", "5,5,5", "--type2", "5,5,5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"record\":\"count-h\"") != std::string::npos);

  r = run({"structures", "exists", "--group", "alt:5", "--sizes", "3,3", "--mode", "exhaustive"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"outcome\":\"none\"") != std::string::npos);

  r = run({"abelian", "admits", "--factors", "2,2,2", "--r1", "5", "--r2", "6"});
  CHECK(r.out.find("\"admits\":true") != std::string::npos);

  r = run({"psl2", "table", "--p", "13", "--max-order", "13"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"triple\":[2,3,7],\"d_prime\":3,\"d\":6") != std::string::npos);
}

TEST_CASE("cli usage errors exit 2") {
  CHECK(run({"orbits", "count-h", "--group", "ab:5,5"}).code == 2);
  CHECK(run({"orbits", "count-d", "--group", "foo:3", "--type", "2,3,7"}).code == 2);
  CHECK(run({"orbits", "count-d", "--group", "psl2:7", "--type", "2,x"}).code == 2);
  CHECK(run({"group", "info", "--group", "sym:3", "--bogus"}).code == 2);
  CHECK(run({"psl2", "table", "--p", "13", "--format", "xml"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("cli library errors become records") {
  auto r = run({"invariants", "compute", "--order", "7", "--type1", "5,5,5", "--type2", "5,5,5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"kind\":\"non-realizable\"") != std::string::npos);
  r = run({"invariants", "compute", "--order", "7", "--type1", "5,5,5", "--type2", "5,5,5", "--strict"});
  CHECK(r.code == 1);
  r = run({"abelian", "bounds", "--n", "9"});
  CHECK(r.code == 1);
  CHECK(r.out.find("\"kind\":\"invalid-n\"") != std::string::npos);
}

TEST_CASE("cli determinism and thread independence") {
  const std::vector<std::string> base{"verify", "all", "--max-order", "24", "--suite", "braid"};
  auto with = [&](std::string threads) {
    auto args = base;
    args.insert(args.end(), {"--threads", threads});
    return run(args);
  };
  const auto a = with("1");
  const auto b = with("1");
  const auto c = with("4");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
}

TEST_CASE("cli views") {
  const auto csv = run({"abelian", "bounds", "--n", "35", "--format", "csv"});
  CHECK(csv.out == "version,record,n,N,lower,upper\n1,abelian-bounds,35,8640,\"[120,1]\",\"[1440,1]\"\n");
  const auto table = run({"group", "info", "--group", "sym:3", "--format", "table"});
  CHECK(table.out.find("sym:3") != std::string::npos);
}
