#include <doctest.h>

#include <sstream>

#include "cli.hpp"

namespace {

const std::string corpus = VQCAT_CORPUS_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "vqcat");
  std::ostringstream out, err;
  int code = vqcat::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli: check") {
  Run ok = run({"check", "--category", corpus + "/path3.json"});
  CHECK(ok.code == vqcat::cli::ok);
  CHECK(ok.out.find("symmetric: yes") != std::string::npos);

  Run broken = run({"check", "--category", corpus + "/broken.json"});
  CHECK(broken.code == vqcat::cli::input_error);
  CHECK(broken.err.find("(a, b, c)") != std::string::npos);

  Run missing = run({"check", "--category", corpus + "/nope.json"});
  CHECK(missing.code == vqcat::cli::input_error);
}

TEST_CASE("cli: gromov with expectations") {
  const std::string x = corpus + "/singleton.json", y = corpus + "/triangle.json";
  Run sym = run({"gromov", "--x", x, "--y", y, "--variant", "sym-mod", "--swap", "--expect", "1/2"});
  CHECK(sym.code == vqcat::cli::ok);
  CHECK(sym.out == "1/2\n");
  Run miss = run({"gromov", "--x", x, "--y", y, "--variant", "sym-mod", "--swap", "--expect", "1/3"});
  CHECK(miss.code == vqcat::cli::violation);
  Run plain = run({"gromov", "--x", x, "--y", y, "--expect", "0"});
  CHECK(plain.code == vqcat::cli::ok);
  Run pair = run({"gromov", "--x", x, "--y", y, "--variant", "sym-pair", "--expect", "0.5"});
  CHECK(pair.code == vqcat::cli::ok);
  Run json = run({"gromov", "--x", x, "--y", y, "--format", "json"});
  CHECK(json.code == vqcat::cli::ok);
  CHECK(json.out.find("\"attainment\": \"exact\"") != std::string::npos);
  Run bad = run({"gromov", "--x", x, "--y", y, "--strategy", "enumerate"});
  CHECK(bad.code == vqcat::cli::input_error);
}

TEST_CASE("cli: hausdorff and htilde") {
  Run h = run({"hausdorff", "--category", corpus + "/path3.json", "--pairs", "u+w,v"});
  CHECK(h.code == vqcat::cli::ok);
  CHECK(h.out == "3/4\n");
  Run t = run({"htilde", "--module", corpus + "/singleton_to_triangle.json", "--a", "p", "--b", "c"});
  CHECK(t.code == vqcat::cli::ok);
  CHECK(t.out == "1\n");
  Run unknown = run({"htilde", "--module", corpus + "/singleton_to_triangle.json", "--a", "q", "--b", "c"});
  CHECK(unknown.code == vqcat::cli::input_error);
}

TEST_CASE("cli: laws and misc") {
  CHECK(run({"quantale", "list"}).code == vqcat::cli::ok);
  CHECK(run({"laws", "--suite", "monad", "--seed", "7"}).code == vqcat::cli::ok);
  CHECK(run({"laws", "--suite", "gromov.chaos", "--seed", "1"}).code == vqcat::cli::ok);
  CHECK(run({"laws", "--suite", "bogus"}).code == vqcat::cli::input_error);
  CHECK(run({"no-such-command"}).code == vqcat::cli::input_error);
}
