#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "einalg/io.hpp"
#include "einalg/ops.hpp"

using namespace einalg;
namespace fs = std::filesystem;

namespace {

const std::string kCli = EINALG_CLI_PATH;
const std::string kFixtures = EINALG_FIXTURE_DIR;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("einalg_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

int run(const std::string& args) {
  const std::string cmd = kCli + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("gen is deterministic and emits valid tensors") {
  TempDir tmp;
  const std::string a = tmp.file("a.json");
  const std::string b = tmp.file("b.json");
  CHECK(run("gen --seed 7 --row-modes 2,3 --col-modes 2 --out " + a) == 0);
  CHECK(run("gen --seed 7 --row-modes 2,3 --col-modes 2 --out " + b) == 0);
  CHECK(read_file(a) == read_file(b));
  const DenseTensor t = read_tensor(a);
  CHECK(t.row_modes() == ModeList{2, 3});

  const std::string w = tmp.file("w.json");
  CHECK(run("gen --seed 3 --row-modes 2,2 --hpd --out " + w) == 0);
  CHECK(is_hermitian(read_tensor(w), 1e-12));
}

TEST_CASE("pinv then verify round trip") {
  TempDir tmp;
  const std::string a = tmp.file("a.json");
  const std::string x = tmp.file("x.json");
  REQUIRE(run("gen --seed 11 --row-modes 2,2 --col-modes 3 --out " + a) == 0);
  CHECK(run("pinv -i " + a + " --out " + x) == 0);
  CHECK(run("verify -i " + a + " -i " + x + " --tol 1e-10") == 0);
}

TEST_CASE("verify fails for a wrong candidate") {
  TempDir tmp;
  const std::string a = tmp.file("a.json");
  const std::string x = tmp.file("x.json");
  REQUIRE(run("gen --seed 12 --row-modes 3 --col-modes 2 --out " + a) == 0);
  REQUIRE(run("gen --seed 13 --row-modes 2 --col-modes 3 --out " + x) == 0);
  CHECK(run("verify -i " + a + " -i " + x) == 1);
}

TEST_CASE("wpinv with the indefinite counterexample weights exits with the numerical code") {
  TempDir tmp;
  const std::string out = tmp.file("x.json");
  const std::string base = "wpinv -i " + kFixtures + "/counterexample_a.json --weight-m " +
                           kFixtures + "/counterexample_m.json --weight-n " + kFixtures +
                           "/counterexample_n.json --out " + out;
  CHECK(run(base) == 3);
  // The flag downgrades the eager check, but the square-root route still
  // needs definite weights.
  CHECK(run(base + " --allow-non-hpd") == 3);
}

TEST_CASE("shape errors exit with the input-error code") {
  TempDir tmp;
  const std::string a = tmp.file("a.json");
  const std::string b = tmp.file("b.json");
  REQUIRE(run("gen --seed 1 --row-modes 2 --col-modes 2,3 --out " + a) == 0);
  REQUIRE(run("gen --seed 2 --row-modes 3,2 --col-modes 2 --out " + b) == 0);
  CHECK(run("product -i " + a + " -i " + b + " --out " + tmp.file("c.json")) == 2);
  CHECK(run("pinv -i " + tmp.file("missing.json") + " --out " + tmp.file("x.json")) == 2);
}

TEST_CASE("product, svd, frd, hash write their outputs") {
  TempDir tmp;
  const std::string a = tmp.file("a.json");
  const std::string b = tmp.file("b.json");
  REQUIRE(run("gen --seed 21 --row-modes 3 --col-modes 2,2 --out " + a) == 0);
  REQUIRE(run("gen --seed 22 --row-modes 2,2 --col-modes 3 --out " + b) == 0);
  CHECK(run("product -i " + a + " -i " + b + " --out " + tmp.file("c.json")) == 0);
  CHECK(fs::exists(tmp.file("c.json")));

  CHECK(run("svd -i " + a + " --out " + tmp.file("s")) == 0);
  CHECK(fs::exists(tmp.file("s.u.json")));
  CHECK(fs::exists(tmp.file("s.d.json")));
  CHECK(fs::exists(tmp.file("s.v.json")));

  CHECK(run("frd -i " + a + " --out " + tmp.file("f")) == 0);
  CHECK(fs::exists(tmp.file("f.f.json")));
  CHECK(fs::exists(tmp.file("f.g.json")));

  const std::string m = tmp.file("m.json");
  const std::string n = tmp.file("n.json");
  REQUIRE(run("gen --seed 23 --row-modes 3 --hpd --out " + m) == 0);
  REQUIRE(run("gen --seed 24 --row-modes 2,2 --hpd --out " + n) == 0);
  CHECK(run("hash -i " + a + " --weight-n " + n + " --weight-m " + m + " --out " +
            tmp.file("h.json")) == 0);
  CHECK(fs::exists(tmp.file("h.json")));
}

TEST_CASE("check-rol emits a machine report and the right exit codes") {
  TempDir tmp;
  const std::string a = tmp.file("a.json");
  REQUIRE(run("gen --seed 31 --row-modes 3 --col-modes 2,2 --out " + a) == 0);
  // b = a* conforms, so the law holds
  const std::string at = tmp.file("at.json");
  {
    const DenseTensor t = conj_transpose(read_tensor(a));
    write_tensor(at, t);
  }
  const std::string rep = tmp.file("rol.report.json");
  CHECK(run("check-rol -i " + a + " -i " + at + " --emit-report --out " + rep) == 0);
  const std::string text = read_file(rep);
  CHECK(text.find("\"subcommand\": \"check-rol\"") != std::string::npos);
  CHECK(text.find("\"passed\": true") != std::string::npos);

  // a generic random pair violates the law: checks ran and failed
  const std::string b = tmp.file("b.json");
  REQUIRE(run("gen --seed 32 --row-modes 2,2 --col-modes 3 --out " + b) == 0);
  CHECK(run("check-rol -i " + a + " -i " + b) == 1);
}

TEST_CASE("fixtures subcommand passes on the shipped data") {
  CHECK(run("fixtures --fixtures " + kFixtures) == 0);
}

TEST_CASE("identities subcommand runs a single case") {
  TempDir tmp;
  const std::string rep = tmp.file("catalog.json");
  CHECK(run("identities --case idr1-c --instances 3 --seed 5 --out " + rep) == 0);
  const std::string text = read_file(rep);
  CHECK(text.find("\"case\": \"idr1-c\"") != std::string::npos);
  CHECK(run("identities --case no-such-case --instances 1") == 2);
}

TEST_CASE("byte-identical reports for identical configs") {
  TempDir tmp;
  const std::string r1 = tmp.file("r1.json");
  const std::string r2 = tmp.file("r2.json");
  REQUIRE(run("identities --case lemma42-a --instances 2 --seed 9 --out " + r1) == 0);
  REQUIRE(run("identities --case lemma42-a --instances 2 --seed 9 --out " + r2) == 0);
  CHECK(read_file(r1) == read_file(r2));
}
