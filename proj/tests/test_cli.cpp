#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

int run(const std::string& args) {
  const std::string cmd = std::string(TRIMSPEC_BIN) + " " + args;
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("exit status contract") {
  CHECK(run("list-geometries > /dev/null") == 0);
  CHECK(run("bogus-command 2> /dev/null") == 64);
  CHECK(run("sweep 2> /dev/null") == 64);                      // missing geometry
  CHECK(run("run geometry=1d_trim 2> /dev/null") == 64);       // missing delta
  CHECK(run("sweep geometry=1d_trim p=2 k=5 foo=1 2> /dev/null") == 64);  // unknown key
  CHECK(run("run geometry=nonsense delta=1e-4 2> /dev/null") == 1);  // domain error
}

TEST_CASE("list-geometries names the six families") {
  const fs::path tmp = fs::temp_directory_path() / "trimspec_list.txt";
  REQUIRE(run("list-geometries > " + tmp.string()) == 0);
  const std::string text = slurp(tmp);
  for (const char* fam : {"1d_trim", "square_corner", "house", "house_wide",
                          "rotated_square", "plate_hole"})
    CHECK(text.find(fam) != std::string::npos);
  fs::remove(tmp);
}

TEST_CASE("sweep writes deterministic CSV") {
  const fs::path dir = fs::temp_directory_path() / "trimspec_cli_test";
  fs::remove_all(dir);
  const std::string args = "sweep geometry=1d_trim p=2 k=1 deltas=1e-3,1e-4,1e-5,1e-6 out=" +
                           dir.string() + " > /dev/null 2> /dev/null";
  REQUIRE(run(args) == 0);
  const fs::path csv = dir / "1d_trim_p2_k1.csv";
  REQUIRE(fs::exists(csv));
  const std::string first = slurp(csv);
  CHECK(first.rfind("delta,lambda1_lumped,", 0) == 0);
  REQUIRE(run(args) == 0);
  CHECK(slurp(csv) == first);
  fs::remove_all(dir);
}

TEST_CASE("config file keys with command-line override") {
  const fs::path dir = fs::temp_directory_path() / "trimspec_cfg_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path cfg = dir / "case.cfg";
  {
    std::ofstream os(cfg);
    os << "# single trimmed case\n"
          "[geometry]\n"
          "geometry = 1d_trim\n"
          "p = 2\n"
          "k = 1\n"
          "delta = 1e-4\n";
  }
  const fs::path out = dir / "out.txt";
  REQUIRE(run("run config=" + cfg.string() + " > " + out.string()) == 0);
  CHECK(slurp(out).find("geometry 1d_trim") != std::string::npos);
  CHECK(slurp(out).find("p=2") != std::string::npos);
  // command line overrides the file
  REQUIRE(run("run config=" + cfg.string() + " p=3 > " + out.string()) == 0);
  CHECK(slurp(out).find("p=3") != std::string::npos);
  // malformed file
  {
    std::ofstream os(cfg, std::ios::app);
    os << "not a key value line\n";
  }
  CHECK(run("run config=" + cfg.string() + " 2> /dev/null") == 64);
  fs::remove_all(dir);
}

TEST_CASE("run exports matrices on request") {
  const fs::path dir = fs::temp_directory_path() / "trimspec_export_test";
  fs::remove_all(dir);
  REQUIRE(run("run geometry=1d_trim p=1 k=0 N=8 delta=1e-3 export-matrices=1 out=" +
              dir.string() + " > /dev/null") == 0);
  const std::string K = slurp(dir / "1d_trim_p1_k0_N8_K.coo");
  REQUIRE(!K.empty());
  // header: n nnz, then 1-based lower-triangle entries
  std::istringstream is(K);
  int n = 0;
  long nnz = 0;
  is >> n >> nnz;
  CHECK(n == 8);  // 9 hats minus the Dirichlet end
  CHECK(nnz >= 2 * n - 1);
  fs::remove_all(dir);
}
