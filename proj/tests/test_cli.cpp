#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

// End-to-end checks of the installed CLI binary: exit codes, file formats,
// byte-identical reruns.

namespace {

namespace fs = std::filesystem;

int run(const std::string& args) {
    const std::string cmd = std::string(QWALK_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("qwalk_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("spectrum: hypercube d column and exit codes") {
    TempDir tmp;
    const auto out = tmp.path / "spec.csv";
    REQUIRE(run("spectrum --n 4 --s 1 --out " + out.string()) == 0);
    const std::string content = slurp(out);
    CHECK(content.find("k,d,m_minus_2d,cos_omega,omega,parity") == 0);
    std::istringstream in(content);
    std::string line;
    std::getline(in, line);  // header
    int k = 0;
    while (std::getline(in, line)) {
        // s=1: d_k = k
        CHECK(line.rfind(std::to_string(k) + "," + std::to_string(k) + ",", 0) == 0);
        ++k;
    }
    CHECK(k == 5);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("spectrum --n 4") == 2);          // missing --s
    CHECK(run("spectrum --n 4 --s 9") == 2);    // violates s < n
    CHECK(run("nosuchcommand") == 2);
    CHECK(run("verify --suite nosuchsuite") == 2);
    CHECK(run("verify --suite parity --n 0") == 2);  // impossible cap
    CHECK(run("oracle --n 12 --s 2 --seed 1") == 2); // s >= n/6 refused
}

TEST_CASE("curve output shape and determinism") {
    TempDir tmp;
    const auto a = tmp.path / "a.csv";
    const auto b = tmp.path / "b.csv";
    REQUIRE(run("curve --n 6 --s 2 --t-max 40 --out " + a.string()) == 0);
    REQUIRE(run("curve --n 6 --s 2 --t-max 40 --out " + b.string()) == 0);
    const std::string ca = slurp(a);
    CHECK(ca == slurp(b));  // byte-identical rerun
    CHECK(ca.rfind("t,return_prob,hit_prob\n0,1,0\n", 0) == 0);
    int rows = -1;
    for (char c : ca) rows += (c == '\n');
    CHECK(rows == 41);
}

TEST_CASE("verify suite passes and writes no spurious failures") {
    CHECK(run("verify --suite parity --n 12") == 0);
    CHECK(run("verify --suite connectivity --n 8") == 0);
}

TEST_CASE("oracle classical run is reproducible and scores perfectly for s|n") {
    TempDir tmp;
    const auto a = tmp.path / "a.csv";
    const auto b = tmp.path / "b.csv";
    REQUIRE(run("oracle --n 12 --s 1 --seed 5 --trials 8 --out " + a.string()) == 0);
    REQUIRE(run("oracle --n 12 --s 1 --seed 5 --trials 8 --out " + b.string()) == 0);
    const std::string ca = slurp(a);
    CHECK(ca == slurp(b));
    // every trial line reports success=1
    std::istringstream in(ca);
    std::string line;
    std::getline(in, line);
    int trials = 0;
    while (std::getline(in, line)) {
        CHECK(line.find(",1,") != std::string::npos);
        ++trials;
    }
    CHECK(trials == 8);
}

TEST_CASE("oracle transcript records and replays") {
    TempDir tmp;
    const auto tr = tmp.path / "transcript.txt";
    REQUIRE(run("oracle --n 7 --s 1 --seed 5 --trials 1 --transcript " + tr.string()) == 0);
    CHECK(fs::file_size(tr) > 0);
    CHECK(run("oracle --n 7 --s 1 --seed 5 --replay " + tr.string()) == 0);
    // wrong seed renames the graph; replay must fail with exit 1
    CHECK(run("oracle --n 7 --s 1 --seed 6 --replay " + tr.string()) == 1);
}

TEST_CASE("measured trace emits the five columns with q starting after T0") {
    TempDir tmp;
    const auto out = tmp.path / "m.csv";
    REQUIRE(run("measured --n 7 --s 3 --t0 10 --t-max 60 --out " + out.string()) == 0);
    std::istringstream in(slurp(out));
    std::string line;
    std::getline(in, line);
    CHECK(line == "t,alpha,beta,q,p");
    int t = 0;
    while (std::getline(in, line) && t <= 10) {
        // q column is identically zero through T0
        std::size_t c1 = line.rfind(',');
        std::size_t c0 = line.rfind(',', c1 - 1);
        CHECK(line.substr(c0 + 1, c1 - c0 - 1) == "0");
        ++t;
    }
}

TEST_CASE("json format mirrors the csv rows") {
    TempDir tmp;
    const auto out = tmp.path / "layers.json";
    REQUIRE(run("layers --n 8 --s 2 --format json --out " + out.string()) == 0);
    const std::string content = slurp(out);
    CHECK(content.find("\"rows\"") != std::string::npos);
    CHECK(content.find("\"connection_count\"") != std::string::npos);
}
