#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = amalgam::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string golden(const std::string& name) { return slurp(std::string(GOLDEN_DIR) + "/" + name); }

std::string temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("amalgam_cli_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

using amalgam::cli::kMismatch;
using amalgam::cli::kOk;
using amalgam::cli::kResource;
using amalgam::cli::kUsage;

TEST_CASE("golden outputs") {
    CHECK(run({"syt", "3", "2"}).out == golden("syt_3_2.txt"));
    CHECK(run({"syt", "2", "2"}).out == golden("syt_2_2.txt"));
    CHECK(run({"fayers", "3", "2"}).out == golden("fayers_3_2.json"));
    CHECK(run({"phi", "3", "2"}).out == golden("phi_3_2.json"));
    CHECK(run({"fayers", "2", "2"}).out == golden("fayers_2_2.json"));
    CHECK(run({"phi", "2", "2"}).out == golden("phi_2_2.json"));
    CHECK(run({"vdm", "--degrees", "2,2", "--symbolic", "--expand", "t1"}).out == golden("vdm_2_2.txt"));
    CHECK(run({"vdm", "--degrees", "3,2", "--symbolic", "--expand", "t1"}).out == golden("vdm_3_2.txt"));
}

TEST_CASE("coefficient matrices are valid JSON") {
    const auto j = nlohmann::json::parse(run({"phi", "3", "2"}).out);
    CHECK(j["matrix"][0][4] == 1);
    CHECK(j["row_basis"].size() == 5);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == kUsage);
    CHECK(run({"bogus"}).code == kUsage);
    CHECK(run({"syt", "0", "2"}).code == kUsage);
    CHECK(run({"syt", "x"}).code == kUsage);
    CHECK(run({"vdm", "--degrees", "2,2", "--order", "grevlex"}).code == kUsage);
    CHECK(run({"kappa", "2", "2", "--alpha", "1 3;2 4", "--beta", "1,2;3,4", "--seed", "1"}).code == kUsage);
    CHECK(run({"verify-t3", "2", "2", "--A", "/nonexistent.json", "--B", "/nonexistent.json"}).code == kUsage);
    CHECK(run({"verify-t3", "2", "2", "--seed", "1", "--corrupt-phi", "--corrupt-entry", "9,9"}).code == kUsage);
    CHECK(run({"--help"}).code == kOk);
}

TEST_CASE("CI mode requires seeds") {
    const auto r = run({"--ci", "verify-t3", "2", "2"});
    CHECK(r.code == kUsage);
    CHECK(r.err.find("--seed") != std::string::npos);
    CHECK(run({"--ci", "verify-t3", "2", "2", "--seed", "3"}).code == kOk);
    CHECK(run({"--ci", "verify-t3", "2", "2", "--symbolic"}).code == kOk);
}

TEST_CASE("verify-t3") {
    const auto ok = run({"verify-t3", "3", "2", "--seed", "5", "--trials", "4"});
    CHECK(ok.code == kOk);
    CHECK(ok.out.find("all 4 trials agree") != std::string::npos);
    const auto bad = run({"verify-t3", "3", "2", "--seed", "5", "--corrupt-phi", "--corrupt-entry", "2,2"});
    CHECK(bad.code == kMismatch);
    CHECK(bad.out.find("MISMATCH det(A*B) = ") != std::string::npos);
    CHECK(bad.out.find("expansion = ") != std::string::npos);
    CHECK(run({"verify-t3", "2", "2", "--symbolic"}).code == kOk);
    CHECK(run({"verify-t3", "2", "2", "--symbolic", "--corrupt-phi"}).code == kMismatch);
    CHECK(run({"verify-t3", "4", "2", "--symbolic"}).code == kResource);

    const std::string a = temp_file("A.json", R"({"rows":4,"cols":2,"entries":["1","2","3","4","5","6","7","-8"]})");
    const std::string b = temp_file("B.json", R"({"rows":4,"cols":2,"entries":["1","0","2","1","0","3","1","1"]})");
    CHECK(run({"verify-t3", "2", "2", "--A", a, "--B", b}).code == kOk);
    CHECK(run({"verify-t3", "3", "2", "--A", a, "--B", b}).code == kUsage);
}

TEST_CASE("verify-t4 and kappa") {
    const auto r = run({"verify-t4", "2", "2", "--seed", "1"});
    CHECK(r.code == kOk);
    CHECK(r.out.find("ratio = 12") != std::string::npos);
    // columns {1,2},{3,4} on both sides: every intersection has two elements
    const auto z = run({"verify-t4", "2", "2", "--alpha", "1,3;2,4", "--beta", "1,3;2,4", "--seed", "1"});
    CHECK(z.code == kOk);
    CHECK(z.out.find("pairing = 0") != std::string::npos);
    CHECK(z.out.find("ratio = 0") != std::string::npos);
    CHECK(run({"verify-t4", "3", "3", "--seed", "1", "--perm-cap", "6"}).code == kResource);
    CHECK(run({"kappa", "3", "2", "--alpha", "1,4;2,5;3,6", "--beta", "1,2,3;4,5,6", "--seed", "2"}).out == "kappa = 144\n");
}

TEST_CASE("vdm") {
    const auto r = run({"vdm", "--degrees", "2,2,2", "--split", "2", "--seed", "9"});
    CHECK(r.code == kOk);
    const std::string pts = temp_file("pts.json", R"([{"z":["0","0"]},{"z":["1","0"]},{"z":["0","1"]},{"z":["1","1"]}])");
    const auto p = run({"vdm", "--degrees", "2,2", "--points", pts});
    CHECK(p.code == kOk);
    CHECK(p.out.rfind("det V = 1\n", 0) == 0);
    CHECK(run({"vdm", "--degrees", "3,2", "--points", pts}).code != kOk);
    CHECK(run({"vdm", "--degrees", "2,2", "--split", "3", "--seed", "1"}).code == kUsage);
    CHECK(run({"vdm", "--degrees", "2,2", "--order", "deglex", "--symbolic"}).code == kOk);
}

TEST_CASE("vdm-hom") {
    const std::string circle = temp_file(
        "circle.json",
        R"([{"z":["1","0"]},{"z":["0","1"]},{"z":["-1","0"]},{"z":["0","-1"]},{"z":["3/5","4/5"]},{"z":["-5/13","12/13"]}])");
    const auto r = run({"vdm-hom", "--N", "2", "--r", "2", "--points", circle, "--kernel"});
    CHECK(r.code == kOk);
    CHECK(r.out.find("det V^hom = 0") != std::string::npos);
    CHECK(r.out.find("kernel dimension = 1") != std::string::npos);
    const auto s = run({"vdm-hom", "--extract", "separated"});
    CHECK(s.code == kOk);
    CHECK(s.out.find("sum of 24 terms") != std::string::npos);
    const auto o = run({"vdm-hom", "--extract", "mixed-origin"});
    CHECK(o.out.find("sum of 6 terms") != std::string::npos);
    CHECK(run({"vdm-hom", "--extract", "hyperbola"}).code == kUsage);
}

TEST_CASE("fekete and multiplicativity") {
    const std::string iv = temp_file("interval.json", R"({"kind":"interval","a":-2,"b":2})");
    const auto f = run({"fekete", "--set", iv, "--N-list", "4,6", "--seed", "1", "--budget", "8"});
    CHECK(f.code == kOk);
    CHECK(f.out.rfind("N,D,log_abs_det,estimate\n4,6,", 0) == 0);
    CHECK(run({"fekete", "--set", iv, "--degrees", "5", "--seed", "1"}).code == kOk);
    CHECK(run({"--ci", "fekete", "--set", iv, "--N-list", "4"}).code == kUsage);
    CHECK(run({"fekete", "--set", iv}).code == kUsage);
    const std::string bad = temp_file("bad.json", R"({"kind":"interval","a":3,"b":-2})");
    CHECK(run({"fekete", "--set", bad, "--N-list", "4"}).code == kUsage);

    const auto m = run({"multiplicativity", "--set1", iv, "--set2", iv, "--N", "4", "--seed", "3", "--budget", "8"});
    CHECK(m.code == kOk);
    CHECK(m.out.find("exact paired identity: holds") != std::string::npos);
}

TEST_CASE("tableau cap from the environment") {
    setenv("AMALGAM_SYT_CAP", "3", 1);
    CHECK(run({"syt", "3", "2"}).code == kResource);
    setenv("AMALGAM_SYT_CAP", "nope", 1);
    CHECK(run({"syt", "3", "2"}).code == kUsage);
    unsetenv("AMALGAM_SYT_CAP");
    CHECK(run({"syt", "3", "2"}).code == kOk);
}
