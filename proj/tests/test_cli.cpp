#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string kBin = QS_BIN;

int run(const std::string& args, std::string* out = nullptr) {
    auto tmp = std::filesystem::temp_directory_path() / "qs_cli_test_out.txt";
    std::string cmd = kBin + " " + args + " > " + tmp.string() + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    if (out) {
        std::ifstream f(tmp);
        std::stringstream ss;
        ss << f.rdbuf();
        *out = ss.str();
    }
    std::filesystem::remove(tmp);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("exit codes") {
    CHECK(run("gr verify-duality --d 2 --n 4") == 0);
    CHECK(run("run box --param d=2 --param l=2 --param delta=1") == 0);
    CHECK(run("run nosuch") == 2);
    CHECK(run("run box --param d=2 --param l=2 --param delta=9") == 2);
    CHECK(run("lr --mu x --nu 1") == 2);
    CHECK(run("--bogus") == 2);
    CHECK(run("appendix verify --n 4 --m 1 --d 2 --which middle") == 2);
    CHECK(run("--help") == 0);
}

TEST_CASE("output") {
    std::string out;
    REQUIRE(run("lr --mu 2,1 --nu 2,1 --lambda 3,2,1", &out) == 0);
    CHECK(out.find("\"schema\": 1") != std::string::npos);
    CHECK(out.find("\"3,2,1\": 2") != std::string::npos);
    REQUIRE(run("motivic gauss --d 2 --n 4", &out) == 0);
    CHECK(out.find("\"2\": 2") != std::string::npos);
    REQUIRE(run("cayley verify --d 2 --n 4", &out) == 0);
    CHECK(out.find("\"status\": \"pass\"") != std::string::npos);
    CHECK(out.find("wall_ms") == std::string::npos);
    REQUIRE(run("cayley verify --d 2 --n 4 --timing", &out) == 0);
    CHECK(out.find("wall_ms") != std::string::npos);
}

TEST_CASE("deterministic across runs and jobs") {
    std::string a, b;
    REQUIRE(run("run appendix-top --param max_n=4 --jobs 1", &a) == 0);
    REQUIRE(run("run appendix-top --param max_n=4 --jobs 3", &b) == 0);
    CHECK(a == b);
}

TEST_CASE("LR cache directory") {
    auto dir = std::filesystem::temp_directory_path() / "qs_cli_cache_test";
    std::filesystem::remove_all(dir);
    std::string env = "QS_CACHE_DIR=" + dir.string() + " ";
    auto tmp = std::filesystem::temp_directory_path() / "qs_cli_env.txt";
    CHECK(std::system((env + kBin + " lr --mu 2,1 --nu 2,1 > " + tmp.string()).c_str()) == 0);
    CHECK(std::filesystem::exists(dir / "lr_cache.bin"));
    CHECK(std::system((env + kBin + " lr --mu 2,1 --nu 2,1 > " + tmp.string()).c_str()) == 0);
    std::filesystem::remove_all(dir);
    std::filesystem::remove(tmp);
}
