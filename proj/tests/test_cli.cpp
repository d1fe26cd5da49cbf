#include "doctest.h"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

std::string tmp(const std::string& name)
{
    return (std::filesystem::temp_directory_path() / ("rlatool_test_" + name)).string();
}

int run(const std::string& args, const std::string& out = "/dev/null")
{
    std::string cmd = std::string(RLATOOL_PATH) + " " + args + " >" + out + " 2>/dev/null";
    int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("cli exit codes")
{
    CHECK(run("steenrod normalize --p 2 --word 1,1") == 0);
    CHECK(run("no-such-command") == 2);
    CHECK(run("steenrod normalize --p 4 --word 1") == 2);
    CHECK(run("hopf validate --p 2 --example sl2-broken") == 1);
    CHECK(run("--p 3 freelie oracle --l 1 --n 9 --max-stem 4") == 3);
}

TEST_CASE("cli zero normal form")
{
    std::string path = tmp("cli_zero.json");
    REQUIRE(run("steenrod normalize --p 2 --word 1,1", path) == 0);
    auto j = nlohmann::json::parse(slurp(path));
    CHECK(j["entries"].empty());
    CHECK(j["metadata"]["config_hash"].get<std::string>().size() == 16);
    CHECK(j["metadata"]["version"] == "1.0.0");
}

TEST_CASE("cli chart output is deterministic")
{
    const std::string args = "ext chart --p 2 --l 1 --flavor hat --max-s 4 --max-t 10 --method both --format json";
    REQUIRE(run(args, tmp("cli_a.json")) == 0);
    REQUIRE(run(args, tmp("cli_b.json")) == 0);
    REQUIRE(run("--threads 1 " + args, tmp("cli_c.json")) == 0);
    std::string a = slurp(tmp("cli_a.json"));
    CHECK(a == slurp(tmp("cli_b.json")));
    auto j = nlohmann::json::parse(a);
    CHECK(j["methods_agree"] == true);
    CHECK(j["entries"] == nlohmann::json::parse(slurp(tmp("cli_c.json")))["entries"]);
}

TEST_CASE("cli csv header")
{
    REQUIRE(run("ext chart --p 3 --l 2 --flavor tilde --max-s 2 --max-t 12 --format csv", tmp("cli.csv")) == 0);
    std::string s = slurp(tmp("cli.csv"));
    CHECK(s.rfind("s,t,stem,dim,basis\n", 0) == 0);
}
