#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
    std::string out;
    int status = -1;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(RATSIGN_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string last_line(const std::string& s) {
    auto end = s.find_last_not_of('\n');
    auto start = s.rfind('\n', end);
    return s.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}

}  // namespace

TEST_CASE("alternations as csv") {
    const auto r = run("alternations --max 12 --format csv");
    CHECK(r.status == 0);
    CHECK(last_line(r.out) == "12,2702765,9600567");
}

TEST_CASE("bwgraphs signed sums") {
    const auto r = run("bwgraphs --white 3,2,1,1 --black 3,2,2 --format json");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("S_white") == 2);
    CHECK(j.at("S_black") == 2);
}

TEST_CASE("snumbers for the empty profile") {
    const auto r = run("snumbers --empty --parity odd --max-m 5 --json");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("values") == nlohmann::json::parse(R"([[1,"0"],[3,"-2"],[5,"26"]])"));
    CHECK(j.contains("lambda"));
    CHECK(j.contains("parity"));
    CHECK(j.contains("diagnostics"));
}

TEST_CASE("JSON output round-trips byte for byte") {
    for (const char* args : {"alternations --max 15", "series --family u_c --c 2 --order 8",
                             "bwgraphs --white 2,1,1 --black 2,2 --list", "profiles --lambda '2,2;3' --parity even --bases",
                             "snumbers --empty --parity even --max-m 30 --asymptotics", "verify-all --check 5"}) {
        const std::string shown = args;
        CAPTURE(shown);
        const auto r = run(std::string(args) + " --format json");
        CHECK(r.status == 0);
        CHECK(nlohmann::json::parse(r.out).dump(2) + "\n" == r.out);
        CHECK(run(std::string(args) + " --format json").out == r.out);
    }
}

TEST_CASE("fb reads a descriptor file") {
    const auto path = std::filesystem::temp_directory_path() / "ratsign_descriptor.json";
    std::ofstream(path) << R"({"type":"C","parity":"odd","sp":1,"c":[0],"labels":[]})";
    const auto r = run("fb --descriptor " + path.string() + " --format json");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("epsilon") == 1);
    CHECK(j.at("lead_f") == "1");
    CHECK(j.at("lead_g") == "2");
    std::ofstream(path) << R"({"type":"A","parity":"odd","sp":1,"c":[2],"labels":[]})";
    CHECK(run("fb --descriptor " + path.string()).status == 2);
    std::filesystem::remove(path);
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run("").status == 2);
    CHECK(run("alternations --max 0").status == 2);
    CHECK(run("bwgraphs --white 3,x --black 2").status == 2);
    CHECK(run("snumbers --parity odd").status == 2);
    CHECK(run("alternations --format xml").status == 2);
}

TEST_CASE("verification failures exit with status 1") {
    CHECK(run("verify-all --check 1").status == 0);
    CHECK(run("verify-all --check 10").status == 1);
}
