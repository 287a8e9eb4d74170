// Golden-file tests for the CLI binary. The binary path arrives as argv[1]
// (wired up by CTest); invocations run through std::system with output
// captured to a temp file.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string g_binary;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string tmp = "cli_out.tmp";
    std::string cmd = g_binary + " " + args + " > " + tmp + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(tmp.c_str());
    return {WEXITSTATUS(rc), ss.str()};
}

}  // namespace

TEST_CASE("omega golden invocations") {
    CHECK(run("omega --point 1,1 --n 6 --ratio").out == "2\n");
    CHECK(run("omega --point 0,-1 --n 6 --top").out == "60\n");
    CHECK(run("omega --point -2,-5 --n 5 --ratio").out == "31\n");
    RunResult table = run("omega --point 1,1 --n 6 --table");
    CHECK(table.exit_code == 0);
    CHECK(table.out.substr(0, 12) == "k=0: 1 1 1 1");
    // quadratic point syntax
    RunResult quad = run("omega --point 1,1@sqrt:5 --n 4 --ratio");
    CHECK(quad.exit_code == 0);
    CHECK(quad.out == "3+0*sqrt(5)\n");  // L(2) = 3
}

TEST_CASE("psi golden invocations") {
    CHECK(run("psi -2 -5 7").out == "127\n");
    CHECK(run("psi 1 4 16 --mod 31").out == "0\n");
    CHECK(run("psi 1 -2 9").out == "1\n");
    CHECK(run("psi 1 -2 9 --sum").out == "1\n");
}

TEST_CASE("mersenne golden invocations") {
    RunResult p5 = run("mersenne 5");
    CHECK(p5.exit_code == 0);
    CHECK(p5.out.rfind("PRIME ", 0) == 0);
    RunResult p11 = run("mersenne 11");
    CHECK(p11.exit_code == 0);
    CHECK(p11.out.rfind("COMPOSITE ", 0) == 0);
    RunResult p17 = run("mersenne 17 --method fast");
    CHECK(p17.out.rfind("PRIME ", 0) == 0);
    RunResult naive = run("mersenne 13 --method naive");
    CHECK(naive.out.rfind("PRIME ", 0) == 0);
}

TEST_CASE("exit codes: 0 success, 1 verification failure, 2 usage error") {
    CHECK(run("omega --point 1,1 --n 6 --ratio").exit_code == 0);
    CHECK(run("verify emergence --k-max 3").exit_code == 0);
    CHECK(run("omega --point banana --n 6 --ratio").exit_code == 2);
    CHECK(run("psi 1").exit_code == 2);
    CHECK(run("mersenne 9").exit_code == 2);
    CHECK(run("verify nonsense").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("omega --point 1,1 --n 6 --ratio --bogus").exit_code == 2);
    CHECK(run("").exit_code == 2);
    // cap exceeded is a usage-level error
    CHECK(run("omega --point 1,1 --n 9999 --top --cap table=64").exit_code == 2);
    CHECK(run("omega --point 1,1 --n 9999 --top --cap table=5000").exit_code == 0);
}

TEST_CASE("verify suites pass and are deterministic") {
    RunResult a = run("verify identities --n-max 6");
    CHECK(a.exit_code == 0);
    CHECK(!a.out.empty());
    CHECK(a.out.find("FAIL") == std::string::npos);
    RunResult b = run("verify identities --n-max 6");
    CHECK(a.out == b.out);  // byte-identical reruns

    RunResult tab = run("verify tables --n-max 30");
    CHECK(tab.exit_code == 0);
    CHECK(tab.out.find("FAIL") == std::string::npos);

    RunResult em = run("verify emergence --k-max 5");
    CHECK(em.exit_code == 0);
    CHECK(em.out.find("FAIL") == std::string::npos);
    // the k=2 gen111 counterexample is reported, not failed
    CHECK(em.out.find("gen111 k=2 SKIP") != std::string::npos);
    CHECK(em.out.find("counterexample") != std::string::npos);
}

TEST_CASE("verify records are sorted and json-lines parse") {
    RunResult r = run("verify emergence --k-max 4 --json");
    CHECK(r.exit_code == 0);
    std::stringstream ss(r.out);
    std::string line;
    std::string prev_key;
    int count = 0;
    while (std::getline(ss, line)) {
        auto j = nlohmann::json::parse(line);
        CHECK(j.contains("suite"));
        CHECK(j.contains("tag"));
        CHECK(j.contains("params"));
        CHECK(j.contains("verdict"));
        CHECK(j.contains("witness"));
        std::string verdict = j["verdict"];
        CHECK((verdict == "PASS" || verdict == "SKIP"));
        std::string key = j["suite"].get<std::string>() + "|" + j["tag"].get<std::string>() +
                          "|" + j["params"].get<std::string>();
        CHECK(prev_key <= key);
        prev_key = key;
        ++count;
    }
    CHECK(count == 3 * 6);  // k = 2..4, six tags each
}

TEST_CASE("env var caps are honored and overridden by flags") {
    std::string saved_cmd = g_binary;
    g_binary = "OMEGALAB_CAPS=table=64 " + saved_cmd;
    CHECK(run("omega --point 1,1 --n 9999 --top").exit_code == 2);
    CHECK(run("omega --point 1,1 --n 100 --top").exit_code == 0);
    // flag beats env
    CHECK(run("omega --point 1,1 --n 9999 --top --cap table=5000").exit_code == 0);
    g_binary = saved_cmd;
}

TEST_CASE("tables subcommand renders the periodicity rows") {
    RunResult r = run("tables --n-max 6");
    CHECK(r.exit_code == 0);
    std::stringstream ss(r.out);
    std::string header;
    std::getline(ss, header);
    CHECK(header == "n (1,1) (1,0) (1,-1) (1,-2) (1,2) (1,sqrt5)");
    std::string row1;
    std::getline(ss, row1);
    CHECK(row1 == "1 1 1 1 1 1 1+0*sqrt(5)");
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-omegalab-binary>\n");
        return 1;
    }
    g_binary = argv[1];
    doctest::Context ctx;
    ctx.applyCommandLine(1, argv);
    return ctx.run();
}
