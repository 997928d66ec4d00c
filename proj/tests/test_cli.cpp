#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli_env(const std::string& env, const std::string& args) {
    std::string cmd = env + (env.empty() ? "" : " ") + std::string(TCOI_CLI_PATH) + " " + args +
                      " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buffer{};
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        r.output.append(buffer.data(), got);
    int status = pclose(pipe);
    r.exit_code = WEXITSTATUS(status);
    return r;
}

RunResult run_cli(const std::string& args) { return run_cli_env("", args); }

std::vector<nlohmann::json> parse_lines(const std::string& text) {
    std::vector<nlohmann::json> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(nlohmann::json::parse(line));
    return out;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    REQUIRE(f.good());
    f << text;
}

}  // namespace

TEST_CASE("compute emits one schema-tagged record per input") {
    write_file("cli_p4.txt", "4 3\n0 1\n1 2\n2 3\n");
    RunResult r = run_cli("compute cli_p4.txt");
    CHECK(r.exit_code == 0);
    auto records = parse_lines(r.output);
    REQUIRE(records.size() == 1);
    const auto& j = records[0];
    CHECK(j["schema_version"] == 1);
    CHECK(j["record"] == "compute");
    CHECK(j["gamma_t"]["value"] == 2);
    CHECK(j["gamma_tcoi"]["value"] == 2);
    CHECK(j["alpha"]["value"] == 2);
    CHECK(j["beta"]["value"] == 2);
    CHECK(j["gamma_tcoi"]["witness"] == nlohmann::json({1, 2}));
}

TEST_CASE("identical inputs produce byte-identical output") {
    write_file("cli_c6.txt", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n");
    RunResult a = run_cli("compute cli_c6.txt cli_c6.txt");
    RunResult b = run_cli("compute cli_c6.txt cli_c6.txt");
    CHECK(a.output == b.output);
    auto records = parse_lines(a.output);
    REQUIRE(records.size() == 2);
    CHECK(records[0] == records[1]);
}

TEST_CASE("worker fan-out keeps input order and bytes") {
    write_file("cli_w1.txt", "4 3\n0 1\n1 2\n2 3\n");
    write_file("cli_w2.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
    write_file("cli_w3.txt", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n");
    std::string files = "cli_w1.txt cli_w2.txt cli_w3.txt";
    RunResult serial = run_cli("compute " + files);
    RunResult threaded = run_cli_env("TCOI_WORKERS=3", "compute " + files);
    CHECK(serial.output == threaded.output);
    auto records = parse_lines(serial.output);
    REQUIRE(records.size() == 3);
    CHECK(records[0]["input"] == "cli_w1.txt");
    CHECK(records[2]["input"] == "cli_w3.txt");
}

TEST_CASE("P2 reports gamma_t but exits with the infeasibility code") {
    write_file("cli_p2.txt", "2 1\n0 1\n");
    RunResult r = run_cli("compute cli_p2.txt");
    CHECK(r.exit_code == 3);
    auto records = parse_lines(r.output);
    REQUIRE(records.size() == 1);
    CHECK(records[0]["gamma_t"]["value"] == 2);
    CHECK(records[0]["gamma_tcoi"]["infeasible"] == true);
}

TEST_CASE("parse and precondition exit codes") {
    write_file("cli_bad.txt", "not a graph\n");
    CHECK(run_cli("compute cli_bad.txt").exit_code == 2);
    write_file("cli_isolated.txt", "3 1\n0 1\n");
    CHECK(run_cli("compute cli_isolated.txt").exit_code == 4);
    CHECK(run_cli("compute cli_missing_file.txt").exit_code == 2);
}

TEST_CASE("graph6 input is accepted") {
    write_file("cli_p4.g6", "Ch\n");
    RunResult r = run_cli("compute cli_p4.g6");
    CHECK(r.exit_code == 0);
    auto records = parse_lines(r.output);
    REQUIRE(records.size() == 1);
    CHECK(records[0]["n"] == 4);
    CHECK(records[0]["gamma_tcoi"]["value"] == 2);
}

TEST_CASE("oracle flag switches every method to brute force") {
    write_file("cli_p5.txt", "5 4\n0 1\n1 2\n2 3\n3 4\n");
    RunResult r = run_cli("compute --oracle cli_p5.txt");
    auto records = parse_lines(r.output);
    REQUIRE(records.size() == 1);
    for (const char* key : {"gamma_t", "gamma_tcoi", "alpha", "beta"})
        CHECK(records[0][key]["method"] == "brute_force");
}

TEST_CASE("bounds reports tight double star records") {
    write_file("cli_s33.txt", "8 7\n0 1\n0 2\n0 3\n0 4\n1 5\n1 6\n1 7\n");
    RunResult r = run_cli("bounds cli_s33.txt");
    CHECK(r.exit_code == 0);
    bool saw_p11 = false, saw_p12 = false;
    for (const auto& j : parse_lines(r.output)) {
        if (j["record"] != "bound") continue;
        if (j["name"] == "degree_ratio_lower") {
            saw_p11 = true;
            CHECK(j["holds"] == true);
            CHECK(j["tight"] == true);
            CHECK(j["rhs_num"] == 2);
            CHECK(j["rhs_den"] == 1);
        }
        if (j["name"] == "size_degree_lower") {
            saw_p12 = true;
            CHECK(j["tight"] == true);
        }
    }
    CHECK(saw_p11);
    CHECK(saw_p12);
}

TEST_CASE("gen writes replayable artifacts and verifies") {
    RunResult r = run_cli(
        "gen f1 --n 1 --a 1 --b 1 --k 2 --q 0 --out cli_c4_out.txt --script cli_c4.script "
        "--verify");
    CHECK(r.exit_code == 0);
    auto records = parse_lines(r.output);
    REQUIRE(records.size() == 2);
    CHECK(records[0]["record"] == "gen");
    CHECK(records[0]["n"] == 4);
    CHECK(records[1]["record"] == "verify_f1");
    CHECK(records[1]["all_hold"] == true);
    std::ifstream script("cli_c4.script");
    std::string first_line;
    std::getline(script, first_line);
    CHECK(first_line == "base star 1");

    RunResult qr = run_cli("gen qr --r 5 --out cli_q5.txt");
    CHECK(qr.exit_code == 0);
    CHECK(parse_lines(qr.output)[0]["n"] == 13);
}

TEST_CASE("reduce verifies the identity and the decision transfer") {
    write_file("cli_p3.txt", "3 2\n0 1\n1 2\n");
    RunResult r = run_cli("reduce cli_p3.txt --out cli_p3_gt.txt --verify --k 2");
    CHECK(r.exit_code == 0);
    auto records = parse_lines(r.output);
    REQUIRE(records.size() == 3);
    CHECK(records[0]["gt_n"] == 21);
    CHECK(records[1]["gamma_tcoi_gt"] == 7);
    CHECK(records[1]["three_n_minus_beta"] == 7);
    CHECK(records[1]["holds"] == true);
    CHECK(records[2]["j"] == 7);
    CHECK(records[2]["equivalence"] == true);
    write_file("cli_edgeless.txt", "3 0\n");
    CHECK(run_cli("reduce cli_edgeless.txt --out cli_none.txt").exit_code == 4);
}

TEST_CASE("trees subcommands") {
    write_file("cli_p8.txt", "8 7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n");
    RunResult r = run_cli("trees check cli_p8.txt");
    auto records = parse_lines(r.output);
    CHECK(records[0]["equal_numbers"] == false);

    RunResult rec = run_cli("trees recognize cli_p8.txt");
    CHECK(parse_lines(rec.output)[0]["member"] == false);

    write_file("cli_p7.txt", "7 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n");
    rec = run_cli("trees recognize cli_p7.txt --script cli_p7.ops");
    auto rj = parse_lines(rec.output)[0];
    CHECK(rj["member"] == true);
    std::ifstream ops("cli_p7.ops");
    std::string line;
    std::getline(ops, line);
    CHECK(line == "base P4");

    // the emitted script replays to a tree of the same order
    RunResult rp = run_cli("trees replay cli_p7.ops --out cli_p7_replayed.txt");
    CHECK(rp.exit_code == 0);
    CHECK(parse_lines(rp.output)[0]["n"] == 7);
    RunResult chk = run_cli("trees check cli_p7_replayed.txt");
    CHECK(parse_lines(chk.output)[0]["equal_numbers"] == true);

    RunResult v = run_cli("trees verify-characterization --max-n 7");
    auto vj = parse_lines(v.output)[0];
    CHECK(vj["ok"] == true);
    CHECK(vj["disagreements"] == 0);
    CHECK(v.exit_code == 0);
}
