// End-to-end tests against the built CLI binary; argv[1] is its path.

#include "schubert/decomposition.hpp"
#include "schubert/report.hpp"
#include "testutil.hpp"

#include <json.hpp>

#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& command) {
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return result;
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.out.append(buffer, got);
    int status = pclose(pipe);
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::printf("usage: test_cli <path-to-cli>\n");
        return 1;
    }
    const std::string cli = std::string("\"") + argv[1] + "\"";
    const std::string dump = " 2>/dev/null";

    // validate
    RunResult r = run(cli + " validate 2 5 4 8" + dump);
    CHECK(r.code == 0 && r.out.find("r=2 c=3 regime=non-small") != std::string::npos);
    CHECK(run(cli + " validate 1 3 3 5" + dump).code == 2);
    CHECK(run(cli + " validate 0 5 4 8" + dump).code == 2);
    CHECK(run(cli + " validate 2 4 6 8" + dump).code == 2);
    CHECK(run(cli + " validate 1 3 3 5 2>&1").out.find("r < c violated") != std::string::npos);
    CHECK(run(cli + " bogus 1 2 3 4" + dump).code == 2);

    // analyze: json content and polynomial round-trip
    r = run(cli + " analyze 2 5 4 8 --format json" + dump);
    CHECK(r.code == 0);
    nlohmann::json report = nlohmann::json::parse(r.out);
    CHECK(report.at("schema") == schubert::kReportSchema);
    CHECK(report.at("input").at("regime") == "non-small");
    nlohmann::json expect_i2 = nlohmann::json::parse(
        "[[0,1],[2,2],[4,4],[6,5],[8,7],[10,7],[12,7],[14,5],[16,4],[18,2],[20,1]]");
    CHECK(report.at("ih").at("2") == expect_i2);
    schubert::SchubertInput in = schubert::validate(2, 5, 4, 8);
    schubert::IHTable table = schubert::ih_recursion(in);
    for (int p = 1; p <= 3; ++p)
        CHECK(schubert::poly_from_json(report.at("ih").at(std::to_string(p))) == table.ih(p));
    CHECK(report.at("pairs")[0].at("kbar") == 2);  // (p,q) = (2,1)
    for (const auto& [name, status] : report.at("checks").items())
        CHECK_MSG(status == "pass", name);
    CHECK(report.at("perverse").at("0")[0][0] == "IC_S");
    CHECK(schubert::poly_from_json(report.at("stalks").at("3,2")) ==
          schubert::stalk_table(in, 3, 2));

    // analyze: text and latex shapes
    r = run(cli + " analyze 2 5 4 8" + dump);
    CHECK(r.code == 0 && r.out.find("I_2 = 1 + 2*t^2") != std::string::npos);
    r = run(cli + " analyze 2 5 4 8 --format latex" + dump);
    CHECK(r.code == 0 && r.out.find("\\begin{tabular}") != std::string::npos);
    CHECK(r.out.find("$\\delta_{pq}$") != std::string::npos);

    // analyze --out, and exit 4 on an unwritable path
    CHECK(run(cli + " analyze 2 5 4 8 --format json --out /tmp/schubert_cli_test.json" + dump)
              .code == 0);
    RunResult from_file = run("cat /tmp/schubert_cli_test.json");
    CHECK(nlohmann::json::parse(from_file.out) == report);
    CHECK(run(cli + " analyze 2 5 4 8 --out /no-such-dir/x.json" + dump).code == 4);

    // byte determinism of analyze
    RunResult json_a = run(cli + " analyze 2 5 4 8 --format json" + dump);
    RunResult json_b = run(cli + " analyze 2 5 4 8 --format json" + dump);
    CHECK(!json_a.out.empty() && json_a.out == json_b.out);

    // ih / stalks / perverse / summands
    r = run(cli + " ih 2 5 4 8 -p 1" + dump);
    CHECK(r.code == 0 && r.out == "1 + t^2 + t^4 + t^6 + t^8\n");
    CHECK(run(cli + " ih 2 5 4 8 -p 9" + dump).code == 2);
    r = run(cli + " stalks 2 5 4 8 -p 3 -q 2" + dump);
    CHECK(r.code == 0 && r.out == "1 + t^2\n");
    r = run(cli + " perverse 3 5 5 8" + dump);
    CHECK(r.code == 0);
    CHECK(r.out ==
          "i=-1: IC(Delta_2)\n"
          "i=0: IC(S), IC(Delta_1)\n"
          "i=+1: IC(Delta_2)\n");
    r = run(cli + " summands 2 5 4 8 -p 3" + dump);
    CHECK(r.code == 0 && r.out.find("q=2: [i=0] x 1") != std::string::npos);
    CHECK(r.out.find("q=1: (none)") != std::string::npos);

    // ring
    r = run(cli + " ring --rows 2 --cols 2 mult 1 1" + dump);
    CHECK(r.code == 0 && r.out == "σ_(2) + σ_(1,1)\n");
    r = run(cli + " ring --rows 2 --cols 2 mult 2,2 1" + dump);
    CHECK(r.code == 0 && r.out == "0\n");
    CHECK(run(cli + " ring --rows 2 --cols 2 mult 3 1" + dump).code == 2);
    CHECK(run(cli + " ring --rows 2 --cols 2 frob 1 1" + dump).code == 2);
    r = run(cli + " ring --rows 2 --cols 2 pieri-row 1 1" + dump);
    CHECK(r.code == 0 && r.out == "σ_(2) + σ_(1,1)\n");
    r = run(cli + " ring --rows 2 --cols 2 pieri-col 1,1 1" + dump);
    CHECK(r.code == 0 && r.out == "σ_(2,1)\n");
    CHECK(run(cli + " ring --rows 2 --cols 2 pieri-row 1 x" + dump).code == 2);

    // verify
    r = run(cli + " verify --max-l 8" + dump);
    CHECK(r.code == 0 && r.out.find("46 inputs (16 non-small") != std::string::npos);
    r = run(cli + " verify --max-l 4" + dump);
    CHECK(r.code == 0 && r.out.find("no non-small inputs exist") != std::string::npos);
    CHECK(run(cli + " verify --max-l 0" + dump).code == 2);

    // verify determinism across jobs
    RunResult v_a = run(cli + " verify --max-l 8 --jobs 4" + dump);
    RunResult v_b = run(cli + " verify --max-l 8 --jobs 4" + dump);
    CHECK(v_a.code == 0 && v_a.out == v_b.out);

    // an injected kernel fault is caught: exit 3 and a failure log
    r = run("SCHUBERT_FAULT_INJECT=gaussian " + cli +
            " verify --max-l 6 --csv /tmp/schubert_cli_fail.csv" + dump);
    CHECK(r.code == 3);
    RunResult csv = run("cat /tmp/schubert_cli_fail.csv");
    CHECK(csv.out.rfind("i,j,k,l,check,status,detail\n", 0) == 0);
    CHECK(csv.out.find("gaussian_kernel,fail") != std::string::npos);
    CHECK(run("SCHUBERT_FAULT_INJECT=gaussian " + cli + " verify --max-l 6 --csv /no-such/x.csv" +
              dump).code == 4);

    return testutil::finish("test_cli");
}
