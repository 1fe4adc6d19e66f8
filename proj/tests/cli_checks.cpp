// Integration checks for the command-line tool: exit codes, messages and
// byte-level determinism of repeated invocations. Takes the binary path as
// its only argument and prints one line per check.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct RunResult {
    int code = -1;
    std::string output;  // stdout and stderr combined
};

RunResult run(const std::string& cli, const std::string& args) {
    const std::string cmd = cli + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    RunResult result;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) result.output.append(buf, got);
    const int status = pclose(pipe);
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

int failures = 0;

void check(const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("[%s] %s%s%s\n", ok ? "ok" : "FAIL", name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::vector<std::vector<double>> parse_csv_rows(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
        if (!row.empty()) rows.push_back(row);
    }
    return rows;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: cli_checks <path-to-cycloptics-binary>\n");
        return 2;
    }
    const std::string cli = argv[1];

    {
        const auto r = run(cli, "fit 3.14159265358979 2");
        check("fit half arch exits 0", r.code == 0);
        check("fit half arch prints a = 1", contains(r.output, "a = 1\n"));
        check("fit half arch prints t_B = pi", contains(r.output, "t_B = 3.14159265"));
    }
    {
        const auto r = run(cli, "fit -1 2");
        check("fit rejects b1 <= 0 with exit 2", r.code == 2);
        check("fit names the offending input", contains(r.output, "b1 must be positive"));
    }
    {
        const auto r = run(cli, "fit 6.2831853 0");
        check("flat target exits 0", r.code == 0);
        check("flat target closes the arch", contains(r.output, "t_B = 6.28318531"));
    }
    {
        const auto r = run(cli, "tautochrone 1 0 0.785398163397448 1.5707963267949 2.35619449019234 3.1101767270539");
        check("tautochrone exits 0", r.code == 0);
        const auto rows = parse_csv_rows(r.output);
        bool equal_times = rows.size() == 5;
        for (const auto& row : rows)
            equal_times = equal_times && std::abs(row[1] - rows[0][1]) < 1e-6 * rows[0][1];
        check("tautochrone times agree across starts", equal_times);
    }
    check("tautochrone rejects a bottom start", run(cli, "tautochrone 1 3.14159265358979324").code == 2);
    check("tautochrone needs at least one start", run(cli, "tautochrone 1").code == 2);
    {
        const auto r = run(cli, "bernoulli 3.14159265358979 2 100 200 400");
        check("bernoulli exits 0", r.code == 0);
        const auto rows = parse_csv_rows(r.output);
        check("bernoulli deviations decrease",
              rows.size() == 3 && rows[1][1] < rows[0][1] && rows[2][1] < rows[1][1]);
    }
    check("bernoulli single layer is fine", run(cli, "bernoulli 3.14159265358979 2 1").code == 0);
    check("bernoulli rejects non-monotone targets",
          run(cli, "bernoulli 3.14159265358979 0.5 100").code == 2);
    {
        const auto r = run(cli, "wavefront --front circle --t 1");
        check("wavefront circle exits 0", r.code == 0);
        check("wavefront emits svg", contains(r.output, "<svg"));
    }
    check("wavefront t = 0 reproduces the input", run(cli, "wavefront --front circle --t 0").code == 0);
    check("wavefront rejects a cusped front", run(cli, "wavefront --front cycloid --t 0.5").code == 2);
    {
        const auto r = run(cli, "optics refract 30 1 1.5");
        check("refract exits 0", r.code == 0);
        check("refract reports 48.59 degrees", contains(r.output, "48.590377890729"));
    }
    check("refract reports total internal reflection with exit 3",
          run(cli, "optics refract 30 1 3").code == 3);
    {
        const auto r = run(cli, "optics reflect 0 1 2 1 0");
        check("reflect symmetric pair hits the midpoint",
              r.code == 0 && contains(r.output, "1.0"));
    }
    {
        const auto r = run(cli, "optics fermat 0 1 1 -1 0 1 2 --samples 200");
        check("fermat exits 0", r.code == 0);
        check("fermat reports a strict minimum", contains(r.output, "\"max_violation\": -"));
    }

    // determinism: identical invocations byte-for-byte
    const std::vector<std::string> deterministic_invocations{
        "fit 3.14159265358979 2 --format csv --samples 64",
        "tautochrone 1 0 0.7853981633974 --samples 129",
        "bernoulli 3.14159265358979 2 100 200",
        "compare 3.14159265358979 2 --perturbations 3 --seed 1234",
        "optics fermat 0 1 1 -1 0 1 2 --samples 500",
        "wavefront --front parabola --t 0.25 0.5 --format json",
    };
    for (const auto& args : deterministic_invocations) {
        const auto first = run(cli, args);
        const auto second = run(cli, args);
        check("deterministic: " + args,
              first.code == 0 && first.code == second.code && first.output == second.output);
    }

    std::printf("%s (%d failure%s)\n", failures ? "FAILED" : "all cli checks passed",
                failures, failures == 1 ? "" : "s");
    return failures ? 1 : 0;
}
