// End-to-end checks of the command-line tool. Takes the binary path as
// argv[1], runs each subcommand, and checks output and exit codes.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int g_failures = 0;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    while (fgets(buf, sizeof(buf), pipe)) r.output += buf;
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void check(bool ok, const std::string& what) {
    if (!ok) {
        ++g_failures;
        std::cerr << "FAIL: " << what << "\n";
    }
}

bool contains_number(const std::string& text, double value, double tol) {
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        // strip punctuation that may cling to a number in text output
        while (!token.empty() && (token.back() == ',' || token.back() == 'i' ||
                                  token.back() == '}' || token.back() == ']'))
            token.pop_back();
        try {
            size_t used = 0;
            const double v = std::stod(token, &used);
            if (used == token.size() && std::abs(v - value) <= tol) return true;
        } catch (...) {
        }
    }
    return false;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <capmap-binary>\n";
        return 2;
    }
    const std::string bin = argv[1];

    {
        auto r = run(bin + " capacity --sides 6 9 13");
        check(r.exit_code == 0, "capacity 6 9 13 exit code");
        check(contains_number(r.output, 3.805336437458, 1e-9), "capacity 6 9 13 value");
    }
    {
        auto r = run(bin + " capacity --apex 1.5707963267948966");
        check(r.exit_code == 0, "capacity apex pi/2 exit code");
        check(contains_number(r.output, 0.4756344438799819, 1e-12), "capacity apex pi/2 value");
    }
    {
        auto r = run(bin + " capacity --apex 90 --degrees");
        check(r.exit_code == 0, "capacity apex degrees exit code");
        check(contains_number(r.output, 0.4756344438799819, 1e-12), "capacity apex degrees value");
    }
    {
        auto r = run(bin + " capacity --sides 1 1 3");
        check(r.exit_code == 2, "capacity invalid triangle exit code 2");
        check(r.output.find("triangle") != std::string::npos, "triangle-inequality message");
    }
    {
        auto r = run(bin + " capacity --apex 1.5707963267948966 --verify-sc --json");
        check(r.exit_code == 0, "capacity verify-sc exit code");
        check(r.output.find("\"schema\": \"capmap/1\"") != std::string::npos, "json schema tag");
        check(r.output.find("kappa_sc") != std::string::npos, "verify-sc field present");
        check(contains_number(r.output, 0.4756344438799819, 1e-8), "verify-sc value");
    }
    {
        auto r = run(bin + " center --apex 1.0471975511965976");
        check(r.exit_code == 0, "center pi/3 exit code");
        check(contains_number(r.output, 0.5773502691896258, 1e-8), "center pi/3 = 1/sqrt3");
    }
    {
        auto r = run(bin + " center --apex 1.5707963267948966 --closed-form");
        check(r.exit_code == 0, "center pi/2 exit code");
        check(contains_number(r.output, 0.5045039334500261, 1e-8), "center pi/2 lambda");
    }
    {
        auto r = run(bin + " center --unit-legs-right");
        check(r.exit_code == 0, "center unit-legs exit code");
        check(contains_number(r.output, 0.3567381524778001, 1e-8), "center unit-legs value");
    }
    {
        auto r = run(bin + " halfdisk --inner");
        check(r.exit_code == 0, "halfdisk inner exit code");
        check(contains_number(r.output, 0.4858682717566457, 1e-8), "halfdisk y0");
        check(contains_number(r.output, 0.6005662120015552, 1e-9), "halfdisk inner radius");
    }
    {
        auto r = run(bin + " halfdisk --outer");
        check(r.exit_code == 0, "halfdisk outer exit code");
        check(contains_number(r.output, 0.7698003589195010, 1e-9), "halfdisk outer radius");
        check(contains_number(r.output, 0.3849001794597505, 1e-9), "halfdisk outer center");
    }
    {
        auto r = run(bin + " halfdisk --json");
        check(r.exit_code == 0, "halfdisk both exit code");
        check(r.output.find("\"y0\"") != std::string::npos &&
                  r.output.find("\"outer_radius\"") != std::string::npos,
              "halfdisk both blocks");
        // >= 15 significant digits in JSON numbers
        check(r.output.find("0.76980035891950") != std::string::npos, "json digit count");
    }
    {
        auto r = run(bin + " optimize-kappa --json");
        check(r.exit_code == 0, "optimize-kappa exit code");
        check(contains_number(r.output, 2.5360873621, 1e-7), "theta star");
        check(r.output.find("kappa_star") != std::string::npos, "kappa star field");
    }
    {
        auto r = run(bin + " prevertices --sides 1 1.7320508075688772 2");
        check(r.exit_code == 0, "prevertices exit code");
        check(contains_number(r.output, 0.8333333333333333, 1e-12), "mu value 5/6");
    }
    {
        const std::string path = "/tmp/capmap_cli_grid_test.csv";
        auto r = run(bin + " map-grid --unit-legs-right --circles 3 --samples 64 --out " + path);
        check(r.exit_code == 0, "map-grid exit code");
        std::ifstream f(path);
        check(f.good(), "map-grid file written");
        std::string header, columns;
        std::getline(f, header);
        std::getline(f, columns);
        check(columns == "object_type,object_index,t,re,im", "csv column order");
        check(header.find("kappa=") != std::string::npos, "csv metadata header");
        int lines = 0;
        std::string line;
        while (std::getline(f, line)) ++lines;
        check(lines == 3 * 64, "csv point count");
        std::remove(path.c_str());
    }
    {
        auto r = run(bin + " map-grid --unit-legs-right --circles 0");
        check(r.exit_code == 2, "map-grid invalid circles exit code 2");
    }
    {
        auto r = run(bin + " map-grid --unit-legs-right --circles 2 --samples 64 --out /nonexistent/dir/x.csv");
        check(r.exit_code == 4, "map-grid io failure exit code 4");
    }

    if (g_failures == 0) {
        std::cout << "all cli checks passed\n";
        return 0;
    }
    std::cerr << g_failures << " cli check(s) failed\n";
    return 1;
}
