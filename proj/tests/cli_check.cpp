// End-to-end checks of the command line tool. Receives the binary
// path as argv[1], drives it through popen, and verifies the
// documented exit codes, the report fields, and byte-identical output
// on repeated identical invocations.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int code = -1;
    std::string out;  // stdout and stderr interleaved
};

RunResult run(const std::string& bin, const std::string& args) {
    RunResult r;
    std::string cmd = "\"" + bin + "\" " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
    return r;
}

int g_failures = 0;

void check(const std::string& label, bool ok, const std::string& detail = "") {
    if (!ok) ++g_failures;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << label;
    if (!ok && !detail.empty()) std::cout << ": " << detail;
    std::cout << "\n";
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_check <path-to-vccurve>\n";
        return 2;
    }
    const std::string bin = argv[1];

    {
        RunResult r = run(bin, "mult --c1 y --c2 \"y*z - x^2\" --point \"[0:0:1]\" --json");
        check("tangent line count reported as 2",
              r.code == 0 && contains(r.out, "\"mult_nonstandard\": 2") &&
                  contains(r.out, "\"mult_oracle\": 2") && contains(r.out, "\"agree\": true"),
              "exit " + std::to_string(r.code));
    }
    {
        std::string args = "bezout --c1 \"x^2 + y^2 - z^2\" --c2 \"x^2 + x*y + y^2 - z^2\" --json";
        RunResult a = run(bin, args);
        RunResult b = run(bin, args);
        check("repeated identical invocations are byte-identical",
              a.code == 0 && b.code == 0 && a.out == b.out,
              "exits " + std::to_string(a.code) + "/" + std::to_string(b.code));
        check("transversal conics sum to 4",
              contains(a.out, "\"sum\": 4") && contains(a.out, "\"verdict\": true"));
    }
    {
        RunResult r = run(bin, "bezout --c1 \"x^2 + y^2 - z^2\" --c2 \"x^2 + y^2 - 2*z^2\"");
        check("blocked rational points exit 3 and name the factor",
              r.code == 3 && contains(r.out, "t^2 + 1"), "exit " + std::to_string(r.code));
    }
    {
        RunResult r = run(bin,
                          "bezout --c1 \"x^2 + y^2 - z^2\" --c2 \"x^2 + y^2 - 2*z^2\" "
                          "--field \"t^2 + 1\" --json");
        check("the same pair over the extension verifies 2 + 2 = 4",
              r.code == 0 && contains(r.out, "\"sum\": 4") &&
                  contains(r.out, "\"verdict\": true"),
              "exit " + std::to_string(r.code));
    }
    {
        RunResult r = run(bin, "mult --c1 x --c2 x --point \"[0:0:1]\"");
        check("shared component exits 2", r.code == 2, "exit " + std::to_string(r.code));
    }
    {
        RunResult r = run(bin, "mult --c1 \"x +\" --c2 y --point \"[0:0:1]\"");
        check("malformed input exits 6", r.code == 6, "exit " + std::to_string(r.code));
    }
    {
        RunResult r = run(bin, "--definitely-not-a-flag");
        check("usage errors exit 6", r.code == 6, "exit " + std::to_string(r.code));
    }
    {
        RunResult r = run(bin, "duality-selftest --samples 200 --seed 7");
        check("duality self test passes 200 samples",
              r.code == 0 && contains(r.out, "200"), "exit " + std::to_string(r.code));
    }
    {
        RunResult r = run(bin, "expand --poly \"x^2 - eps\" --target 12 --json");
        check("expansion reports the two square root branches",
              r.code == 0 && contains(r.out, "\"clusters\""), "exit " + std::to_string(r.code));
    }

    if (g_failures != 0) {
        std::cout << g_failures << " check(s) failed\n";
        return 1;
    }
    std::cout << "all cli checks passed\n";
    return 0;
}
