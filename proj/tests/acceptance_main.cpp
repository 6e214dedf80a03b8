// Acceptance suite: runs every verify-paper criterion block and prints one
// pass/fail line per criterion.  Exits nonzero when any check fails.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include "symcover/verify.hpp"

int main(int argc, char** argv) {
    int jobs = 2;
    std::string only;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--jobs" && i + 1 < argc)
            jobs = std::atoi(argv[++i]);
        else if (arg == "--only" && i + 1 < argc)
            only = argv[++i];
        else if (arg == "--verbose") {
            // handled below by streaming the log
        }
    }

    symcover::VerifyReport report = symcover::run_verify_paper(only, jobs, &std::cout);

    std::map<std::string, std::pair<int, int>> per_block;  // alias -> (passed, total)
    for (const symcover::VerifyCheck& check : report.checks) {
        auto& [passed, total] = per_block[check.block];
        ++total;
        if (check.pass) ++passed;
    }

    std::cout << "\n=== acceptance summary ===\n";
    bool all_pass = true;
    for (const symcover::VerifyBlockInfo& info : report.blocks) {
        auto it = per_block.find(info.alias);
        if (it == per_block.end()) continue;  // filtered out by --only
        auto [passed, total] = it->second;
        bool ok = passed == total;
        all_pass &= ok;
        std::printf("criterion %2d (%-8s): %s (%d/%d checks) — %s\n", info.number,
                    info.alias.c_str(), ok ? "PASS" : "FAIL", passed, total,
                    info.title.c_str());
    }
    if (!all_pass) {
        std::cout << "\nfailed checks:\n";
        for (const symcover::VerifyCheck& check : report.checks)
            if (!check.pass)
                std::cout << "  [" << check.block << "] " << check.name << ": expected "
                          << check.expected << ", got " << check.actual << "\n";
    }
    return all_pass ? 0 : 1;
}
