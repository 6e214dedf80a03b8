#ifndef SYMCOVER_VERIFY_HPP
#define SYMCOVER_VERIFY_HPP

#include <iosfwd>
#include <string>
#include <vector>

// The verify-paper command: every acceptance check, grouped into the
// numbered criterion blocks, with expected/actual values and a pass flag.

namespace symcover {

struct VerifyCheck {
    std::string block;     // e.g. "cor5.4"
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct VerifyBlockInfo {
    int number = 0;        // criterion number
    std::string alias;     // --only key
    std::string title;
};

struct VerifyReport {
    std::vector<VerifyBlockInfo> blocks;
    std::vector<VerifyCheck> checks;
    int failed = 0;

    bool all_passed() const { return failed == 0; }
};

std::vector<VerifyBlockInfo> verify_blocks();

/// Runs the acceptance checks.  `only` selects a single block by alias or
/// "critN"; empty runs everything.  `log`, when set, receives progress lines.
VerifyReport run_verify_paper(const std::string& only = "", int jobs = 1,
                              std::ostream* log = nullptr);

}  // namespace symcover

#endif
