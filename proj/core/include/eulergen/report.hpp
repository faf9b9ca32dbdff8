#pragma once

#include <string>
#include <vector>

namespace eulergen {

/// One checked instance (a value of n or m) inside a verification run.
struct CheckItem {
    long n = 0;
    std::string expected;
    std::string computed;
    bool pass = false;
};

/// Result of a verification command: exact per-item verdicts plus a
/// conjecture marker for identities that are evidence, not theorems.
struct CheckReport {
    std::string identity;
    std::string params;
    std::vector<CheckItem> items;
    bool conjecture = false;

    bool pass() const {
        for (const auto& item : items)
            if (!item.pass) return false;
        return true;
    }
};

}  // namespace eulergen
