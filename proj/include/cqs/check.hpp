#pragma once

#include <string>
#include <vector>

namespace cqs {

// Outcome of one verification: a stable id, pass/fail and a short witness
// (the first violation, or a summary of what was checked).
struct Check {
    std::string id;
    bool pass = true;
    std::string witness;
};

inline bool all_pass(const std::vector<Check>& cs) {
    for (const auto& c : cs)
        if (!c.pass) return false;
    return true;
}

// How much of a product table to examine.
struct Budget {
    bool exhaustive = true;
    std::size_t samples = 2000;  // pairs or elements when not exhaustive
    unsigned long long seed = 1;
};

}  // namespace cqs
