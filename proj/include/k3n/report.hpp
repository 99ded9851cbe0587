#pragma once

#include <string>
#include <vector>

namespace k3n {

/// Outcome of one named verification step.
struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

inline bool all_pass(const std::vector<Check>& checks)
{
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

}  // namespace k3n
