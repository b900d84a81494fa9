#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace vortlab {

/// Thrown on precondition violations and unusable inputs.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Non-fatal run events (CFL violations, markers drifting off walls, ...).
struct WarningRecord {
    double t;
    std::string what;
};

using WarningLog = std::vector<WarningRecord>;

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw Error(msg);
}

}  // namespace vortlab
