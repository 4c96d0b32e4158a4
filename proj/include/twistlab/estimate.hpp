// Empirical constant estimates with replayable witnesses.
#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <twistlab/common.hpp>

namespace twistlab {

// An empirically estimated supremum (or infimum) of a constant, together
// with the input that attained it. `replay()` recomputes the value from the
// stored witness; it must reproduce `value` to 1e-12.
struct ConstantEstimate {
    std::string name;
    double value = 0.0;
    long trials = 0;
    // Named witness payloads (inputs attaining the estimate), for reports.
    std::map<std::string, std::vector<complex>> witness;
    std::function<double()> replay;
};

} // namespace twistlab
