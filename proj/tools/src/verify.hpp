#pragma once

#include <string>
#include <vector>

#include "diagramalg/diagramalg.hpp"

namespace diagramalg::cli {

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> details;
};

const std::vector<std::string>& suite_names();
// Throws diagramalg::Error for unsupported families or sizes.
VerifyReport run_suite(const std::string& suite, Family f, int k);

// The published character tables for P3, RB3, R3 and B4, if (f, k) is one.
const IntegerMatrix* published_table(Family f, int k);
const IntegerMatrix* published_f(Family f, int k);

}  // namespace diagramalg::cli
