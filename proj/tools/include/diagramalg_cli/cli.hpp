#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace diagramalg::cli {

// Runs one command. args excludes the program name. Returns the exit code:
// 0 on success, 1 on a domain error or failed verification, 2 on misuse.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diagramalg::cli
