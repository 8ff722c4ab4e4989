#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace icover {

/// Full command-line surface, callable in-process for tests. `args` excludes
/// the program name. Exit status contract: 0 ok / property holds, 1 property
/// false, 2 usage or parse error, 3 internal anomaly.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace icover
