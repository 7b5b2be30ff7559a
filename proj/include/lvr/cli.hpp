#ifndef LVR_CLI_HPP
#define LVR_CLI_HPP

#include <string>
#include <vector>

namespace lvr {

// Runs one CLI command; returns the process exit status (0 success, 1 domain
// or cap error, 2 usage error).  Artifacts are written atomically.
int cli_run(const std::vector<std::string>& args);

}  // namespace lvr

#endif
