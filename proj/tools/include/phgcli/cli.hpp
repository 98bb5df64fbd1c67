#pragma once

#include <iosfwd>

namespace phgcli {

enum ExitCode { kOk = 0, kMismatch = 1, kUsage = 2 };

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace phgcli
