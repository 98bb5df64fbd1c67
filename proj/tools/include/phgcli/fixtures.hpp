// Arc files compiled into the binary from the fixtures/ directory.
#pragma once

#include <string>
#include <vector>

#include "phgcli/arc_file.hpp"

namespace phgcli {

struct Fixture {
  std::string id;  // file stem, e.g. "z9_30_4"
  std::string text;
};

const std::vector<Fixture>& fixtures();
// Throws ArcFileError for unknown ids.
ArcFile load_fixture(const std::string& id);

}  // namespace phgcli
