#include "phgcli/fixtures.hpp"

namespace phgcli {

std::vector<Fixture> embedded_fixtures();

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = embedded_fixtures();
  return all;
}

ArcFile load_fixture(const std::string& id) {
  for (const auto& f : fixtures())
    if (f.id == id) return parse_arc(f.text);
  throw ArcFileError("unknown fixture " + id);
}

}  // namespace phgcli
