// Text format for point multisets: '#' header lines, then three rows of element codes.
//
//   # ring: Z9
//   # declared: 30 4
//   # provenance: free text
//   0 0 0 3 ...
//   0 1 1 0 ...
//   1 0 4 1 ...
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "phg/arcs.hpp"
#include "phg/plane.hpp"

namespace phgcli {

class ArcFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// How integer codes map to ring elements. Native is the library encoding;
// Swapped exchanges the two base-p^r digits (c1 + p^r c0 instead of c0 + p^r c1).
enum class CodeEncoding { Native, Swapped };
CodeEncoding encoding_from_name(const std::string& name);

struct ArcFile {
  std::string ring;
  std::optional<std::pair<int, int>> declared;  // (k, n)
  std::string provenance;
  std::vector<phg::Coords> columns;
};

ArcFile parse_arc(const std::string& text);
ArcFile load_arc(const std::string& path);
std::string format_arc(const ArcFile& file);
void save_arc(const std::string& path, const ArcFile& file);

int decode_code(const phg::Ring& ring, int code, CodeEncoding enc);
int encode_code(const phg::Ring& ring, int element, CodeEncoding enc);

// Throws ArcFileError on codes out of range or columns without a unit coordinate.
phg::Multiset to_multiset(const phg::Plane& plane, const ArcFile& file, CodeEncoding enc = CodeEncoding::Native);
ArcFile from_multiset(const phg::Plane& plane, const phg::Multiset& m, std::optional<std::pair<int, int>> declared = {},
                      std::string provenance = {});

struct ArcCheck {
  phg::ArcReport report;
  bool declared_matches = true;
};
ArcCheck check_arc(const phg::Plane& plane, const ArcFile& file, CodeEncoding enc = CodeEncoding::Native);

}  // namespace phgcli
