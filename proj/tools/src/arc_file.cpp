#include "phgcli/arc_file.hpp"

#include <fstream>
#include <sstream>

namespace phgcli {

CodeEncoding encoding_from_name(const std::string& name) {
  if (name == "native") return CodeEncoding::Native;
  if (name == "swapped") return CodeEncoding::Swapped;
  throw ArcFileError("unknown encoding '" + name + "' (expected native or swapped)");
}

ArcFile parse_arc(const std::string& text) {
  ArcFile f;
  std::vector<std::vector<int>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line[0] == '#') {
      const auto colon = line.find(':');
      if (colon == std::string::npos) continue;
      std::string key = line.substr(1, colon - 1), value = line.substr(colon + 1);
      key.erase(0, key.find_first_not_of(' '));
      value.erase(0, value.find_first_not_of(' '));
      while (!value.empty() && (value.back() == '\r' || value.back() == ' ')) value.pop_back();
      if (key == "ring") {
        f.ring = value;
      } else if (key == "declared") {
        std::istringstream vs(value);
        int k = 0, n = 0;
        if (!(vs >> k >> n)) throw ArcFileError("malformed declared line: " + line);
        f.declared = {k, n};
      } else if (key == "provenance") {
        f.provenance = value;
      }
      continue;
    }
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      try {
        size_t used = 0;
        row.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ArcFileError("bad element code '" + tok + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  if (f.ring.empty()) throw ArcFileError("missing '# ring:' header");
  if (rows.size() != 3) throw ArcFileError("expected 3 coordinate rows, got " + std::to_string(rows.size()));
  if (rows[0].size() != rows[1].size() || rows[0].size() != rows[2].size())
    throw ArcFileError("coordinate rows have different lengths");
  for (size_t j = 0; j < rows[0].size(); ++j) f.columns.push_back({rows[0][j], rows[1][j], rows[2][j]});
  return f;
}

ArcFile load_arc(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArcFileError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_arc(ss.str());
}

std::string format_arc(const ArcFile& f) {
  std::ostringstream out;
  out << "# ring: " << f.ring << "\n";
  if (f.declared) out << "# declared: " << f.declared->first << " " << f.declared->second << "\n";
  if (!f.provenance.empty()) out << "# provenance: " << f.provenance << "\n";
  for (int i = 0; i < 3; ++i) {
    for (size_t j = 0; j < f.columns.size(); ++j) out << (j ? " " : "") << f.columns[j][i];
    out << "\n";
  }
  return out.str();
}

void save_arc(const std::string& path, const ArcFile& file) {
  std::ofstream out(path);
  if (!out) throw ArcFileError("cannot write " + path);
  out << format_arc(file);
}

namespace {

int digit_base(const phg::Ring& R) {
  int b = 1;
  for (int i = 0; i < R.r(); ++i) b *= R.p();
  return b;
}

int swap_digits(const phg::Ring& R, int code) {
  const int b = digit_base(R);
  if (b * b != R.size()) return code;
  return (code % b) * b + code / b;
}

}  // namespace

int decode_code(const phg::Ring& R, int code, CodeEncoding enc) {
  if (code < 0 || code >= R.size())
    throw ArcFileError("element code " + std::to_string(code) + " out of range for " + R.name());
  return enc == CodeEncoding::Native ? code : swap_digits(R, code);
}

int encode_code(const phg::Ring& R, int element, CodeEncoding enc) {
  return enc == CodeEncoding::Native ? element : swap_digits(R, element);
}

phg::Multiset to_multiset(const phg::Plane& plane, const ArcFile& f, CodeEncoding enc) {
  const phg::Ring& R = plane.ring();
  if (f.ring != R.name()) throw ArcFileError("file is over " + f.ring + ", plane is over " + R.name());
  phg::Multiset m(plane.num_points(), 0);
  for (size_t j = 0; j < f.columns.size(); ++j) {
    phg::Coords c;
    for (int i = 0; i < 3; ++i) c[i] = decode_code(R, f.columns[j][i], enc);
    const int id = plane.point_id(c);
    if (id < 0)
      throw ArcFileError("column " + std::to_string(j + 1) + " (" + std::to_string(f.columns[j][0]) + "," +
                         std::to_string(f.columns[j][1]) + "," + std::to_string(f.columns[j][2]) +
                         ") has no unit coordinate");
    ++m[id];
  }
  return m;
}

ArcFile from_multiset(const phg::Plane& plane, const phg::Multiset& m, std::optional<std::pair<int, int>> declared,
                      std::string provenance) {
  ArcFile f;
  f.ring = plane.ring().name();
  f.declared = declared;
  f.provenance = std::move(provenance);
  for (int x = 0; x < static_cast<int>(m.size()); ++x)
    for (int t = 0; t < m[x]; ++t) f.columns.push_back(plane.point(x));
  return f;
}

ArcCheck check_arc(const phg::Plane& plane, const ArcFile& f, CodeEncoding enc) {
  ArcCheck c;
  c.report = phg::verify(plane, to_multiset(plane, f, enc));
  if (f.declared) c.declared_matches = c.report.k == f.declared->first && c.report.n_max == f.declared->second;
  return c;
}

}  // namespace phgcli
