#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "phg/constructions.hpp"
#include "phgcli/arc_file.hpp"
#include "phgcli/cli.hpp"
#include "phgcli/fixtures.hpp"
#include "phgcli/tables.hpp"

using namespace phgcli;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<const char*> args) {
  args.insert(args.begin(), "phg");
  std::ostringstream out, err;
  const int code = cli_dispatch(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(ArcFile, FixturesLoadAndVerify) {
  const std::map<std::string, std::pair<int, int>> expected{
      {"z9_30_4", {30, 4}}, {"z9_39", {39, 5}}, {"g4_28_3", {28, 3}}, {"g4_68_5", {68, 5}}, {"s3_30_4", {30, 4}}};
  ASSERT_EQ(fixtures().size(), expected.size());
  for (const auto& f : fixtures()) {
    const ArcFile file = parse_arc(f.text);
    const phg::Plane P = phg::build_plane(phg::ring_by_name(file.ring));
    const ArcCheck c = check_arc(P, file);
    EXPECT_EQ(c.report.k, expected.at(f.id).first) << f.id;
    EXPECT_EQ(c.report.n_max, expected.at(f.id).second) << f.id;
    EXPECT_TRUE(c.report.projective) << f.id;
    EXPECT_EQ(c.declared_matches, f.id != "z9_39") << f.id;
  }
}

TEST(ArcFile, RejectsColumnWithoutUnit) {
  const ArcFile f = parse_arc("# ring: Z4\n2\n2\n2\n");
  const phg::Plane P = phg::build_plane(phg::ring_by_name("Z4"));
  EXPECT_THROW(to_multiset(P, f), ArcFileError);
  EXPECT_THROW(to_multiset(P, parse_arc("# ring: Z4\n4\n1\n1\n")), ArcFileError);
  EXPECT_THROW(parse_arc("# ring: Z4\n1 x\n1 1\n1 1\n"), ArcFileError);
  EXPECT_THROW(parse_arc("1\n1\n1\n"), ArcFileError);
  EXPECT_THROW(to_multiset(phg::build_plane(phg::ring_by_name("Z9")), parse_arc("# ring: Z4\n1\n1\n1\n")),
               ArcFileError);
}

TEST(ArcFile, RoundTrip) {
  const phg::Plane P = phg::build_plane(phg::ring_by_name("Z9"));
  const phg::Multiset m = phg::construct(P, phg::ConstructionId::Q2Minus1).points;
  const auto path = std::filesystem::temp_directory_path() / "phg_roundtrip.arc";
  save_arc(path.string(), from_multiset(P, m, std::make_pair(69, 8), "test"));
  const ArcFile back = load_arc(path.string());
  std::filesystem::remove(path);
  EXPECT_EQ(to_multiset(P, back), m);
  EXPECT_EQ(back.declared, std::make_optional(std::make_pair(69, 8)));
  EXPECT_EQ(back.provenance, "test");
}

TEST(ArcFile, SwappedEncodingChangesG4Fixture) {
  const phg::Plane P = phg::build_plane(phg::ring_by_name("G4"));
  const ArcFile f = load_fixture("g4_28_3");
  const phg::ArcReport native = check_arc(P, f, CodeEncoding::Native).report;
  EXPECT_TRUE(native.is_arc(28, 3));
  for (int c = 0; c < 16; ++c) EXPECT_EQ(encode_code(P.ring(), decode_code(P.ring(), c, CodeEncoding::Swapped), CodeEncoding::Swapped), c);
  EXPECT_EQ(decode_code(P.ring(), 1, CodeEncoding::Swapped), 4);
}

TEST(Cli, ExitCodes) {
  const CliRun info = run({"plane", "info", "Z25"});
  EXPECT_EQ(info.code, kOk);
  EXPECT_NE(info.out.find("775 points"), std::string::npos);

  const CliRun verify = run({"arc", "verify", "fixture:z9_30_4"});
  EXPECT_EQ(verify.code, kOk);
  EXPECT_NE(verify.out.find("k=30 n=4"), std::string::npos);

  const CliRun heading = run({"arc", "verify", "fixture:z9_39"});
  EXPECT_EQ(heading.code, kMismatch);
  EXPECT_NE(heading.out.find("k=39 n=5"), std::string::npos);
  EXPECT_NE(heading.out.find("does not match"), std::string::npos);

  EXPECT_EQ(run({}).code, kUsage);
  EXPECT_EQ(run({"plane", "info"}).code, kUsage);
  EXPECT_EQ(run({"arc", "verify", "/nonexistent.arc"}).code, kUsage);
  EXPECT_EQ(run({"arc", "construct", "--ring", "Z9", "--id", "HYPEROVAL_GALOIS"}).code, kUsage);
  EXPECT_EQ(run({"arc", "construct", "--ring", "Z9", "--id", "NOPE"}).code, kUsage);
  EXPECT_EQ(run({"arc", "construct", "--ring", "Z9", "--id", "TRIANGLE_SINGER"}).code, kOk);
}

TEST(Cli, BoundsTable) {
  const CliRun r = run({"bounds", "table", "--ring", "G4", "--n", "11"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("166-169"), std::string::npos);
  EXPECT_NE(r.out.find("formula:M_qn"), std::string::npos);
  const CliRun j = run({"bounds", "table", "--ring", "Z9", "--json"});
  EXPECT_EQ(j.code, kOk);
  EXPECT_NE(j.out.find("\"rows\""), std::string::npos);
}

TEST(Cli, ClassicalFind) {
  EXPECT_EQ(run({"classical", "find", "--q", "4", "--kind", "hyperoval"}).code, kOk);
  EXPECT_EQ(run({"classical", "find", "--q", "5", "--kind", "arc", "--k", "12", "--n", "3"}).code, kMismatch);
}

TEST(Tables, OrderTwoReproducesExactly) {
  TableOptions opt;
  opt.search_seconds = 5;
  const TableReport rep = reproduce_tables(2, opt);
  EXPECT_EQ(rep.count(CellStatus::Discrepancy), 0);
  EXPECT_EQ(rep.count(CellStatus::SearchBudget), 0);
  EXPECT_EQ(rep.cells.size(), 14u);
}
