#include <filesystem>
#include <fstream>
#include <set>

#include "test_util.hpp"

using namespace lmsym;
using lmsym::testing::el;

namespace fs = std::filesystem;

namespace {

fs::path data_file(const std::string& name) { return fs::path(LMSYM_DATA_DIR) / "groups" / name; }

fs::path scratch_file(const std::string& name, const std::string& text) {
  const fs::path p = fs::temp_directory_path() / ("lmsym_test_" + name);
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST(Catalog, RequiredEntriesPresent) {
  const auto all = catalog(32);
  std::set<std::string> names;
  for (const auto& e : all) EXPECT_TRUE(names.insert(e.name).second) << "duplicate " << e.name;
  for (unsigned n = 1; n <= 16; ++n) EXPECT_TRUE(names.count("C" + std::to_string(n))) << n;
  for (const char* n : {"C2^2", "C2^3", "C2^4", "D8", "D16", "Q8", "Q16", "SD16", "M16", "A4", "S3", "S4", "Q8xC2",
                        "Q8xC2xC2", "D8xC2", "C4xC4", "C4:C4", "D8oC4"})
    EXPECT_TRUE(names.count(n)) << n;
  EXPECT_GE(all.size(), 18u);
}

TEST(Catalog, MaxOrderFilter) {
  std::set<std::string> names;
  for (const auto& e : catalog(8)) {
    EXPECT_LE(e.group.order(), 8u);
    names.insert(e.name);
  }
  for (const char* n : {"C8", "C2^3", "D8", "Q8", "S3", "C6"}) EXPECT_TRUE(names.count(n)) << n;
  EXPECT_FALSE(names.count("D16"));
  EXPECT_TRUE(catalog(0).empty());
}

TEST(Catalog, SortedByOrder) {
  const auto all = catalog(32);
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LE(all[i - 1].group.order(), all[i].group.order());
}

TEST(Catalog, Q8xC2Center) {
  const Group G = catalog_group("Q8xC2");
  EXPECT_EQ(G.order(), 16u);
  EXPECT_EQ(center(G).size(), 4u);
}

TEST(Catalog, C4SemidirectC4SatisfiesConditionFour) {
  const Group G = catalog_group("C4:C4");
  const auto c = condition4(G);
  EXPECT_TRUE(c.holds);
  const Subgroup expected(16, {kIdentity, el(G, "a^2"), el(G, "b^2"), el(G, "a^2b^2")});
  EXPECT_EQ(c.center, expected);
  EXPECT_EQ(involution_set(G), expected.elements());
  EXPECT_EQ(subgroup_index(G, c.center), 4u);
  EXPECT_EQ(conj(G, el(G, "a"), el(G, "b")), el(G, "a^3"));
}

TEST(Catalog, RecipesMatchDefiningRelations) {
  const Group sd = catalog_group("SD16");
  EXPECT_EQ(conj(sd, el(sd, "r"), el(sd, "s")), el(sd, "r^3"));
  const Group m = catalog_group("M16");
  EXPECT_EQ(conj(m, el(m, "r"), el(m, "s")), el(m, "r^5"));
  const Group q = catalog_group("D8oC4");
  EXPECT_EQ(q.order(), 16u);
  EXPECT_EQ(center(q).size(), 4u);
}

TEST(Catalog, ConditionCoverage) {
  auto bits = [](const char* name) {
    const auto r = theorem1_verdict(catalog_group(name));
    return std::array<bool, 4>{r.c1, r.c2, r.c3, r.c4};
  };
  EXPECT_EQ(bits("D16"), (std::array<bool, 4>{true, false, false, false}));
  const auto d8 = bits("D8");
  EXPECT_TRUE(d8[0] && d8[1]);
  for (const char* n : {"Q16", "Q8xC2"}) {
    const auto b = bits(n);
    EXPECT_FALSE(b[0] || b[1]) << n;
    EXPECT_TRUE(b[2] || b[3]) << n;
  }
  EXPECT_TRUE(bits("Q8xC2")[3]);
  for (const char* n : {"S4", "SD16", "A4"}) EXPECT_EQ(bits(n), (std::array<bool, 4>{})) << n;
}

TEST(Catalog, UnicodeNames) {
  EXPECT_EQ(catalog_group("Q8×C2").name(), "Q8xC2");
  EXPECT_EQ(catalog_group("C4⋊C4").name(), "C4:C4");
  EXPECT_EQ(catalog_group("D8∘C4").name(), "D8oC4");
  try {
    catalog_group("Z7");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnknownGroup);
  }
}

TEST(GroupFile, EveryEntryRoundTrips) {
  for (const auto& e : catalog(32)) {
    const Group back = parse_group(serialize_group(e.group));
    EXPECT_EQ(back.table(), e.group.table()) << e.name;
    EXPECT_EQ(back.labels(), e.group.labels()) << e.name;
    EXPECT_EQ(back.name(), e.name);
  }
}

TEST(GroupFile, LoadTableFile) {
  const Group c2 = load_group(data_file("c2.group"));
  EXPECT_EQ(c2.order(), 2u);
  EXPECT_EQ(c2.label(1), "c");
}

TEST(GroupFile, LoadPermutationFileIsD8) {
  const Group G = load_group(data_file("d8.group"));
  EXPECT_EQ(G.order(), 8u);
  EXPECT_FALSE(is_abelian(G));
  EXPECT_EQ(center(G).size(), 2u);
  EXPECT_EQ(involution_set(G).size(), 6u);
  EXPECT_EQ(exponent(G), 4u);
}

TEST(GroupFile, LoadS4) {
  const Group G = load_group(data_file("s4.group"));
  EXPECT_EQ(G.order(), 24u);
  EXPECT_FALSE(theorem1_verdict(G).theorem1());
}

TEST(GroupFile, CorruptLatinSquareNamesRow) {
  try {
    load_group(data_file("bad_latin.group"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotLatinSquare);
    EXPECT_NE(std::string(e.what()).find("row 1"), std::string::npos) << e.what();
  }
}

TEST(GroupFile, ParseErrorsNameLineOrField) {
  auto kind_and_message = [](const std::string& text) -> std::pair<ErrorKind, std::string> {
    try {
      parse_group(text, "t.group");
    } catch (const Error& e) {
      return {e.kind(), e.what()};
    }
    return {ErrorKind::kParseError, "no error"};
  };
  auto [k1, m1] = kind_and_message("{\n  \"table\": [[0, 1],\n   [1, 0]\n");
  EXPECT_EQ(k1, ErrorKind::kParseError);
  EXPECT_NE(m1.find("line"), std::string::npos) << m1;

  auto [k2, m2] = kind_and_message(R"({"table": [[0, 1], [1, 0]], "colour": "red"})");
  EXPECT_EQ(k2, ErrorKind::kParseError);
  EXPECT_NE(m2.find("colour"), std::string::npos) << m2;

  auto [k3, m3] = kind_and_message(R"({"table": "abc"})");
  EXPECT_NE(m3.find("table"), std::string::npos) << m3;

  auto [k4, m4] = kind_and_message(R"({"name": "x"})");
  EXPECT_EQ(k4, ErrorKind::kParseError);

  auto [k5, m5] = kind_and_message(R"({"perms": {"degree": 3, "generators": [[0, 0, 1]]}})");
  EXPECT_EQ(k5, ErrorKind::kNotAPermutation) << m5;
}

TEST(GroupFile, MissingFile) {
  EXPECT_THROW(load_group(data_file("does_not_exist.group")), Error);
}

TEST(GroupFile, NameFallsBackToStem) {
  const auto p = scratch_file("klein.group", R"({"table": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]})");
  EXPECT_EQ(load_group(p).name(), "lmsym_test_klein");
  fs::remove(p);
}

TEST(GroupFile, ExportWritesEveryEntry) {
  const fs::path dir = fs::temp_directory_path() / "lmsym_export_test";
  fs::remove_all(dir);
  const auto written = export_catalog(dir, 16);
  EXPECT_EQ(written.size(), catalog(16).size());
  for (const auto& p : written) {
    const Group g = load_group(p);
    EXPECT_EQ(g.table(), catalog_group(g.name()).table()) << p;
  }
  fs::remove_all(dir);
}
