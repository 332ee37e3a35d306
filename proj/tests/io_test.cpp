#include <gtest/gtest.h>

#include <sstream>

#include "orbitcover/errors.hpp"
#include "orbitcover/io.hpp"

using namespace orbitcover;

TEST(Json, RecordFieldNames) {
  const PitchClassSet pcs(12, {0, 4, 7});
  EXPECT_EQ(Json(pcs).dump(), R"({"universe":12,"elements":[0,4,7]})");
  EXPECT_EQ(Json(Mode(pcs, 1)).dump(), R"({"universe":12,"elements":[0,4,7],"mode_index":1})");
  EXPECT_EQ(Json(IntervalComposition({2, 2, 3})).dump(), "[2,2,3]");
  EXPECT_EQ(Json(Chord({7, 0, 4})).dump(), "[0,4,7]");

  const auto complex = SimplicialComplex::from_facets({5, 6}, {{0, 1}});
  EXPECT_EQ(Json(complex).dump(), R"({"vertices":[5,6],"simplices_by_dim":[[[0],[1]],[[0,1]]]})");
  EXPECT_EQ(Json(homology(complex)).dump(), R"({"betti":[1,0],"torsion":[[],[]],"euler":1})");
}

TEST(Json, CoverRecord) {
  const OrbitCover cover(Scale(PitchClassSet(7, {0, 1, 2, 3, 4, 5, 6})), IntervalComposition({2, 2, 3}), 3);
  const Json j = cover;
  EXPECT_EQ(j["sigma"], Json::parse("[2,2,3]"));
  EXPECT_EQ(j["root"], 3);
  EXPECT_EQ(j["members"][0], Json::parse("[0,3,5]"));
  EXPECT_EQ(j["members"].size(), 7u);
}

// Write then read reproduces the value, across many sets and covers.
TEST(Json, RoundTrips) {
  for (int mask = 1; mask < (1 << 9); mask += 7) {
    std::vector<int> xs;
    for (int r = 0; r < 9; ++r) {
      if (mask & (1 << r)) xs.push_back(r);
    }
    const PitchClassSet pcs(9, xs);
    ASSERT_EQ(pitch_class_set_from_json(Json::parse(Json(pcs).dump())), pcs);
    for (int i = 0; i < pcs.size(); ++i) {
      const Mode m(pcs, i);
      const Mode back = mode_from_json(Json::parse(Json(m).dump()));
      ASSERT_EQ(back.mode_index(), i);
      ASSERT_EQ(back.tonic(), m.tonic());
    }
    const Scale scale(pcs);
    for (int k = 1; k <= pcs.size(); ++k) {
      for (const auto& s : enumerate_compositions(pcs.size(), k)) {
        ASSERT_EQ(composition_from_json(Json(s)), s);
        const OrbitCover cover(scale, s, xs.back());
        const auto back = orbit_cover_from_json(Json::parse(Json(cover).dump()));
        ASSERT_EQ(back.members(), cover.members());
        ASSERT_EQ(back.root(), cover.root());
      }
    }
  }
}

TEST(Json, RejectsMalformedRecords) {
  EXPECT_THROW(pitch_class_set_from_json(Json::parse(R"({"elements":[0]})")), ParseError);
  EXPECT_THROW(pitch_class_set_from_json(Json::parse(R"({"universe":"12","elements":[0]})")), ParseError);
  EXPECT_THROW(composition_from_json(Json::parse(R"([1,"a"])")), ParseError);
  Json cover = OrbitCover(Scale(PitchClassSet(5, {0, 1, 2, 3, 4})), IntervalComposition({2, 3}), 0);
  cover["members"][1] = Json::parse("[0,1]");
  EXPECT_THROW(orbit_cover_from_json(cover), ParseError);
}

TEST(Parse, ScalesAndCompositions) {
  EXPECT_EQ(parse_scale("12: 5,7,9,10,0,2,4"), PitchClassSet(12, {0, 2, 4, 5, 7, 9, 10}));
  EXPECT_EQ(parse_scale(" 7:0,1,2 "), PitchClassSet(7, {0, 1, 2}));
  EXPECT_EQ(parse_composition("(2,2,3)"), IntervalComposition({2, 2, 3}));
  EXPECT_EQ(parse_composition(" ( 1, 4 ,2 ) "), IntervalComposition({1, 4, 2}));
  EXPECT_THROW(parse_scale("12 0,4,7"), ParseError);
  EXPECT_THROW(parse_scale("12:"), ParseError);
  EXPECT_THROW(parse_scale("x: 0"), ParseError);
  EXPECT_THROW(parse_scale("12: 0,13"), DomainError);
  EXPECT_THROW(parse_composition("2,2,3"), ParseError);
  EXPECT_THROW(parse_composition("(2,,3)"), ParseError);
  EXPECT_THROW(parse_composition("(2,0,3)"), DomainError);
}

TEST(Parse, CoverSpecs) {
  const auto bare = parse_cover_spec("(2,2,3)");
  EXPECT_EQ(bare.scale, PitchClassSet(7, {0, 1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(bare.root, 0);

  const auto full = parse_cover_spec("12: 4,6,7,10,0,1,3; (3,3,1); 4");
  EXPECT_EQ(full.sigma, IntervalComposition({3, 3, 1}));
  EXPECT_EQ(full.root, 4);

  const auto defaulted = parse_cover_spec("12: 5,7,9,10,0,2,4; (2,2,3)");
  EXPECT_EQ(defaulted.root, 4);

  EXPECT_THROW(parse_cover_spec("12: 0,4,7; (2,2,3); 1; 2"), ParseError);
  EXPECT_THROW(parse_cover_spec(""), ParseError);
}

TEST(Parse, EventLists) {
  std::istringstream good("# progression\n5\n\n  9 \n0 # tonic\n");
  EXPECT_EQ(parse_event_list(good), (std::vector<int>{5, 9, 0}));
  std::istringstream bad("5\nF\n");
  EXPECT_THROW(parse_event_list(bad), ParseError);
  EXPECT_EQ(format_list({1, 2, 3}), "[1,2,3]");
}
