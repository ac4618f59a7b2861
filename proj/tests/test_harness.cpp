#include <gtest/gtest.h>

#include <fstream>

#include "poirev/campaign.hpp"
#include "poirev/error.hpp"
#include "poirev/fixtures.hpp"

using namespace poirev;

TEST(Harness, BuiltinFixturesPass) {
  std::vector<std::string> names;
  for (const auto& f : builtin_fixtures()) {
    names.push_back(f.name);
    const FixtureReport r = run_fixture(f);
    for (const auto& e : r.results) EXPECT_TRUE(e.passed) << f.name << ": " << e.description << " -> " << e.detail;
  }
  EXPECT_EQ(names, (std::vector<std::string>{"FX-FIG", "FX-S6", "FX-P5a", "FX-P5b", "FX-P15", "FX-NF"}));
}

TEST(Harness, FixtureFilesMatchBuiltins) {
  for (const auto& [file, name] : {std::pair{"p5a.json", "FX-P5a"}, std::pair{"p5b.json", "FX-P5b"}}) {
    const LoadedFixture loaded = load_fixture_file(std::string(POIREV_FIXTURE_DIR) + "/" + file);
    const Fixture* builtin = nullptr;
    for (const auto& f : builtin_fixtures()) {
      if (f.name == name) builtin = &f;
    }
    ASSERT_NE(builtin, nullptr);
    const FixtureTable* table = builtin->expectations.front().op.table();
    ASSERT_NE(table, nullptr);
    EXPECT_EQ(loaded.space, builtin->space);
    EXPECT_EQ(loaded.table.prior, table->prior);
    ASSERT_EQ(loaded.table.entries.size(), table->entries.size());
    for (const auto& [input, post] : table->entries) {
      ASSERT_NE(loaded.table.find(input), nullptr);
      EXPECT_EQ(*loaded.table.find(input), post);
    }
    const Json round = fixture_to_json(loaded.table, loaded.space);
    const LoadedFixture again = fixture_from_json(round);
    EXPECT_EQ(again.table.prior, loaded.table.prior);
    EXPECT_EQ(again.table.entries, loaded.table.entries);
  }
}

TEST(Harness, MalformedFixtureJsonIsRejected) {
  EXPECT_THROW(fixture_from_json(Json::parse(R"({"prior": "x | y"})")), Error);
  EXPECT_THROW(fixture_from_json(Json::parse(
                   R"({"worlds": ["x", "y"], "prior": "x | y",
                       "entries": [{"input": "x", "posterior": "x | y"},
                                   {"input": ["x"], "posterior": "x | y"}]})")),
               Error);
  EXPECT_THROW(load_fixture_file("/nonexistent/file.json"), Error);
}

TEST(Harness, CampaignIsDeterministicAcrossThreadCounts) {
  const std::vector<std::string> ids{"p", "sep", "gamma5", "beta1p", "nonflush"};
  auto strip = [](Json j) {
    j.erase("seconds");
    return j;
  };
  const Json one = strip(campaign_to_json(campaign({Family::natural, Family::poi}, 3, ids, 1)));
  const Json many = strip(campaign_to_json(campaign({Family::natural, Family::poi}, 3, ids, 4)));
  EXPECT_EQ(one, many);
}

TEST(Harness, CampaignVerdicts) {
  const CampaignReport r = campaign({Family::lex, Family::natural}, 3, {"rec", "nonflush"}, 2);
  ASSERT_EQ(r.entries.size(), 4u);
  std::map<std::pair<std::string, std::string>, Verdict> v;
  for (const auto& e : r.entries) v[{e.family, e.postulate}] = e.verdict;
  EXPECT_EQ((v[{"lex", "rec"}]), Verdict::holds);
  EXPECT_EQ((v[{"natural", "rec"}]), Verdict::witness);
  EXPECT_EQ((v[{"lex", "nonflush"}]), Verdict::skipped);
  EXPECT_FALSE(r.all_hold());
  const std::string md = campaign_to_markdown(r);
  EXPECT_NE(md.find("| natural |"), std::string::npos) << md;
}

TEST(Harness, SearchStatuses) {
  EXPECT_EQ(search_countermodel("p", Family::natural, 3, 100000000).status, SearchStatus::found);
  EXPECT_EQ(search_countermodel("rec", Family::lex, 3, 100000000).status, SearchStatus::holds);
  const SearchResult tiny = search_countermodel("p", Family::natural, 3, 3);
  EXPECT_EQ(tiny.status, SearchStatus::budget_exhausted);
  EXPECT_EQ(tiny.instances, 3u);
}

TEST(Harness, WitnessJsonShape) {
  const SearchResult r = search_countermodel("p", Family::natural, 3, 100000000);
  ASSERT_TRUE(r.witness);
  const Json j = witness_to_json(*r.witness, default_space(3));
  EXPECT_EQ(j["postulate"], "p");
  EXPECT_TRUE(j["bindings"].contains("A"));
  EXPECT_TRUE(j["bindings"].contains("x"));
  ASSERT_FALSE(j["trace"].empty());
  EXPECT_EQ(j["trace"].back()["value"], false);
}

TEST(Harness, BridgesHoldForAdmissibleFamilies) {
  for (Family f : {Family::natural, Family::lex, Family::restrained, Family::poi}) {
    for (const auto& d : check_bridges(f, 3, 4)) {
      ADD_FAILURE() << family_name(f) << ": " << d.bridge << " " << d.left << " vs " << d.right;
    }
  }
}

TEST(Harness, RepresentationSmall) {
  for (std::size_t n = 1; n <= 2; ++n) {
    const RepresentationReport r = representation_check(n);
    EXPECT_TRUE(r.failures.empty()) << r.failures.front();
  }
}

TEST(Harness, DefaultSpaceNames) {
  EXPECT_EQ(default_space(3).names(), (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_EQ(default_space(7).name(6), "w6");
}
