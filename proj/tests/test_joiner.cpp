#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "morphinject/errors.hpp"
#include "morphinject/joiner.hpp"
#include "morphinject/noun.hpp"

using namespace morphinject;

namespace {
const std::set<std::string> kRoots = {"नदी", "लड़का", "भूख", "रात",
                                      "साधू", "माला", "घर"};
}

TEST_CASE("join goldens") {
  Joiner j = Joiner::builtin();
  CHECK(j.join("नदी", Suffix::of("यों")) == "नदियों");
  CHECK(j.join("नदी", Suffix::of("याँ")) == "नदियाँ");
  CHECK(j.join("लड़का", Suffix::of("ए")) == "लड़के");
  CHECK(j.join("लड़का", Suffix::of("ओं")) == "लड़कों");
  CHECK(j.join("रात", Suffix::of("ओं")) == "रातों");
  CHECK(j.join("रात", Suffix::of("ें")) == "रातें");
  CHECK(j.join("साधू", Suffix::of("ओं")) == "साधुओं");
  CHECK(j.join("भाग", Suffix::of("ता है")) == "भागता है");
  CHECK(j.join("भूख", Suffix::null()) == "भूख");
}

TEST_CASE("null suffix is identity for any root") {
  Joiner j = Joiner::builtin();
  for (const auto& root : kRoots) CHECK(j.join(root, Suffix::null()) == root);
}

TEST_CASE("data file matches the built-in table") {
  Joiner file = Joiner::load(std::string(MI_DATA_DIR) + "/hi/joiner_rules.tsv");
  Joiner builtin = Joiner::builtin();
  std::vector<std::string> suffixes = {"यों", "याँ", "ए",  "एं", "ओं",
                                       "े",   "ें",  "ों", "ता है"};
  for (const auto& root : kRoots)
    for (const auto& s : suffixes)
      CHECK(file.join(root, Suffix::of(s)) == builtin.join(root, Suffix::of(s)));
}

TEST_CASE("join is deterministic") {
  Joiner j = Joiner::builtin();
  CHECK(j.join("नदी", Suffix::of("यों")) == j.join("नदी", Suffix::of("यों")));
}

TEST_CASE("split goldens") {
  Joiner j = Joiner::builtin();

  auto nadi = j.split("नदियों", kRoots);
  REQUIRE(!nadi.empty());
  bool found = false;
  for (const auto& [root, suffix] : nadi)
    if (root == "नदी" && suffix == Suffix::of("यों")) found = true;
  CHECK(found);

  auto ladke = j.split("लड़के", kRoots);
  REQUIRE(!ladke.empty());
  CHECK(ladke.front().first == "लड़का");
  CHECK(ladke.front().second == Suffix::of("ए"));

  auto bhukh = j.split("भूख", kRoots);
  REQUIRE(!bhukh.empty());
  CHECK(bhukh.front().first == "भूख");
  CHECK(bhukh.front().second.is_null());
}

TEST_CASE("split candidates re-join to the surface, longest root first") {
  Joiner j = Joiner::builtin();
  for (const std::string surface : {"नदियों", "लड़कों", "रातों", "साधुओं", "घरों"}) {
    auto candidates = j.split(surface, kRoots);
    size_t prev = std::string::npos;
    for (const auto& [root, suffix] : candidates) {
      CHECK(j.join(root, suffix) == surface);
      CHECK(root.size() <= prev);
      prev = root.size();
    }
  }
}

TEST_CASE("split of an unknown surface is empty") {
  Joiner j = Joiner::builtin();
  CHECK(j.split("xyz", kRoots).empty());
}

TEST_CASE("unjoinable when no rule matches") {
  // A table without the catch-all: only the ii-shortening rule.
  JoinRule rule{"^(यों|याँ)$", std::regex("^(यों|याँ)$"), EndingCategory::IiVowel,
                JoinAction::ShortenIiConcat, 10};
  Joiner j({rule});
  CHECK(j.join("नदी", Suffix::of("यों")) == "नदियों");
  CHECK_THROWS_AS(j.join("रात", Suffix::of("ओं")), UnjoinableError);
}

TEST_CASE("rule priority picks the ending-specific rule first") {
  Joiner j = Joiner::builtin();
  // यों after a non-ii root concatenates plainly instead of shortening.
  CHECK(j.join("रात", Suffix::of("यों")) == "रातयों");
}
