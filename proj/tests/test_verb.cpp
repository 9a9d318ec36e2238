#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "morphinject/errors.hpp"
#include "morphinject/verb.hpp"

using namespace morphinject;

namespace {
VerbParadigmTable shipped() {
  return VerbParadigmTable::load(std::string(MI_DATA_DIR) + "/hi/verb_paradigm.tsv");
}

VerbFeatures present_simple(Number n, Person p) {
  return {n, p, Tense::Present, Aspect::Simple, std::nullopt};
}

std::vector<std::string> rendered(const std::vector<Suffix>& suffixes) {
  std::vector<std::string> out;
  for (const auto& s : suffixes) out.push_back(s.render());
  return out;
}
}  // namespace

TEST_CASE("present-simple suffix cells, masculine variant first") {
  auto table = shipped();
  using V = std::vector<std::string>;
  CHECK(rendered(table.suffixes(present_simple(Number::Singular, Person::First))) ==
        V{"ता हूँ", "ती हूँ"});
  CHECK(rendered(table.suffixes(present_simple(Number::Plural, Person::First))) ==
        V{"ते हैं", "ती हैं"});
  CHECK(rendered(table.suffixes(present_simple(Number::Singular, Person::Second))) ==
        V{"ता है", "ती है"});
  CHECK(rendered(table.suffixes(present_simple(Number::Plural, Person::Second))) ==
        V{"ते हो", "ती हो"});
  CHECK(rendered(table.suffixes(present_simple(Number::Singular, Person::Third))) ==
        V{"ता है", "ती है"});
  CHECK(rendered(table.suffixes(present_simple(Number::Plural, Person::Third))) ==
        V{"ते हैं", "ती हैं"});
}

TEST_CASE("bundle outside the table is an error") {
  auto table = shipped();
  VerbFeatures unsupported{Number::Singular, Person::First, Tense::Future,
                           Aspect::Perfect, "can"};
  CHECK_THROWS_AS(table.suffixes(unsupported), UnsupportedFeaturesError);
}

TEST_CASE("run paradigm over present simple") {
  auto table = shipped();
  auto space = table.feature_space();
  CHECK(space.size() == 6);
  auto recs = verb_paradigm({"भाग", "run"}, space, table, Joiner::builtin());
  CHECK(recs.size() == 12);  // six bundles x two gender variants
  std::set<std::string> surfaces;
  for (const auto& rec : recs) {
    CHECK(rec.source_root == "run");
    CHECK(rec.target_root == "भाग");
    CHECK(rec.pos == Pos::Verb);
    REQUIRE(rec.source_factors.size() == 5);
    CHECK(rec.source_factors[4] == "null");  // unmarked modality
    surfaces.insert(rec.target_surface);
  }
  for (const std::string expected :
       {"भागता हूँ", "भागती हूँ", "भागते हैं", "भागती हैं", "भागता है",
        "भागती है", "भागते हो", "भागती हो"})
    CHECK(surfaces.count(expected) == 1);
}

TEST_CASE("empty feature space yields no records") {
  auto table = shipped();
  CHECK(verb_paradigm({"भाग", "run"}, {}, table, Joiner::builtin()).empty());
}

TEST_CASE("full feature grid stores and retrieves without collisions") {
  VerbParadigmTable table;
  std::vector<VerbFeatures> all;
  int serial = 0;
  for (Number n : {Number::Singular, Number::Plural})
    for (Person p : {Person::First, Person::Second, Person::Third})
      for (Tense t : {Tense::Present, Tense::Past, Tense::Future})
        for (Aspect a : {Aspect::Simple, Aspect::Progressive, Aspect::Perfect})
          for (std::optional<std::string> m :
               {std::optional<std::string>{}, std::optional<std::string>{"can"},
                std::optional<std::string>{"could"}}) {
            VerbFeatures f{n, p, t, a, m};
            table.add(f, Gender::Masculine, "s" + std::to_string(serial++));
            all.push_back(f);
          }
  CHECK(all.size() == 162);
  CHECK(table.feature_space().size() == 162);
  std::set<std::string> seen;
  for (const auto& f : all) {
    auto suffixes = table.suffixes(f);
    REQUIRE(suffixes.size() == 1);
    CHECK(seen.insert(suffixes[0].render()).second);  // each bundle kept its own cell
    CHECK(seen.insert(f.describe()).second);          // describe() is injective too
  }
}

TEST_CASE("verb lexicon loads") {
  auto lex = load_verb_lexicon(std::string(MI_DATA_DIR) + "/hi/verb_lexicon.tsv");
  REQUIRE(!lex.empty());
  bool found = false;
  for (const auto& e : lex)
    if (e.source_lemma == "run" && e.root == "भाग") found = true;
  CHECK(found);
}
