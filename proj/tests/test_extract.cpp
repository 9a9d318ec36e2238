#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "morphinject/errors.hpp"
#include "morphinject/extract.hpp"

using namespace morphinject;

namespace {

DepGraph graph(std::initializer_list<DepToken> tokens) {
  DepGraph g;
  g.tokens = tokens;
  return g;
}

// 1-based indices; head 0 marks the root.
const DepGraph kBoysAteApples = graph({{1, "boys", "boy", "NNS", 2, "nsubj"},
                                       {2, "ate", "eat", "VBD", 0, "root"},
                                       {3, "apples", "apple", "NNS", 2, "dobj"}});
const DepGraph kBoysWentToSchool = graph({{1, "boys", "boy", "NNS", 2, "nsubj"},
                                          {2, "went", "go", "VBD", 0, "root"},
                                          {3, "to", "to", "IN", 2, "prep"},
                                          {4, "school", "school", "NN", 3, "pobj"}});
const DepGraph kFishesLive = graph({{1, "fishes", "fish", "NNS", 2, "nsubj"},
                                    {2, "live", "live", "VBP", 0, "root"},
                                    {3, "in", "in", "IN", 2, "prep"},
                                    {4, "the", "the", "DT", 5, "det"},
                                    {5, "rivers", "river", "NNS", 3, "pobj"}});
const DepGraph kBoyPlays = graph({{1, "boy", "boy", "NN", 2, "nsubj"},
                                  {2, "plays", "play", "VBZ", 0, "root"}});
const DepGraph kSheCanSwim = graph({{1, "she", "she", "PRP", 3, "nsubj"},
                                    {2, "can", "can", "MD", 3, "aux"},
                                    {3, "swim", "swim", "VB", 0, "root"}});
const DepGraph kHeIsEating = graph({{1, "he", "he", "PRP", 3, "nsubj"},
                                    {2, "is", "be", "VBZ", 3, "aux"},
                                    {3, "eating", "eat", "VBG", 0, "root"}});
const DepGraph kWillHaveGone = graph({{1, "he", "he", "PRP", 4, "nsubj"},
                                      {2, "will", "will", "MD", 4, "aux"},
                                      {3, "have", "have", "VB", 4, "aux"},
                                      {4, "gone", "go", "VBN", 0, "root"}});

DepGraph with_subject(const std::string& form, const std::string& pos) {
  return graph({{1, form, form, pos, 2, "nsubj"},
                {2, "plays", "play", "VBZ", 0, "root"}});
}

}  // namespace

TEST_CASE("tense, aspect and modality extraction") {
  auto past = tam(kBoysAteApples);
  CHECK(past.tense == std::vector<std::string>{"past"});
  CHECK(past.aspect.empty());
  CHECK(past.modality.empty());

  auto modal = tam(kSheCanSwim);
  CHECK(modal.tense.empty());
  CHECK(modal.modality == std::vector<std::string>{"can"});

  auto progressive = tam(kHeIsEating);
  CHECK(progressive.tense == std::vector<std::string>{"present"});
  CHECK(progressive.aspect == std::vector<std::string>{"progressive"});

  auto future_perfect = tam(kWillHaveGone);
  CHECK(future_perfect.tense == std::vector<std::string>{"future"});
  CHECK(future_perfect.aspect == std::vector<std::string>{"perfect"});

  // Two finite present verbs contribute one "present" each.
  auto two_verbs = tam(graph({{1, "Bell", "Bell", "NNP", 2, "nsubj"},
                              {2, "makes", "make", "VBZ", 0, "root"},
                              {3, "and", "and", "CC", 2, "cc"},
                              {4, "distributes", "distribute", "VBZ", 2, "conj"}}));
  CHECK(two_verbs.tense == std::vector<std::string>{"present", "present"});
}

TEST_CASE("person from the subject pronoun") {
  CHECK(person(with_subject("i", "PRP")) == Person::First);
  CHECK(person(with_subject("I", "PRP")) == Person::First);
  CHECK(person(with_subject("we", "PRP")) == Person::First);
  CHECK(person(with_subject("you", "PRP")) == Person::Second);
  CHECK(person(with_subject("Bell", "NNP")) == Person::Third);
  CHECK(person(kSheCanSwim) == Person::Third);
}

TEST_CASE("subject number from the NN tag shape") {
  CHECK(subject_number(kBoysAteApples) == SubjectNumber::Plural);
  CHECK(subject_number(kBoyPlays) == SubjectNumber::Singular);
  CHECK(subject_number(with_subject("they", "PRP")) == SubjectNumber::Unknown);
}

TEST_CASE("subject gender from the pronoun") {
  CHECK(subject_gender(kHeIsEating) == SubjectGender::Masculine);
  CHECK(subject_gender(kSheCanSwim) == SubjectGender::NonMasculine);
  CHECK(subject_gender(with_subject("it", "PRP")) == SubjectGender::Neutral);
  CHECK(subject_gender(with_subject("Bell", "NNP")) == SubjectGender::Unknown);
}

TEST_CASE("noun case assignment") {
  auto past_cases = noun_cases(kBoysAteApples, tam(kBoysAteApples));
  CHECK(past_cases.at(1) == Case::Oblique);  // transitive past subject
  CHECK(past_cases.at(3) == Case::Direct);

  auto intrans = noun_cases(kBoysWentToSchool, tam(kBoysWentToSchool));
  CHECK(intrans.at(1) == Case::Direct);  // no direct object
  CHECK(intrans.at(4) == Case::Oblique);  // object of a preposition

  auto prep = noun_cases(kFishesLive, tam(kFishesLive));
  CHECK(prep.at(1) == Case::Direct);
  CHECK(prep.at(5) == Case::Oblique);
}

TEST_CASE("main verb lemma") {
  CHECK(main_verb_lemma(kHeIsEating) == "eat");
  CHECK(main_verb_lemma(kBoysAteApples) == "eat");
  CHECK(main_verb_lemma(kWillHaveGone) == "go");
  CHECK_THROWS_AS(main_verb_lemma(graph({{1, "hello", "hello", "UH", 0, "root"}})),
                  NoVerbError);
}

TEST_CASE("annotate with noun factors") {
  auto tokens = annotate(kBoysAteApples, FactorScheme::Noun);
  CHECK(format_sentence(tokens) ==
        "boys|boy|plural|oblique ate|null|null|null apples|apple|plural|direct");

  auto punct = annotate(graph({{1, "boys", "boy", "NNS", 2, "nsubj"},
                               {2, "play", "play", "VBP", 0, "root"},
                               {3, ".", ".", ".", 2, "punct"}}),
                        FactorScheme::Noun);
  CHECK(format_factored(punct[2]) == ".|null|null|null");
}

TEST_CASE("annotate with verb factors") {
  auto tokens = annotate(graph({{1, "boys", "boy", "NNS", 2, "nsubj"},
                                {2, "play", "play", "VBP", 0, "root"}}),
                         FactorScheme::Verb);
  REQUIRE(tokens.size() == 2);
  const auto& play = tokens[1].factors;
  REQUIRE(play.size() == factor_width(FactorScheme::Verb));
  CHECK(play[0] == "play");
  CHECK(play[1] == "plural");
  CHECK(play[2] == "third");
  CHECK(play[3] == "present");
  CHECK(play[4] == "simple");
  // Every token is padded to the same width.
  for (const auto& t : tokens) CHECK(t.factors.size() == play.size());
}

TEST_CASE("annotate width uniformity across schemes") {
  for (FactorScheme scheme :
       {FactorScheme::Noun, FactorScheme::Verb, FactorScheme::NounVerb}) {
    auto tokens = annotate(kFishesLive, scheme);
    for (const auto& t : tokens) CHECK(t.factors.size() == factor_width(scheme));
  }
}

TEST_CASE("parsed file reader") {
  auto graphs = read_parsed_file(std::string(MI_SAMPLES_DIR) + "/parsed_sentences.tsv",
                                 RelationAliases::defaults());
  REQUIRE(graphs.size() == 6);
  CHECK(graphs[0].tokens.size() == 3);
  CHECK(graphs[0].root()->lemma == "eat");
  CHECK(graphs[1].tokens[4].form == "rivers");

  // Modern labels map onto the canonical ones through the alias table.
  std::istringstream modern(
      "1\tboys\tboy\tNNS\t2\tnsubj\n"
      "2\tate\teat\tVBD\t0\troot\n"
      "3\tapples\tapple\tNNS\t2\tobj\n");
  auto aliased = read_parsed(modern, RelationAliases::defaults());
  REQUIRE(aliased.size() == 1);
  CHECK(aliased[0].canonical_rel(aliased[0].tokens[2]) == "dobj");
  auto cases = noun_cases(aliased[0], tam(aliased[0]));
  CHECK(cases.at(1) == Case::Oblique);

  std::istringstream empty("");
  CHECK(read_parsed(empty, RelationAliases::defaults()).empty());
}
