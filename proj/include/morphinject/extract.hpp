#ifndef MORPHINJECT_EXTRACT_HPP
#define MORPHINJECT_EXTRACT_HPP

#include <filesystem>
#include <istream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "morphinject/factored.hpp"
#include "morphinject/types.hpp"

namespace morphinject {

// One token of a dependency-parsed English sentence.
struct DepToken {
  int index = 0;  // 1-based
  std::string form;
  std::string lemma;
  std::string pos;  // Penn Treebank tag
  int head = 0;     // 0 = sentence root
  std::string rel;
};

// Maps canonical relation labels (nsubj, dobj, prep, prepc, pobj) onto the
// labels actually present in the input.
class RelationAliases {
 public:
  static RelationAliases defaults();
  // Alias table: TSV of canonical label, accepted label (one pair per line).
  static RelationAliases load(const std::filesystem::path& file);

  void add(const std::string& canonical, const std::string& accepted);
  // Canonical label for an input label, or the label unchanged.
  std::string canonical(const std::string& rel) const;

 private:
  std::map<std::string, std::string> accepted_to_canonical_;
};

struct DepGraph {
  std::vector<DepToken> tokens;
  RelationAliases aliases = RelationAliases::defaults();

  const DepToken* root() const;  // head == 0
  std::string canonical_rel(const DepToken& t) const { return aliases.canonical(t.rel); }
};

// Parsed-input file: one token per line; either the 6-column layout
// (index, form, lemma, POS, head, relation) or 10-column CoNLL-U, with a
// blank line between sentences. '#' lines are comments.
std::vector<DepGraph> read_parsed(std::istream& in, const RelationAliases& aliases);
std::vector<DepGraph> read_parsed_file(const std::filesystem::path& file,
                                       const RelationAliases& aliases);

struct TamResult {
  std::vector<std::string> tense;     // present, past, future
  std::vector<std::string> aspect;    // progressive, perfect
  std::vector<std::string> modality;  // auxiliary lemmas (can, could)
};

enum class SubjectNumber { Singular, Plural, Unknown };
enum class SubjectGender { Masculine, NonMasculine, Neutral, Unknown };

// POS-driven scan of all tokens for sentence-level tense/aspect/modality.
TamResult tam(const DepGraph& graph);

// Subject pronoun lookup; non-pronoun and missing subjects default to third.
Person person(const DepGraph& graph);

// NN*-tag test on the subject; non-noun subjects are Unknown.
SubjectNumber subject_number(const DepGraph& graph);

// he / she / it; everything else is Unknown.
SubjectGender subject_gender(const DepGraph& graph);
const char* to_string(SubjectNumber n);
const char* to_string(SubjectGender g);

// Direct/oblique case for every noun token (keyed by token index).
std::map<int, Case> noun_cases(const DepGraph& graph, const TamResult& tam_result);

// Lemma of the main (non-auxiliary) verb; throws NoVerbError.
std::string main_verb_lemma(const DepGraph& graph);

// Factor layout emitted by annotate.
enum class FactorScheme {
  Noun,      // lemma | number | case
  Verb,      // lemma | number | person | tense | aspect | modality
  NounVerb,  // lemma | number | case | person | tense | aspect | modality
};

size_t factor_width(FactorScheme scheme);

// Uniform-width factored sentence; nouns carry number/case, the main verb
// carries person/tense/aspect/modality, everything else pads with "null".
// Never fails on a well-formed graph.
std::vector<FactoredToken> annotate(const DepGraph& graph,
                                    FactorScheme scheme = FactorScheme::Noun);

}  // namespace morphinject

#endif
