#ifndef MORPHINJECT_PROFILE_HPP
#define MORPHINJECT_PROFILE_HPP

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "morphinject/extract.hpp"
#include "morphinject/joiner.hpp"
#include "morphinject/noun.hpp"
#include "morphinject/verb.hpp"

namespace morphinject {

// A language profile bundles everything needed to port the technique to a
// target language: the joiner rules, the inflection tables and the lexicons.
// New languages are added as data directories, not code.
struct LanguageProfile {
  std::string id;
  std::filesystem::path dir;
  Joiner joiner = Joiner::builtin();
  std::vector<NounLexEntry> noun_lexicon;
  std::vector<VerbLexEntry> verb_lexicon;
  VerbParadigmTable verb_paradigm;
  std::map<std::string, std::string> bilingual;  // target root -> source root
  RelationAliases relation_aliases = RelationAliases::defaults();

  // Loads a profile directory. Expected files (each optional unless the
  // pipeline stage that needs it runs):
  //   joiner_rules.tsv, noun_lexicon.tsv, verb_lexicon.tsv,
  //   verb_paradigm.tsv, bilingual.tsv, relation_aliases.tsv
  static LanguageProfile load(const std::filesystem::path& dir);

  // Resolves a profile id against MORPHINJECT_PROFILE_DIR or base_dir.
  static LanguageProfile resolve(const std::string& id,
                                 const std::filesystem::path& base_dir);
};

}  // namespace morphinject

#endif
