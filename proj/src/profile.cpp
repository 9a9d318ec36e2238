#include "morphinject/profile.hpp"

#include <cstdlib>

#include "morphinject/dictgen.hpp"
#include "morphinject/errors.hpp"

namespace morphinject {

LanguageProfile LanguageProfile::load(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    throw ParseError("profile directory not found: " + dir.string());
  LanguageProfile p;
  p.id = dir.filename().string();
  p.dir = dir;
  if (fs::exists(dir / "joiner_rules.tsv"))
    p.joiner = Joiner::load(dir / "joiner_rules.tsv");
  if (fs::exists(dir / "noun_lexicon.tsv"))
    p.noun_lexicon = load_noun_lexicon(dir / "noun_lexicon.tsv");
  if (fs::exists(dir / "verb_lexicon.tsv"))
    p.verb_lexicon = load_verb_lexicon(dir / "verb_lexicon.tsv");
  if (fs::exists(dir / "verb_paradigm.tsv"))
    p.verb_paradigm = VerbParadigmTable::load(dir / "verb_paradigm.tsv");
  if (fs::exists(dir / "bilingual.tsv"))
    p.bilingual = load_bilingual(dir / "bilingual.tsv");
  if (fs::exists(dir / "relation_aliases.tsv"))
    p.relation_aliases = RelationAliases::load(dir / "relation_aliases.tsv");
  return p;
}

LanguageProfile LanguageProfile::resolve(const std::string& id,
                                         const std::filesystem::path& base_dir) {
  std::filesystem::path base = base_dir;
  if (const char* env = std::getenv("MORPHINJECT_PROFILE_DIR")) base = env;
  return load(base / id);
}

}  // namespace morphinject
