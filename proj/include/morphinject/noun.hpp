#ifndef MORPHINJECT_NOUN_HPP
#define MORPHINJECT_NOUN_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "morphinject/joiner.hpp"
#include "morphinject/text.hpp"
#include "morphinject/types.hpp"

namespace morphinject {

// One target-language lexicon row.
struct NounLexEntry {
  std::string root;
  Gender gender = Gender::Masculine;
  Countability countability = Countability::Countable;
  EndingCategory ending = EndingCategory::Other;
  std::optional<NounClass> class_override;

  static NounLexEntry make(std::string root, Gender g, Countability c,
                           std::optional<NounClass> override = std::nullopt);
};

struct NounPair {
  std::string source_root;  // English lemma, lowercase
  NounLexEntry target;
};

// The class x number-case suffix cell. All class A cells and all sg-dir cells
// are null; the class E pl-obl alternative resolves by ending (ई/ि roots take
// यों, everything else ओं).
Suffix suffix_for(NounClass cls, NumberCase nc, EndingCategory ending);

// Predicts the inflectional class from gender, countability and ending;
// honors class_override. Throws UnclassifiableError for masculine countable
// nouns with an unusable ending.
NounClass classify(const NounLexEntry& entry);

// The four word-form records (sg-dir, sg-obl, pl-dir, pl-obl) for a noun pair.
std::vector<WordFormRecord> noun_paradigm(const NounPair& pair, const Joiner& joiner);

// Parses one lexicon line: root, gender {m,f}, countability {count,mass},
// optional class {A..E}; throws ParseError / ArgumentError.
NounLexEntry parse_noun_lexicon_line(const std::string& line);

// Noun lexicon file: TSV as above, '#' lines are comments.
std::vector<NounLexEntry> load_noun_lexicon(const std::filesystem::path& file);

}  // namespace morphinject

#endif
