#ifndef MORPHINJECT_VERB_HPP
#define MORPHINJECT_VERB_HPP

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "morphinject/joiner.hpp"
#include "morphinject/types.hpp"

namespace morphinject {

struct VerbFeatures {
  Number number = Number::Singular;
  Person person = Person::First;
  Tense tense = Tense::Present;
  Aspect aspect = Aspect::Simple;
  std::optional<std::string> modality;  // auxiliary lemma, none = unmarked

  auto operator<=>(const VerbFeatures&) const = default;
  std::string describe() const;
};

struct VerbLexEntry {
  std::string root;          // Devanagari stem
  std::string source_lemma;  // English lemma
};

// Feature-indexed verb suffix table; gender variants are enumerated on the
// target side, so one feature bundle maps to a set of suffixes.
class VerbParadigmTable {
 public:
  // Paradigm file: TSV of number, person, tense, aspect, modality (or "-"),
  // gender {m,f}, suffix text. '#' lines are comments.
  static VerbParadigmTable load(const std::filesystem::path& file);

  void add(const VerbFeatures& features, Gender gender, const std::string& suffix);

  // All gender-variant suffixes for the bundle, masculine variants first;
  // throws UnsupportedFeaturesError for a bundle absent from the table.
  std::vector<Suffix> suffixes(const VerbFeatures& features) const;

  std::vector<VerbFeatures> feature_space() const;  // distinct bundles, sorted
  bool empty() const { return entries_.empty(); }

 private:
  std::map<VerbFeatures, std::vector<std::pair<Gender, std::string>>> entries_;
};

// One record per (bundle x gender variant); surfaces via the joiner.
std::vector<WordFormRecord> verb_paradigm(const VerbLexEntry& entry,
                                          std::span<const VerbFeatures> feature_space,
                                          const VerbParadigmTable& table,
                                          const Joiner& joiner);

// Verb lexicon file: TSV of source_lemma, target stem.
std::vector<VerbLexEntry> load_verb_lexicon(const std::filesystem::path& file);

}  // namespace morphinject

#endif
