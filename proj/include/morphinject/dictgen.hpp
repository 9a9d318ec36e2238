#ifndef MORPHINJECT_DICTGEN_HPP
#define MORPHINJECT_DICTGEN_HPP

#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "morphinject/factored.hpp"
#include "morphinject/joiner.hpp"
#include "morphinject/noun.hpp"
#include "morphinject/types.hpp"
#include "morphinject/verb.hpp"

namespace morphinject {

enum class Provenance { Lexicon, Parallel };
enum class InjectMode { Factored, Surface };

struct WordFormDictionary {
  std::vector<WordFormRecord> records;
  Provenance provenance = Provenance::Lexicon;

  // Appends unless an identical record is already present.
  void add(WordFormRecord rec);
};

// One sentence pair of word-aligned factored bitext.
struct AlignedSentencePair {
  std::vector<FactoredToken> source;
  std::vector<FactoredToken> target;
  std::vector<std::pair<int, int>> alignment;  // 0-based (source, target)
};

// Per-class occurrence counts for one noun pair.
struct ClassEvidence {
  std::map<NounClass, int> counts;
  int total = 0;         // classified occurrences
  int unclassified = 0;  // occurrences matching no class cell

  std::map<NounClass, double> probabilities() const;
  // Argmax class; ties break toward the most null-heavy class (A > E > D > C > B).
  NounClass best() const;
};

struct LexiconBuildStats {
  size_t nouns_classified = 0;
  size_t nouns_skipped_no_translation = 0;
  size_t nouns_skipped_unclassifiable = 0;
  size_t verb_records = 0;
  std::vector<std::string> messages;
};

// Lexicon pipeline: classify each translated noun and emit its 4-record
// paradigm; emit verb paradigms over feature_space. Untranslated entries are
// skipped and counted.
WordFormDictionary build_from_lexicon(
    const std::vector<NounLexEntry>& nouns, const std::vector<VerbLexEntry>& verbs,
    const std::map<std::string, std::string>& bilingual,  // target root -> source root
    std::span<const VerbFeatures> feature_space, const VerbParadigmTable& paradigm,
    const Joiner& joiner, LexiconBuildStats* stats = nullptr);

using NounPairKey = std::pair<std::string, std::string>;  // source lemma, target root

// Parallel pipeline, classification step: every aligned noun occurrence votes
// for each class whose (number, case) suffix cell matches the observed suffix.
std::map<NounPairKey, ClassEvidence> classify_from_parallel(
    std::span<const AlignedSentencePair> corpus);

// Parallel pipeline, generation step: 4 records per classified pair; source
// surfaces observed in the corpus are preserved, others are dotted.
WordFormDictionary build_from_parallel(std::span<const AlignedSentencePair> corpus,
                                       const std::map<NounPairKey, ClassEvidence>& evidence,
                                       const Joiner& joiner);

// Drops records whose target root frequency is below min_count; roots absent
// from freq count as 0.
WordFormDictionary filter_infrequent(const WordFormDictionary& dict,
                                     const std::map<std::string, int>& freq,
                                     int min_count);

// A parallel corpus as three aligned line lists.
struct ParallelCorpus {
  std::vector<std::string> source;
  std::vector<std::string> target;
  std::vector<std::string> alignment;  // space-separated "i-j" pairs, 0-based
};

ParallelCorpus load_parallel_corpus(const std::filesystem::path& source_file,
                                    const std::filesystem::path& target_file,
                                    const std::filesystem::path& alignment_file);

std::vector<AlignedSentencePair> to_aligned_pairs(const ParallelCorpus& corpus);

// Renders a record as a (source line, target line) pair.
std::pair<std::string, std::string> render_record(const WordFormRecord& rec,
                                                  InjectMode mode,
                                                  size_t source_width,
                                                  size_t target_width);

// Appends one single-token sentence pair per record; the original corpus is
// preserved byte-identically as a prefix and exact duplicates of existing
// pairs are not re-added. Widths apply in factored mode.
ParallelCorpus inject(const ParallelCorpus& corpus, const WordFormDictionary& dict,
                      InjectMode mode, size_t source_width = 0, size_t target_width = 0);

// Target-side factorization via the split oracle: surface -> surface|root|suffix.
FactoredToken factorize_target(const std::string& surface,
                               const std::set<std::string>& lexicon_roots,
                               const Joiner& joiner);

// Dictionary file: one record per line,
//   source_surface|source_root|factors... <TAB> target_surface|root|suffix <TAB> noun|verb
void save_dictionary(const WordFormDictionary& dict, std::ostream& out);
void save_dictionary(const WordFormDictionary& dict, const std::filesystem::path& file);
WordFormDictionary load_dictionary(const std::filesystem::path& file);

// TSV loaders for the bilingual dictionary (target \t source) and the
// frequency list (root \t count).
std::map<std::string, std::string> load_bilingual(const std::filesystem::path& file);
std::map<std::string, int> load_frequencies(const std::filesystem::path& file);

}  // namespace morphinject

#endif
