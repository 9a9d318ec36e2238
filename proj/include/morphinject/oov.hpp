#ifndef MORPHINJECT_OOV_HPP
#define MORPHINJECT_OOV_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "morphinject/dictgen.hpp"
#include "morphinject/factored.hpp"
#include "morphinject/types.hpp"

namespace morphinject {

enum class UnknownStep { None, Translation, Generation };

// Count-based toy factored translation model: translation maps
// (source root, factors) to (target root, suffix); generation maps
// (target root, suffix) to a target surface. Surface mode keeps only
// surface-to-surface entries. Immutable once trained.
class ToyFactoredModel {
 public:
  explicit ToyFactoredModel(InjectMode mode) : mode_(mode) {}

  static ToyFactoredModel train(std::span<const AlignedSentencePair> pairs,
                                InjectMode mode);

  // Adds one aligned token pair of evidence.
  void observe(const FactoredToken& source, const FactoredToken& target);
  // Adds a word-form dictionary record as evidence (morphology injection).
  void add_record(const WordFormRecord& rec);
  void add_dictionary(const WordFormDictionary& dict);

  struct Result {
    std::string surface;  // "@UNK:form@" when step != None
    UnknownStep step = UnknownStep::None;
  };

  // Most-frequent-count choice; ties break by lexicographic target.
  Result translate_token(const FactoredToken& token) const;

  InjectMode mode() const { return mode_; }

 private:
  using TargetKey = std::pair<std::string, std::string>;  // root, suffix
  InjectMode mode_;
  std::map<std::vector<std::string>, std::map<TargetKey, int>> translation_;
  std::map<TargetKey, std::map<std::string, int>> generation_;
  std::map<std::string, std::map<std::string, int>> surface_;
};

struct OovReport {
  size_t total_tokens = 0;
  size_t oov_tokens = 0;
  size_t unknown_translation = 0;
  size_t unknown_generation = 0;
  std::vector<std::string> oov_list;

  std::string to_json() const;
};

OovReport count_oov(const ToyFactoredModel& model,
                    std::span<const std::vector<FactoredToken>> test);

struct ReductionSummary {
  size_t before_oov = 0;
  size_t after_oov = 0;
  double reduction_percent = 0.0;  // 100 * (before - after) / before

  std::string to_json() const;
};

// Throws ComparisonError when the reports cover different test set sizes.
ReductionSummary compare(const OovReport& before, const OovReport& after);

// Train-before / inject / train-after over one corpus and test set.
struct SimulationResult {
  OovReport before;
  OovReport after;
  ReductionSummary reduction;
};

SimulationResult simulate(std::span<const AlignedSentencePair> train_pairs,
                          std::span<const std::vector<FactoredToken>> test,
                          const WordFormDictionary& dict, InjectMode mode);

}  // namespace morphinject

#endif
