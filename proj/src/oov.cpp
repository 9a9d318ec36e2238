#include "morphinject/oov.hpp"

#include <sstream>

#include "morphinject/errors.hpp"

namespace morphinject {

namespace {

std::string unk(const std::string& form) { return "@UNK:" + form + "@"; }

// Highest count wins; ties break lexicographically (std::map iteration order
// already gives the lexicographically smallest key first).
template <typename K>
const K* argmax(const std::map<K, int>& counted) {
  const K* best = nullptr;
  int best_count = 0;
  for (const auto& [k, n] : counted) {
    if (n > best_count) {
      best = &k;
      best_count = n;
    }
  }
  return best;
}

}  // namespace

ToyFactoredModel ToyFactoredModel::train(std::span<const AlignedSentencePair> pairs,
                                         InjectMode mode) {
  ToyFactoredModel model(mode);
  for (const auto& pair : pairs) {
    for (const auto& [si, ti] : pair.alignment) {
      if (si < 0 || ti < 0 || si >= static_cast<int>(pair.source.size()) ||
          ti >= static_cast<int>(pair.target.size()))
        continue;
      model.observe(pair.source[si], pair.target[ti]);
    }
  }
  return model;
}

void ToyFactoredModel::observe(const FactoredToken& source, const FactoredToken& target) {
  if (mode_ == InjectMode::Surface) {
    ++surface_[source.surface][target.surface];
    return;
  }
  TargetKey tkey{target.factors.size() >= 1 ? target.factors[0] : target.surface,
                 target.factors.size() >= 2 ? target.factors[1] : "null"};
  ++translation_[source.factors][tkey];
  ++generation_[tkey][target.surface];
}

void ToyFactoredModel::add_record(const WordFormRecord& rec) {
  auto [src_line, tgt_line] = render_record(
      rec, mode_,
      /*source_width=*/1 + rec.source_factors.size(), /*target_width=*/2);
  if (mode_ == InjectMode::Surface) {
    ++surface_[src_line][tgt_line];
    return;
  }
  observe(parse_factored(src_line), parse_factored(tgt_line));
}

void ToyFactoredModel::add_dictionary(const WordFormDictionary& dict) {
  for (const auto& rec : dict.records) add_record(rec);
}

ToyFactoredModel::Result ToyFactoredModel::translate_token(
    const FactoredToken& token) const {
  if (mode_ == InjectMode::Surface) {
    auto it = surface_.find(token.surface);
    if (it == surface_.end())
      return {unk(token.surface), UnknownStep::Translation};
    return {*argmax(it->second), UnknownStep::None};
  }
  auto it = translation_.find(token.factors);
  if (it == translation_.end())
    return {unk(token.surface), UnknownStep::Translation};
  const TargetKey* tkey = argmax(it->second);
  auto gen = generation_.find(*tkey);
  if (gen == generation_.end())
    return {unk(token.surface), UnknownStep::Generation};
  return {*argmax(gen->second), UnknownStep::None};
}

OovReport count_oov(const ToyFactoredModel& model,
                    std::span<const std::vector<FactoredToken>> test) {
  OovReport report;
  for (const auto& sentence : test) {
    for (const auto& token : sentence) {
      ++report.total_tokens;
      auto result = model.translate_token(token);
      if (result.step != UnknownStep::None) {
        ++report.oov_tokens;
        if (result.step == UnknownStep::Translation) ++report.unknown_translation;
        else ++report.unknown_generation;
        report.oov_list.push_back(token.surface);
      }
    }
  }
  return report;
}

std::string OovReport::to_json() const {
  std::ostringstream os;
  os << "{\"total\": " << total_tokens << ", \"oov\": " << oov_tokens
     << ", \"unknown_translation\": " << unknown_translation
     << ", \"unknown_generation\": " << unknown_generation << "}";
  return os.str();
}

std::string ReductionSummary::to_json() const {
  std::ostringstream os;
  os << "{\"before_oov\": " << before_oov << ", \"after_oov\": " << after_oov
     << ", \"reduction_percent\": " << reduction_percent << "}";
  return os.str();
}

ReductionSummary compare(const OovReport& before, const OovReport& after) {
  if (before.total_tokens != after.total_tokens)
    throw ComparisonError("OOV reports cover different test sets (" +
                          std::to_string(before.total_tokens) + " vs " +
                          std::to_string(after.total_tokens) + " tokens)");
  ReductionSummary s;
  s.before_oov = before.oov_tokens;
  s.after_oov = after.oov_tokens;
  s.reduction_percent =
      before.oov_tokens == 0
          ? 0.0
          : 100.0 * (static_cast<double>(before.oov_tokens) - after.oov_tokens) /
                before.oov_tokens;
  return s;
}

SimulationResult simulate(std::span<const AlignedSentencePair> train_pairs,
                          std::span<const std::vector<FactoredToken>> test,
                          const WordFormDictionary& dict, InjectMode mode) {
  ToyFactoredModel base = ToyFactoredModel::train(train_pairs, mode);
  ToyFactoredModel enriched = base;
  enriched.add_dictionary(dict);
  SimulationResult result;
  result.before = count_oov(base, test);
  result.after = count_oov(enriched, test);
  result.reduction = compare(result.before, result.after);
  return result;
}

}  // namespace morphinject
