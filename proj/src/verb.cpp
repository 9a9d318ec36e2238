#include "morphinject/verb.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "morphinject/errors.hpp"

namespace morphinject {

std::string VerbFeatures::describe() const {
  std::string s = std::string(to_string(number)) + "/" + to_string(person) + "/" +
                  to_string(tense) + "/" + to_string(aspect) + "/" +
                  (modality ? *modality : "-");
  return s;
}

void VerbParadigmTable::add(const VerbFeatures& features, Gender gender,
                            const std::string& suffix) {
  if (suffix.empty())
    throw ArgumentError("verb paradigm: empty suffix for " + features.describe());
  entries_[features].emplace_back(gender, suffix);
}

std::vector<Suffix> VerbParadigmTable::suffixes(const VerbFeatures& features) const {
  auto it = entries_.find(features);
  if (it == entries_.end())
    throw UnsupportedFeaturesError("no verb suffixes for feature bundle " +
                                   features.describe());
  std::vector<std::pair<Gender, std::string>> variants = it->second;
  std::stable_sort(variants.begin(), variants.end(),
                   [](const auto& a, const auto& b) {
                     return static_cast<int>(a.first) < static_cast<int>(b.first);
                   });
  std::vector<Suffix> out;
  for (const auto& [g, text] : variants) {
    Suffix s = Suffix::of(text);
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
  }
  return out;
}

std::vector<VerbFeatures> VerbParadigmTable::feature_space() const {
  std::vector<VerbFeatures> out;
  out.reserve(entries_.size());
  for (const auto& [f, _] : entries_) out.push_back(f);
  return out;
}

VerbParadigmTable VerbParadigmTable::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open verb paradigm file: " + file.string());
  VerbParadigmTable table;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string col;
    while (std::getline(ss, col, '\t')) cols.push_back(col);
    auto fail = [&](const std::string& why) {
      throw ParseError(file.string() + ":" + std::to_string(lineno) + ": " + why);
    };
    if (cols.size() != 7)
      fail("expected 7 columns (number, person, tense, aspect, modality, gender, suffix)");
    VerbFeatures f;
    auto num = number_from_string(cols[0]);
    auto per = person_from_string(cols[1]);
    auto ten = tense_from_string(cols[2]);
    auto asp = aspect_from_string(cols[3]);
    if (!num) fail("bad number '" + cols[0] + "'");
    if (!per) fail("bad person '" + cols[1] + "'");
    if (!ten) fail("bad tense '" + cols[2] + "'");
    if (!asp) fail("bad aspect '" + cols[3] + "'");
    f.number = *num;
    f.person = *per;
    f.tense = *ten;
    f.aspect = *asp;
    if (cols[4] != "-" && !cols[4].empty()) f.modality = cols[4];
    Gender g;
    if (cols[5] == "m") g = Gender::Masculine;
    else if (cols[5] == "f") g = Gender::Feminine;
    else { fail("bad gender '" + cols[5] + "'"); return table; }
    table.add(f, g, cols[6]);
  }
  return table;
}

std::vector<WordFormRecord> verb_paradigm(const VerbLexEntry& entry,
                                          std::span<const VerbFeatures> feature_space,
                                          const VerbParadigmTable& table,
                                          const Joiner& joiner) {
  if (entry.root.empty() || entry.source_lemma.empty())
    throw ArgumentError("verb paradigm: empty lexicon entry");
  std::vector<WordFormRecord> records;
  for (const VerbFeatures& f : feature_space) {
    for (const Suffix& suffix : table.suffixes(f)) {
      WordFormRecord rec;
      rec.source_root = entry.source_lemma;
      rec.source_factors = {to_string(f.number), to_string(f.person),
                            to_string(f.tense), to_string(f.aspect),
                            f.modality ? *f.modality : "null"};
      rec.source_surface = ".";
      rec.target_root = entry.root;
      rec.target_suffix = suffix;
      rec.target_surface = joiner.join(entry.root, suffix);
      rec.pos = Pos::Verb;
      records.push_back(std::move(rec));
    }
  }
  return records;
}

std::vector<VerbLexEntry> load_verb_lexicon(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open verb lexicon: " + file.string());
  std::vector<VerbLexEntry> entries;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size())
      throw ParseError(file.string() + ":" + std::to_string(lineno) +
                       ": expected 'source_lemma<TAB>target_stem'");
    entries.push_back({line.substr(tab + 1), line.substr(0, tab)});
  }
  return entries;
}

}  // namespace morphinject
