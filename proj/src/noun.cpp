#include "morphinject/noun.hpp"

#include <fstream>
#include <sstream>

#include "morphinject/errors.hpp"

namespace morphinject {

namespace {

bool ends_with_ya(const std::string& root) {
  auto gs = graphemes(root);
  return !gs.empty() && gs.back() == "या";
}

}  // namespace

NounLexEntry NounLexEntry::make(std::string root, Gender g, Countability c,
                                std::optional<NounClass> override) {
  if (root.empty()) throw ArgumentError("noun lexicon entry: empty root");
  NounLexEntry e;
  e.ending = ending_category(root);
  e.root = std::move(root);
  e.gender = g;
  e.countability = c;
  e.class_override = override;
  return e;
}

Suffix suffix_for(NounClass cls, NumberCase nc, EndingCategory ending) {
  if (nc.number == Number::Singular && nc.case_ == Case::Direct)
    return Suffix::null();
  switch (cls) {
    case NounClass::A:
      return Suffix::null();
    case NounClass::B:
      if (nc.number == Number::Plural)
        return Suffix::of(nc.case_ == Case::Direct ? "याँ" : "यों");
      return Suffix::null();
    case NounClass::C:
      if (nc.number == Number::Plural)
        return Suffix::of(nc.case_ == Case::Direct ? "एं" : "ओं");
      return Suffix::null();
    case NounClass::D:
      if (nc.number == Number::Singular)  // sg-obl
        return Suffix::of("ए");
      return Suffix::of(nc.case_ == Case::Direct ? "ए" : "ओं");
    case NounClass::E:
      if (nc.number == Number::Plural && nc.case_ == Case::Oblique)
        return Suffix::of(ending == EndingCategory::IiVowel ? "यों" : "ओं");
      return Suffix::null();
  }
  return Suffix::null();
}

NounClass classify(const NounLexEntry& entry) {
  if (entry.class_override) return *entry.class_override;
  if (entry.countability == Countability::MassOrAbstract) return NounClass::A;
  if (entry.gender == Gender::Feminine) {
    if (entry.ending == EndingCategory::IiVowel || ends_with_ya(entry.root))
      return NounClass::B;
    return NounClass::C;
  }
  switch (entry.ending) {
    case EndingCategory::AVowel:
      return NounClass::D;
    case EndingCategory::UuVowel:
    case EndingCategory::IiVowel:
    case EndingCategory::Consonant:
      return NounClass::E;
    default:
      throw UnclassifiableError("cannot classify masculine noun '" + entry.root +
                                "' with ending " + to_string(entry.ending));
  }
}

std::vector<WordFormRecord> noun_paradigm(const NounPair& pair, const Joiner& joiner) {
  NounClass cls = classify(pair.target);
  std::vector<WordFormRecord> records;
  records.reserve(4);
  for (const NumberCase& nc : NumberCase::all()) {
    Suffix suffix = suffix_for(cls, nc, pair.target.ending);
    WordFormRecord rec;
    rec.source_root = pair.source_root;
    rec.source_factors = {to_string(nc.number), to_string(nc.case_)};
    rec.source_surface = ".";
    rec.target_root = pair.target.root;
    rec.target_suffix = suffix;
    rec.target_surface = joiner.join(pair.target.root, suffix, cls);
    rec.pos = Pos::Noun;
    records.push_back(std::move(rec));
  }
  return records;
}

NounLexEntry parse_noun_lexicon_line(const std::string& line) {
  std::vector<std::string> cols;
  std::stringstream ss(line);
  std::string col;
  while (std::getline(ss, col, '\t')) cols.push_back(col);
  if (cols.size() < 3)
    throw ParseError("expected at least 3 columns (root, gender, countability)");
  Gender g;
  if (cols[1] == "m") g = Gender::Masculine;
  else if (cols[1] == "f") g = Gender::Feminine;
  else throw ParseError("unknown gender code '" + cols[1] + "'");
  Countability c;
  if (cols[2] == "count") c = Countability::Countable;
  else if (cols[2] == "mass") c = Countability::MassOrAbstract;
  else throw ParseError("unknown countability code '" + cols[2] + "'");
  std::optional<NounClass> override;
  if (cols.size() >= 4 && !cols[3].empty()) {
    override = noun_class_from_string(cols[3]);
    if (!override) throw ParseError("unknown class '" + cols[3] + "'");
  }
  return NounLexEntry::make(cols[0], g, c, override);
}

std::vector<NounLexEntry> load_noun_lexicon(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open noun lexicon: " + file.string());
  std::vector<NounLexEntry> entries;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    try {
      entries.push_back(parse_noun_lexicon_line(line));
    } catch (const MorphError& e) {
      throw ParseError(file.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return entries;
}

}  // namespace morphinject
