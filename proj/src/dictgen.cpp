#include "morphinject/dictgen.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "morphinject/errors.hpp"

namespace morphinject {

namespace {

const std::vector<NounClass> kAllClasses = {NounClass::A, NounClass::B, NounClass::C,
                                            NounClass::D, NounClass::E};

// Tie-break rank: most null-heavy class first.
int null_heaviness_rank(NounClass c) {
  switch (c) {
    case NounClass::A: return 0;
    case NounClass::E: return 1;
    case NounClass::D: return 2;
    case NounClass::C: return 3;
    case NounClass::B: return 4;
  }
  return 5;
}

// Whether the observed suffix string ("null" for no inflection) matches the
// class cell at (number, case). Class E pl-obl admits both alternatives.
bool cell_matches(NounClass cls, NumberCase nc, const std::string& observed) {
  if (cls == NounClass::E && nc.number == Number::Plural && nc.case_ == Case::Oblique)
    return observed == "यों" || observed == "ओं";
  Suffix cell = suffix_for(cls, nc, EndingCategory::Consonant);
  return observed == cell.render();
}

bool is_factored_noun(const FactoredToken& t, Number* number, Case* case_) {
  if (t.factors.size() < 3) return false;
  auto n = number_from_string(t.factors[1]);
  auto c = case_from_string(t.factors[2]);
  if (!n || !c) return false;
  *number = *n;
  *case_ = *c;
  return true;
}

std::vector<std::string> read_lines(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open file: " + file.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

}  // namespace

void WordFormDictionary::add(WordFormRecord rec) {
  if (std::find(records.begin(), records.end(), rec) == records.end())
    records.push_back(std::move(rec));
}

std::map<NounClass, double> ClassEvidence::probabilities() const {
  std::map<NounClass, double> probs;
  if (total <= 0) return probs;
  int sum = 0;
  for (const auto& [_, n] : counts) sum += n;
  if (sum <= 0) return probs;
  for (const auto& [c, n] : counts) probs[c] = static_cast<double>(n) / sum;
  return probs;
}

NounClass ClassEvidence::best() const {
  NounClass best = NounClass::A;
  int best_count = -1;
  for (NounClass c : kAllClasses) {
    auto it = counts.find(c);
    int n = it == counts.end() ? 0 : it->second;
    if (n > best_count ||
        (n == best_count && null_heaviness_rank(c) < null_heaviness_rank(best))) {
      best = c;
      best_count = n;
    }
  }
  return best;
}

WordFormDictionary build_from_lexicon(
    const std::vector<NounLexEntry>& nouns, const std::vector<VerbLexEntry>& verbs,
    const std::map<std::string, std::string>& bilingual,
    std::span<const VerbFeatures> feature_space, const VerbParadigmTable& paradigm,
    const Joiner& joiner, LexiconBuildStats* stats) {
  WordFormDictionary dict;
  dict.provenance = Provenance::Lexicon;
  LexiconBuildStats local;
  LexiconBuildStats& st = stats ? *stats : local;

  for (const auto& noun : nouns) {
    auto it = bilingual.find(noun.root);
    if (it == bilingual.end()) {
      ++st.nouns_skipped_no_translation;
      st.messages.push_back("no translation for noun '" + noun.root + "', skipped");
      continue;
    }
    try {
      for (auto& rec : noun_paradigm({it->second, noun}, joiner))
        dict.add(std::move(rec));
      ++st.nouns_classified;
    } catch (const UnclassifiableError& e) {
      ++st.nouns_skipped_unclassifiable;
      st.messages.push_back(std::string(e.what()) + ", skipped");
    }
  }
  for (const auto& verb : verbs) {
    auto records = verb_paradigm(verb, feature_space, paradigm, joiner);
    st.verb_records += records.size();
    for (auto& rec : records) dict.add(std::move(rec));
  }
  return dict;
}

std::map<NounPairKey, ClassEvidence> classify_from_parallel(
    std::span<const AlignedSentencePair> corpus) {
  std::map<NounPairKey, ClassEvidence> evidence;
  for (const auto& pair : corpus) {
    for (const auto& [si, ti] : pair.alignment) {
      if (si < 0 || ti < 0 || si >= static_cast<int>(pair.source.size()) ||
          ti >= static_cast<int>(pair.target.size()))
        continue;
      const FactoredToken& s = pair.source[si];
      const FactoredToken& t = pair.target[ti];
      Number number;
      Case case_;
      if (!is_factored_noun(s, &number, &case_)) continue;
      if (t.factors.empty()) continue;
      NounPairKey key{s.factors[0], t.factors[0]};
      std::string suffix = t.factors.size() >= 2 ? t.factors[1] : "null";
      ClassEvidence& ev = evidence[key];
      bool matched = false;
      for (NounClass c : kAllClasses) {
        if (cell_matches(c, {number, case_}, suffix)) {
          ++ev.counts[c];
          matched = true;
        }
      }
      if (matched) ++ev.total;
      else ++ev.unclassified;
    }
  }
  return evidence;
}

WordFormDictionary build_from_parallel(std::span<const AlignedSentencePair> corpus,
                                       const std::map<NounPairKey, ClassEvidence>& evidence,
                                       const Joiner& joiner) {
  // Source surfaces actually observed per pair and number-case cell.
  std::map<std::pair<NounPairKey, NumberCase>, std::string> observed;
  for (const auto& pair : corpus) {
    for (const auto& [si, ti] : pair.alignment) {
      if (si < 0 || ti < 0 || si >= static_cast<int>(pair.source.size()) ||
          ti >= static_cast<int>(pair.target.size()))
        continue;
      const FactoredToken& s = pair.source[si];
      const FactoredToken& t = pair.target[ti];
      Number number;
      Case case_;
      if (!is_factored_noun(s, &number, &case_)) continue;
      if (t.factors.empty()) continue;
      NounPairKey key{s.factors[0], t.factors[0]};
      observed.emplace(std::make_pair(key, NumberCase{number, case_}), s.surface);
    }
  }

  WordFormDictionary dict;
  dict.provenance = Provenance::Parallel;
  for (const auto& [key, ev] : evidence) {
    if (ev.total <= 0) continue;
    NounClass cls = ev.best();
    const std::string& root = key.second;
    EndingCategory ending = ending_category(root);
    for (const NumberCase& nc : NumberCase::all()) {
      Suffix suffix = suffix_for(cls, nc, ending);
      WordFormRecord rec;
      rec.source_root = key.first;
      rec.source_factors = {to_string(nc.number), to_string(nc.case_)};
      auto obs = observed.find({key, nc});
      rec.source_surface = obs != observed.end() ? obs->second : ".";
      rec.target_root = root;
      rec.target_suffix = suffix;
      rec.target_surface = joiner.join(root, suffix, cls);
      rec.pos = Pos::Noun;
      dict.add(std::move(rec));
    }
  }
  return dict;
}

WordFormDictionary filter_infrequent(const WordFormDictionary& dict,
                                     const std::map<std::string, int>& freq,
                                     int min_count) {
  if (min_count < 0) throw ArgumentError("filter_infrequent: negative min_count");
  WordFormDictionary out;
  out.provenance = dict.provenance;
  for (const auto& rec : dict.records) {
    auto it = freq.find(rec.target_root);
    int count = it == freq.end() ? 0 : it->second;
    if (count >= min_count) out.records.push_back(rec);
  }
  return out;
}

ParallelCorpus load_parallel_corpus(const std::filesystem::path& source_file,
                                    const std::filesystem::path& target_file,
                                    const std::filesystem::path& alignment_file) {
  ParallelCorpus corpus;
  corpus.source = read_lines(source_file);
  corpus.target = read_lines(target_file);
  corpus.alignment = read_lines(alignment_file);
  if (corpus.source.size() != corpus.target.size() ||
      corpus.source.size() != corpus.alignment.size())
    throw ParseError("parallel corpus files differ in line count");
  return corpus;
}

std::vector<AlignedSentencePair> to_aligned_pairs(const ParallelCorpus& corpus) {
  std::vector<AlignedSentencePair> pairs;
  pairs.reserve(corpus.source.size());
  for (size_t i = 0; i < corpus.source.size(); ++i) {
    AlignedSentencePair p;
    p.source = parse_sentence(corpus.source[i]);
    p.target = parse_sentence(corpus.target[i]);
    std::stringstream ss(corpus.alignment[i]);
    std::string link;
    while (ss >> link) {
      auto dash = link.find('-');
      if (dash == std::string::npos)
        throw ParseError("bad alignment link '" + link + "' at line " +
                         std::to_string(i + 1));
      int si = std::stoi(link.substr(0, dash));
      int ti = std::stoi(link.substr(dash + 1));
      if (si < 0 || ti < 0 || si >= static_cast<int>(p.source.size()) ||
          ti >= static_cast<int>(p.target.size()))
        throw ParseError("alignment link '" + link + "' out of range at line " +
                         std::to_string(i + 1));
      p.alignment.emplace_back(si, ti);
    }
    pairs.push_back(std::move(p));
  }
  return pairs;
}

std::pair<std::string, std::string> render_record(const WordFormRecord& rec,
                                                  InjectMode mode,
                                                  size_t source_width,
                                                  size_t target_width) {
  if (mode == InjectMode::Surface) {
    std::string src = rec.source_surface == "." || rec.source_surface.empty()
                          ? rec.source_root
                          : rec.source_surface;
    return {src, rec.target_surface};
  }
  FactoredToken src;
  src.surface = rec.source_surface.empty() ? "." : rec.source_surface;
  src.factors.push_back(rec.source_root);
  for (const auto& f : rec.source_factors) src.factors.push_back(f);
  FactoredToken tgt;
  tgt.surface = rec.target_surface;
  tgt.factors = {rec.target_root, rec.target_suffix.render()};
  return {format_factored(normalize_factors(src, source_width)),
          format_factored(normalize_factors(tgt, target_width))};
}

ParallelCorpus inject(const ParallelCorpus& corpus, const WordFormDictionary& dict,
                      InjectMode mode, size_t source_width, size_t target_width) {
  if (mode == InjectMode::Factored) {
    if (source_width == 0 || target_width == 0) {
      // Derive widths from the first corpus tokens.
      for (const auto& line : corpus.source) {
        auto toks = parse_sentence(line);
        if (!toks.empty()) { source_width = std::max(source_width, toks[0].factors.size()); break; }
      }
      for (const auto& line : corpus.target) {
        auto toks = parse_sentence(line);
        if (!toks.empty()) { target_width = std::max(target_width, toks[0].factors.size()); break; }
      }
    }
    if (source_width == 0 || target_width == 0)
      throw WidthError("inject: factored mode requires known factor widths");
  }

  // Render everything first so a width error cannot leave partial output.
  std::vector<std::pair<std::string, std::string>> rendered;
  rendered.reserve(dict.records.size());
  for (const auto& rec : dict.records)
    rendered.push_back(render_record(rec, mode, source_width, target_width));

  std::set<std::pair<std::string, std::string>> existing;
  for (size_t i = 0; i < corpus.source.size(); ++i)
    existing.emplace(corpus.source[i], corpus.target[i]);

  ParallelCorpus out = corpus;
  for (auto& line_pair : rendered) {
    if (existing.count(line_pair)) continue;
    existing.insert(line_pair);
    out.source.push_back(line_pair.first);
    out.target.push_back(line_pair.second);
    out.alignment.emplace_back("0-0");
  }
  return out;
}

FactoredToken factorize_target(const std::string& surface,
                               const std::set<std::string>& lexicon_roots,
                               const Joiner& joiner) {
  auto candidates = joiner.split(surface, lexicon_roots);
  FactoredToken tok;
  tok.surface = surface;
  if (candidates.empty()) {
    tok.factors = {surface, "null"};
  } else {
    const auto& [root, suffix] = candidates.front();
    tok.factors = {root, suffix.render()};
  }
  return tok;
}

void save_dictionary(const WordFormDictionary& dict, std::ostream& out) {
  for (const auto& rec : dict.records) {
    FactoredToken src;
    src.surface = rec.source_surface.empty() ? "." : rec.source_surface;
    src.factors.push_back(rec.source_root);
    for (const auto& f : rec.source_factors) src.factors.push_back(f);
    FactoredToken tgt;
    tgt.surface = rec.target_surface;
    tgt.factors = {rec.target_root, rec.target_suffix.render()};
    out << format_factored(src) << '\t' << format_factored(tgt) << '\t'
        << (rec.pos == Pos::Noun ? "noun" : "verb") << '\n';
  }
}

void save_dictionary(const WordFormDictionary& dict, const std::filesystem::path& file) {
  std::ofstream out(file);
  if (!out) throw ParseError("cannot write dictionary file: " + file.string());
  save_dictionary(dict, out);
}

WordFormDictionary load_dictionary(const std::filesystem::path& file) {
  WordFormDictionary dict;
  size_t lineno = 0;
  for (const auto& line : read_lines(file)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string col;
    while (std::getline(ss, col, '\t')) cols.push_back(col);
    if (cols.size() != 3)
      throw ParseError(file.string() + ":" + std::to_string(lineno) +
                       ": expected 3 tab-separated columns");
    FactoredToken src = parse_factored(cols[0]);
    FactoredToken tgt = parse_factored(cols[1]);
    if (src.factors.empty() || tgt.factors.size() < 2)
      throw ParseError(file.string() + ":" + std::to_string(lineno) +
                       ": malformed record");
    WordFormRecord rec;
    rec.source_surface = src.surface;
    rec.source_root = src.factors[0];
    rec.source_factors.assign(src.factors.begin() + 1, src.factors.end());
    rec.target_surface = tgt.surface;
    rec.target_root = tgt.factors[0];
    rec.target_suffix = tgt.factors[1] == "null" ? Suffix::null() : Suffix::of(tgt.factors[1]);
    if (cols[2] == "noun") rec.pos = Pos::Noun;
    else if (cols[2] == "verb") rec.pos = Pos::Verb;
    else throw ParseError(file.string() + ":" + std::to_string(lineno) +
                          ": unknown pos '" + cols[2] + "'");
    dict.add(std::move(rec));
  }
  return dict;
}

std::map<std::string, std::string> load_bilingual(const std::filesystem::path& file) {
  std::map<std::string, std::string> out;
  size_t lineno = 0;
  for (const auto& line : read_lines(file)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw ParseError(file.string() + ":" + std::to_string(lineno) +
                       ": expected 'target_root<TAB>source_root'");
    out[line.substr(0, tab)] = line.substr(tab + 1);
  }
  return out;
}

std::map<std::string, int> load_frequencies(const std::filesystem::path& file) {
  std::map<std::string, int> out;
  size_t lineno = 0;
  for (const auto& line : read_lines(file)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw ParseError(file.string() + ":" + std::to_string(lineno) +
                       ": expected 'root<TAB>count'");
    out[line.substr(0, tab)] = std::stoi(line.substr(tab + 1));
  }
  return out;
}

}  // namespace morphinject
