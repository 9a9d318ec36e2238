#include "morphinject/extract.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "morphinject/errors.hpp"

namespace morphinject {

namespace {

std::string lower(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

bool is_noun_tag(const std::string& pos) { return pos.rfind("NN", 0) == 0; }
bool is_verb_tag(const std::string& pos) { return pos.rfind("VB", 0) == 0; }

bool is_aux_rel(const std::string& rel) {
  std::string r = lower(rel);
  return r == "aux" || r == "auxpass" || r == "aux:pass" || r == "cop";
}

const DepToken* find_by_index(const DepGraph& g, int index) {
  for (const auto& t : g.tokens)
    if (t.index == index) return &t;
  return nullptr;
}

// The nsubj dependent, preferring the subject of the root verb.
const DepToken* subject_of(const DepGraph& g) {
  const DepToken* root = g.root();
  const DepToken* first = nullptr;
  for (const auto& t : g.tokens) {
    if (g.canonical_rel(t) != "nsubj") continue;
    if (root && t.head == root->index) return &t;
    if (!first) first = &t;
  }
  return first;
}

const DepToken* direct_object_of(const DepGraph& g) {
  const DepToken* root = g.root();
  const DepToken* first = nullptr;
  for (const auto& t : g.tokens) {
    if (g.canonical_rel(t) != "dobj") continue;
    if (root && t.head == root->index) return &t;
    if (!first) first = &t;
  }
  return first;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

// A bare VB inside a modal verb complex is the modal's infinitive complement
// ("she can swim", "will have gone"), not a finite present-tense verb; it
// must not contribute "present".
bool modal_governed(const DepGraph& g, const DepToken& t) {
  if (t.pos != "VB") return false;
  for (const auto& m : g.tokens) {
    if (m.pos != "MD") continue;
    if (m.head == t.index || (t.head != 0 && m.head == t.head)) return true;
  }
  return false;
}

// Algorithm-1 style POS scan over a token subset, surface order.
TamResult tam_over(const DepGraph& g, const std::vector<const DepToken*>& tokens) {
  TamResult r;
  for (const DepToken* t : tokens) {
    const std::string& pos = t->pos;
    if (pos == "VBP" || pos == "VBZ" || pos == "VB") {
      if (!modal_governed(g, *t)) r.tense.emplace_back("present");
    } else if (pos == "VBD") {
      r.tense.emplace_back("past");
    } else if (pos == "MD") {
      std::string form = lower(t->form);
      if (form != "can" && form != "could") r.tense.emplace_back("future");
      else r.modality.push_back(form);
    } else if (pos == "VBG") {
      r.aspect.emplace_back("progressive");
    } else if (pos == "VBN") {
      r.aspect.emplace_back("perfect");
    }
  }
  return r;
}

}  // namespace

RelationAliases RelationAliases::defaults() {
  RelationAliases a;
  a.add("nsubj", "nsubj");
  a.add("dobj", "dobj");
  a.add("dobj", "obj");
  a.add("prep", "prep");
  a.add("prepc", "prepc");
  a.add("pobj", "pobj");
  a.add("pobj", "nmod");
  a.add("pobj", "obl");
  return a;
}

RelationAliases RelationAliases::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open relation alias table: " + file.string());
  RelationAliases a;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw ParseError(file.string() + ":" + std::to_string(lineno) +
                       ": expected 'canonical<TAB>accepted'");
    a.add(line.substr(0, tab), line.substr(tab + 1));
  }
  return a;
}

void RelationAliases::add(const std::string& canonical, const std::string& accepted) {
  accepted_to_canonical_[accepted] = canonical;
}

std::string RelationAliases::canonical(const std::string& rel) const {
  auto it = accepted_to_canonical_.find(rel);
  if (it != accepted_to_canonical_.end()) return it->second;
  // UD-style subtyped labels (obl:tmod, nmod:poss) fall back to the bare label.
  auto colon = rel.find(':');
  if (colon != std::string::npos) {
    it = accepted_to_canonical_.find(rel.substr(0, colon));
    if (it != accepted_to_canonical_.end()) return it->second;
  }
  return rel;
}

const DepToken* DepGraph::root() const {
  for (const auto& t : tokens)
    if (t.head == 0) return &t;
  return nullptr;
}

std::vector<DepGraph> read_parsed(std::istream& in, const RelationAliases& aliases) {
  std::vector<DepGraph> graphs;
  DepGraph current;
  current.aliases = aliases;
  std::string line;
  size_t lineno = 0;
  auto flush = [&] {
    if (!current.tokens.empty()) {
      graphs.push_back(current);
      current.tokens.clear();
    }
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    if (line[0] == '#') continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string col;
    while (std::getline(ss, col, '\t')) cols.push_back(col);
    DepToken t;
    try {
      if (cols.size() >= 10) {
        // CoNLL-U; skip multiword and empty-node ids.
        if (cols[0].find('-') != std::string::npos ||
            cols[0].find('.') != std::string::npos)
          continue;
        t.index = std::stoi(cols[0]);
        t.form = cols[1];
        t.lemma = cols[2];
        t.pos = (cols[4] != "_" && !cols[4].empty()) ? cols[4] : cols[3];
        t.head = std::stoi(cols[6]);
        t.rel = cols[7];
      } else if (cols.size() == 6) {
        t.index = std::stoi(cols[0]);
        t.form = cols[1];
        t.lemma = cols[2];
        t.pos = cols[3];
        t.head = std::stoi(cols[4]);
        t.rel = cols[5];
      } else {
        throw ParseError("expected 6 or >=10 tab-separated columns");
      }
    } catch (const std::exception& e) {
      throw ParseError("parsed input line " + std::to_string(lineno) + ": " + e.what());
    }
    if (t.rel.empty()) t.rel = "dep";
    current.tokens.push_back(std::move(t));
  }
  flush();
  return graphs;
}

std::vector<DepGraph> read_parsed_file(const std::filesystem::path& file,
                                       const RelationAliases& aliases) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open parsed input: " + file.string());
  return read_parsed(in, aliases);
}

TamResult tam(const DepGraph& graph) {
  std::vector<const DepToken*> all;
  all.reserve(graph.tokens.size());
  for (const auto& t : graph.tokens) all.push_back(&t);
  return tam_over(graph, all);
}

Person person(const DepGraph& graph) {
  const DepToken* subj = subject_of(graph);
  if (!subj) return Person::Third;
  std::string s = lower(subj->form);
  if (s == "i" || s == "we") return Person::First;
  if (s == "you") return Person::Second;
  return Person::Third;  // he/she/it/they and everything else
}

SubjectNumber subject_number(const DepGraph& graph) {
  const DepToken* subj = subject_of(graph);
  if (!subj) return SubjectNumber::Unknown;
  const std::string& pos = subj->pos;
  if (is_noun_tag(pos)) {
    if (!pos.empty() && pos.back() == 'S') return SubjectNumber::Plural;
    return SubjectNumber::Singular;
  }
  return SubjectNumber::Unknown;
}

SubjectGender subject_gender(const DepGraph& graph) {
  const DepToken* subj = subject_of(graph);
  if (!subj) return SubjectGender::Unknown;
  std::string s = lower(subj->form);
  if (s == "he") return SubjectGender::Masculine;
  if (s == "she") return SubjectGender::NonMasculine;
  if (s == "it") return SubjectGender::Neutral;
  return SubjectGender::Unknown;
}

const char* to_string(SubjectNumber n) {
  switch (n) {
    case SubjectNumber::Singular: return "singular";
    case SubjectNumber::Plural: return "plural";
    case SubjectNumber::Unknown: return "unknown";
  }
  return "unknown";
}

const char* to_string(SubjectGender g) {
  switch (g) {
    case SubjectGender::Masculine: return "+musc";
    case SubjectGender::NonMasculine: return "-musc";
    case SubjectGender::Neutral: return "neutral";
    case SubjectGender::Unknown: return "unknown";
  }
  return "unknown";
}

std::map<int, Case> noun_cases(const DepGraph& graph, const TamResult& tam_result) {
  std::map<int, Case> cases;
  for (const auto& t : graph.tokens)
    if (is_noun_tag(t.pos)) cases[t.index] = Case::Direct;

  // Subject of a transitive sentence is oblique in past / present-perfect /
  // past-perfect tense.
  const DepToken* subj = subject_of(graph);
  const DepToken* dobj = direct_object_of(graph);
  bool perfective = contains(tam_result.tense, "past") ||
                    (contains(tam_result.aspect, "perfect") &&
                     contains(tam_result.tense, "present"));
  if (subj && dobj && perfective && cases.count(subj->index))
    cases[subj->index] = Case::Oblique;

  // Objects of prepositions are oblique.
  for (const auto& t : graph.tokens) {
    if (!cases.count(t.index)) continue;
    std::string canon = graph.canonical_rel(t);
    if (canon == "pobj" || t.rel.rfind("prep", 0) == 0 ||
        t.rel.rfind("prepc", 0) == 0) {
      cases[t.index] = Case::Oblique;
      continue;
    }
    // Collapsed-style prep relations hang the noun off the preposition.
    if (const DepToken* head = find_by_index(graph, t.head)) {
      std::string head_canon = graph.canonical_rel(*head);
      if (head_canon == "prep" || head_canon == "prepc")
        cases[t.index] = Case::Oblique;
    }
  }
  return cases;
}

namespace {

const DepToken* main_verb(const DepGraph& graph) {
  const DepToken* fallback = nullptr;
  for (const auto& t : graph.tokens) {
    if (!is_verb_tag(t.pos)) continue;
    if (is_aux_rel(t.rel)) continue;
    if (t.head == 0) return &t;
    if (!fallback) fallback = &t;
  }
  if (fallback) return fallback;
  for (const auto& t : graph.tokens)  // aux-only sentence
    if (is_verb_tag(t.pos)) return &t;
  return nullptr;
}

// The verb and its auxiliary dependents, surface order.
std::vector<const DepToken*> verb_chain(const DepGraph& graph, const DepToken& verb) {
  std::vector<const DepToken*> chain;
  for (const auto& t : graph.tokens) {
    if (t.index == verb.index) {
      chain.push_back(&t);
      continue;
    }
    if (t.head != verb.index) continue;
    if (t.pos == "MD" || (is_verb_tag(t.pos) && is_aux_rel(t.rel)))
      chain.push_back(&t);
  }
  return chain;
}

}  // namespace

std::string main_verb_lemma(const DepGraph& graph) {
  const DepToken* v = main_verb(graph);
  if (!v) throw NoVerbError("sentence has no verb token");
  return v->lemma;
}

size_t factor_width(FactorScheme scheme) {
  switch (scheme) {
    case FactorScheme::Noun: return 3;
    case FactorScheme::Verb: return 6;
    case FactorScheme::NounVerb: return 7;
  }
  return 3;
}

std::vector<FactoredToken> annotate(const DepGraph& graph, FactorScheme scheme) {
  const size_t width = factor_width(scheme);
  const bool want_noun = scheme != FactorScheme::Verb;
  const bool want_verb = scheme != FactorScheme::Noun;

  TamResult sentence_tam = tam(graph);
  std::map<int, Case> cases = noun_cases(graph, sentence_tam);
  const DepToken* verb = main_verb(graph);

  std::string verb_number = "null";
  std::string verb_person = "null";
  std::string verb_tense = "null";
  std::string verb_aspect = "null";
  std::string verb_modality = "null";
  if (want_verb && verb) {
    SubjectNumber n = subject_number(graph);
    if (n != SubjectNumber::Unknown) verb_number = to_string(n);
    verb_person = to_string(person(graph));
    TamResult chain_tam = tam_over(graph, verb_chain(graph, *verb));
    if (!chain_tam.tense.empty()) verb_tense = chain_tam.tense.front();
    if (!chain_tam.aspect.empty()) verb_aspect = chain_tam.aspect.front();
    // A finite verb with no VBG/VBN in its chain is in simple aspect.
    else if (!chain_tam.tense.empty()) verb_aspect = "simple";
    if (!chain_tam.modality.empty()) verb_modality = chain_tam.modality.front();
  }

  std::vector<FactoredToken> out;
  out.reserve(graph.tokens.size());
  for (const auto& t : graph.tokens) {
    FactoredToken tok;
    tok.surface = t.form;
    if (want_noun && is_noun_tag(t.pos)) {
      std::string number =
          (!t.pos.empty() && t.pos.back() == 'S') ? "plural" : "singular";
      auto it = cases.find(t.index);
      std::string kase = it != cases.end() ? to_string(it->second) : "direct";
      tok.factors = {lower(t.lemma), number, kase};
    } else if (want_verb && verb && t.index == verb->index) {
      if (scheme == FactorScheme::Verb) {
        tok.factors = {lower(t.lemma), verb_number, verb_person,
                       verb_tense, verb_aspect, verb_modality};
      } else {
        tok.factors = {lower(t.lemma), verb_number, "null", verb_person,
                       verb_tense, verb_aspect, verb_modality};
      }
    }
    out.push_back(normalize_factors(tok, width));
  }
  return out;
}

}  // namespace morphinject
