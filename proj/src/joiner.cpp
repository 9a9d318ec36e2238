#include "morphinject/joiner.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "morphinject/errors.hpp"

namespace morphinject {

std::optional<JoinAction> join_action_from_string(const std::string& s) {
  if (s == "CONCAT") return JoinAction::Concat;
  if (s == "DROP_MATRA_CONCAT") return JoinAction::DropMatraConcat;
  if (s == "SHORTEN_II_CONCAT") return JoinAction::ShortenIiConcat;
  if (s == "SHORTEN_UU_CONCAT") return JoinAction::ShortenUuConcat;
  return std::nullopt;
}

const char* to_string(JoinAction a) {
  switch (a) {
    case JoinAction::Concat: return "CONCAT";
    case JoinAction::DropMatraConcat: return "DROP_MATRA_CONCAT";
    case JoinAction::ShortenIiConcat: return "SHORTEN_II_CONCAT";
    case JoinAction::ShortenUuConcat: return "SHORTEN_UU_CONCAT";
  }
  return "?";
}

namespace {

JoinRule make_rule(const std::string& pattern, const std::string& ending,
                   JoinAction action, int priority) {
  JoinRule r;
  r.suffix_pattern = pattern;
  r.suffix_group = std::regex(pattern);
  if (ending != "*") {
    auto cat = ending_category_from_string(ending);
    if (!cat) throw ParseError("joiner rule: unknown ending category " + ending);
    r.ending = *cat;
  }
  r.action = action;
  r.priority = priority;
  return r;
}

std::string apply_action(JoinAction action, const std::string& root,
                         const std::string& suffix) {
  switch (action) {
    case JoinAction::Concat:
      return root + suffix;
    case JoinAction::DropMatraConcat:
      return drop_final_matra(root) + matra_form(suffix);
    case JoinAction::ShortenIiConcat:
      return shorten_final_ii(root) + suffix;
    case JoinAction::ShortenUuConcat:
      return shorten_final_uu(root) + suffix;
  }
  throw UnjoinableError("unknown join action");
}

// Root prefix of the surface form produced by the rule's action.
std::string stem_for_action(JoinAction action, const std::string& root) {
  switch (action) {
    case JoinAction::Concat: return root;
    case JoinAction::DropMatraConcat: return drop_final_matra(root);
    case JoinAction::ShortenIiConcat: return shorten_final_ii(root);
    case JoinAction::ShortenUuConcat: return shorten_final_uu(root);
  }
  return root;
}

}  // namespace

Joiner::Joiner(std::vector<JoinRule> rules) : rules_(std::move(rules)) {
  std::stable_sort(rules_.begin(), rules_.end(),
                   [](const JoinRule& a, const JoinRule& b) {
                     return a.priority < b.priority;
                   });
}

Joiner Joiner::load(const std::filesystem::path& rules_file) {
  std::ifstream in(rules_file);
  if (!in) throw ParseError("cannot open joiner rules file: " + rules_file.string());
  std::vector<JoinRule> rules;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string col;
    while (std::getline(ss, col, '\t')) cols.push_back(col);
    if (cols.size() != 4)
      throw ParseError(rules_file.string() + ":" + std::to_string(lineno) +
                       ": expected 4 tab-separated columns");
    auto action = join_action_from_string(cols[2]);
    if (!action)
      throw ParseError(rules_file.string() + ":" + std::to_string(lineno) +
                       ": unknown action " + cols[2]);
    rules.push_back(make_rule(cols[0], cols[1], *action, std::stoi(cols[3])));
  }
  return Joiner(std::move(rules));
}

Joiner Joiner::builtin() {
  std::vector<JoinRule> rules;
  // य-initial noun suffixes: shorten a long ई root vowel, otherwise plain
  // concatenation.
  rules.push_back(make_rule("^(यों|याँ|यें|या)$", "II_VOWEL",
                            JoinAction::ShortenIiConcat, 10));
  rules.push_back(make_rule("^(यों|याँ|यें|या)$", "*", JoinAction::Concat, 11));
  // Vowel-initial noun suffixes (ए, एं, ओं and their matra spellings).
  rules.push_back(make_rule("^(ए|एं|ऐं|ओं|े|ें|ैं|ों)$", "A_VOWEL",
                            JoinAction::DropMatraConcat, 20));
  rules.push_back(make_rule("^(ए|एं|ऐं|ओं|े|ें|ैं|ों)$", "CONSONANT",
                            JoinAction::DropMatraConcat, 21));
  rules.push_back(make_rule("^(ए|एं|ऐं|ओं)$", "UU_VOWEL",
                            JoinAction::ShortenUuConcat, 22));
  rules.push_back(make_rule("^(ए|एं|ऐं|ओं)$", "II_VOWEL",
                            JoinAction::ShortenIiConcat, 23));
  // Everything else (verb suffixes, consonant-initial material, multi-word
  // auxiliary strings) attaches unchanged.
  rules.push_back(make_rule(".*", "*", JoinAction::Concat, 90));
  return Joiner(std::move(rules));
}

std::string Joiner::join(const std::string& root, const Suffix& suffix,
                         std::optional<NounClass> /*class_hint*/) const {
  if (root.empty()) throw ArgumentError("join: empty root");
  if (suffix.is_null()) return root;
  EndingCategory ending = ending_category(root);
  for (const auto& rule : rules_) {
    if (rule.ending && *rule.ending != ending) continue;
    if (!std::regex_match(suffix.text, rule.suffix_group)) continue;
    return apply_action(rule.action, root, suffix.text);
  }
  throw UnjoinableError("no joiner rule for suffix '" + suffix.text +
                        "' after ending " + to_string(ending));
}

std::vector<std::pair<std::string, Suffix>> Joiner::split(
    const std::string& surface, const std::set<std::string>& lexicon_roots) const {
  if (surface.empty()) throw ArgumentError("split: empty surface");
  std::vector<std::string> roots(lexicon_roots.begin(), lexicon_roots.end());
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });

  std::vector<std::pair<std::string, Suffix>> out;
  auto push_unique = [&out](const std::string& root, Suffix s) {
    for (const auto& [r, sf] : out)
      if (r == root && sf == s) return;
    out.emplace_back(root, std::move(s));
  };

  for (const auto& root : roots) {
    if (root.empty()) continue;
    if (root == surface) push_unique(root, Suffix::null());
    EndingCategory ending = ending_category(root);
    for (const auto& rule : rules_) {
      if (rule.ending && *rule.ending != ending) continue;
      std::string stem = stem_for_action(rule.action, root);
      if (stem.empty() || surface.size() <= stem.size()) continue;
      if (surface.compare(0, stem.size(), stem) != 0) continue;
      std::string rest = surface.substr(stem.size());
      std::string cand = rule.action == JoinAction::DropMatraConcat
                             ? independent_form(rest)
                             : rest;
      if (!std::regex_match(cand, rule.suffix_group)) continue;
      Suffix s = Suffix::of(cand);
      try {
        if (join(root, s) == surface) push_unique(root, std::move(s));
      } catch (const MorphError&) {
        // candidate not joinable under the live precedence order
      }
    }
  }
  return out;
}

}  // namespace morphinject
