#ifndef MORPHINJECT_JOINER_HPP
#define MORPHINJECT_JOINER_HPP

#include <filesystem>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "morphinject/text.hpp"
#include "morphinject/types.hpp"

namespace morphinject {

enum class JoinAction {
  Concat,            // root + suffix
  DropMatraConcat,   // strip final matra, attach suffix in matra form
  ShortenIiConcat,   // ी -> ि (ई -> इ), then concatenate
  ShortenUuConcat,   // ू -> ु (ऊ -> उ), then concatenate
};

std::optional<JoinAction> join_action_from_string(const std::string& s);
const char* to_string(JoinAction a);

struct JoinRule {
  std::string suffix_pattern;                // regex over the suffix text
  std::regex suffix_group;
  std::optional<EndingCategory> ending;      // nullopt = any ending ("*")
  JoinAction action;
  int priority;                              // lower wins
};

// Rule-based joiner (reverse morphology): fuses a root and a suffix into a
// surface form; split() inverts the shipped rules against a root lexicon.
// Immutable after load; safe for concurrent use.
class Joiner {
 public:
  // Loads the rules file: UTF-8 TSV with columns
  //   suffix-group (regex) | ending-category or * | action | priority
  // '#' lines are comments.
  static Joiner load(const std::filesystem::path& rules_file);
  // The built-in default rule table (identical to the shipped data file).
  static Joiner builtin();

  explicit Joiner(std::vector<JoinRule> rules);

  // First matching rule (by priority, then file order) wins; throws
  // UnjoinableError when nothing matches. join(root, null) == root.
  std::string join(const std::string& root, const Suffix& suffix,
                   std::optional<NounClass> class_hint = std::nullopt) const;

  // All (root, suffix) candidates with join(root, suffix) == surface and
  // root in lexicon_roots, ordered longest-root-first. (surface, null) is
  // included when surface itself is a lexicon root.
  std::vector<std::pair<std::string, Suffix>> split(
      const std::string& surface, const std::set<std::string>& lexicon_roots) const;

  const std::vector<JoinRule>& rules() const { return rules_; }

 private:
  std::vector<JoinRule> rules_;
};

}  // namespace morphinject

#endif
