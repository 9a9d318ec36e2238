#ifndef MORPHINJECT_TYPES_HPP
#define MORPHINJECT_TYPES_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace morphinject {

enum class NounClass { A, B, C, D, E };
enum class Number { Singular, Plural };
enum class Case { Direct, Oblique };
enum class Gender { Masculine, Feminine };
enum class Countability { Countable, MassOrAbstract };
enum class Person { First, Second, Third };
enum class Tense { Present, Past, Future };
enum class Aspect { Simple, Progressive, Perfect };
enum class Pos { Noun, Verb };

const char* to_string(NounClass c);
const char* to_string(Number n);
const char* to_string(Case c);
const char* to_string(Person p);
const char* to_string(Tense t);
const char* to_string(Aspect a);

std::optional<NounClass> noun_class_from_string(const std::string& s);
std::optional<Number> number_from_string(const std::string& s);
std::optional<Case> case_from_string(const std::string& s);
std::optional<Person> person_from_string(const std::string& s);
std::optional<Tense> tense_from_string(const std::string& s);
std::optional<Aspect> aspect_from_string(const std::string& s);

// One inflectional suffix; null_marker marks the empty inflection.
struct Suffix {
  std::string text;
  bool null_marker = false;

  static Suffix null() { return Suffix{"", true}; }
  static Suffix of(std::string t) { return Suffix{std::move(t), false}; }
  bool is_null() const { return null_marker; }
  // Rendering used in factored corpora and dictionary files.
  const std::string& render() const {
    static const std::string kNull = "null";
    return null_marker ? kNull : text;
  }
  auto operator<=>(const Suffix&) const = default;
};

// The four number-case combinations a Hindi noun inflects for.
struct NumberCase {
  Number number;
  Case case_;
  auto operator<=>(const NumberCase&) const = default;

  static const std::vector<NumberCase>& all();  // sg-dir, sg-obl, pl-dir, pl-obl
};

// One generated dictionary line: source root + factors -> target
// surface | root | suffix.
struct WordFormRecord {
  std::string source_root;
  std::vector<std::string> source_factors;  // noun: number, case
                                            // verb: number, person, tense, aspect, modality
  std::string source_surface;               // "." when not derivable
  std::string target_surface;
  std::string target_root;
  Suffix target_suffix;
  Pos pos = Pos::Noun;

  auto operator<=>(const WordFormRecord&) const = default;
};

}  // namespace morphinject

#endif
