#include "morphinject/types.hpp"

namespace morphinject {

const char* to_string(NounClass c) {
  switch (c) {
    case NounClass::A: return "A";
    case NounClass::B: return "B";
    case NounClass::C: return "C";
    case NounClass::D: return "D";
    case NounClass::E: return "E";
  }
  return "?";
}

const char* to_string(Number n) {
  return n == Number::Singular ? "singular" : "plural";
}

const char* to_string(Case c) {
  return c == Case::Direct ? "direct" : "oblique";
}

const char* to_string(Person p) {
  switch (p) {
    case Person::First: return "first";
    case Person::Second: return "second";
    case Person::Third: return "third";
  }
  return "?";
}

const char* to_string(Tense t) {
  switch (t) {
    case Tense::Present: return "present";
    case Tense::Past: return "past";
    case Tense::Future: return "future";
  }
  return "?";
}

const char* to_string(Aspect a) {
  switch (a) {
    case Aspect::Simple: return "simple";
    case Aspect::Progressive: return "progressive";
    case Aspect::Perfect: return "perfect";
  }
  return "?";
}

std::optional<NounClass> noun_class_from_string(const std::string& s) {
  if (s == "A") return NounClass::A;
  if (s == "B") return NounClass::B;
  if (s == "C") return NounClass::C;
  if (s == "D") return NounClass::D;
  if (s == "E") return NounClass::E;
  return std::nullopt;
}

std::optional<Number> number_from_string(const std::string& s) {
  if (s == "singular" || s == "sg") return Number::Singular;
  if (s == "plural" || s == "pl") return Number::Plural;
  return std::nullopt;
}

std::optional<Case> case_from_string(const std::string& s) {
  if (s == "direct" || s == "dir") return Case::Direct;
  if (s == "oblique" || s == "obl") return Case::Oblique;
  return std::nullopt;
}

std::optional<Person> person_from_string(const std::string& s) {
  if (s == "first") return Person::First;
  if (s == "second") return Person::Second;
  if (s == "third") return Person::Third;
  return std::nullopt;
}

std::optional<Tense> tense_from_string(const std::string& s) {
  if (s == "present") return Tense::Present;
  if (s == "past") return Tense::Past;
  if (s == "future") return Tense::Future;
  return std::nullopt;
}

std::optional<Aspect> aspect_from_string(const std::string& s) {
  if (s == "simple") return Aspect::Simple;
  if (s == "progressive") return Aspect::Progressive;
  if (s == "perfect") return Aspect::Perfect;
  return std::nullopt;
}

const std::vector<NumberCase>& NumberCase::all() {
  static const std::vector<NumberCase> kAll = {
      {Number::Singular, Case::Direct},
      {Number::Singular, Case::Oblique},
      {Number::Plural, Case::Direct},
      {Number::Plural, Case::Oblique},
  };
  return kAll;
}

}  // namespace morphinject
