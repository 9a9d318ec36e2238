#ifndef MORPHINJECT_TEXT_HPP
#define MORPHINJECT_TEXT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace morphinject {

// Final-vowel category of a root, used by both the noun classifier and the
// joiner rule table.
enum class EndingCategory {
  AVowel,       // आ / ा (covers या-final roots)
  IiVowel,      // ई / ी or इ / ि
  UuVowel,      // ऊ / ू or उ / ु
  EClassVowel,  // ए / े, ऐ / ै, ओ / ो
  Consonant,    // bare consonant, no final matra
  Other,
};

const char* to_string(EndingCategory c);
std::optional<EndingCategory> ending_category_from_string(const std::string& s);

// UTF-8 decoding; throws EncodingError on malformed input.
std::vector<uint32_t> decode_utf8(const std::string& text);
std::string encode_utf8(const std::vector<uint32_t>& cps);
std::string encode_utf8(uint32_t cp);

// Splits text into extended grapheme clusters (base codepoint plus trailing
// combining marks; Devanagari matras, nukta, anusvara, virama and friends
// attach to the preceding base). Concatenation round-trips byte-for-byte.
std::vector<std::string> graphemes(const std::string& text);

// Category of the final grapheme's vowel content; throws ArgumentError on an
// empty root.
EndingCategory ending_category(const std::string& root);

// String surgery used by the joiner actions.
std::string drop_final_matra(const std::string& root);
std::string shorten_final_ii(const std::string& root);  // ी -> ि, ई -> इ
std::string shorten_final_uu(const std::string& root);  // ू -> ु, ऊ -> उ

// Rewrites a suffix-initial independent vowel to its matra form (ए -> े,
// ओं -> ों, ...); returns the suffix unchanged when it does not start with an
// independent vowel.
std::string matra_form(const std::string& suffix);
// Inverse of matra_form on the first codepoint.
std::string independent_form(const std::string& suffix);

}  // namespace morphinject

#endif
