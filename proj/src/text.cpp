#include "morphinject/text.hpp"

#include "morphinject/errors.hpp"

namespace morphinject {

namespace {

bool is_combining(uint32_t cp) {
  // Devanagari signs, matras, nukta, virama, stress marks and vocalic
  // extensions, plus generic combining diacritics and ZWJ/ZWNJ.
  return (cp >= 0x0900 && cp <= 0x0903) || cp == 0x093A || cp == 0x093B ||
         cp == 0x093C || (cp >= 0x093E && cp <= 0x094F) ||
         (cp >= 0x0951 && cp <= 0x0957) || cp == 0x0962 || cp == 0x0963 ||
         (cp >= 0x0300 && cp <= 0x036F) || cp == 0x200C || cp == 0x200D;
}

bool is_matra(uint32_t cp) { return cp >= 0x093E && cp <= 0x094C; }

bool is_devanagari_consonant(uint32_t cp) {
  return (cp >= 0x0915 && cp <= 0x0939) || (cp >= 0x0958 && cp <= 0x095F);
}

// Category contributed by a single codepoint, or nullopt.
std::optional<EndingCategory> vowel_category(uint32_t cp) {
  switch (cp) {
    case 0x093E: case 0x0906:  // ा आ
      return EndingCategory::AVowel;
    case 0x0940: case 0x093F: case 0x0908: case 0x0907:  // ी ि ई इ
      return EndingCategory::IiVowel;
    case 0x0942: case 0x0941: case 0x090A: case 0x0909:  // ू ु ऊ उ
      return EndingCategory::UuVowel;
    case 0x0947: case 0x0948: case 0x094B:               // े ै ो
    case 0x090F: case 0x0910: case 0x0913:               // ए ऐ ओ
      return EndingCategory::EClassVowel;
    default:
      return std::nullopt;
  }
}

}  // namespace

const char* to_string(EndingCategory c) {
  switch (c) {
    case EndingCategory::AVowel: return "A_VOWEL";
    case EndingCategory::IiVowel: return "II_VOWEL";
    case EndingCategory::UuVowel: return "UU_VOWEL";
    case EndingCategory::EClassVowel: return "E_CLASS_VOWEL";
    case EndingCategory::Consonant: return "CONSONANT";
    case EndingCategory::Other: return "OTHER";
  }
  return "OTHER";
}

std::optional<EndingCategory> ending_category_from_string(const std::string& s) {
  if (s == "A_VOWEL") return EndingCategory::AVowel;
  if (s == "II_VOWEL") return EndingCategory::IiVowel;
  if (s == "UU_VOWEL") return EndingCategory::UuVowel;
  if (s == "E_CLASS_VOWEL") return EndingCategory::EClassVowel;
  if (s == "CONSONANT") return EndingCategory::Consonant;
  if (s == "OTHER") return EndingCategory::Other;
  return std::nullopt;
}

std::vector<uint32_t> decode_utf8(const std::string& text) {
  std::vector<uint32_t> out;
  const auto* p = reinterpret_cast<const unsigned char*>(text.data());
  size_t n = text.size();
  size_t i = 0;
  while (i < n) {
    unsigned char b = p[i];
    uint32_t cp = 0;
    size_t len = 0;
    if (b < 0x80) {
      cp = b;
      len = 1;
    } else if ((b & 0xE0) == 0xC0) {
      cp = b & 0x1F;
      len = 2;
    } else if ((b & 0xF0) == 0xE0) {
      cp = b & 0x0F;
      len = 3;
    } else if ((b & 0xF8) == 0xF0) {
      cp = b & 0x07;
      len = 4;
    } else {
      throw EncodingError("malformed UTF-8 at byte " + std::to_string(i));
    }
    if (i + len > n) throw EncodingError("truncated UTF-8 sequence");
    for (size_t k = 1; k < len; ++k) {
      if ((p[i + k] & 0xC0) != 0x80)
        throw EncodingError("malformed UTF-8 continuation at byte " +
                            std::to_string(i + k));
      cp = (cp << 6) | (p[i + k] & 0x3F);
    }
    static const uint32_t kMinForLen[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMinForLen[len])
      throw EncodingError("overlong UTF-8 encoding at byte " + std::to_string(i));
    if (cp >= 0xD800 && cp <= 0xDFFF)
      throw EncodingError("UTF-8 encoded surrogate at byte " + std::to_string(i));
    if (cp > 0x10FFFF)
      throw EncodingError("code point out of range at byte " + std::to_string(i));
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string encode_utf8(uint32_t cp) {
  std::string s;
  if (cp < 0x80) {
    s += static_cast<char>(cp);
  } else if (cp < 0x800) {
    s += static_cast<char>(0xC0 | (cp >> 6));
    s += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    s += static_cast<char>(0xE0 | (cp >> 12));
    s += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    s += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    s += static_cast<char>(0xF0 | (cp >> 18));
    s += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    s += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    s += static_cast<char>(0x80 | (cp & 0x3F));
  }
  return s;
}

std::string encode_utf8(const std::vector<uint32_t>& cps) {
  std::string s;
  for (uint32_t cp : cps) s += encode_utf8(cp);
  return s;
}

std::vector<std::string> graphemes(const std::string& text) {
  std::vector<std::string> out;
  auto cps = decode_utf8(text);
  std::string cluster;
  for (size_t i = 0; i < cps.size(); ++i) {
    if (!cluster.empty() && !is_combining(cps[i])) {
      out.push_back(cluster);
      cluster.clear();
    }
    cluster += encode_utf8(cps[i]);
  }
  if (!cluster.empty()) out.push_back(cluster);
  return out;
}

EndingCategory ending_category(const std::string& root) {
  if (root.empty()) throw ArgumentError("ending_category: empty root");
  auto clusters = graphemes(root);
  auto cps = decode_utf8(clusters.back());
  std::optional<EndingCategory> found;
  for (uint32_t cp : cps) {
    if (auto cat = vowel_category(cp)) found = cat;
  }
  if (found) return *found;
  if (!cps.empty() && is_devanagari_consonant(cps.front()))
    return EndingCategory::Consonant;
  return EndingCategory::Other;
}

std::string drop_final_matra(const std::string& root) {
  auto cps = decode_utf8(root);
  if (!cps.empty() && is_matra(cps.back())) cps.pop_back();
  return encode_utf8(cps);
}

std::string shorten_final_ii(const std::string& root) {
  auto cps = decode_utf8(root);
  if (!cps.empty()) {
    if (cps.back() == 0x0940) cps.back() = 0x093F;       // ी -> ि
    else if (cps.back() == 0x0908) cps.back() = 0x0907;  // ई -> इ
  }
  return encode_utf8(cps);
}

std::string shorten_final_uu(const std::string& root) {
  auto cps = decode_utf8(root);
  if (!cps.empty()) {
    if (cps.back() == 0x0942) cps.back() = 0x0941;       // ू -> ु
    else if (cps.back() == 0x090A) cps.back() = 0x0909;  // ऊ -> उ
  }
  return encode_utf8(cps);
}

namespace {

std::optional<uint32_t> to_matra(uint32_t cp) {
  switch (cp) {
    case 0x0906: return 0x093E;  // आ
    case 0x0907: return 0x093F;  // इ
    case 0x0908: return 0x0940;  // ई
    case 0x0909: return 0x0941;  // उ
    case 0x090A: return 0x0942;  // ऊ
    case 0x090F: return 0x0947;  // ए
    case 0x0910: return 0x0948;  // ऐ
    case 0x0913: return 0x094B;  // ओ
    case 0x0914: return 0x094C;  // औ
    default: return std::nullopt;
  }
}

std::optional<uint32_t> to_independent(uint32_t cp) {
  switch (cp) {
    case 0x093E: return 0x0906;
    case 0x093F: return 0x0907;
    case 0x0940: return 0x0908;
    case 0x0941: return 0x0909;
    case 0x0942: return 0x090A;
    case 0x0947: return 0x090F;
    case 0x0948: return 0x0910;
    case 0x094B: return 0x0913;
    case 0x094C: return 0x0914;
    default: return std::nullopt;
  }
}

}  // namespace

std::string matra_form(const std::string& suffix) {
  auto cps = decode_utf8(suffix);
  if (cps.empty()) return suffix;
  if (auto m = to_matra(cps.front())) {
    cps.front() = *m;
    return encode_utf8(cps);
  }
  return suffix;
}

std::string independent_form(const std::string& suffix) {
  auto cps = decode_utf8(suffix);
  if (cps.empty()) return suffix;
  if (auto v = to_independent(cps.front())) {
    cps.front() = *v;
    return encode_utf8(cps);
  }
  return suffix;
}

}  // namespace morphinject
