#ifndef MORPHINJECT_FACTORED_HPP
#define MORPHINJECT_FACTORED_HPP

#include <string>
#include <vector>

namespace morphinject {

// One surface token plus its ordered factor values ("null" marks an
// inapplicable factor). Wire format: surface|f1|f2|...
struct FactoredToken {
  std::string surface;
  std::vector<std::string> factors;

  auto operator<=>(const FactoredToken&) const = default;
};

std::string format_factored(const FactoredToken& token);
FactoredToken parse_factored(const std::string& text);

// One sentence per line, tokens space-separated.
std::string format_sentence(const std::vector<FactoredToken>& tokens);
std::vector<FactoredToken> parse_sentence(const std::string& line);

// Pads with "null" to exactly `width` factors; throws WidthError when the
// token is already wider.
FactoredToken normalize_factors(const FactoredToken& token, size_t width);

}  // namespace morphinject

#endif
