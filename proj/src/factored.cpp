#include "morphinject/factored.hpp"

#include <sstream>

#include "morphinject/errors.hpp"

namespace morphinject {

std::string format_factored(const FactoredToken& token) {
  std::string s = token.surface;
  for (const auto& f : token.factors) {
    s += '|';
    s += f;
  }
  return s;
}

FactoredToken parse_factored(const std::string& text) {
  FactoredToken token;
  size_t start = 0;
  bool first = true;
  while (true) {
    size_t bar = text.find('|', start);
    std::string piece = text.substr(start, bar == std::string::npos ? bar : bar - start);
    if (first) {
      token.surface = piece;
      first = false;
    } else {
      token.factors.push_back(piece);
    }
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return token;
}

std::string format_sentence(const std::vector<FactoredToken>& tokens) {
  std::string s;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) s += ' ';
    s += format_factored(tokens[i]);
  }
  return s;
}

std::vector<FactoredToken> parse_sentence(const std::string& line) {
  std::vector<FactoredToken> tokens;
  std::stringstream ss(line);
  std::string word;
  while (ss >> word) tokens.push_back(parse_factored(word));
  return tokens;
}

FactoredToken normalize_factors(const FactoredToken& token, size_t width) {
  if (token.factors.size() > width)
    throw WidthError("token '" + format_factored(token) + "' has " +
                     std::to_string(token.factors.size()) +
                     " factors, exceeds width " + std::to_string(width));
  FactoredToken out = token;
  while (out.factors.size() < width) out.factors.emplace_back("null");
  return out;
}

}  // namespace morphinject
