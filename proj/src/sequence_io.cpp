#include "polycauchy/sequence_io.hpp"

#include <cctype>
#include <sstream>

namespace polycauchy {

std::vector<Rational> parse_sequence(std::istream& in) {
  std::vector<Rational> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::size_t pos = 0;
    while (pos <= line.size()) {
      std::size_t comma = line.find(',', pos);
      std::string token = line.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
      std::size_t b = 0, e = token.size();
      while (b < e && std::isspace(static_cast<unsigned char>(token[b]))) ++b;
      while (e > b && std::isspace(static_cast<unsigned char>(token[e - 1]))) --e;
      if (e > b) {
        try {
          out.push_back(Rational::parse(token.substr(b, e - b)));
        } catch (const std::invalid_argument& ex) {
          throw SequenceParseError(line_no, ex.what());
        }
      } else if (comma != std::string::npos) {
        throw SequenceParseError(line_no, "empty value between commas");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  return out;
}

}  // namespace polycauchy
