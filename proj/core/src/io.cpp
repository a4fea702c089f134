#include "sidon/io.hpp"

#include <cctype>
#include <string>

namespace sidon {

namespace {

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::vector<Rational> read_scalar_lines(std::istream& in) {
  std::vector<Rational> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = trimmed(view);
    if (view.empty()) continue;
    out.push_back(Rational::parse(view));
  }
  return out;
}

std::vector<Rational> parse_rational_csv(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view field =
        text.substr(start, comma == std::string_view::npos
                               ? std::string_view::npos
                               : comma - start);
    out.push_back(Rational::parse(field));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace sidon
