#include "pathalg/element.hpp"

#include <cctype>

namespace pathalg {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool looks_numeric(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/')) return false;
  return std::isdigit(static_cast<unsigned char>(s.front())) != 0;
}

}  // namespace

std::string format_element(const Element<FieldValue>& x, const Quiver& quiver, const PathOrder& order) {
  return format_element<FieldValue>(x, quiver, order, [](const FieldValue& c, bool& negative) {
    negative = c.sign() < 0;
    FieldValue a = negative ? -c : c;
    return a.is_one() ? std::string() : a.to_string();
  });
}

std::string format_element(const Element<Polynomial>& x, const Quiver& quiver, const PathOrder& order,
                           const VariableTable& vars) {
  return format_element<Polynomial>(x, quiver, order, [&vars](const Polynomial& c, bool& negative) {
    if (c.terms().size() == 1) {
      negative = c.leading_coefficient().sign() < 0;
      Polynomial a = negative ? -c : c;
      return a.is_one() ? std::string() : to_string(a, vars);
    }
    negative = false;
    return "(" + to_string(c, vars) + ")";
  });
}

Element<FieldValue> parse_element(std::string_view text, const Quiver& quiver, std::uint64_t modulus) {
  text = trim(text);
  if (text.empty()) throw ConfigError("empty element");
  Element<FieldValue> out;
  std::optional<VertexId> origin;
  std::optional<VertexId> terminus;
  std::size_t pos = 0;
  bool first = true;
  while (pos < text.size()) {
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
    } else if (!first) {
      throw ConfigError("expected '+' or '-' in '" + std::string(text) + "'");
    }
    first = false;
    std::size_t end = text.find_first_of("+-", pos);
    std::string_view term = trim(text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
    pos = end == std::string_view::npos ? text.size() : end;
    if (term.empty()) throw ConfigError("missing term in '" + std::string(text) + "'");

    FieldValue coeff(1);
    std::string_view path_text = term;
    std::size_t star = term.find('*');
    std::string_view head = trim(term.substr(0, star));
    if (looks_numeric(head)) {
      coeff = FieldValue::parse(head, modulus);
      if (star == std::string_view::npos) {
        if (quiver.vertex_count() != 1)
          throw ConfigError("bare number '" + std::string(head) + "' needs a one-vertex quiver");
        path_text = {};
      } else {
        path_text = trim(term.substr(star + 1));
      }
    } else if (modulus != 0) {
      coeff = FieldValue::modular(1, modulus);
    }
    if (negative) coeff = -coeff;
    Path p = path_text.empty() ? Path::trivial(VertexId{0}) : quiver.parse_path(path_text);
    if (origin && (p.origin() != *origin || p.terminus() != *terminus))
      throw ConfigError("element '" + std::string(text) + "' is not uniform");
    origin = p.origin();
    terminus = p.terminus();
    out.add_term(p, coeff);
  }
  return out;
}

}  // namespace pathalg
