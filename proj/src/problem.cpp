#include "pathalg/problem.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>

#include "pathalg/error.hpp"

namespace pathalg {

PathOrder ProblemFile::order() const { return PathOrder(quiver, order_kind, arrow_precedence, vertex_precedence); }

bool operator==(const ProblemFile& a, const ProblemFile& b) {
  return a.quiver == b.quiver && a.order_kind == b.order_kind && a.arrow_precedence == b.arrow_precedence &&
         a.vertex_precedence == b.vertex_precedence && a.weights == b.weights && a.tips == b.tips &&
         a.generators == b.generators && a.phi == b.phi && a.admissible_m == b.admissible_m;
}

namespace {

struct Line {
  std::size_t number;
  std::size_t indent;  // column of the first non-blank character, 0-based
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t at = s.find(sep, pos);
    out.push_back(trim(s.substr(pos, at == std::string_view::npos ? std::string_view::npos : at - pos)));
    if (at == std::string_view::npos) return out;
    pos = at + 1;
  }
}

[[noreturn]] void fail(std::string_view code, const Line& line, const std::string& what, std::size_t offset = 0) {
  throw ParseError(std::string(code), line.number, line.indent + offset + 1, what);
}

std::size_t offset_of(const Line& line, std::string_view part) {
  if (part.data() >= line.text.data() && part.data() <= line.text.data() + line.text.size())
    return static_cast<std::size_t>(part.data() - line.text.data());
  return 0;
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

// key = value with a nonempty key.
std::pair<std::string_view, std::string_view> key_value(const Line& line) {
  std::size_t eq = line.text.find('=');
  if (eq == std::string_view::npos) fail(diag::syntax, line, "expected 'key = value'");
  std::string_view key = trim(line.text.substr(0, eq));
  std::string_view value = trim(line.text.substr(eq + 1));
  if (key.empty()) fail(diag::syntax, line, "missing key before '='");
  return {key, value};
}

Path parse_path_at(const Quiver& q, const Line& line, std::string_view text) {
  text = trim(text);
  if (text.empty()) fail(diag::syntax, line, "empty path", offset_of(line, text));
  if (text.size() > 2 && text.substr(0, 2) == "e_" && text.find('*') == std::string_view::npos) {
    auto v = q.find_vertex(text.substr(2));
    if (!v) fail(diag::unknown_vertex, line, "unknown vertex '" + std::string(text.substr(2)) + "'", offset_of(line, text));
    return Path::trivial(*v);
  }
  std::vector<ArrowId> arrows;
  for (std::string_view tok : split(text, '*')) {
    auto a = q.find_arrow(tok);
    if (!a) fail(diag::unknown_arrow, line, "unknown arrow '" + std::string(tok) + "'", offset_of(line, tok));
    if (!arrows.empty() && q.arrow(arrows.back()).target != q.arrow(*a).source)
      fail(diag::non_composing, line,
           "path '" + std::string(text) + "' does not compose at '" + std::string(tok) + "'", offset_of(line, tok));
    arrows.push_back(*a);
  }
  const VertexId origin = q.arrow(arrows.front()).source;
  return q.make_path(origin, std::move(arrows));
}

FieldValue parse_value(const Line& line, std::string_view text, std::uint64_t modulus) {
  try {
    return FieldValue::parse(text, modulus);
  } catch (const Error& e) {
    fail(diag::bad_value, line, e.what(), offset_of(line, text));
  }
}

const std::set<std::string, std::less<>> known_sections{"quiver", "order", "weights", "tips", "generators", "phi",
                                                        "admissible"};

}  // namespace

ProblemFile parse_problem(std::string_view text, std::uint64_t modulus) {
  // Split into sections, keeping line numbers.
  std::map<std::string, std::vector<Line>, std::less<>> sections;
  std::map<std::string, Line, std::less<>> headers;
  std::string current;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++number;
    std::size_t hash = raw.find('#');
    std::string_view body = trim(raw.substr(0, hash));
    if (body.empty()) continue;
    Line line{number, static_cast<std::size_t>(body.data() - raw.data()), body};
    if (body.front() == '[') {
      if (body.back() != ']') fail(diag::syntax, line, "unterminated section header");
      std::string name(trim(body.substr(1, body.size() - 2)));
      if (!known_sections.count(name)) fail(diag::unknown_section, line, "unknown section [" + name + "]");
      if (headers.count(name)) fail(diag::duplicate_name, line, "section [" + name + "] appears twice");
      headers.emplace(name, line);
      sections[name];
      current = name;
      continue;
    }
    if (current.empty()) fail(diag::syntax, line, "content before the first section header");
    sections[current].push_back(line);
  }
  const Line eof{number, 0, {}};

  if (!headers.count("quiver")) fail(diag::missing_section, eof, "missing section [quiver]");
  if (headers.count("tips") && headers.count("generators"))
    fail(diag::tips_and_generators, headers.at("generators"), "give either [tips] or [generators], not both");
  if (!headers.count("tips") && !headers.count("generators"))
    fail(diag::missing_section, eof, "missing section [tips] or [generators]");

  ProblemFile p;

  // [quiver]
  {
    std::vector<std::string> vertices;
    std::vector<ArrowSpec> arrows;
    std::set<std::string, std::less<>> names;
    bool have_vertices = false;
    auto check_name = [&](const Line& line, std::string_view name) {
      if (!names.insert(std::string(name)).second)
        fail(diag::duplicate_name, line, "duplicate name '" + std::string(name) + "'", offset_of(line, name));
    };
    for (const Line& line : sections["quiver"]) {
      if (line.text.find("->") != std::string_view::npos) {
        std::size_t colon = line.text.find(':');
        if (colon == std::string_view::npos) fail(diag::syntax, line, "expected 'name: source -> target'");
        std::string_view name = trim(line.text.substr(0, colon));
        auto ends = line.text.substr(colon + 1);
        std::size_t arrow = ends.find("->");
        std::string_view src = trim(ends.substr(0, arrow));
        std::string_view dst = trim(ends.substr(arrow + 2));
        if (name.empty() || src.empty() || dst.empty()) fail(diag::syntax, line, "expected 'name: source -> target'");
        check_name(line, name);
        for (std::string_view v : {src, dst})
          if (std::find(vertices.begin(), vertices.end(), v) == vertices.end())
            fail(diag::unknown_vertex, line, "unknown vertex '" + std::string(v) + "'", offset_of(line, v));
        arrows.push_back({std::string(name), std::string(src), std::string(dst)});
        continue;
      }
      auto [key, value] = key_value(line);
      if (key != "vertices") fail(diag::syntax, line, "unknown key '" + std::string(key) + "' in [quiver]");
      if (have_vertices) fail(diag::duplicate_name, line, "vertices listed twice");
      have_vertices = true;
      if (!value.empty())
        for (std::string_view v : split(value, ',')) {
          if (v.empty()) fail(diag::syntax, line, "empty vertex name", offset_of(line, value));
          check_name(line, v);
          vertices.emplace_back(v);
        }
    }
    if (!have_vertices) fail(diag::missing_section, headers.at("quiver"), "[quiver] needs a 'vertices = ...' line");
    try {
      p.quiver = Quiver(vertices, arrows);
    } catch (const ConfigError& e) {
      fail(diag::syntax, headers.at("quiver"), e.what());
    }
  }
  const Quiver& q = p.quiver;

  // [order]
  for (VertexId v : q.vertices()) p.vertex_precedence.push_back(v);
  for (ArrowId a : q.arrows()) p.arrow_precedence.push_back(a);
  for (const Line& line : sections["order"]) {
    auto [key, value] = key_value(line);
    if (key == "kind") {
      try {
        p.order_kind = parse_order_kind(value);
      } catch (const ConfigError& e) {
        fail(diag::bad_value, line, e.what(), offset_of(line, value));
      }
    } else if (key == "arrows") {
      std::vector<ArrowId> prec;
      if (!value.empty())
        for (std::string_view tok : split(value, '>')) {
          auto a = q.find_arrow(tok);
          if (!a) fail(diag::unknown_arrow, line, "unknown arrow '" + std::string(tok) + "'", offset_of(line, tok));
          if (std::find(prec.begin(), prec.end(), *a) != prec.end())
            fail(diag::bad_value, line, "arrow '" + std::string(tok) + "' listed twice", offset_of(line, tok));
          prec.push_back(*a);
        }
      if (prec.size() != q.arrow_count())
        fail(diag::bad_value, line, "arrow precedence must list every arrow", offset_of(line, value));
      p.arrow_precedence = std::move(prec);
    } else if (key == "vertices") {
      std::vector<VertexId> prec;
      for (std::string_view tok : split(value, '>')) {
        auto v = q.find_vertex(tok);
        if (!v) fail(diag::unknown_vertex, line, "unknown vertex '" + std::string(tok) + "'", offset_of(line, tok));
        if (std::find(prec.begin(), prec.end(), *v) != prec.end())
          fail(diag::bad_value, line, "vertex '" + std::string(tok) + "' listed twice", offset_of(line, tok));
        prec.push_back(*v);
      }
      if (prec.size() != q.vertex_count())
        fail(diag::bad_value, line, "vertex precedence must list every vertex", offset_of(line, value));
      p.vertex_precedence = std::move(prec);
    } else {
      fail(diag::syntax, line, "unknown key '" + std::string(key) + "' in [order]");
    }
  }

  // [weights]
  if (headers.count("weights")) {
    WeightGroup group = WeightGroup::integers();
    std::vector<std::optional<std::int64_t>> ws(q.arrow_count());
    for (const Line& line : sections["weights"]) {
      auto [key, value] = key_value(line);
      if (key == "group") {
        if (value == "Z") {
          group = WeightGroup::integers();
        } else if (value.substr(0, 2) == "Z/") {
          auto m = parse_int(value.substr(2));
          if (!m || *m < 1) fail(diag::bad_value, line, "bad group '" + std::string(value) + "'", offset_of(line, value));
          group = WeightGroup::cyclic(*m);
        } else {
          fail(diag::bad_value, line, "group must be Z or Z/m", offset_of(line, value));
        }
        continue;
      }
      auto a = q.find_arrow(key);
      if (!a) fail(diag::unknown_arrow, line, "unknown arrow '" + std::string(key) + "'");
      auto w = parse_int(value);
      if (!w) fail(diag::bad_value, line, "weight must be an integer", offset_of(line, value));
      if (ws[a->index]) fail(diag::duplicate_name, line, "weight of '" + std::string(key) + "' given twice");
      ws[a->index] = *w;
    }
    p.weights = WeightFunction(group, std::move(ws));
  }

  // [tips] / [generators]
  if (headers.count("tips")) {
    std::vector<Path> tips;
    for (const Line& line : sections["tips"]) tips.push_back(parse_path_at(q, line, line.text));
    p.tips = std::move(tips);
  } else {
    std::vector<KElement> gens;
    for (const Line& line : sections["generators"]) {
      try {
        gens.push_back(parse_element(line.text, q, modulus));
      } catch (const Error& e) {
        std::string_view msg = e.what();
        std::string_view code = diag::syntax;
        if (msg.find("unknown arrow") != std::string_view::npos) code = diag::unknown_arrow;
        else if (msg.find("does not compose") != std::string_view::npos) code = diag::non_composing;
        else if (msg.find("unknown vertex") != std::string_view::npos) code = diag::unknown_vertex;
        else if (msg.find("invalid number") != std::string_view::npos || msg.find("denominator") != std::string_view::npos)
          code = diag::bad_value;
        fail(code, line, std::string(msg));
      }
    }
    p.generators = std::move(gens);
  }

  // [phi]
  for (const Line& line : sections["phi"]) {
    auto [key, value] = key_value(line);
    auto parts = split(key, ';');
    if (parts.size() != 2) fail(diag::syntax, line, "expected 'tip ; tail = value'");
    p.phi.push_back({parse_path_at(q, line, parts[0]), parse_path_at(q, line, parts[1]), parse_value(line, value, modulus)});
  }

  // [admissible]
  if (headers.count("admissible")) {
    for (const Line& line : sections["admissible"]) {
      auto [key, value] = key_value(line);
      if (key != "m") fail(diag::syntax, line, "unknown key '" + std::string(key) + "' in [admissible]");
      auto m = parse_int(value);
      if (!m || *m < 2) fail(diag::bad_value, line, "m must be an integer >= 2", offset_of(line, value));
      p.admissible_m = static_cast<std::size_t>(*m);
    }
    if (!p.admissible_m) fail(diag::missing_section, headers.at("admissible"), "[admissible] needs 'm = <n>'");
  }
  return p;
}

std::string print_problem(const ProblemFile& p) {
  const Quiver& q = p.quiver;
  std::string out = "[quiver]\nvertices = ";
  for (std::size_t i = 0; i < q.vertex_count(); ++i)
    out += (i ? ", " : "") + q.vertex_name(VertexId{static_cast<std::uint32_t>(i)});
  out += "\n";
  for (ArrowId a : q.arrows()) {
    const Arrow& arr = q.arrow(a);
    out += arr.name + ": " + q.vertex_name(arr.source) + " -> " + q.vertex_name(arr.target) + "\n";
  }

  out += "\n[order]\nkind = " + std::string(to_string(p.order_kind)) + "\n";
  if (!p.arrow_precedence.empty()) {
    out += "arrows = ";
    for (std::size_t i = 0; i < p.arrow_precedence.size(); ++i)
      out += (i ? " > " : "") + q.arrow(p.arrow_precedence[i]).name;
    out += "\n";
  }
  if (!p.vertex_precedence.empty()) {
    out += "vertices = ";
    for (std::size_t i = 0; i < p.vertex_precedence.size(); ++i)
      out += (i ? " > " : "") + q.vertex_name(p.vertex_precedence[i]);
    out += "\n";
  }

  if (p.weights) {
    const WeightGroup& g = p.weights->group();
    out += "\n[weights]\ngroup = " + (g.is_integers() ? std::string("Z") : "Z/" + std::to_string(g.modulus())) + "\n";
    for (ArrowId a : q.arrows())
      if (auto w = p.weights->arrow_weight(a)) out += q.arrow(a).name + " = " + std::to_string(*w) + "\n";
  }

  PathOrder order = p.order();
  if (p.tips) {
    out += "\n[tips]\n";
    for (const Path& t : *p.tips) out += q.format(t) + "\n";
  }
  if (p.generators) {
    out += "\n[generators]\n";
    for (const KElement& g : *p.generators) out += format_element(g, q, order) + "\n";
  }
  if (!p.phi.empty()) {
    out += "\n[phi]\n";
    for (const PhiEntry& e : p.phi) out += q.format(e.tip) + " ; " + q.format(e.tail) + " = " + e.value.to_string() + "\n";
  }
  if (p.admissible_m) out += "\n[admissible]\nm = " + std::to_string(*p.admissible_m) + "\n";
  return out;
}

}  // namespace pathalg
