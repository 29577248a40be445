#include "pathalg/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "pathalg/error.hpp"
#include "pathalg/groebner.hpp"
#include "pathalg/monomial.hpp"
#include "pathalg/problem.hpp"
#include "pathalg/resolution.hpp"
#include "pathalg/variety.hpp"

namespace pathalg::cli {

using nlohmann::json;

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

namespace {

const std::vector<std::string> commands{"groebner",    "variety", "variety-graded", "variety-special",
                                        "variety-admissible", "nontips", "dimension", "hilbert",
                                        "cartan",      "betti",   "gldim",          "membership",
                                        "point-check"};

struct Options {
  std::string command;
  std::string problem;
  std::string format = "text";
  std::size_t max_tip_length = CompletionCaps{}.max_tip_length;
  std::size_t max_pairs = CompletionCaps{}.max_pair_count;
  std::size_t truncate = 10;
  std::size_t nmax = 8;
  unsigned jobs = 1;
  std::size_t m = 0;
  std::uint64_t prime = 0;
  std::optional<std::size_t> max_length;
  std::string degrees;
  std::string element;
  std::string point;
  std::string variant = "plain";
};

struct UsageError : Error {
  using Error::Error;
};

json number(const BigInt& n) {
  if (n.fits_slong_p()) return json(n.get_si());
  return json(n.get_str());
}

json polynomial_json(const Polynomial& f, const VariableTable& vars) {
  json terms = json::array();
  for (const auto& [mono, c] : f.terms()) {
    json m = json::object();
    for (const auto& [v, e] : mono.factors()) m[vars.name(v)] = e;
    terms.push_back({{"coeff", c.to_string()}, {"monomial", m}});
  }
  return terms;
}

struct Context {
  Options opt;
  ProblemFile pf;
  PathOrder order;

  const Quiver& q() const { return pf.quiver; }
  CompletionCaps caps() const { return {opt.max_tip_length, opt.max_pairs}; }

  std::vector<KElement> generators() const {
    if (pf.generators) return *pf.generators;
    std::vector<KElement> out;
    for (const Path& t : *pf.tips) out.emplace_back(t, FieldValue(1).in_field(opt.prime));
    return out;
  }

  std::vector<Path> tips() const {
    if (pf.tips) return *pf.tips;
    auto gens = generators();
    GroebnerBasis gb = buchberger(q(), gens, order, caps());
    if (!gb.is_complete())
      throw MathError("E-CAPPED", "tip set unavailable: completion stopped (" + std::string(to_string(gb.status)) + ")");
    return associated_monomial(gb);
  }

  MonomialData monomial() const {
    auto t = tips();
    return MonomialData(q(), t);
  }

  WeightFunction weights() const { return pf.weights ? *pf.weights : WeightFunction::constant(q()); }

  std::string path(const Path& p) const { return q().format(p); }
};

struct Rendered {
  json result;
  std::string text;
};

std::string join(const std::vector<std::string>& xs, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? std::string(sep) : "") + xs[i];
  return out;
}

Rendered cmd_groebner(const Context& c) {
  auto gens = c.generators();
  GroebnerBasis gb = buchberger(c.q(), gens, c.order, c.caps());
  bool complete = gb.is_complete();
  GroebnerBasis shown = complete ? reduced_basis(gb) : gb;
  json basis = json::array();
  json tips = json::array();
  std::string text = "status: " + std::string(to_string(gb.status)) + "\npairs processed: " +
                     std::to_string(gb.pairs_processed) + "\n" + (complete ? "reduced basis:\n" : "partial basis:\n");
  for (const auto& g : shown.generators) {
    std::string s = format_element(g, c.q(), c.order);
    basis.push_back(s);
    tips.push_back(c.path(tip(g, c.order)));
    text += "  " + s + "\n";
  }
  return {{{"status", to_string(gb.status)},
           {"pairs_processed", gb.pairs_processed},
           {"reduced", complete},
           {"basis", basis},
           {"tips", tips}},
          text};
}

VarietyPresentation build_presentation(const Context& c, std::string_view variant) {
  TailSpace ts = tail_space(c.monomial(), c.order);
  if (variant == "plain") return variety_equations(ts, c.opt.jobs);
  if (variant == "graded") {
    VarietyPresentation vp = variety_equations(graded_tail_space(ts, c.weights()), c.opt.jobs);
    vp.kind = VarietyKind::graded;
    return vp;
  }
  if (variant == "special") {
    std::vector<Pin> pins;
    for (const auto& e : c.pf.phi) pins.push_back({e.tip, e.tail, e.value});
    return special_subvariety(variety_equations(ts, c.opt.jobs), pins);
  }
  if (variant == "admissible") {
    std::size_t m = c.opt.m ? c.opt.m : c.pf.admissible_m.value_or(0);
    if (m == 0) throw UsageError("variety-admissible needs --m or an [admissible] section");
    return admissible_equations(ts, m, c.opt.jobs);
  }
  throw UsageError("unknown variant '" + std::string(variant) + "'");
}

Rendered render_presentation(const Context& c, const VarietyPresentation& vp) {
  const TailSpace& ts = vp.space;
  const VariableTable& vars = ts.variables();
  json variables = json::array();
  std::string text = "variety (" + std::string(to_string(vp.kind)) + ")";
  if (vp.power) text += " m = " + std::to_string(*vp.power);
  text += "\ntips: " + std::to_string(ts.tips().size()) + "\nvariables: " + std::to_string(ts.dimension()) + "\n";
  for (VarId v = 0; v < ts.dimension(); ++v) {
    const auto& e = ts.entry(v);
    variables.push_back({{"name", vars.name(v)}, {"tip", c.path(ts.tips()[e.tip])}, {"tail", c.path(e.tail)}});
    text += "  " + vars.name(v) + "\n";
  }
  json gens = json::array();
  text += "generators:\n";
  for (const auto& h : vp.generators) {
    std::string s = format_element(h, c.q(), c.order, vars);
    gens.push_back(s);
    text += "  " + s + "\n";
  }
  json overlaps = json::array();
  text += "overlaps: " + std::to_string(vp.overlaps.size()) + "\n";
  for (const auto& o : vp.overlaps) {
    std::string rel = format_element(o.relation, c.q(), c.order, vars);
    overlaps.push_back({{"first", c.path(ts.tips()[o.first])},
                        {"second", c.path(ts.tips()[o.second])},
                        {"left", c.path(o.left)},
                        {"right", c.path(o.right)},
                        {"relation", rel}});
    text += "  o(" + c.path(ts.tips()[o.first]) + ", " + c.path(ts.tips()[o.second]) + ", " + c.path(o.right) +
            ", " + c.path(o.left) + ") = " + rel + "\n";
  }
  json eqs = json::array();
  json eq_text = json::array();
  text += "equations: " + std::to_string(vp.equations.size()) + "\n";
  for (const auto& f : vp.equations) {
    eqs.push_back(polynomial_json(f, vars));
    eq_text.push_back(to_string(f, vars));
    text += "  " + to_string(f, vars) + "\n";
  }
  json result{{"kind", to_string(vp.kind)},
              {"dimension", ts.dimension()},
              {"variables", variables},
              {"generators", gens},
              {"overlaps", overlaps},
              {"equations", eqs},
              {"equations_text", eq_text}};
  if (vp.power) result["m"] = *vp.power;
  if (vp.kind == VarietyKind::special) {
    json el = json::array();
    json el_text = json::array();
    text += "eliminated: " + std::to_string(vp.eliminated.size()) + "\n";
    for (const auto& f : vp.eliminated) {
      el.push_back(polynomial_json(f, vars));
      el_text.push_back(to_string(f, vars));
      text += "  " + to_string(f, vars) + "\n";
    }
    result["eliminated"] = el;
    result["eliminated_text"] = el_text;
  }
  return {result, text};
}

Rendered cmd_nontips(const Context& c) {
  MonomialData md = c.monomial();
  std::vector<Path> ns = c.opt.max_length ? md.nontips(*c.opt.max_length, c.order) : md.nontips(c.order);
  json list = json::array();
  std::vector<std::string> names;
  for (const Path& p : ns) {
    list.push_back(c.path(p));
    names.push_back(c.path(p));
  }
  json result{{"finite", md.is_finite_dimensional()}, {"count", ns.size()}, {"nontips", list}};
  if (c.opt.max_length) result["max_length"] = *c.opt.max_length;
  return {result, "nontips (" + std::to_string(ns.size()) + "): " + join(names, ", ") + "\n"};
}

std::vector<std::int64_t> parse_degrees(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("bad degree '" + tok + "'");
    }
  }
  return out;
}

Rendered cmd_dimension(const Context& c) {
  MonomialData md = c.monomial();
  if (!c.opt.degrees.empty()) {
    auto degrees = parse_degrees(c.opt.degrees);
    auto dims = md.graded_dimensions(c.weights(), degrees);
    json graded = json::object();
    std::string text;
    for (const auto& [g, n] : dims) {
      graded[std::to_string(g)] = number(n);
      text += "degree " + std::to_string(g) + ": " + n.get_str() + "\n";
    }
    return {{{"graded", graded}}, text};
  }
  auto dim = md.dimension();
  json result{{"finite", dim.has_value()}, {"dimension", dim ? number(*dim) : json("infinite")}};
  return {result, "dimension: " + (dim ? dim->get_str() : std::string("infinite")) + "\n"};
}

Rendered cmd_hilbert(const Context& c) {
  auto h = c.monomial().hilbert_series(c.opt.truncate);
  json list = json::array();
  std::vector<std::string> parts;
  for (const auto& n : h) {
    list.push_back(number(n));
    parts.push_back(n.get_str());
  }
  return {{{"truncation", c.opt.truncate}, {"coefficients", list}}, "[" + join(parts, ",") + "]\n"};
}

json gldim_json(const GlobalDimension& g) { return {{"value", g.value}, {"at_least", g.at_least}}; }

std::string gldim_text(const GlobalDimension& g) {
  return (g.at_least ? ">= " : "") + std::to_string(g.value);
}

Rendered cmd_cartan(const Context& c) {
  MonomialData md = c.monomial();
  auto matrix = md.cartan_matrix();
  CartanReport r = cartan_check(md, c.opt.nmax);
  json rows = json::array();
  std::string text = "cartan matrix:\n";
  for (const auto& row : matrix) {
    json jr = json::array();
    std::vector<std::string> parts;
    for (const auto& x : row) {
      jr.push_back(number(x));
      parts.push_back(x.get_str());
    }
    rows.push_back(jr);
    text += "  [" + join(parts, " ") + "]\n";
  }
  json vertices = json::array();
  for (VertexId v : c.q().vertices()) vertices.push_back(c.q().vertex_name(v));
  text += "det: " + r.det.get_str() + "\ngldim: " + gldim_text(r.gldim) + "\nverdict: " +
          std::string(to_string(r.verdict)) + "\n";
  return {{{"vertices", vertices},
           {"matrix", rows},
           {"det", number(r.det)},
           {"gldim", gldim_json(r.gldim)},
           {"verdict", to_string(r.verdict)}},
          text};
}

Rendered cmd_betti(const Context& c) {
  MonomialData md = c.monomial();
  json per_vertex = json::array();
  std::string text;
  for (VertexId v : c.q().vertices()) {
    BettiTable t = betti(md, v, c.opt.nmax);
    json rows = json::array();
    json sums = json::array();
    std::vector<std::string> sum_text;
    for (const auto& row : t) {
      rows.push_back(row);
      std::size_t s = 0;
      for (auto x : row) s += x;
      sums.push_back(s);
      sum_text.push_back(std::to_string(s));
    }
    per_vertex.push_back({{"vertex", c.q().vertex_name(v)}, {"table", rows}, {"row_sums", sums}});
    text += "vertex " + c.q().vertex_name(v) + ": " + join(sum_text, " ") + "\n";
  }
  return {{{"nmax", c.opt.nmax}, {"vertices", per_vertex}}, text};
}

Rendered cmd_gldim(const Context& c) {
  GlobalDimension g = global_dimension(c.monomial(), c.opt.nmax);
  return {gldim_json(g), "gldim: " + gldim_text(g) + "\n"};
}

Rendered cmd_membership(const Context& c) {
  if (c.opt.element.empty()) throw UsageError("membership needs --element");
  KElement x;
  try {
    x = parse_element(c.opt.element, c.q(), c.opt.prime);
  } catch (const ConfigError& e) {
    throw UsageError(std::string("--element: ") + e.what());
  }
  auto gens = c.generators();
  GroebnerBasis gb = buchberger(c.q(), gens, c.order, c.caps());
  MembershipResult m = membership(x, gb);
  std::string rem = format_element(m.trace.result, c.q(), c.order);
  return {{{"answer", to_string(m.answer)},
           {"status", to_string(gb.status)},
           {"remainder", rem},
           {"steps", m.trace.steps.size()}},
          "member: " + std::string(to_string(m.answer)) + "\nremainder: " + rem + "\n"};
}

Rendered cmd_point_check(const Context& c) {
  VarietyPresentation vp = build_presentation(c, c.opt.variant);
  AlgebraPoint point;
  if (!c.opt.point.empty()) {
    std::stringstream ss(c.opt.point);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        point.push_back(FieldValue::parse(tok, c.opt.prime));
      } catch (const ConfigError& e) {
        throw UsageError(std::string("--point: ") + e.what());
      }
    }
  }
  if (point.size() != vp.space.dimension())
    throw UsageError("--point needs " + std::to_string(vp.space.dimension()) + " comma-separated values");
  auto bad = violated_equations(vp, point);
  json violated = json::array();
  std::string text;
  for (std::size_t i : bad) violated.push_back(to_string(vp.equations[i], vp.space.variables()));
  json result{{"variant", to_string(vp.kind)}, {"on_variety", bad.empty()}, {"violated", violated}};
  if (!bad.empty()) {
    text = "on variety: false\nviolated:\n";
    for (std::size_t i : bad) text += "  " + to_string(vp.equations[i], vp.space.variables()) + "\n";
    return {result, text};
  }
  GroebnerBasis gb = point_to_algebra(vp, point);
  json basis = json::array();
  text = "on variety: true\ncertified: true\nreduced basis:\n";
  for (const auto& g : gb.generators) {
    basis.push_back(format_element(g, c.q(), c.order));
    text += "  " + format_element(g, c.q(), c.order) + "\n";
  }
  result["certified"] = true;
  result["basis"] = basis;
  return {result, text};
}

Rendered dispatch(const Context& c) {
  const std::string& cmd = c.opt.command;
  if (cmd == "groebner") return cmd_groebner(c);
  if (cmd == "variety") return render_presentation(c, build_presentation(c, "plain"));
  if (cmd == "variety-graded") return render_presentation(c, build_presentation(c, "graded"));
  if (cmd == "variety-special") return render_presentation(c, build_presentation(c, "special"));
  if (cmd == "variety-admissible") return render_presentation(c, build_presentation(c, "admissible"));
  if (cmd == "nontips") return cmd_nontips(c);
  if (cmd == "dimension") return cmd_dimension(c);
  if (cmd == "hilbert") return cmd_hilbert(c);
  if (cmd == "cartan") return cmd_cartan(c);
  if (cmd == "betti") return cmd_betti(c);
  if (cmd == "gldim") return cmd_gldim(c);
  if (cmd == "membership") return cmd_membership(c);
  return cmd_point_check(c);
}

Outcome failure(const Options& opt, int code, const std::string& diag, const std::string& message,
                std::optional<std::pair<std::size_t, std::size_t>> where = std::nullopt) {
  Outcome o;
  o.exit_code = code;
  o.err = "error " + diag;
  if (where) o.err += " at line " + std::to_string(where->first) + ", column " + std::to_string(where->second);
  o.err += ": " + message + "\n";
  if (opt.format == "json") {
    json e{{"code", diag}, {"message", message}};
    if (where) {
      e["line"] = where->first;
      e["column"] = where->second;
    }
    o.out = json{{"command", opt.command}, {"error", e}}.dump(2) + "\n";
  }
  return o;
}

}  // namespace

Outcome run(const std::vector<std::string>& args, std::string_view stdin_text) {
  Options opt;
  CLI::App app{"Groebner bases, nontips, varieties and resolutions for path algebras", "pathalg"};
  app.add_option("command", opt.command, "Subcommand")->required()->check(CLI::IsMember(commands));
  app.add_option("problem", opt.problem, "Problem file, or - for stdin")->required();
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-tip-length", opt.max_tip_length, "Completion cap on tip length")->check(CLI::PositiveNumber);
  app.add_option("--max-pairs", opt.max_pairs, "Completion cap on processed pairs")->check(CLI::PositiveNumber);
  app.add_option("--truncate", opt.truncate, "Last degree of the Hilbert series");
  app.add_option("--nmax", opt.nmax, "Largest homological degree for chains");
  app.add_option("--jobs", opt.jobs, "Threads for overlap reduction")->check(CLI::PositiveNumber);
  app.add_option("--m", opt.m, "Power m for the admissible variety")->check(CLI::Range(2, 1 << 20));
  app.add_option("--prime", opt.prime, "Work over GF(p) instead of Q");
  app.add_option("--max-length", opt.max_length, "Longest nontip to list");
  app.add_option("--degrees", opt.degrees, "Comma-separated degrees for graded dimensions");
  app.add_option("--element", opt.element, "Element for membership");
  app.add_option("--point", opt.point, "Comma-separated coordinates for point-check");
  app.add_option("--variant", opt.variant, "Variety for point-check")
      ->check(CLI::IsMember({"plain", "graded", "special", "admissible"}));

  std::vector<const char*> argv{"pathalg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    return {0, app.help(), ""};
  } catch (const CLI::ParseError& e) {
    return {1, "", "usage error: " + std::string(e.what()) + "\n" + app.help()};
  }

  std::string text;
  if (opt.problem == "-") {
    text = std::string(stdin_text);
  } else {
    std::ifstream in(opt.problem, std::ios::binary);
    if (!in) return failure(opt, 1, "E-IO", "cannot read '" + opt.problem + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }

  try {
    Context c{opt, parse_problem(text, opt.prime), {}};
    c.order = c.pf.order();
    Rendered r = dispatch(c);
    if (opt.format == "json") {
      json doc{{"command", opt.command}, {"input-digest", "sha256:" + sha256_hex(text)}, {"result", r.result}};
      return {0, doc.dump(2) + "\n", ""};
    }
    return {0, r.text, ""};
  } catch (const ParseError& e) {
    return failure(opt, 1, e.code(), e.message(), std::make_pair(e.line(), e.column()));
  } catch (const UsageError& e) {
    return failure(opt, 1, "E-USAGE", e.what());
  } catch (const MathError& e) {
    return failure(opt, 2, e.code(), e.message());
  } catch (const ConfigError& e) {
    return failure(opt, 1, "E-CONFIG", e.what());
  }
}

}  // namespace pathalg::cli
