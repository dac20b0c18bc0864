#include "cbb/io.hpp"

#include <algorithm>
#include <sstream>

#include "cbb/errors.hpp"

namespace cbb {

using nlohmann::json;

std::string render_rational(const Rational& q) { return q.str(); }

std::string render_monomial(const Monomial& m, const Variables& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.names.at(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string render_polynomial(const QPoly& p, const TermOrder& ord) {
  if (p.is_zero()) return "0";
  std::vector<const std::pair<const Monomial, Rational>*> terms;
  for (const auto& t : p) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(), [&](auto a, auto b) { return ord.less(b->first, a->first); });
  std::string out;
  for (const auto* t : terms) {
    const Rational& c = t->second;
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = negative ? -c : c;
    if (t->first.is_one()) {
      out += render_rational(mag);
    } else {
      if (!mag.is_one()) out += render_rational(mag) + '*';
      out += render_monomial(t->first, *p.vars());
    }
  }
  return out;
}

std::string render_polynomial(const PPoly& p, const Ring& ring, OrderKind kind) {
  return render_polynomial(flatten_params(p, ring), elimination_order(ring, kind));
}

std::string render_param_polynomial(const ParamPoly& p, OrderKind kind) {
  return render_polynomial(p, TermOrder::make(kind, p.nvars()));
}

std::string render_order_ideal(const OrderIdeal& O, const Variables& vars, const TermOrder& ord) {
  std::string out = "{";
  bool first = true;
  for (const auto& m : O.sorted(ord)) {
    if (!first) out += ", ";
    out += render_monomial(m, vars);
    first = false;
  }
  return out + "}";
}

namespace {

std::string render_point(const Specialization& s) {
  if (s.size() == 1) return render_rational(s.point[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + render_rational(s.point[i]);
  return out + ")";
}

std::string render_points(const std::vector<Specialization>& pts) {
  std::string out = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) out += (i ? ", " : "") + render_point(pts[i]);
  return out + "}";
}

std::string render_condition(const Condition& c) {
  return (c.is_points() ? "points " : "complement ") + render_points(c.listed());
}

json point_json(const Specialization& s) {
  json arr = json::array();
  for (const auto& q : s.point) arr.push_back(render_rational(q));
  return arr;
}

json header_json(const Ring& ring, OrderKind kind) {
  return json{{"main_vars", ring.main->names}, {"params", ring.params->names}, {"order", to_string(kind)}};
}

}  // namespace

std::string render_text(const GroebnerBasis& G, const Variables& vars) {
  (void)vars;
  std::string out;
  for (const auto& g : G.generators) out += render_polynomial(g, G.order) + '\n';
  return out;
}

std::string render_text(const BorderBasis& B, const Variables& vars, const TermOrder& ord) {
  std::string out = "order_ideal: " + render_order_ideal(B.order_ideal, vars, ord) + "\nbasis:\n";
  for (std::size_t i = 0; i < B.elements.size(); ++i) {
    out += "  ";
    if (i < B.marks.size()) out += '[' + render_monomial(B.marks[i], vars) + "] ";
    out += render_polynomial(B.elements[i], ord) + '\n';
  }
  return out;
}

std::string render_text(const BorderSystem& system) {
  const Ring& ring = system.ring;
  const TermOrder ord = main_order(ring, system.kind);
  std::ostringstream out;
  for (std::size_t i = 0; i < system.branches.size(); ++i) {
    const Branch& br = system.branches[i];
    out << "branch " << i + 1 << '\n';
    out << "  condition: " << render_condition(br.condition) << '\n';
    out << "  order_ideal: " << render_order_ideal(br.order_ideal, *ring.main, ord) << '\n';
    out << "  basis:\n";
    for (std::size_t e = 0; e < br.basis.size(); ++e) {
      out << "    ";
      if (e < br.marks.size()) out << '[' << render_monomial(br.marks[e], *ring.main) << "] ";
      out << render_polynomial(br.basis[e], ring, system.kind) << '\n';
    }
  }
  return out.str();
}

std::string render_text(const ComprehensiveBorderBasis& cbb) {
  std::ostringstream out;
  for (const auto& e : cbb.elements) {
    out << (e.mark ? '[' + render_monomial(*e.mark, *cbb.ring.main) + ']' : std::string("[-]"));
    out << " (branch " << e.branch + 1 << ") " << render_polynomial(e.poly, cbb.ring, cbb.kind) << '\n';
  }
  return out.str();
}

std::string render_text(const VerifyReport& report) {
  std::ostringstream out;
  for (const auto& s : report.structural) out << "structure: FAIL " << s << '\n';
  for (const auto& p : report.points) {
    out << "point " << render_point(p.sigma) << ": " << (p.ok ? "pass" : "FAIL");
    if (!p.ok) out << " (" << p.reason << ')';
    out << '\n';
  }
  out << (report.ok ? "verification passed" : "verification FAILED") << '\n';
  return out.str();
}

json to_json(const BorderSystem& system) {
  const Ring& ring = system.ring;
  const TermOrder ord = main_order(ring, system.kind);
  json doc = header_json(ring, system.kind);
  json branches = json::array();
  for (const auto& br : system.branches) {
    json pts = json::array();
    for (const auto& s : br.condition.listed()) pts.push_back(point_json(s));
    json oi = json::array(), basis = json::array(), marks = json::array();
    for (const auto& m : br.order_ideal.sorted(ord)) oi.push_back(render_monomial(m, *ring.main));
    for (const auto& b : br.basis) basis.push_back(render_polynomial(b, ring, system.kind));
    for (const auto& m : br.marks) marks.push_back(render_monomial(m, *ring.main));
    branches.push_back({{"condition", {{"kind", br.condition.is_points() ? "points" : "complement"},
                                       {"points", pts}}},
                        {"order_ideal", oi},
                        {"basis", basis},
                        {"marks", marks}});
  }
  doc["branches"] = branches;
  json elim = json::array();
  for (const auto& e : system.eliminant) elim.push_back(render_param_polynomial(e, system.kind));
  doc["eliminant"] = elim;
  return doc;
}

json to_json(const ComprehensiveBorderBasis& cbb) {
  json doc = header_json(cbb.ring, cbb.kind);
  json elements = json::array();
  for (const auto& e : cbb.elements)
    elements.push_back({{"poly", render_polynomial(e.poly, cbb.ring, cbb.kind)},
                        {"mark", e.mark ? json(render_monomial(*e.mark, *cbb.ring.main)) : json(nullptr)},
                        {"branch", e.branch}});
  doc["cbb"] = {{"elements", elements}};
  return doc;
}

json to_json(const VerifyReport& report) {
  json pts = json::array();
  for (const auto& p : report.points)
    pts.push_back({{"point", point_json(p.sigma)}, {"branch", p.branch}, {"ok", p.ok}, {"reason", p.reason}});
  return {{"ok", report.ok}, {"structural", report.structural}, {"points", pts}};
}

// --- readers ---------------------------------------------------------------------

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(0, 0, "artifact: " + what); }

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) bad(std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::vector<std::string> names_of(const json& v) {
  if (!v.is_array()) bad("variable list is not an array");
  std::vector<std::string> out;
  for (const auto& s : v) {
    if (!s.is_string()) bad("variable name is not a string");
    out.push_back(s.get<std::string>());
  }
  return out;
}

std::pair<Ring, OrderKind> header_of(const json& doc) {
  try {
    Ring ring = Ring::make(names_of(field(doc, "main_vars")), names_of(field(doc, "params")));
    return {ring, parse_order_kind(field(doc, "order").get<std::string>())};
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    bad(e.what());
  }
}

PPoly poly_of(const json& v, const Ring& ring) {
  if (!v.is_string()) bad("polynomial is not a string");
  return split_params(parse_polynomial(v.get<std::string>(), ring.all), ring);
}

Monomial monomial_of(const json& v, const Ring& ring) {
  if (!v.is_string()) bad("monomial is not a string");
  const QPoly p = parse_polynomial(v.get<std::string>(), ring.main);
  if (p.size() != 1 || !p.begin()->second.is_one()) bad("'" + v.get<std::string>() + "' is not a monomial");
  return p.begin()->first;
}

Specialization point_of(const json& v, std::size_t m) {
  if (!v.is_array() || v.size() != m) bad("point has the wrong arity");
  Specialization s;
  for (const auto& q : v) {
    if (!q.is_string()) bad("coordinate is not a string");
    try {
      s.point.push_back(Rational::from_string(q.get<std::string>()));
    } catch (const std::exception&) {
      bad("malformed coordinate '" + q.get<std::string>() + "'");
    }
  }
  return s;
}

}  // namespace

BorderSystem border_system_from_json(const json& doc) {
  auto [ring, kind] = header_of(doc);
  BorderSystem out{ring, kind, {}, {}};
  const json& branches = field(doc, "branches");
  if (!branches.is_array()) bad("branches is not an array");
  for (const auto& b : branches) {
    const json& cond = field(b, "condition");
    std::vector<Specialization> pts;
    for (const auto& p : field(cond, "points")) pts.push_back(point_of(p, ring.m()));
    const std::string k = field(cond, "kind").get<std::string>();
    if (k != "points" && k != "complement") bad("unknown condition kind '" + k + "'");
    std::set<Monomial> oi;
    for (const auto& m : field(b, "order_ideal")) oi.insert(monomial_of(m, ring));
    Branch br{k == "points" ? Condition::points(pts) : Condition::complement(pts), OrderIdeal(ring.n()), {}, {}};
    try {
      br.order_ideal = OrderIdeal(ring.n(), std::move(oi));
    } catch (const DomainError& e) {
      bad(e.what());
    }
    for (const auto& p : field(b, "basis")) br.basis.push_back(poly_of(p, ring));
    if (b.contains("marks"))
      for (const auto& m : b.at("marks")) br.marks.push_back(monomial_of(m, ring));
    out.branches.push_back(std::move(br));
  }
  if (doc.contains("eliminant"))
    for (const auto& e : doc.at("eliminant")) {
      if (!e.is_string()) bad("eliminant entry is not a string");
      out.eliminant.push_back(parse_polynomial(e.get<std::string>(), ring.params));
    }
  return out;
}

ComprehensiveBorderBasis cbb_from_json(const json& doc) {
  auto [ring, kind] = header_of(doc);
  ComprehensiveBorderBasis out{ring, kind, {}};
  const json& elements = field(field(doc, "cbb"), "elements");
  if (!elements.is_array()) bad("elements is not an array");
  for (const auto& e : elements) {
    CbbElement el{poly_of(field(e, "poly"), ring), std::nullopt, 0};
    if (e.contains("mark") && !e.at("mark").is_null()) el.mark = monomial_of(e.at("mark"), ring);
    if (e.contains("branch")) el.branch = e.at("branch").get<std::size_t>();
    out.elements.push_back(std::move(el));
  }
  return out;
}

}  // namespace cbb
