#include "corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#ifndef CBB_TEST_DATA_DIR
#define CBB_TEST_DATA_DIR "tests"
#endif

namespace cbb::support {

QPoly P(const std::string& expr, const VarsPtr& vars) { return parse_polynomial(expr, vars); }

PPoly PP(const std::string& expr, const Ring& ring) { return split_params(P(expr, ring.all), ring); }

std::string fixture_path() { return std::string(CBB_TEST_DATA_DIR) + "/data/fixture.sys"; }

std::string golden_path(const std::string& name) {
  return std::string(CBB_TEST_DATA_DIR) + "/golden/" + name;
}

SystemFile fixture() {
  std::ifstream in(fixture_path());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_system(ss.str());
}

namespace {

long pick(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

std::vector<std::string> names(const char* prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

/// Sum of random terms of total degree < `below` over all variables.
void add_noise(QPoly& p, std::mt19937_64& rng, unsigned below, std::size_t terms) {
  const std::size_t n = p.nvars();
  for (std::size_t t = 0; t < terms; ++t) {
    Monomial m(n);
    const long deg = pick(rng, 0, static_cast<long>(below) - 1);
    for (long d = 0; d < deg; ++d) ++m[static_cast<std::size_t>(pick(rng, 0, static_cast<long>(n) - 1))];
    p.add_term(m, Rational(pick(rng, -3, 3)));
  }
}

}  // namespace

QPoly random_polynomial(std::mt19937_64& rng, const VarsPtr& vars, unsigned max_degree,
                        std::size_t max_terms) {
  QPoly p(vars);
  const std::size_t n = vars->size();
  const std::size_t terms = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(max_terms)));
  for (std::size_t t = 0; t < terms; ++t) {
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<Monomial::exponent_type>(pick(rng, 0, max_degree));
    p.add_term(m, Rational(pick(rng, -9, 9), pick(rng, 1, 4)));
  }
  return p;
}

Ideal random_zero_dimensional(std::mt19937_64& rng) {
  const std::size_t n = static_cast<std::size_t>(pick(rng, 1, 3));
  Ideal out{make_vars(names("x", n)), {}};
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned d = static_cast<unsigned>(pick(rng, 1, 3));
    QPoly g = QPoly::term(out.vars, Monomial::variable(n, i, d), Rational(1));
    add_noise(g, rng, d, static_cast<std::size_t>(pick(rng, 1, 4)));
    out.generators.push_back(std::move(g));
  }
  if (pick(rng, 0, 2) == 0) {
    QPoly extra(out.vars);
    add_noise(extra, rng, 3, 3);
    if (!extra.is_zero()) out.generators.push_back(std::move(extra));
  }
  return out;
}

SystemFile random_parametric_system(std::mt19937_64& rng) {
  const bool two_params = pick(rng, 0, 3) == 0;
  SystemFile sys;
  sys.main_vars = {"x", "y"};
  sys.params = two_params ? std::vector<std::string>{"u", "v"} : std::vector<std::string>{"u"};
  sys.ring = Ring::make(sys.main_vars, sys.params);
  const VarsPtr& V = sys.ring.all;
  const std::string u = two_params ? "v" : "u";

  std::vector<long> roots;
  const long count = pick(rng, 2, 3);
  while (static_cast<long>(roots.size()) < count) {
    const long r = pick(rng, -4, 4);
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
  }
  auto linear = [&](long r) { return "(" + u + " - (" + std::to_string(r) + "))"; };
  std::string p = "1", s = "1";
  for (std::size_t i = 0; i < roots.size(); ++i) {
    p += "*" + linear(roots[i]);
    if (i) s += "*" + linear(roots[i]);
  }
  const long t = pick(rng, -3, 3), w0 = pick(rng, -3, 3), w1 = pick(rng, -2, 2);
  const std::string T = "(" + std::to_string(t) + ")";
  const std::string gx = "(x - " + T + ")*(x - (" + std::to_string(w1) + ")*" + u + " - (" +
                         std::to_string(w0) + "))";
  std::string special = "(" + s + ")*(x - " + T + ")";
  if (pick(rng, 0, 1)) special += " + (" + p + ")*x^2";
  const long a = pick(rng, -2, 2), b = pick(rng, -2, 2), c = pick(rng, -2, 2);
  const std::string ypoly = pick(rng, 0, 1)
                                ? "y - (" + std::to_string(a) + ")*x - (" + std::to_string(b) + ")*" + u
                                : "y^2 - (" + std::to_string(a) + ")*y*" + u + " - (" +
                                      std::to_string(c) + ")*x";

  for (const auto& e : {p, gx, special, ypoly}) sys.polys.push_back(P(e, V));
  if (two_params) {
    const long q0 = pick(rng, -2, 2), q1 = pick(rng, -2, 2);
    sys.polys.push_back(P("u - (" + std::to_string(q1) + ")*v^2 - (" + std::to_string(q0) + ")", V));
  }
  return sys;
}

SystemFile random_split_system(std::mt19937_64& rng) {
  const std::size_t n = static_cast<std::size_t>(pick(rng, 1, 2));
  const std::size_t m = static_cast<std::size_t>(pick(rng, 1, 2));
  SystemFile sys;
  sys.main_vars = names("x", n);
  sys.params = names("u", m);
  sys.ring = Ring::make(sys.main_vars, sys.params);
  const std::size_t total = n + m;
  for (std::size_t i = 0; i < total; ++i) {
    const unsigned d = static_cast<unsigned>(pick(rng, 1, 3));
    QPoly g = QPoly::term(sys.ring.all, Monomial::variable(total, i, d), Rational(1));
    add_noise(g, rng, d, static_cast<std::size_t>(pick(rng, 1, 4)));
    sys.polys.push_back(std::move(g));
  }
  return sys;
}

std::size_t staircase_count(const std::vector<Monomial>& leads, std::size_t nvars) {
  if (std::any_of(leads.begin(), leads.end(), [](const Monomial& m) { return m.is_one(); })) return 0;
  std::vector<Monomial::exponent_type> bound(nvars, 0);
  for (std::size_t i = 0; i < nvars; ++i)
    for (const auto& m : leads)
      if (m.pure_power_variable() == static_cast<int>(i))
        bound[i] = bound[i] ? std::min(bound[i], m[i]) : m[i];
  std::size_t count = 0;
  Monomial cur(nvars);
  for (;;) {
    if (std::none_of(leads.begin(), leads.end(), [&](const Monomial& g) { return g.divides(cur); })) ++count;
    std::size_t i = 0;
    while (i < nvars && ++cur[i] >= bound[i]) cur[i++] = 0;
    if (i == nvars) break;
  }
  return count;
}

}  // namespace cbb::support
