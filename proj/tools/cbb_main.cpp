// Command-line front end: one subcommand per computation plus a verifier.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "cbb/errors.hpp"
#include "cbb/io.hpp"

namespace {

using namespace cbb;
using nlohmann::json;

enum Exit { kOk = 0, kVerifyFailed = 1, kUnsupported = 2, kUsage = 3 };

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// "z=4,u=1/2" -> a point with every parameter bound exactly once.
Specialization parse_at(const std::string& spec, const Ring& ring) {
  std::map<std::string, Rational> bound;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw DomainError("expected name=value in '" + item + "'");
    const std::string name = item.substr(0, eq);
    if (!ring.params->index_of(name)) throw DomainError("'" + name + "' is not a parameter");
    if (!bound.emplace(name, Rational::from_string(item.substr(eq + 1))).second)
      throw DomainError("parameter '" + name + "' bound twice");
  }
  Specialization s;
  for (const auto& name : ring.params->names) {
    auto it = bound.find(name);
    if (it == bound.end()) throw DomainError("parameter '" + name + "' is not bound");
    s.point.push_back(it->second);
  }
  return s;
}

GenericBranch parse_generic(const std::string& s) {
  if (s == "f") return GenericBranch::F;
  if (s == "eliminant") return GenericBranch::Eliminant;
  throw DomainError("unknown generic branch '" + s + "'");
}

VanishingMode parse_vanishing(const std::string& s) {
  if (s == "squares") return VanishingMode::Squares;
  if (s == "linear-univariate") return VanishingMode::LinearUnivariate;
  throw DomainError("unknown vanishing mode '" + s + "'");
}

json bb_json(const BorderBasis& B, const Variables& vars, const TermOrder& ord) {
  json oi = json::array(), basis = json::array(), marks = json::array();
  for (const auto& m : B.order_ideal.sorted(ord)) oi.push_back(render_monomial(m, vars));
  for (const auto& b : B.elements) basis.push_back(render_polynomial(b, ord));
  for (const auto& m : B.marks) marks.push_back(render_monomial(m, vars));
  return {{"order_ideal", oi}, {"basis", basis}, {"marks", marks}};
}

struct Options {
  std::string input;
  std::string format = "text";
  std::string at;
  std::string generic;
  std::string vanishing = "squares";
  std::string cbb_file;
  std::string artifact;
  std::string mode = "bs";
  std::size_t samples = 10;
  std::uint64_t seed = 0;
};

void emit(const Options& o, const std::string& text, const json& doc) {
  if (o.format == "json") {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

int run(const std::string& command, const Options& o) {
  const SystemFile sys = parse_system(read_file(o.input));
  const Ring& ring = sys.ring;
  if (sys.degenerate) std::cerr << "warning: input contains the zero polynomial\n";
  const auto generic = [&](const char* fallback) {
    return parse_generic(o.generic.empty() ? fallback : o.generic);
  };

  if (command == "gb") {
    const TermOrder ord = ring.m() ? elimination_order(ring, sys.order) : main_order(ring, sys.order);
    const GroebnerBasis G = reduced_groebner_basis(sys.polys, ord);
    json basis = json::array();
    for (const auto& g : G.generators) basis.push_back(render_polynomial(g, ord));
    emit(o, render_text(G, *ring.all), {{"basis", basis}});
    return kOk;
  }
  if (command == "eliminate") {
    const auto elim = elimination_ideal(sys.polys, ring, sys.order);
    std::string text = "eliminant:\n";
    json e = json::array(), pts = json::array();
    for (const auto& g : elim) {
      text += "  " + render_param_polynomial(g, sys.order) + '\n';
      e.push_back(render_param_polynomial(g, sys.order));
    }
    const bool unit = elim.size() == 1 && elim[0].is_constant();
    const auto variety = unit ? std::vector<Specialization>{} : rational_variety(elim, ring.params);
    text += "variety: {";
    for (std::size_t i = 0; i < variety.size(); ++i) {
      text += (i ? ", " : "") + to_string(variety[i]);
      json p = json::array();
      for (const auto& q : variety[i].point) p.push_back(q.str());
      pts.push_back(p);
    }
    text += "}\n";
    emit(o, text, {{"eliminant", e}, {"variety", pts}});
    return kOk;
  }
  if (command == "border-basis") {
    if (ring.m() && o.at.empty()) throw DomainError("--at is required when the input has parameters");
    const Specialization sigma = ring.m() ? parse_at(o.at, ring) : Specialization{};
    std::vector<QPoly> F;
    for (const auto& f : sys.polys) F.push_back(specialize_params(f, ring, sigma));
    const TermOrder ord = main_order(ring, sys.order);
    const BorderBasis B = gb_to_border_basis(reduced_groebner_basis(F, ord));
    emit(o, render_text(B, *ring.main, ord), bb_json(B, *ring.main, ord));
    return kOk;
  }
  if (command == "border-system") {
    const BorderSystem bs = compute_border_system(sys.polys, ring, sys.order, {generic("f")});
    emit(o, render_text(bs), to_json(bs));
    return kOk;
  }
  if (command == "cbb") {
    const BorderSystem bs = compute_border_system(sys.polys, ring, sys.order, {generic("eliminant")});
    const ComprehensiveBorderBasis cbb = compute_cbb(bs, parse_vanishing(o.vanishing));
    emit(o, render_text(cbb), to_json(cbb));
    return kOk;
  }
  const auto load_cbb = [&]() {
    if (!o.cbb_file.empty()) return cbb_from_json(json::parse(read_file(o.cbb_file)));
    const BorderSystem bs = compute_border_system(sys.polys, ring, sys.order, {generic("eliminant")});
    return compute_cbb(bs, parse_vanishing(o.vanishing));
  };
  if (command == "specialize") {
    const ComprehensiveBorderBasis cbb = load_cbb();
    const Specialization sigma = ring.m() ? parse_at(o.at, ring) : Specialization{};
    const TermOrder ord = main_order(ring, sys.order);
    const BorderBasis B = specialize_cbb(cbb, sigma);
    emit(o, render_text(B, *ring.main, ord), bb_json(B, *ring.main, ord));
    return kOk;
  }
  if (command == "verify") {
    VerifyReport report;
    if (o.mode == "bs") {
      const BorderSystem bs = o.artifact.empty()
                                  ? compute_border_system(sys.polys, ring, sys.order, {generic("f")})
                                  : border_system_from_json(json::parse(read_file(o.artifact)));
      report = verify_border_system(bs, sys.polys, o.samples, o.seed);
    } else if (o.mode == "cbb") {
      const ComprehensiveBorderBasis cbb = [&] {
        if (!o.artifact.empty()) return cbb_from_json(json::parse(read_file(o.artifact)));
        return load_cbb();
      }();
      report = verify_cbb(cbb, sys.polys, o.samples, o.seed);
    } else {
      throw DomainError("unknown verify mode '" + o.mode + "'");
    }
    emit(o, render_text(report), to_json(report));
    return report.ok ? kOk : kVerifyFailed;
  }
  throw DomainError("unknown command");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Border bases, border systems and comprehensive border bases over Q"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "System file ('-' for stdin)")->required();
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_generic = [&](CLI::App* sub) {
    sub->add_option("--generic-branch", o.generic, "Complement branch contents")
        ->check(CLI::IsMember({"f", "eliminant"}));
  };
  auto add_vanishing = [&](CLI::App* sub) {
    sub->add_option("--vanishing", o.vanishing, "Vanishing polynomial form")
        ->check(CLI::IsMember({"squares", "linear-univariate"}));
  };

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis (main variables above parameters)");
  add_common(gb);
  auto* elim = app.add_subcommand("eliminate", "Parameter eliminant and its rational points");
  add_common(elim);
  auto* bb = app.add_subcommand("border-basis", "Border basis at one parameter point");
  add_common(bb);
  bb->add_option("--at", o.at, "Parameter values, e.g. z=4");
  auto* bs = app.add_subcommand("border-system", "Border system");
  add_common(bs);
  add_generic(bs);
  auto* cbb = app.add_subcommand("cbb", "Comprehensive border basis");
  add_common(cbb);
  add_generic(cbb);
  add_vanishing(cbb);
  auto* spec = app.add_subcommand("specialize", "Specialize a comprehensive border basis");
  add_common(spec);
  add_generic(spec);
  add_vanishing(spec);
  spec->add_option("--at", o.at, "Parameter values, e.g. z=4");
  spec->add_option("--cbb", o.cbb_file, "Comprehensive border basis in JSON (default: compute)");
  auto* ver = app.add_subcommand("verify", "Check a border system or comprehensive border basis");
  add_common(ver);
  add_generic(ver);
  add_vanishing(ver);
  ver->add_option("--mode", o.mode, "What to verify")->check(CLI::IsMember({"bs", "cbb"}));
  ver->add_option("--samples", o.samples, "Random parameter points checked");
  ver->add_option("--seed", o.seed, "Sampling seed");
  ver->add_option("--artifact", o.artifact, "JSON artifact to verify (default: compute)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), o);
  } catch (const NotZeroDimensional& e) {
    std::cerr << "unsupported instance: " << e.what() << '\n';
    return kUnsupported;
  } catch (const NonRationalPoint& e) {
    std::cerr << "unsupported instance: " << e.what() << '\n';
    return kUnsupported;
  } catch (const PoleError& e) {
    std::cerr << "unsupported instance: " << e.what() << '\n';
    return kUnsupported;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
