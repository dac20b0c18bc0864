#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cbb/compsys.hpp"

namespace cbb {

/// A parsed input file. Polynomials live over ring.all (main variables
/// followed by parameters).
struct SystemFile {
  std::vector<std::string> main_vars;
  std::vector<std::string> params;
  OrderKind order = OrderKind::DegLex;
  Ring ring;
  std::vector<QPoly> polys;
  /// Some poly line was the zero polynomial.
  bool degenerate = false;
};

/// Throws ParseError (with line and column) on malformed input.
SystemFile parse_system(std::string_view text);

/// A single expression over the given variables.
QPoly parse_polynomial(std::string_view expr, const VarsPtr& vars);

std::string render_rational(const Rational& q);
std::string render_monomial(const Monomial& m, const Variables& vars);
/// Terms in descending order of `ord`.
std::string render_polynomial(const QPoly& p, const TermOrder& ord);
/// Flattened over X ++ U and printed under the block order X >> U.
std::string render_polynomial(const PPoly& p, const Ring& ring, OrderKind kind);
std::string render_param_polynomial(const ParamPoly& p, OrderKind kind);
std::string render_order_ideal(const OrderIdeal& O, const Variables& vars, const TermOrder& ord);

std::string render_text(const GroebnerBasis& G, const Variables& vars);
std::string render_text(const BorderBasis& B, const Variables& vars, const TermOrder& ord);
std::string render_text(const BorderSystem& system);
std::string render_text(const ComprehensiveBorderBasis& cbb);
std::string render_text(const VerifyReport& report);

nlohmann::json to_json(const BorderSystem& system);
nlohmann::json to_json(const ComprehensiveBorderBasis& cbb);
nlohmann::json to_json(const VerifyReport& report);

/// Inverse of to_json; throws ParseError on malformed documents.
BorderSystem border_system_from_json(const nlohmann::json& doc);
ComprehensiveBorderBasis cbb_from_json(const nlohmann::json& doc);

}  // namespace cbb
