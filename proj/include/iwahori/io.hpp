#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "iwahori/affine_weyl.hpp"
#include "iwahori/bernstein_center.hpp"
#include "iwahori/hecke_algebra.hpp"
#include "iwahori/laurent_poly.hpp"
#include "iwahori/transfer.hpp"

namespace iwahori {

using Json = nlohmann::ordered_json;

/// "GL:3", "SL:2", "Sp:4", "GSp:4" or "custom:<config path>".
RootDatum parse_group_spec(const std::string& spec);

/// Comma list of 1-based simple root labels ("" for the torus), 0-based out.
std::vector<int> parse_index_list(const std::string& text, std::size_t upper);

/// {"<v exponent>": coefficient, ...} in increasing exponent order.
Json laurent_json(const LaurentPoly& p);
/// Value at the integer q. Even polynomials give a number; otherwise a string
/// "A + B*q^(1/2)" keeping the half power symbolic.
Json specialize_json(const LaurentPoly& p, std::int64_t q);

Json element_json(const AffineWeylGroup& g, const AffineWeylElement& x);
/// Terms in canonical element order.
Json hecke_json(const AffineWeylGroup& g, const HeckeElement& h, std::optional<std::int64_t> q = std::nullopt);
Json symmetric_json(const SymmetricFunction& f, std::optional<std::int64_t> q = std::nullopt);
Json graded_json(const OmegaQuotient& omega, const GradedFunction& f, std::optional<std::int64_t> q = std::nullopt);

/// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

}  // namespace iwahori
