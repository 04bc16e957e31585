#pragma once

#include "formacheck/cohomology.hpp"
#include "formacheck/graded_algebra.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace formacheck {

using Json = nlohmann::ordered_json;

/// Builds an algebra from the algebra file schema:
///
///   { "name": "...",
///     "basis": [ {"label": "1", "degree": 0}, {"label": "x", "degree": 2} ],
///     "unit": "1",
///     "products": [ {"left": "x", "right": "x", "value": [ {"label": "x2", "coeff": "1/2"} ]} ] }
///
/// Products are listed for left <= right in basis order; omitted pairs are
/// zero and products with the unit follow the unit law. Errors carry the
/// JSON path of the offending value. Does not run validate().
GradedAlgebra algebra_from_json(const nlohmann::json& doc);

/// Parses and validates; odd-degree classes are accepted, a failed algebra
/// axiom is an InputError.
GradedAlgebra parse_algebra_text(std::string_view text);
GradedAlgebra parse_algebra(const std::filesystem::path& path);

/// Canonical algebra file: basis order kept, products for left <= right
/// with nonzero value, unit products omitted unless they differ from the
/// unit law.
Json algebra_to_json(const GradedAlgebra& h);

/// Chain complex file:
///
///   { "dims": [1, 2, 1],
///     "boundaries": { "1": [["0","0"]], "2": [["1"],["-1"]] } }
///
/// "boundaries"[n] is the dims[n-1] x dims[n] matrix of d_n as rows of
/// rational strings; omitted degrees are zero maps.
ChainComplexQ chain_complex_from_json(const nlohmann::json& doc);
ChainComplexQ parse_chain_complex(const std::filesystem::path& path);
Json chain_complex_to_json(const ChainComplexQ& c);

Json element_to_json(const GradedAlgebra& h, const VecQ& coeffs);

std::string sha256_hex(std::string_view data);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

} // namespace formacheck
