#ifndef ZINBIEL_JSON_IO_HPP
#define ZINBIEL_JSON_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "zinbiel/flag.hpp"
#include "zinbiel/products.hpp"

namespace zinbiel::io {

// Formats are sparse and 1-based; rationals are canonical strings. Linear maps
// are written one row per basis vector: row i holds the coordinates of the
// image of e_i. nlohmann::json keeps object keys sorted, so output is canonical.

using json = nlohmann::json;

/// Parses text, reporting syntax errors as InputError with the line number.
json parse(std::string_view text, const std::string& source = "input");
json read_file(const std::string& path);

json to_json(const Rational& q);
json to_json(const Algebra& a);
json to_json(const ExtendingDatum& d);
json to_json(const Bimodule& b);
json to_json(const CrossedSystem& cs);
json to_json(const MatchedPair& mp);
json to_json(const FlagDatum& fd);
json to_json(const SolutionFamily& family);
json to_json(const CheckReport& report);
json tensor_to_json(const Tensor& t);
json map_to_json(const Matrix& m);
json sparse_vector_to_json(const Vector& v);

/// Every reader throws InputError naming the offending field path.
Rational rational_from_json(const json& j, const std::string& path = "$");
Algebra algebra_from_json(const json& j, const std::string& path = "$");
ExtendingDatum datum_from_json(const json& j, const std::string& path = "$");
Bimodule bimodule_from_json(const json& j, const std::string& path = "$");
CrossedSystem crossed_from_json(const json& j, const std::string& path = "$");
MatchedPair matched_from_json(const json& j, const std::string& path = "$");
FlagDatum flag_from_json(const json& j, const std::string& path = "$");
Tensor tensor_from_json(const json& j, Index d1, Index d2, Index d3, const std::string& path);
/// rows × cols map in row-per-basis-vector form, returned as a column-acting
/// matrix of shape cols_out × rows_in.
Matrix map_from_json(const json& j, Index dim_in, Index dim_out, const std::string& path);
Vector sparse_vector_from_json(const json& j, Index n, const std::string& path);

}  // namespace zinbiel::io

#endif  // ZINBIEL_JSON_IO_HPP
