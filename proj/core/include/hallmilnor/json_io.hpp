#pragma once

// JSON import/export for the library's value types. The schemas are
// documented next to each function; coefficients are decimal strings so
// that arbitrary-precision values survive the round trip, and all arrays
// follow a deterministic order so output is byte-stable. Import functions
// throw ParseError on malformed input and re-validate structural
// invariants (imported tables and elements are re-checked against a fresh
// enumeration).

#include <string>

#include "hallmilnor/free_lie.hpp"
#include "hallmilnor/hall.hpp"
#include "hallmilnor/hilton_milnor.hpp"
#include "hallmilnor/series.hpp"
#include "hallmilnor/tensor.hpp"

namespace hallmilnor {

// {"alphabet": [names], "max_len": L, "policy": "creation-order",
//  "words": [{"serial", "word", "length", "rank", "multidegree"}...]}
std::string to_json_string(const HallBasisTable& table, int indent = 2);
HallBasisTable table_from_json(const std::string& text);

// {"terms": [{"sequence": [indices], "coefficient": "d"}...]}
std::string to_json_string(const TensorElement& element, int indent = 2);
TensorElement tensor_from_json(const std::string& text);

// {"alphabet", "max_len", "policy",
//  "terms": [{"serial", "word", "coefficient"}...]}
std::string to_json_string(const LieElement& element, int indent = 2);
LieElement lie_element_from_json(const std::string& text);

// {"variables": n, "truncation": N,
//  "terms": [{"exponents": [s, t1..tn], "coefficient": "d"}...]}
// with terms in lexicographic exponent order.
std::string to_json_string(const MultiSeries& series, int indent = 2);
MultiSeries series_from_json(const std::string& text);

// {"name", "connectivity", "reduced_series"}
std::string to_json_string(const FormalObject& object, int indent = 2);
FormalObject formal_object_from_json(const std::string& text);

// {"independent", "spans", "degrees": [{"degree", "word_count",
//  "independent_rank", "spanning_rank", "witt", "independent", "spans"}]}
std::string to_json_string(const BasisReport& report, int indent = 2);
BasisReport basis_report_from_json(const std::string& text);

// {"inputs": [objects], "bound": {"type": "max-length"|"min-connectivity",
//  "value"}, "policy", "table_max_len",
//  "factors": [{"serial", "word", "rank", "multidegree", "conn_bound",
//               "factor_series"}...],
//  "residual_conn": int|null}
std::string to_json_string(const Decomposition& decomposition, int indent = 2);
Decomposition decomposition_from_json(const std::string& text);

} // namespace hallmilnor
