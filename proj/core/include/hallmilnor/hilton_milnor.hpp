#pragma once

// The Hilton–Milnor decomposition at the level of formal data: the factor
// list indexed by basis words, connectivity bookkeeping for the omitted
// tail, and series-level verifiers for the decomposition and for the
// intermediate splitting identities it is built from.

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "hallmilnor/hall.hpp"
#include "hallmilnor/series.hpp"

namespace hallmilnor {

// One factor J(w(X_1..X_n)) of the decomposition.
struct DecompositionFactor {
    RankedWord word;
    std::vector<int> multidegree;
    int conn_bound = 0;       // word_connectivity of `word` for the inputs
    MultiSeries factor_series; // geom_sum of the smash-word series
};

// Keep every basis word of length <= value.
struct MaxWordLength {
    int value = 0;
};
// Keep every basis word whose connectivity bound is < value; everything
// omitted is then at least (value)-connected.
struct MinOmittedConnectivity {
    int value = 0;
};
using DecomposeBound = std::variant<MaxWordLength, MinOmittedConnectivity>;

// Finite head of the (infinite) weak product: the retained factors in
// basis-table order, plus a connectivity floor for everything omitted.
struct Decomposition {
    std::vector<FormalObject> inputs;
    DecomposeBound bound;
    OrderPolicy policy = OrderPolicy::CreationOrder;
    // Basis table backing `factors`; its alphabet uses the input names.
    std::shared_ptr<const HallBasisTable> table;
    std::vector<DecompositionFactor> factors;
    // Exact minimum of word_connectivity over all omitted basis words;
    // empty when nothing is omitted (e.g. a single input under a length
    // bound, where the basis is just one word).
    std::optional<int> residual_conn;
};

// Computes the decomposition head for the given connected objects. Object
// names double as the bracket symbols, so they must be distinct
// identifiers over [a-zA-Z0-9_]. Throws DomainError for an empty input
// list, a non-connected object (the decomposition hypothesis is pointed
// connected objects), arity or name problems, or a bound < 1.
Decomposition decompose(const std::vector<FormalObject>& objects, DecomposeBound bound,
                        OrderPolicy policy = OrderPolicy::CreationOrder);

// Series shadow of the decomposition theorem: geometric sum of the wedge
// equals the product over all factors whose series survive truncation N.
// `mismatch`, when given, receives the first offending coefficient on
// failure. N must not exceed any input series' truncation bound.
bool verify_hm_series(const std::vector<FormalObject>& objects, int truncation,
                      OrderPolicy policy = OrderPolicy::CreationOrder,
                      SeriesMismatch* mismatch = nullptr);

// Splitting of J(X v Y): checks
//   geom_sum(f_X + f_Y) == product_series(geom_sum(f_X),
//                                         geom_sum(f_Y + f_Y*geom_sum(f_X)))
// and the wedge-expanded variant with sum_{i=0..N} f_Y*f_X^i inside.
bool verify_fundamental_split(const MultiSeries& f_X, const MultiSeries& f_Y,
                              int truncation, SeriesMismatch* mismatch = nullptr);

// Suspension splitting of JX: checks
//   suspend_series(geom_sum(f)) == sum_{i=1..N} suspend_series(f^i).
// The explicit upper limit N is complete whenever every term of f has
// t-degree >= 1 (terms of pure suspension degree would need further
// powers; such inputs can fail the literal check even though the
// underlying splitting holds).
bool verify_james(const MultiSeries& f, int truncation,
                  SeriesMismatch* mismatch = nullptr);

// Half-smash suspension splitting: checks
//   half_smash_series(f_Y, suspend_series(f_X))
//     == suspend_series(f_X + f_X*f_Y).
bool verify_half2(const MultiSeries& f_X, const MultiSeries& f_Y, int truncation,
                  SeriesMismatch* mismatch = nullptr);

// One row per factor: "serial word multidegree conn_bound", with the
// multidegree comma-joined. The residual bound is not part of the table.
std::string render_decomposition_text(const Decomposition& decomposition);

} // namespace hallmilnor
