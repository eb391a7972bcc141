#pragma once

// Truncated multivariate power series over exact integers, together with the
// connectivity calculus used by the decomposition machinery.
//
// A series lives in Z[s, t_1, ..., t_n] truncated by total degree in the
// t variables; the extra variable s is a bookkeeping shift (it records
// suspensions) and its exponent is capped at the same bound so that all
// supports stay finite. Operations that combine two series require matching
// variable arity and work up to the smaller of the two truncation bounds.

#include <map>
#include <string>
#include <vector>

#include "hallmilnor/hall.hpp"
#include "hallmilnor/integer.hpp"

namespace hallmilnor {

class MultiSeries {
public:
    // Exponent vectors are laid out [s, t_1, ..., t_n].
    using Exponents = std::vector<int>;

    // The zero series in n generator variables, truncated at total t-degree
    // `truncation` (which also caps the s exponent). Requires num_vars >= 0
    // and truncation >= 0.
    MultiSeries(int num_vars, int truncation);

    static MultiSeries zero(int num_vars, int truncation);
    // The single-variable series t_{index} (index is 0-based).
    static MultiSeries generator(int num_vars, int truncation, int index);

    int num_vars() const { return num_vars_; }
    int truncation() const { return truncation_; }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Int>& terms() const { return terms_; }

    // Adds coeff * monomial(exponents). Terms beyond the truncation bound
    // are silently dropped; zero coefficients are never stored.
    void add_term(const Exponents& exponents, const Int& coeff);
    Int coefficient(const Exponents& exponents) const;

    // Smallest total t-degree of a stored term; INT_MAX for the zero series.
    int order() const;
    bool constant_term_is_zero() const;

    // Copy with a lower truncation bound (terms beyond it are dropped).
    MultiSeries truncated(int new_truncation) const;

private:
    void check_exponents(const Exponents& exponents) const;

    int num_vars_;
    int truncation_;
    std::map<Exponents, Int> terms_;
};

// Ring operations. Both operands must have the same variable arity; the
// result is truncated at the smaller of the two bounds.
MultiSeries series_add(const MultiSeries& a, const MultiSeries& b);
MultiSeries series_sub(const MultiSeries& a, const MultiSeries& b);
MultiSeries series_mul(const MultiSeries& a, const MultiSeries& b);
MultiSeries series_scale(const MultiSeries& a, const Int& c);
MultiSeries series_pow(const MultiSeries& a, int exponent);

// First coefficient discrepancy found by series_eq, in lexicographic
// exponent order. Exponents follow the [s, t_1, ..., t_n] layout.
struct SeriesMismatch {
    std::vector<int> exponents;
    Int left;
    Int right;
};

// Coefficient-wise equality up to the common (smaller) truncation bound.
bool series_eq(const MultiSeries& a, const MultiSeries& b,
               SeriesMismatch* mismatch = nullptr);

// Sum of all positive powers f + f^2 + f^3 + ... (finite after truncation).
// Requires a zero constant term; throws DomainError otherwise.
MultiSeries geom_sum(const MultiSeries& f);

// Series counterparts of the pointed-object constructions. All arguments
// must have zero constant terms.
MultiSeries wedge_series(const MultiSeries& a, const MultiSeries& b);   // a + b
MultiSeries product_series(const MultiSeries& a, const MultiSeries& b); // (1+a)(1+b) - 1
MultiSeries smash_series(const MultiSeries& a, const MultiSeries& b);   // a * b
MultiSeries suspend_series(const MultiSeries& a);                       // s * a
MultiSeries join_series(const MultiSeries& a, const MultiSeries& b);    // s * a * b
MultiSeries half_smash_series(const MultiSeries& a, const MultiSeries& b); // (1+a) * b
// Cofiber of a null map from X to Y: s * a + b.
MultiSeries cof_null_series(const MultiSeries& a, const MultiSeries& b);

// Connectivity combinators. All results are lower bounds, never claims of
// exact connectivity. Arguments must be >= -1 (and >= 0 for conn_loop;
// looping below that is undefined). Violations throw DomainError.
int conn_susp(int k);
int conn_loop(int k);
int conn_smash(int k, int l);
int conn_smash_power(int k, int m); // m-fold smash power, m >= 0
int conn_wedge(int k, int l);
int conn_product(int k, int l);

// Connectivity lower bound of the smash word w(X_1..X_n) where X_i has
// connectivity conns[i] >= 0: sum_i multidegree(w)[i]*(conns[i]+1) - 1.
// The same bound applies after applying the James construction, since
// looping undoes the suspension's shift.
int word_connectivity(const HallWord& w, const std::vector<int>& conns);

// A named formal pointed object: a connectivity lower bound plus the
// reduced series recording its cell counts. Validated at the entry points
// of the operations that consume it.
struct FormalObject {
    std::string name;
    int connectivity;
    MultiSeries reduced_series;
};

// Checks connectivity >= 0 (the "pointed connected objects" hypothesis),
// a zero constant term, and series order >= connectivity + 1. Throws
// DomainError with the object's name on violation.
void validate_formal_object(const FormalObject& object);

// Renders a series as a human-readable sum, e.g. "t1 + 2·s·t1·t2^2";
// the zero series renders as "0". Terms appear in lexicographic exponent
// order.
std::string format_series(const MultiSeries& a);

} // namespace hallmilnor
