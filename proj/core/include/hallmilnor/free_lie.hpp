#pragma once

// Exact arithmetic in the free Lie ring over the integers: rewriting of
// arbitrary bracket expressions into basis normal form, basis verification
// by exact rank computation in the tensor algebra, and Witt dimensions.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hallmilnor/exact_linalg.hpp"
#include "hallmilnor/hall.hpp"
#include "hallmilnor/integer.hpp"
#include "hallmilnor/tensor.hpp"

namespace hallmilnor {

// A finite integer combination of iterated bracket trees. The trees are
// arbitrary (not restricted to basis words); [u, u] is a legitimate
// monomial here and only vanishes after rewriting or embedding.
class BracketExpr {
public:
    BracketExpr() = default; // zero

    static BracketExpr leaf(int generator_index);
    static BracketExpr from_word(const HallWord& monomial);
    // Bilinear formal bracket: [sum a_i u_i, sum b_j v_j].
    static BracketExpr bracket(const BracketExpr& a, const BracketExpr& b);

    void add(const HallWord& monomial, const Int& coeff);
    const std::map<HallWord, Int>& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    // Longest monomial, 0 for the zero expression.
    int max_length() const;

    BracketExpr& operator+=(const BracketExpr& other);
    BracketExpr scaled(const Int& c) const;

private:
    std::map<HallWord, Int> terms_;
};

// An element of the free Lie ring in normal form: an integer combination
// of words of a fixed basis table, keyed by serial number.
class LieElement {
public:
    explicit LieElement(std::shared_ptr<const HallBasisTable> table);

    const HallBasisTable& table() const { return *table_; }
    const std::shared_ptr<const HallBasisTable>& table_ptr() const noexcept { return table_; }

    // serial -> nonzero coefficient, in basis order.
    const std::map<int, Int>& terms() const noexcept { return terms_; }
    void add_term(int serial, const Int& coeff);
    bool is_zero() const noexcept { return terms_.empty(); }

    LieElement& operator+=(const LieElement& other); // same table required
    LieElement scaled(const Int& c) const;

    BracketExpr to_bracket_expr() const;
    // Human-readable combination with explicit coefficients, e.g.
    // "-1·[x,y]" or "1·[x,y] - 2·[x,[x,y]]"; "0" if empty.
    std::string format() const;

private:
    std::shared_ptr<const HallBasisTable> table_;
    std::map<int, Int> terms_;
};

// The embedding of the free Lie ring into the free associative ring,
// [a, b] |-> ab - ba. Linear; a length-l monomial lands in sequence
// length l. Serves as the independent correctness oracle for rewriting.
TensorElement embed_tensor(const HallWord& w);
TensorElement embed_tensor(const BracketExpr& e);
TensorElement embed_tensor(const LieElement& e);

// Rewrites bracket expressions into normal form against a fixed table by
// exact linear algebra: per degree, the embedded expression is solved
// against the embedded table words of that degree. The per-degree solver
// preparation is cached, so reusing one rewriter across many calls is much
// cheaper than repeated rewrite_to_hall. Not safe for concurrent use.
class HallRewriter {
public:
    explicit HallRewriter(std::shared_ptr<const HallBasisTable> table);

    const HallBasisTable& table() const { return *table_; }
    const std::shared_ptr<const HallBasisTable>& table_ptr() const noexcept { return table_; }

    // Throws LengthBoundError if a monomial exceeds the table bound.
    LieElement rewrite(const BracketExpr& e) const;

private:
    struct DegreeSolver {
        std::map<GenSequence, std::size_t> row_index;
        std::vector<int> serials; // column -> table serial
        ExactSolver solver;
    };

    const DegreeSolver& solver_for(int degree) const;

    std::shared_ptr<const HallBasisTable> table_;
    mutable std::map<int, DegreeSolver> solvers_;
};

// One-shot convenience wrapper around HallRewriter.
LieElement rewrite_to_hall(const BracketExpr& e,
                           std::shared_ptr<const HallBasisTable> table);

// Normal-form bracket of two normal-form elements. Both elements must use
// the rewriter's table (the same table object).
LieElement lie_bracket(const LieElement& a, const LieElement& b,
                       const HallRewriter& rewriter);

// Moebius function, m >= 1.
int moebius(int m);

// Number of basis words of length l over n generators:
// (1/l) * sum over d | l of moebius(d) * n^(l/d). Requires n, l >= 1.
Int witt_dimension(int n, int l);

struct DegreeBasisReport {
    int degree = 0;
    int word_count = 0;      // table words of this length
    int independent_rank = 0; // exact rank of their embedded coefficient matrix
    int spanning_rank = 0;    // exact rank of all left-normed brackets of this length
    Int witt;                 // Witt dimension, for reference
    bool independent = false; // independent_rank == word_count
    bool spans = false;       // word_count == spanning_rank
};

struct BasisReport {
    bool independent = true; // conjunction over degrees
    bool spans = true;
    std::vector<DegreeBasisReport> degrees; // degrees 1..max_degree in order

    std::vector<int> ranks() const; // independent_rank per degree
};

// Checks, degree by degree up to max_degree, that the table words embed to
// a full-rank system (independence) and that their count matches the rank
// of the span of all left-normed brackets of that degree (spanning).
// Requires table.max_len() >= max_degree >= 1.
BasisReport verify_hall_basis(const HallBasisTable& table, int max_degree);

} // namespace hallmilnor
