#include "hallmilnor/free_lie.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "hallmilnor/errors.hpp"

namespace hallmilnor {

BracketExpr BracketExpr::leaf(int generator_index) {
    return from_word(HallWord::leaf(generator_index));
}

BracketExpr BracketExpr::from_word(const HallWord& monomial) {
    BracketExpr e;
    e.add(monomial, 1);
    return e;
}

BracketExpr BracketExpr::bracket(const BracketExpr& a, const BracketExpr& b) {
    BracketExpr result;
    for (const auto& [u, cu] : a.terms_) {
        for (const auto& [v, cv] : b.terms_)
            result.add(HallWord::bracket(u, v), cu * cv);
    }
    return result;
}

void BracketExpr::add(const HallWord& monomial, const Int& coeff) {
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(monomial, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

int BracketExpr::max_length() const {
    int best = 0;
    for (const auto& [monomial, coeff] : terms_)
        best = std::max(best, monomial.length());
    return best;
}

BracketExpr& BracketExpr::operator+=(const BracketExpr& other) {
    for (const auto& [monomial, coeff] : other.terms_)
        add(monomial, coeff);
    return *this;
}

BracketExpr BracketExpr::scaled(const Int& c) const {
    BracketExpr result;
    if (c == 0)
        return result;
    for (const auto& [monomial, coeff] : terms_)
        result.add(monomial, coeff * c);
    return result;
}

LieElement::LieElement(std::shared_ptr<const HallBasisTable> table)
    : table_(std::move(table)) {
    if (!table_)
        throw DomainError("LieElement requires a basis table");
}

void LieElement::add_term(int serial, const Int& coeff) {
    if (serial < 1 || serial > table_->size())
        throw DomainError("serial " + std::to_string(serial) +
                          " out of range for a table of size " +
                          std::to_string(table_->size()));
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(serial, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

LieElement& LieElement::operator+=(const LieElement& other) {
    if (other.table_ != table_)
        throw DomainError("cannot combine elements over different basis tables");
    for (const auto& [serial, coeff] : other.terms_)
        add_term(serial, coeff);
    return *this;
}

LieElement LieElement::scaled(const Int& c) const {
    LieElement result(table_);
    if (c == 0)
        return result;
    for (const auto& [serial, coeff] : terms_)
        result.add_term(serial, coeff * c);
    return result;
}

BracketExpr LieElement::to_bracket_expr() const {
    BracketExpr result;
    for (const auto& [serial, coeff] : terms_)
        result.add(table_->at_serial(serial).word, coeff);
    return result;
}

std::string LieElement::format() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [serial, coeff] : terms_) {
        const std::string word = table_->format(table_->at_serial(serial).word);
        const Int magnitude = coeff < 0 ? Int(-coeff) : coeff;
        const std::string body = magnitude.str() + "·" + word;
        if (out.empty())
            out = (coeff < 0 ? "-" : "") + body;
        else
            out += (coeff < 0 ? " - " : " + ") + body;
    }
    return out;
}

TensorElement embed_tensor(const HallWord& w) {
    if (w.is_leaf())
        return TensorElement::generator(w.generator());
    const TensorElement left = embed_tensor(w.left());
    const TensorElement right = embed_tensor(w.right());
    TensorElement result = left * right;
    result -= right * left;
    return result;
}

TensorElement embed_tensor(const BracketExpr& e) {
    TensorElement result;
    for (const auto& [monomial, coeff] : e.terms()) {
        TensorElement t = embed_tensor(monomial);
        t *= coeff;
        result += t;
    }
    return result;
}

TensorElement embed_tensor(const LieElement& e) {
    return embed_tensor(e.to_bracket_expr());
}

HallRewriter::HallRewriter(std::shared_ptr<const HallBasisTable> table)
    : table_(std::move(table)) {
    if (!table_)
        throw DomainError("HallRewriter requires a basis table");
}

const HallRewriter::DegreeSolver& HallRewriter::solver_for(int degree) const {
    auto found = solvers_.find(degree);
    if (found != solvers_.end())
        return found->second;

    const auto words = table_->words_of_length(degree);
    std::vector<TensorElement> embedded;
    embedded.reserve(words.size());
    std::vector<int> serials;
    serials.reserve(words.size());
    std::map<GenSequence, std::size_t> row_index;
    for (const RankedWord& rw : words) {
        embedded.push_back(embed_tensor(rw.word));
        serials.push_back(rw.serial);
        for (const auto& [sequence, coeff] : embedded.back().terms())
            row_index.try_emplace(sequence, 0);
    }
    std::size_t next_row = 0;
    for (auto& [sequence, index] : row_index)
        index = next_row++;

    std::vector<SparseColumn> columns;
    columns.reserve(embedded.size());
    for (const TensorElement& t : embedded) {
        SparseColumn column;
        column.reserve(t.terms().size());
        for (const auto& [sequence, coeff] : t.terms())
            column.emplace_back(row_index.at(sequence), coeff);
        columns.push_back(std::move(column));
    }

    ExactSolver solver(next_row, std::move(columns));
    auto [it, inserted] = solvers_.try_emplace(
        degree, DegreeSolver{std::move(row_index), std::move(serials), std::move(solver)});
    return it->second;
}

LieElement HallRewriter::rewrite(const BracketExpr& e) const {
    LieElement result(table_);
    std::map<int, TensorElement> by_degree;
    for (const auto& [monomial, coeff] : e.terms()) {
        const int length = monomial.length();
        if (length > table_->max_len())
            throw LengthBoundError(length, table_->max_len());
        if (monomial.max_generator() > table_->alphabet_size())
            throw DomainError("monomial uses generator index " +
                              std::to_string(monomial.max_generator()) +
                              " but the alphabet has " +
                              std::to_string(table_->alphabet_size()) + " generators");
        TensorElement t = embed_tensor(monomial);
        t *= coeff;
        by_degree[length] += t;
    }

    for (const auto& [degree, tensor] : by_degree) {
        if (tensor.is_zero())
            continue;
        const DegreeSolver& prepared = solver_for(degree);
        SparseColumn b;
        b.reserve(tensor.terms().size());
        for (const auto& [sequence, coeff] : tensor.terms()) {
            auto it = prepared.row_index.find(sequence);
            if (it == prepared.row_index.end())
                throw DomainError("expression is not in the span of the basis words");
            b.emplace_back(it->second, coeff);
        }
        const std::vector<Int> solution = prepared.solver.solve(b);
        for (std::size_t k = 0; k < solution.size(); ++k)
            result.add_term(prepared.serials[k], solution[k]);
    }
    return result;
}

LieElement rewrite_to_hall(const BracketExpr& e,
                           std::shared_ptr<const HallBasisTable> table) {
    return HallRewriter(std::move(table)).rewrite(e);
}

LieElement lie_bracket(const LieElement& a, const LieElement& b,
                       const HallRewriter& rewriter) {
    if (a.table_ptr() != rewriter.table_ptr() || b.table_ptr() != rewriter.table_ptr())
        throw DomainError("lie_bracket requires both elements over the rewriter's table");
    return rewriter.rewrite(BracketExpr::bracket(a.to_bracket_expr(), b.to_bracket_expr()));
}

int moebius(int m) {
    if (m < 1)
        throw DomainError("moebius requires m >= 1");
    int result = 1;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0)
                return 0;
            result = -result;
        }
    }
    if (m > 1)
        result = -result;
    return result;
}

Int witt_dimension(int n, int l) {
    if (n < 1 || l < 1)
        throw DomainError("witt_dimension requires n >= 1 and l >= 1");
    Int sum = 0;
    for (int d = 1; d <= l; ++d) {
        if (l % d != 0)
            continue;
        const int mu = moebius(d);
        if (mu == 0)
            continue;
        sum += Int(mu) * boost::multiprecision::pow(Int(n), static_cast<unsigned>(l / d));
    }
    Int quotient, remainder;
    boost::multiprecision::divide_qr(sum, Int(l), quotient, remainder);
    if (remainder != 0)
        throw std::logic_error("Witt sum not divisible by the degree");
    return quotient;
}

namespace {

// Rank of the integer span of the given elements; all-zero rows never
// affect the rank, so only sequences that actually occur become rows.
int tensor_rank(const std::vector<TensorElement>& elements) {
    std::map<GenSequence, std::size_t> row_index;
    for (const TensorElement& t : elements) {
        for (const auto& [sequence, coeff] : t.terms())
            row_index.try_emplace(sequence, 0);
    }
    std::size_t next_row = 0;
    for (auto& [sequence, index] : row_index)
        index = next_row++;
    IntMatrix m(next_row, elements.size());
    for (std::size_t j = 0; j < elements.size(); ++j) {
        for (const auto& [sequence, coeff] : elements[j].terms())
            m(row_index.at(sequence), j) = coeff;
    }
    return bareiss_rank(std::move(m));
}

HallWord left_normed_bracket(const std::vector<int>& letters) {
    HallWord w = HallWord::leaf(letters.front());
    for (std::size_t i = 1; i < letters.size(); ++i)
        w = HallWord::bracket(w, HallWord::leaf(letters[i]));
    return w;
}

} // namespace

std::vector<int> BasisReport::ranks() const {
    std::vector<int> result;
    result.reserve(degrees.size());
    for (const DegreeBasisReport& d : degrees)
        result.push_back(d.independent_rank);
    return result;
}

BasisReport verify_hall_basis(const HallBasisTable& table, int max_degree) {
    if (max_degree < 1)
        throw DomainError("max_degree must be >= 1");
    if (table.max_len() < max_degree)
        throw DomainError("table bound max_len=" + std::to_string(table.max_len()) +
                          " is smaller than the requested degree " +
                          std::to_string(max_degree));
    const int n = table.alphabet_size();

    BasisReport report;
    for (int degree = 1; degree <= max_degree; ++degree) {
        DegreeBasisReport d;
        d.degree = degree;

        const auto words = table.words_of_length(degree);
        d.word_count = static_cast<int>(words.size());
        std::vector<TensorElement> table_columns;
        table_columns.reserve(words.size());
        for (const RankedWord& rw : words)
            table_columns.push_back(embed_tensor(rw.word));
        d.independent_rank = tensor_rank(table_columns);

        std::vector<TensorElement> left_normed_columns;
        std::vector<int> letters(static_cast<std::size_t>(degree), 1);
        while (true) {
            left_normed_columns.push_back(embed_tensor(left_normed_bracket(letters)));
            int i = degree - 1;
            while (i >= 0 && letters[static_cast<std::size_t>(i)] == n) {
                letters[static_cast<std::size_t>(i)] = 1;
                --i;
            }
            if (i < 0)
                break;
            ++letters[static_cast<std::size_t>(i)];
        }
        d.spanning_rank = tensor_rank(left_normed_columns);

        d.witt = witt_dimension(n, degree);
        d.independent = d.independent_rank == d.word_count;
        d.spans = d.word_count == d.spanning_rank;
        report.independent = report.independent && d.independent;
        report.spans = report.spans && d.spans;
        report.degrees.push_back(std::move(d));
    }
    return report;
}

} // namespace hallmilnor
