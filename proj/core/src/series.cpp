#include "hallmilnor/series.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

#include "hallmilnor/errors.hpp"

namespace hallmilnor {

namespace {

int t_degree(const MultiSeries::Exponents& exponents) {
    return std::accumulate(exponents.begin() + 1, exponents.end(), 0);
}

void check_same_arity(const MultiSeries& a, const MultiSeries& b) {
    if (a.num_vars() != b.num_vars())
        throw DomainError("variable arity mismatch: " + std::to_string(a.num_vars()) +
                          " vs " + std::to_string(b.num_vars()));
}

void check_zero_constant(const MultiSeries& a, const char* operation) {
    if (!a.constant_term_is_zero())
        throw DomainError(std::string(operation) + " requires a zero constant term");
}

} // namespace

MultiSeries::MultiSeries(int num_vars, int truncation)
    : num_vars_(num_vars), truncation_(truncation) {
    if (num_vars < 0)
        throw DomainError("number of variables must be nonnegative");
    if (truncation < 0)
        throw DomainError("truncation bound must be nonnegative");
}

MultiSeries MultiSeries::zero(int num_vars, int truncation) {
    return MultiSeries(num_vars, truncation);
}

MultiSeries MultiSeries::generator(int num_vars, int truncation, int index) {
    if (index < 0 || index >= num_vars)
        throw DomainError("generator index " + std::to_string(index) +
                          " out of range for " + std::to_string(num_vars) + " variables");
    MultiSeries result(num_vars, truncation);
    Exponents exponents(static_cast<std::size_t>(num_vars) + 1, 0);
    exponents[static_cast<std::size_t>(index) + 1] = 1;
    result.add_term(exponents, 1);
    return result;
}

void MultiSeries::check_exponents(const Exponents& exponents) const {
    if (exponents.size() != static_cast<std::size_t>(num_vars_) + 1)
        throw DomainError("exponent vector has length " + std::to_string(exponents.size()) +
                          ", expected " + std::to_string(num_vars_ + 1));
    for (int e : exponents) {
        if (e < 0)
            throw DomainError("exponents must be nonnegative");
    }
}

void MultiSeries::add_term(const Exponents& exponents, const Int& coeff) {
    check_exponents(exponents);
    if (coeff == 0)
        return;
    if (t_degree(exponents) > truncation_ || exponents[0] > truncation_)
        return;
    auto [it, inserted] = terms_.try_emplace(exponents, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Int MultiSeries::coefficient(const Exponents& exponents) const {
    check_exponents(exponents);
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Int(0) : it->second;
}

int MultiSeries::order() const {
    int best = std::numeric_limits<int>::max();
    for (const auto& [exponents, coeff] : terms_)
        best = std::min(best, t_degree(exponents));
    return best;
}

bool MultiSeries::constant_term_is_zero() const {
    const Exponents zeros(static_cast<std::size_t>(num_vars_) + 1, 0);
    return terms_.find(zeros) == terms_.end();
}

MultiSeries MultiSeries::truncated(int new_truncation) const {
    if (new_truncation > truncation_)
        throw DomainError("cannot raise the truncation bound of a series");
    if (new_truncation == truncation_)
        return *this;
    MultiSeries result(num_vars_, new_truncation);
    for (const auto& [exponents, coeff] : terms_)
        result.add_term(exponents, coeff);
    return result;
}

MultiSeries series_add(const MultiSeries& a, const MultiSeries& b) {
    check_same_arity(a, b);
    MultiSeries result(a.num_vars(), std::min(a.truncation(), b.truncation()));
    for (const auto& [exponents, coeff] : a.terms())
        result.add_term(exponents, coeff);
    for (const auto& [exponents, coeff] : b.terms())
        result.add_term(exponents, coeff);
    return result;
}

MultiSeries series_sub(const MultiSeries& a, const MultiSeries& b) {
    return series_add(a, series_scale(b, -1));
}

MultiSeries series_mul(const MultiSeries& a, const MultiSeries& b) {
    check_same_arity(a, b);
    const int bound = std::min(a.truncation(), b.truncation());
    MultiSeries result(a.num_vars(), bound);
    MultiSeries::Exponents sum(static_cast<std::size_t>(a.num_vars()) + 1, 0);
    for (const auto& [ea, ca] : a.terms()) {
        if (t_degree(ea) > bound || ea[0] > bound)
            continue;
        for (const auto& [eb, cb] : b.terms()) {
            for (std::size_t i = 0; i < sum.size(); ++i)
                sum[i] = ea[i] + eb[i];
            result.add_term(sum, ca * cb);
        }
    }
    return result;
}

MultiSeries series_scale(const MultiSeries& a, const Int& c) {
    MultiSeries result(a.num_vars(), a.truncation());
    if (c == 0)
        return result;
    for (const auto& [exponents, coeff] : a.terms())
        result.add_term(exponents, coeff * c);
    return result;
}

MultiSeries series_pow(const MultiSeries& a, int exponent) {
    if (exponent < 0)
        throw DomainError("series exponent must be nonnegative");
    MultiSeries result(a.num_vars(), a.truncation());
    result.add_term(MultiSeries::Exponents(static_cast<std::size_t>(a.num_vars()) + 1, 0), 1);
    for (int i = 0; i < exponent; ++i)
        result = series_mul(result, a);
    return result;
}

bool series_eq(const MultiSeries& a, const MultiSeries& b, SeriesMismatch* mismatch) {
    check_same_arity(a, b);
    const int bound = std::min(a.truncation(), b.truncation());
    const MultiSeries ta = a.truncated(std::min(bound, a.truncation()));
    const MultiSeries tb = b.truncated(std::min(bound, b.truncation()));
    auto ia = ta.terms().begin(), ea = ta.terms().end();
    auto ib = tb.terms().begin(), eb = tb.terms().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
            if (mismatch)
                *mismatch = {ia->first, ia->second, Int(0)};
            return false;
        }
        if (ia == ea || ib->first < ia->first) {
            if (mismatch)
                *mismatch = {ib->first, Int(0), ib->second};
            return false;
        }
        if (ia->second != ib->second) {
            if (mismatch)
                *mismatch = {ia->first, ia->second, ib->second};
            return false;
        }
        ++ia;
        ++ib;
    }
    return true;
}

MultiSeries geom_sum(const MultiSeries& f) {
    check_zero_constant(f, "geometric sum");
    MultiSeries acc(f.num_vars(), f.truncation());
    MultiSeries power = f;
    // Every multiplication by f raises the minimal combined (s + t) degree,
    // which is capped at twice the truncation bound.
    const int max_iterations = 2 * f.truncation() + 2;
    for (int i = 0; !power.is_zero(); ++i) {
        if (i > max_iterations)
            throw std::logic_error("geometric sum failed to terminate");
        acc = series_add(acc, power);
        power = series_mul(power, f);
    }
    return acc;
}

MultiSeries wedge_series(const MultiSeries& a, const MultiSeries& b) {
    check_zero_constant(a, "wedge series");
    check_zero_constant(b, "wedge series");
    return series_add(a, b);
}

MultiSeries product_series(const MultiSeries& a, const MultiSeries& b) {
    check_zero_constant(a, "product series");
    check_zero_constant(b, "product series");
    return series_add(series_add(a, b), series_mul(a, b));
}

MultiSeries smash_series(const MultiSeries& a, const MultiSeries& b) {
    check_zero_constant(a, "smash series");
    check_zero_constant(b, "smash series");
    return series_mul(a, b);
}

MultiSeries suspend_series(const MultiSeries& a) {
    check_zero_constant(a, "suspension series");
    MultiSeries result(a.num_vars(), a.truncation());
    for (const auto& [exponents, coeff] : a.terms()) {
        MultiSeries::Exponents shifted = exponents;
        shifted[0] += 1;
        result.add_term(shifted, coeff);
    }
    return result;
}

MultiSeries join_series(const MultiSeries& a, const MultiSeries& b) {
    return suspend_series(smash_series(a, b));
}

MultiSeries half_smash_series(const MultiSeries& a, const MultiSeries& b) {
    check_zero_constant(a, "half-smash series");
    check_zero_constant(b, "half-smash series");
    return series_add(b, series_mul(a, b));
}

MultiSeries cof_null_series(const MultiSeries& a, const MultiSeries& b) {
    check_zero_constant(a, "cofiber series");
    check_zero_constant(b, "cofiber series");
    return series_add(suspend_series(a), b);
}

namespace {

void check_conn_argument(int k, const char* operation) {
    if (k < -1)
        throw DomainError(std::string(operation) + ": connectivity must be >= -1, got " +
                          std::to_string(k));
}

} // namespace

int conn_susp(int k) {
    check_conn_argument(k, "conn_susp");
    return k + 1;
}

int conn_loop(int k) {
    if (k < 0)
        throw DomainError("conn_loop: connectivity must be >= 0, got " + std::to_string(k));
    return k - 1;
}

int conn_smash(int k, int l) {
    check_conn_argument(k, "conn_smash");
    check_conn_argument(l, "conn_smash");
    return k + l + 1;
}

int conn_smash_power(int k, int m) {
    check_conn_argument(k, "conn_smash_power");
    if (m < 0)
        throw DomainError("conn_smash_power: power must be >= 0, got " + std::to_string(m));
    return m * (k + 1) - 1;
}

int conn_wedge(int k, int l) {
    check_conn_argument(k, "conn_wedge");
    check_conn_argument(l, "conn_wedge");
    return std::min(k, l);
}

int conn_product(int k, int l) {
    check_conn_argument(k, "conn_product");
    check_conn_argument(l, "conn_product");
    return std::min(k, l);
}

int word_connectivity(const HallWord& w, const std::vector<int>& conns) {
    for (int c : conns) {
        if (c < 0)
            throw DomainError("word_connectivity: connectivities must be >= 0");
    }
    if (w.max_generator() > static_cast<int>(conns.size()))
        throw DomainError("word uses generator index " + std::to_string(w.max_generator()) +
                          " but only " + std::to_string(conns.size()) +
                          " connectivities were given");
    const std::vector<int> degrees = w.multidegree(static_cast<int>(conns.size()));
    int result = -1;
    for (std::size_t i = 0; i < conns.size(); ++i)
        result += degrees[i] * (conns[i] + 1);
    return result;
}

void validate_formal_object(const FormalObject& object) {
    if (object.connectivity < 0)
        throw DomainError("object '" + object.name +
                          "' has connectivity " + std::to_string(object.connectivity) +
                          "; the decomposition applies to pointed connected objects "
                          "(connectivity >= 0)");
    if (!object.reduced_series.constant_term_is_zero())
        throw DomainError("object '" + object.name +
                          "' has a reduced series with a nonzero constant term");
    const int order = object.reduced_series.order();
    if (order < object.connectivity + 1)
        throw DomainError("object '" + object.name + "' claims connectivity " +
                          std::to_string(object.connectivity) +
                          " but its reduced series has order " + std::to_string(order));
}

std::string format_series(const MultiSeries& a) {
    if (a.is_zero())
        return "0";
    std::string out;
    for (const auto& [exponents, coeff] : a.terms()) {
        std::string monomial;
        auto append_factor = [&monomial](const std::string& var, int e) {
            if (e == 0)
                return;
            if (!monomial.empty())
                monomial += "·";
            monomial += var;
            if (e > 1)
                monomial += "^" + std::to_string(e);
        };
        append_factor("s", exponents[0]);
        for (std::size_t i = 1; i < exponents.size(); ++i)
            append_factor("t" + std::to_string(i), exponents[i]);

        const Int magnitude = coeff < 0 ? Int(-coeff) : coeff;
        std::string body;
        if (monomial.empty())
            body = magnitude.str();
        else if (magnitude == 1)
            body = monomial;
        else
            body = magnitude.str() + "·" + monomial;

        if (out.empty())
            out = (coeff < 0 ? "-" : "") + body;
        else
            out += (coeff < 0 ? " - " : " + ") + body;
    }
    return out;
}

} // namespace hallmilnor
