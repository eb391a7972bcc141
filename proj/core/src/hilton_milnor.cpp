#include "hallmilnor/hilton_milnor.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "hallmilnor/errors.hpp"

namespace hallmilnor {

namespace {

struct ValidatedInputs {
    int n = 0;
    int truncation = 0;               // common (minimum) truncation bound
    std::vector<int> conns;
    std::vector<MultiSeries> series;  // re-truncated to the common bound
};

ValidatedInputs validate_inputs(const std::vector<FormalObject>& objects) {
    if (objects.empty())
        throw DomainError("the decomposition requires at least one object");
    ValidatedInputs in;
    in.n = static_cast<int>(objects.size());
    int truncation = std::numeric_limits<int>::max();
    for (const FormalObject& object : objects) {
        validate_formal_object(object);
        if (object.reduced_series.num_vars() != in.n)
            throw DomainError("object '" + object.name + "' has a series in " +
                              std::to_string(object.reduced_series.num_vars()) +
                              " variables; expected " + std::to_string(in.n));
        truncation = std::min(truncation, object.reduced_series.truncation());
    }
    in.truncation = truncation;
    for (const FormalObject& object : objects) {
        in.conns.push_back(object.connectivity);
        in.series.push_back(object.reduced_series.truncated(truncation));
    }
    return in;
}

MultiSeries smash_word_series(const std::vector<MultiSeries>& f,
                              const std::vector<int>& multidegree, int n,
                              int truncation) {
    MultiSeries acc(n, truncation);
    acc.add_term(MultiSeries::Exponents(static_cast<std::size_t>(n) + 1, 0), 1);
    for (int i = 0; i < n; ++i) {
        if (multidegree[static_cast<std::size_t>(i)] > 0)
            acc = series_mul(acc, series_pow(f[static_cast<std::size_t>(i)].truncated(truncation),
                                             multidegree[static_cast<std::size_t>(i)]));
    }
    return acc;
}

void fold_min(std::optional<int>& target, int value) {
    if (!target || value < *target)
        target = value;
}

} // namespace

Decomposition decompose(const std::vector<FormalObject>& objects, DecomposeBound bound,
                        OrderPolicy policy) {
    ValidatedInputs in = validate_inputs(objects);

    std::vector<std::string> names;
    names.reserve(objects.size());
    for (const FormalObject& object : objects)
        names.push_back(object.name);
    const Alphabet alphabet(names);

    // Every word of length l >= 2 mixes at least two generators (a bracket
    // never pairs a word with itself), so its connectivity bound is at
    // least length_floor(l) below. That makes both the factor search and
    // the residual minimum finite.
    std::vector<int> sorted_conns = in.conns;
    std::sort(sorted_conns.begin(), sorted_conns.end());
    const auto length_floor = [&sorted_conns](int len) {
        return (len - 1) * (sorted_conns[0] + 1) + (sorted_conns[1] + 1) - 1;
    };

    bool by_connectivity = false;
    int min_omitted_conn = 0;
    int enumerate_len = 0;
    if (const auto* by_len = std::get_if<MaxWordLength>(&bound)) {
        if (by_len->value < 1)
            throw DomainError("length bound must be >= 1");
        enumerate_len = by_len->value;
    } else {
        const auto& by_conn = std::get<MinOmittedConnectivity>(bound);
        if (by_conn.value < 1)
            throw DomainError("connectivity bound must be >= 1");
        by_connectivity = true;
        min_omitted_conn = by_conn.value;
        enumerate_len = 1;
        if (in.n >= 2) {
            for (int len = 2; length_floor(len) < min_omitted_conn; ++len)
                enumerate_len = len;
        }
    }

    auto table = std::make_shared<const HallBasisTable>(
        enumerate_hall_basis(alphabet, enumerate_len, policy));

    Decomposition result{objects, bound, policy, table, {}, std::nullopt};
    std::optional<int> residual;
    for (const RankedWord& rw : table->words()) {
        const int conn_bound = word_connectivity(rw.word, in.conns);
        if (by_connectivity && conn_bound >= min_omitted_conn) {
            fold_min(residual, conn_bound);
            continue;
        }
        std::vector<int> multidegree = rw.word.multidegree(in.n);
        MultiSeries factor_series =
            geom_sum(smash_word_series(in.series, multidegree, in.n, in.truncation));
        result.factors.push_back(DecompositionFactor{rw, std::move(multidegree),
                                                     conn_bound, std::move(factor_series)});
    }

    // Extend the omitted-words minimum across longer words, one length at
    // a time, until the floor for the next length cannot beat it. With a
    // single generator there are no words beyond length 1 at all.
    if (in.n >= 2) {
        int deepest = enumerate_len;
        while (!residual || length_floor(deepest + 1) < *residual) {
            ++deepest;
            const HallBasisTable deeper = enumerate_hall_basis(alphabet, deepest, policy);
            for (const RankedWord& rw : deeper.words_of_length(deepest))
                fold_min(residual, word_connectivity(rw.word, in.conns));
        }
    }
    result.residual_conn = residual;
    return result;
}

bool verify_hm_series(const std::vector<FormalObject>& objects, int truncation,
                      OrderPolicy policy, SeriesMismatch* mismatch) {
    ValidatedInputs in = validate_inputs(objects);
    if (truncation < 0)
        throw DomainError("truncation must be >= 0");
    if (truncation > in.truncation)
        throw DomainError("truncation " + std::to_string(truncation) +
                          " exceeds the input series bound " +
                          std::to_string(in.truncation));

    std::vector<MultiSeries> f;
    f.reserve(in.series.size());
    for (const MultiSeries& s : in.series)
        f.push_back(s.truncated(truncation));

    MultiSeries total(in.n, truncation);
    for (const MultiSeries& s : f)
        total = series_add(total, s);
    const MultiSeries lhs = geom_sum(total);

    // Words longer than the truncation have smash series of higher order
    // and contribute the empty factor.
    const HallBasisTable table =
        enumerate_hall_basis(in.n, std::max(1, truncation), policy);
    MultiSeries rhs(in.n, truncation);
    for (const RankedWord& rw : table.words()) {
        const MultiSeries smash =
            smash_word_series(f, rw.word.multidegree(in.n), in.n, truncation);
        if (smash.is_zero())
            continue;
        rhs = product_series(rhs, geom_sum(smash));
    }
    return series_eq(lhs, rhs, mismatch);
}

bool verify_fundamental_split(const MultiSeries& f_X, const MultiSeries& f_Y,
                              int truncation, SeriesMismatch* mismatch) {
    if (truncation < 0)
        throw DomainError("truncation must be >= 0");
    const MultiSeries X = f_X.truncated(truncation);
    const MultiSeries Y = f_Y.truncated(truncation);

    const MultiSeries lhs = geom_sum(series_add(X, Y));
    const MultiSeries looped_X = geom_sum(X);
    const MultiSeries rhs_nested = product_series(
        looped_X, geom_sum(series_add(Y, series_mul(Y, looped_X))));
    if (!series_eq(lhs, rhs_nested, mismatch))
        return false;

    // Expanded variant: Y smashed against 1 + X + X^2 + ... + X^N.
    MultiSeries powers(X.num_vars(), truncation);
    MultiSeries power(X.num_vars(), truncation);
    power.add_term(MultiSeries::Exponents(static_cast<std::size_t>(X.num_vars()) + 1, 0), 1);
    powers = series_add(powers, power);
    for (int i = 1; i <= truncation; ++i) {
        power = series_mul(power, X);
        powers = series_add(powers, power);
    }
    const MultiSeries rhs_expanded =
        product_series(looped_X, geom_sum(series_mul(Y, powers)));
    return series_eq(lhs, rhs_expanded, mismatch);
}

bool verify_james(const MultiSeries& f, int truncation, SeriesMismatch* mismatch) {
    if (truncation < 0)
        throw DomainError("truncation must be >= 0");
    const MultiSeries F = f.truncated(truncation);
    const MultiSeries lhs = suspend_series(geom_sum(F));

    MultiSeries rhs(F.num_vars(), truncation);
    MultiSeries power = F;
    for (int i = 1; i <= truncation && !power.is_zero(); ++i) {
        rhs = series_add(rhs, suspend_series(power));
        power = series_mul(power, F);
    }
    return series_eq(lhs, rhs, mismatch);
}

bool verify_half2(const MultiSeries& f_X, const MultiSeries& f_Y, int truncation,
                  SeriesMismatch* mismatch) {
    if (truncation < 0)
        throw DomainError("truncation must be >= 0");
    const MultiSeries X = f_X.truncated(truncation);
    const MultiSeries Y = f_Y.truncated(truncation);
    const MultiSeries lhs = half_smash_series(Y, suspend_series(X));
    const MultiSeries rhs = suspend_series(series_add(X, series_mul(X, Y)));
    return series_eq(lhs, rhs, mismatch);
}

std::string render_decomposition_text(const Decomposition& decomposition) {
    std::string out;
    for (const DecompositionFactor& factor : decomposition.factors) {
        out += std::to_string(factor.word.serial);
        out += ' ';
        out += decomposition.table->format(factor.word.word);
        out += ' ';
        for (std::size_t i = 0; i < factor.multidegree.size(); ++i) {
            if (i > 0)
                out += ',';
            out += std::to_string(factor.multidegree[i]);
        }
        out += ' ';
        out += std::to_string(factor.conn_bound);
        out += '\n';
    }
    return out;
}

} // namespace hallmilnor
