#include "hallmilnor/json_io.hpp"

#include <exception>
#include <memory>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hallmilnor/errors.hpp"

namespace hallmilnor {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object())
        throw ParseError("expected a JSON object", 0);
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string("missing field '") + key + "'", 0);
    return *it;
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer())
        throw ParseError(std::string("field '") + key + "' must be an integer", 0);
    return v.get<int>();
}

std::string string_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_string())
        throw ParseError(std::string("field '") + key + "' must be a string", 0);
    return v.get<std::string>();
}

std::vector<int> int_array(const Json& v, const char* what) {
    if (!v.is_array())
        throw ParseError(std::string(what) + " must be an array of integers", 0);
    std::vector<int> result;
    result.reserve(v.size());
    for (const Json& e : v) {
        if (!e.is_number_integer())
            throw ParseError(std::string(what) + " must be an array of integers", 0);
        result.push_back(e.get<int>());
    }
    return result;
}

Int coefficient_field(const Json& j) {
    const std::string text = string_field(j, "coefficient");
    try {
        return Int(text);
    } catch (const std::exception&) {
        throw ParseError("invalid integer literal '" + text + "'", 0);
    }
}

OrderPolicy policy_field(const Json& j) {
    const std::string text = string_field(j, "policy");
    auto policy = parse_order_policy(text);
    if (!policy)
        throw ParseError("unknown order policy '" + text + "'", 0);
    return *policy;
}

std::vector<std::string> alphabet_field(const Json& j) {
    const Json& v = field(j, "alphabet");
    if (!v.is_array())
        throw ParseError("field 'alphabet' must be an array of names", 0);
    std::vector<std::string> names;
    names.reserve(v.size());
    for (const Json& e : v) {
        if (!e.is_string())
            throw ParseError("field 'alphabet' must be an array of names", 0);
        names.push_back(e.get<std::string>());
    }
    return names;
}

// Semantic validation during import surfaces as ParseError too, so that
// from-JSON entry points have a single failure type.
template <typename F>
auto guarded(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ParseError&) {
        throw;
    } catch (const DomainError& e) {
        throw ParseError(std::string("invalid data: ") + e.what(), 0);
    }
}

Json table_to_json(const HallBasisTable& table) {
    Json j;
    Json alphabet = Json::array();
    for (const Generator& g : table.alphabet().generators())
        alphabet.push_back(g.name);
    j["alphabet"] = std::move(alphabet);
    j["max_len"] = table.max_len();
    j["policy"] = std::string(to_string(table.policy()));
    Json words = Json::array();
    for (const RankedWord& rw : table.words()) {
        Json row;
        row["serial"] = rw.serial;
        row["word"] = table.format(rw.word);
        row["length"] = rw.word.length();
        row["rank"] = rw.rank;
        row["multidegree"] = rw.word.multidegree(table.alphabet_size());
        words.push_back(std::move(row));
    }
    j["words"] = std::move(words);
    return j;
}

HallBasisTable table_from_json_value(const Json& j) {
    const Alphabet alphabet(alphabet_field(j));
    HallBasisTable table =
        enumerate_hall_basis(alphabet, int_field(j, "max_len"), policy_field(j));
    const Json& words = field(j, "words");
    if (!words.is_array() || static_cast<int>(words.size()) != table.size())
        throw ParseError("stored word list does not match the enumerated basis size", 0);
    int serial = 0;
    for (const Json& row : words) {
        ++serial;
        const RankedWord& rw = table.at_serial(serial);
        if (int_field(row, "serial") != serial ||
            string_field(row, "word") != table.format(rw.word) ||
            int_field(row, "length") != rw.word.length() ||
            int_field(row, "rank") != rw.rank)
            throw ParseError("stored word " + std::to_string(serial) +
                             " does not match the enumerated basis", 0);
    }
    return table;
}

Json series_to_json(const MultiSeries& series) {
    Json j;
    j["variables"] = series.num_vars();
    j["truncation"] = series.truncation();
    Json terms = Json::array();
    for (const auto& [exponents, coeff] : series.terms()) {
        Json term;
        term["exponents"] = exponents;
        term["coefficient"] = coeff.str();
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

MultiSeries series_from_json_value(const Json& j) {
    MultiSeries series(int_field(j, "variables"), int_field(j, "truncation"));
    const Json& terms = field(j, "terms");
    if (!terms.is_array())
        throw ParseError("field 'terms' must be an array", 0);
    for (const Json& term : terms)
        series.add_term(int_array(field(term, "exponents"), "field 'exponents'"),
                        coefficient_field(term));
    return series;
}

Json formal_object_to_json(const FormalObject& object) {
    Json j;
    j["name"] = object.name;
    j["connectivity"] = object.connectivity;
    j["reduced_series"] = series_to_json(object.reduced_series);
    return j;
}

FormalObject formal_object_from_json_value(const Json& j) {
    FormalObject object{string_field(j, "name"), int_field(j, "connectivity"),
                        series_from_json_value(field(j, "reduced_series"))};
    validate_formal_object(object);
    return object;
}

} // namespace

std::string to_json_string(const HallBasisTable& table, int indent) {
    return table_to_json(table).dump(indent);
}

HallBasisTable table_from_json(const std::string& text) {
    return guarded([&] { return table_from_json_value(parse_json(text)); });
}

std::string to_json_string(const TensorElement& element, int indent) {
    Json j;
    Json terms = Json::array();
    for (const auto& [sequence, coeff] : element.terms()) {
        Json term;
        term["sequence"] = sequence;
        term["coefficient"] = coeff.str();
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j.dump(indent);
}

TensorElement tensor_from_json(const std::string& text) {
    return guarded([&] {
        const Json j = parse_json(text);
        TensorElement element;
        const Json& terms = field(j, "terms");
        if (!terms.is_array())
            throw ParseError("field 'terms' must be an array", 0);
        for (const Json& term : terms) {
            GenSequence sequence = int_array(field(term, "sequence"), "field 'sequence'");
            for (int g : sequence) {
                if (g < 1)
                    throw ParseError("generator indices must be >= 1", 0);
            }
            element.add_term(sequence, coefficient_field(term));
        }
        return element;
    });
}

std::string to_json_string(const LieElement& element, int indent) {
    const HallBasisTable& table = element.table();
    Json j;
    Json alphabet = Json::array();
    for (const Generator& g : table.alphabet().generators())
        alphabet.push_back(g.name);
    j["alphabet"] = std::move(alphabet);
    j["max_len"] = table.max_len();
    j["policy"] = std::string(to_string(table.policy()));
    Json terms = Json::array();
    for (const auto& [serial, coeff] : element.terms()) {
        Json term;
        term["serial"] = serial;
        term["word"] = table.format(table.at_serial(serial).word);
        term["coefficient"] = coeff.str();
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j.dump(indent);
}

LieElement lie_element_from_json(const std::string& text) {
    return guarded([&] {
        const Json j = parse_json(text);
        auto table = std::make_shared<const HallBasisTable>(enumerate_hall_basis(
            Alphabet(alphabet_field(j)), int_field(j, "max_len"), policy_field(j)));
        LieElement element(table);
        const Json& terms = field(j, "terms");
        if (!terms.is_array())
            throw ParseError("field 'terms' must be an array", 0);
        for (const Json& term : terms) {
            const int serial = int_field(term, "serial");
            element.add_term(serial, coefficient_field(term));
            if (string_field(term, "word") != table->format(table->at_serial(serial).word))
                throw ParseError("stored word does not match serial " +
                                 std::to_string(serial), 0);
        }
        return element;
    });
}

std::string to_json_string(const MultiSeries& series, int indent) {
    return series_to_json(series).dump(indent);
}

MultiSeries series_from_json(const std::string& text) {
    return guarded([&] { return series_from_json_value(parse_json(text)); });
}

std::string to_json_string(const FormalObject& object, int indent) {
    return formal_object_to_json(object).dump(indent);
}

FormalObject formal_object_from_json(const std::string& text) {
    return guarded([&] { return formal_object_from_json_value(parse_json(text)); });
}

std::string to_json_string(const BasisReport& report, int indent) {
    Json j;
    j["independent"] = report.independent;
    j["spans"] = report.spans;
    Json degrees = Json::array();
    for (const DegreeBasisReport& d : report.degrees) {
        Json row;
        row["degree"] = d.degree;
        row["word_count"] = d.word_count;
        row["independent_rank"] = d.independent_rank;
        row["spanning_rank"] = d.spanning_rank;
        row["witt"] = d.witt.str();
        row["independent"] = d.independent;
        row["spans"] = d.spans;
        degrees.push_back(std::move(row));
    }
    j["degrees"] = std::move(degrees);
    return j.dump(indent);
}

BasisReport basis_report_from_json(const std::string& text) {
    return guarded([&] {
        const Json j = parse_json(text);
        BasisReport report;
        const Json& independent = field(j, "independent");
        const Json& spans = field(j, "spans");
        if (!independent.is_boolean() || !spans.is_boolean())
            throw ParseError("fields 'independent' and 'spans' must be booleans", 0);
        report.independent = independent.get<bool>();
        report.spans = spans.get<bool>();
        const Json& degrees = field(j, "degrees");
        if (!degrees.is_array())
            throw ParseError("field 'degrees' must be an array", 0);
        for (const Json& row : degrees) {
            DegreeBasisReport d;
            d.degree = int_field(row, "degree");
            d.word_count = int_field(row, "word_count");
            d.independent_rank = int_field(row, "independent_rank");
            d.spanning_rank = int_field(row, "spanning_rank");
            const std::string witt = string_field(row, "witt");
            try {
                d.witt = Int(witt);
            } catch (const std::exception&) {
                throw ParseError("invalid integer literal '" + witt + "'", 0);
            }
            const Json& di = field(row, "independent");
            const Json& ds = field(row, "spans");
            if (!di.is_boolean() || !ds.is_boolean())
                throw ParseError("per-degree 'independent'/'spans' must be booleans", 0);
            d.independent = di.get<bool>();
            d.spans = ds.get<bool>();
            report.degrees.push_back(std::move(d));
        }
        return report;
    });
}

std::string to_json_string(const Decomposition& decomposition, int indent) {
    Json j;
    Json inputs = Json::array();
    for (const FormalObject& object : decomposition.inputs)
        inputs.push_back(formal_object_to_json(object));
    j["inputs"] = std::move(inputs);
    Json bound;
    if (const auto* by_len = std::get_if<MaxWordLength>(&decomposition.bound)) {
        bound["type"] = "max-length";
        bound["value"] = by_len->value;
    } else {
        bound["type"] = "min-connectivity";
        bound["value"] = std::get<MinOmittedConnectivity>(decomposition.bound).value;
    }
    j["bound"] = std::move(bound);
    j["policy"] = std::string(to_string(decomposition.policy));
    j["table_max_len"] = decomposition.table->max_len();
    Json factors = Json::array();
    for (const DecompositionFactor& factor : decomposition.factors) {
        Json row;
        row["serial"] = factor.word.serial;
        row["word"] = decomposition.table->format(factor.word.word);
        row["rank"] = factor.word.rank;
        row["multidegree"] = factor.multidegree;
        row["conn_bound"] = factor.conn_bound;
        row["factor_series"] = series_to_json(factor.factor_series);
        factors.push_back(std::move(row));
    }
    j["factors"] = std::move(factors);
    if (decomposition.residual_conn)
        j["residual_conn"] = *decomposition.residual_conn;
    else
        j["residual_conn"] = nullptr;
    return j.dump(indent);
}

Decomposition decomposition_from_json(const std::string& text) {
    return guarded([&] {
        const Json j = parse_json(text);
        std::vector<FormalObject> inputs;
        const Json& stored_inputs = field(j, "inputs");
        if (!stored_inputs.is_array())
            throw ParseError("field 'inputs' must be an array", 0);
        for (const Json& object : stored_inputs)
            inputs.push_back(formal_object_from_json_value(object));

        const Json& stored_bound = field(j, "bound");
        const std::string bound_type = string_field(stored_bound, "type");
        DecomposeBound bound;
        if (bound_type == "max-length")
            bound = MaxWordLength{int_field(stored_bound, "value")};
        else if (bound_type == "min-connectivity")
            bound = MinOmittedConnectivity{int_field(stored_bound, "value")};
        else
            throw ParseError("unknown bound type '" + bound_type + "'", 0);

        const OrderPolicy policy = policy_field(j);
        std::vector<std::string> names;
        names.reserve(inputs.size());
        for (const FormalObject& object : inputs)
            names.push_back(object.name);
        auto table = std::make_shared<const HallBasisTable>(enumerate_hall_basis(
            Alphabet(std::move(names)), int_field(j, "table_max_len"), policy));

        Decomposition result{std::move(inputs), bound, policy, table, {}, std::nullopt};
        const Json& factors = field(j, "factors");
        if (!factors.is_array())
            throw ParseError("field 'factors' must be an array", 0);
        for (const Json& row : factors) {
            const int serial = int_field(row, "serial");
            const RankedWord& rw = table->at_serial(serial);
            if (string_field(row, "word") != table->format(rw.word) ||
                int_field(row, "rank") != rw.rank)
                throw ParseError("stored factor does not match serial " +
                                 std::to_string(serial), 0);
            result.factors.push_back(DecompositionFactor{
                rw, int_array(field(row, "multidegree"), "field 'multidegree'"),
                int_field(row, "conn_bound"),
                series_from_json_value(field(row, "factor_series"))});
        }
        const Json& residual = field(j, "residual_conn");
        if (residual.is_null())
            result.residual_conn = std::nullopt;
        else if (residual.is_number_integer())
            result.residual_conn = residual.get<int>();
        else
            throw ParseError("field 'residual_conn' must be an integer or null", 0);
        return result;
    });
}

} // namespace hallmilnor
