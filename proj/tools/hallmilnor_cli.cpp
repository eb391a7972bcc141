// Command-line front end for the basis/decomposition library.
//
// Exit codes: 0 success (verifications passed), 1 a verification failed,
// 2 invalid input or usage.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hallmilnor/errors.hpp"
#include "hallmilnor/free_lie.hpp"
#include "hallmilnor/hall.hpp"
#include "hallmilnor/hilton_milnor.hpp"
#include "hallmilnor/json_io.hpp"
#include "hallmilnor/series.hpp"

namespace {

using namespace hallmilnor;

constexpr const char* kTruncationEnvVar = "HALLMILNOR_TRUNCATION";

struct GeneratorSpec {
    std::vector<std::string> names;
    std::vector<int> conns;

    int size() const { return static_cast<int>(names.size()); }
};

// Grammar: either a plain count ("3" -> x1,x2,x3 at connectivity 0) or a
// comma list of name[:connectivity] entries with default connectivity 0.
GeneratorSpec parse_generators(const std::string& text) {
    GeneratorSpec spec;
    if (!text.empty() && text.find_first_not_of("0123456789") == std::string::npos) {
        const int n = std::atoi(text.c_str());
        if (n < 1 || n > 64)
            throw DomainError("generator count must be in 1..64, got '" + text + "'");
        for (int i = 1; i <= n; ++i) {
            spec.names.push_back("x" + std::to_string(i));
            spec.conns.push_back(0);
        }
        return spec;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos)
            comma = text.size();
        std::string entry = text.substr(start, comma - start);
        std::string name = entry;
        int conn = 0;
        if (std::size_t colon = entry.find(':'); colon != std::string::npos) {
            name = entry.substr(0, colon);
            const std::string conn_text = entry.substr(colon + 1);
            try {
                std::size_t used = 0;
                conn = std::stoi(conn_text, &used);
                if (used != conn_text.size())
                    throw std::invalid_argument(conn_text);
            } catch (const std::exception&) {
                throw DomainError("invalid connectivity '" + conn_text + "' for generator '" +
                                  name + "'");
            }
            if (conn < 0)
                throw DomainError("connectivity of '" + name + "' must be >= 0, got " +
                                  std::to_string(conn));
        }
        spec.names.push_back(name);
        spec.conns.push_back(conn);
        start = comma + 1;
    }
    // Delegate name validation (charset, duplicates, nonempty).
    Alphabet alphabet(spec.names);
    return spec;
}

int env_truncation_default() {
    const char* env = std::getenv(kTruncationEnvVar);
    if (env == nullptr || *env == '\0')
        return 8;
    try {
        std::size_t used = 0;
        const int value = std::stoi(env, &used);
        if (used != std::string(env).size() || value < 1)
            throw std::invalid_argument(env);
        return value;
    } catch (const std::exception&) {
        throw DomainError(std::string(kTruncationEnvVar) + " must be a positive integer, got '" +
                          env + "'");
    }
}

OrderPolicy policy_from(const std::string& text) {
    auto policy = parse_order_policy(text);
    if (!policy)
        throw DomainError("unknown order policy '" + text +
                          "' (expected creation-order or lex-tree)");
    return *policy;
}

// A generator of declared connectivity c is modeled by the unit series
// t_i^(c+1): a single formal cell at the lowest dimension the connectivity
// permits.
std::vector<FormalObject> unit_objects(const GeneratorSpec& spec, int truncation) {
    std::vector<FormalObject> objects;
    const int n = spec.size();
    for (int i = 0; i < n; ++i) {
        const int conn = spec.conns[static_cast<std::size_t>(i)];
        MultiSeries series(n, truncation);
        MultiSeries::Exponents exponents(static_cast<std::size_t>(n) + 1, 0);
        exponents[static_cast<std::size_t>(i) + 1] = conn + 1;
        series.add_term(exponents, Int(1));
        objects.push_back(
            FormalObject{spec.names[static_cast<std::size_t>(i)], conn, series});
    }
    return objects;
}

std::string exponent_layout(const std::vector<int>& exponents) {
    std::string out = "[";
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(exponents[i]);
    }
    return out + "]";
}

void print_mismatch(const SeriesMismatch& mismatch) {
    std::cout << "first mismatch at exponents [s,t..]=" << exponent_layout(mismatch.exponents)
              << ": left=" << mismatch.left << " right=" << mismatch.right << '\n';
}

int run_hall(const GeneratorSpec& spec, int max_len, OrderPolicy policy, bool json) {
    const HallBasisTable table = enumerate_hall_basis(Alphabet(spec.names), max_len, policy);
    if (json)
        std::cout << to_json_string(table) << '\n';
    else
        std::cout << render_table_text(table);
    return 0;
}

int run_witt(const GeneratorSpec& spec, int max_len, bool json) {
    const int n = spec.size();
    std::vector<Int> counts;
    for (int l = 1; l <= max_len; ++l)
        counts.push_back(witt_dimension(n, l));
    if (json) {
        std::string out = "{\n  \"n\": " + std::to_string(n) + ",\n  \"counts\": [";
        for (std::size_t i = 0; i < counts.size(); ++i)
            out += (i ? ", " : "") + ("\"" + counts[i].str() + "\"");
        std::cout << out << "]\n}\n";
    } else {
        for (std::size_t i = 0; i < counts.size(); ++i)
            std::cout << (i ? "," : "") << counts[i].str();
        std::cout << '\n';
    }
    return 0;
}

int run_rewrite(const std::string& expr_text, const GeneratorSpec& spec,
                std::optional<int> max_len, OrderPolicy policy, bool json) {
    const Alphabet alphabet(spec.names);
    const HallWord word = parse_word(expr_text, alphabet);
    const int bound = max_len.value_or(word.length());
    auto table =
        std::make_shared<const HallBasisTable>(enumerate_hall_basis(alphabet, bound, policy));
    const LieElement normal = rewrite_to_hall(BracketExpr::from_word(word), table);
    if (json)
        std::cout << to_json_string(normal) << '\n';
    else
        std::cout << normal.format() << '\n';
    return 0;
}

int run_decompose(const GeneratorSpec& spec, std::optional<int> max_len,
                  std::optional<int> min_conn, int truncation, OrderPolicy policy,
                  bool json) {
    if (max_len.has_value() == min_conn.has_value())
        throw DomainError("exactly one of --max-len and --min-conn is required");
    if (truncation < 1)
        throw DomainError("truncation must be >= 1");
    DecomposeBound bound;
    if (max_len)
        bound = MaxWordLength{*max_len};
    else
        bound = MinOmittedConnectivity{*min_conn};
    const Decomposition decomposition =
        decompose(unit_objects(spec, truncation), bound, policy);
    if (json) {
        std::cout << to_json_string(decomposition) << '\n';
    } else {
        std::cout << render_decomposition_text(decomposition);
        if (decomposition.residual_conn)
            std::cout << "residual_conn " << *decomposition.residual_conn << '\n';
        else
            std::cout << "residual_conn none\n";
    }
    return 0;
}

int report_verdict(const std::string& what, bool passed, bool json,
                   const SeriesMismatch* mismatch) {
    if (json) {
        std::string out = "{\n  \"check\": \"" + what + "\",\n  \"verified\": ";
        out += passed ? "true" : "false";
        if (!passed && mismatch != nullptr) {
            out += ",\n  \"mismatch\": {\"exponents\": " + exponent_layout(mismatch->exponents) +
                   ", \"left\": \"" + mismatch->left.str() + "\", \"right\": \"" +
                   mismatch->right.str() + "\"}";
        }
        out += "\n}\n";
        std::cout << out;
    } else {
        std::cout << (passed ? "PASS " : "FAIL ") << what << '\n';
        if (!passed && mismatch != nullptr)
            print_mismatch(*mismatch);
    }
    return passed ? 0 : 1;
}

int run_verify_series(const std::string& which, const GeneratorSpec& spec, int truncation,
                      OrderPolicy policy, bool json) {
    const int n = spec.size();
    SeriesMismatch mismatch;
    bool passed = false;
    if (which == "hilton-milnor") {
        passed = verify_hm_series(unit_objects(spec, truncation), truncation, policy, &mismatch);
    } else if (which == "james") {
        MultiSeries f(n, truncation);
        for (int i = 0; i < n; ++i)
            f = series_add(f, MultiSeries::generator(n, truncation, i));
        passed = verify_james(f, truncation, &mismatch);
    } else if (which == "fundamental" || which == "half2") {
        if (n != 2)
            throw DomainError("verify " + which + " needs exactly two generators");
        const MultiSeries f_X = MultiSeries::generator(2, truncation, 0);
        const MultiSeries f_Y = MultiSeries::generator(2, truncation, 1);
        passed = which == "fundamental" ? verify_fundamental_split(f_X, f_Y, truncation, &mismatch)
                                        : verify_half2(f_X, f_Y, truncation, &mismatch);
    } else {
        throw DomainError("unknown verification '" + which + "'");
    }
    return report_verdict(which + " truncation=" + std::to_string(truncation), passed, json,
                          &mismatch);
}

int run_verify_basis(const GeneratorSpec& spec, int degree, OrderPolicy policy, bool json) {
    const HallBasisTable table = enumerate_hall_basis(Alphabet(spec.names), degree, policy);
    const BasisReport report = verify_hall_basis(table, degree);
    const bool passed = report.independent && report.spans;
    if (json) {
        std::cout << to_json_string(report) << '\n';
    } else {
        for (const DegreeBasisReport& d : report.degrees) {
            std::cout << d.degree << ' ' << d.word_count << ' ' << d.independent_rank << ' '
                      << d.spanning_rank << ' ' << d.witt.str() << '\n';
        }
        std::cout << (passed ? "PASS " : "FAIL ") << "basis degree=" << degree << '\n';
    }
    return passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hall bases, free Lie ring normal forms, and the loop-space "
                 "decomposition they index"};
    app.require_subcommand(1);

    std::string gens_text = "2";
    std::string policy_text = "creation-order";
    std::string output = "text";
    int max_len = 0;
    int min_conn = 0;
    int truncation = 0;
    std::string expr_text;
    std::string verify_kind;

    auto add_common = [&](CLI::App* cmd, bool with_policy) {
        cmd->add_option("--gens", gens_text,
                        "generator spec: a count, or comma list of name[:connectivity]");
        if (with_policy)
            cmd->add_option("--policy", policy_text, "creation-order or lex-tree");
        cmd->add_option("--output", output, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* hall = app.add_subcommand("hall", "list the basis words up to a length bound");
    add_common(hall, true);
    hall->add_option("--max-len", max_len, "maximum word length")->required();

    CLI::App* witt = app.add_subcommand("witt", "per-length basis word counts");
    add_common(witt, false);
    witt->add_option("--max-len", max_len, "maximum word length")->required();

    CLI::App* rewrite = app.add_subcommand("rewrite", "normal form of a bracket word");
    add_common(rewrite, true);
    rewrite->add_option("expr", expr_text, "bracket word, e.g. \"[y,x]\"")->required();
    rewrite->add_option("--max-len", max_len, "table bound (default: the word's length)");

    CLI::App* decompose_cmd =
        app.add_subcommand("decompose", "decomposition factor list for the given objects");
    add_common(decompose_cmd, true);
    decompose_cmd->add_option("--max-len", max_len, "keep basis words up to this length");
    decompose_cmd->add_option("--min-conn", min_conn,
                              "keep factors with connectivity bound below this value");
    decompose_cmd->add_option("--truncation", truncation,
                              "series truncation degree (default 8, env " +
                                  std::string(kTruncationEnvVar) + ")");

    CLI::App* verify = app.add_subcommand("verify", "series-level verifications");
    verify->require_subcommand(1);
    std::vector<CLI::App*> verify_cmds;
    for (const char* kind : {"james", "fundamental", "half2", "hilton-milnor"}) {
        CLI::App* cmd = verify->add_subcommand(kind);
        add_common(cmd, true);
        cmd->add_option("--truncation", truncation, "series truncation degree");
        verify_cmds.push_back(cmd);
    }
    CLI::App* verify_basis = verify->add_subcommand("basis");
    add_common(verify_basis, true);
    verify_basis->add_option("--max-len", max_len, "verify degrees 1..max-len")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const GeneratorSpec spec = parse_generators(gens_text);
        const OrderPolicy policy = policy_from(policy_text);
        const bool json = output == "json";

        if (*hall)
            return run_hall(spec, max_len, policy, json);
        if (*witt)
            return run_witt(spec, max_len, json);
        if (*rewrite) {
            std::optional<int> bound;
            if (rewrite->count("--max-len") > 0)
                bound = max_len;
            return run_rewrite(expr_text, spec, bound, policy, json);
        }
        if (*decompose_cmd) {
            std::optional<int> len_bound, conn_bound;
            if (decompose_cmd->count("--max-len") > 0)
                len_bound = max_len;
            if (decompose_cmd->count("--min-conn") > 0)
                conn_bound = min_conn;
            const int trunc = decompose_cmd->count("--truncation") > 0
                                  ? truncation
                                  : env_truncation_default();
            return run_decompose(spec, len_bound, conn_bound, trunc, policy, json);
        }
        if (*verify_basis)
            return run_verify_basis(spec, max_len, policy, json);
        for (CLI::App* cmd : verify_cmds) {
            if (*cmd) {
                const int trunc = cmd->count("--truncation") > 0 ? truncation
                                                                 : env_truncation_default();
                if (trunc < 1)
                    throw DomainError("truncation must be >= 1");
                return run_verify_series(cmd->get_name(), spec, trunc, policy, json);
            }
        }
        throw DomainError("no command selected");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
