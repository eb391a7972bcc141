#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hallmilnor/errors.hpp"

namespace hallmilnor {

struct Generator {
    int index = 0;    // 1-based position in the ordered alphabet
    std::string name; // display symbol, nonempty, over [a-zA-Z0-9_]
};

// Ordered alphabet x_1 < ... < x_n. Names must be distinct, nonempty and
// drawn from [a-zA-Z0-9_].
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> names);

    // n generators named x1, x2, ..., xn.
    static Alphabet with_default_names(int n);

    int size() const noexcept { return static_cast<int>(generators_.size()); }
    const std::string& name(int index) const; // 1-based
    std::optional<int> index_of(std::string_view name) const;
    const std::vector<Generator>& generators() const noexcept { return generators_; }

private:
    std::vector<Generator> generators_;
};

// An iterated bracket word: either a single generator or a bracket of two
// words. Immutable; copies share structure.
class HallWord {
public:
    static HallWord leaf(int generator_index);
    static HallWord bracket(const HallWord& left, const HallWord& right);

    bool is_leaf() const noexcept { return node_->left == nullptr; }
    int generator() const; // leaves only
    HallWord left() const; // brackets only; shares the child node
    HallWord right() const;

    // Number of leaves.
    int length() const noexcept { return node_->length; }
    // Leaf index must not exceed n.
    std::vector<int> multidegree(int n) const;
    int max_generator() const noexcept { return node_->max_generator; }

    friend bool operator==(const HallWord& a, const HallWord& b);
    // Structural order (leaves before brackets, then componentwise); used
    // only as a map key, unrelated to any basis order.
    friend std::strong_ordering operator<=>(const HallWord& a, const HallWord& b);

private:
    struct Node {
        int length;
        int max_generator;
        int generator_index;              // valid iff leaf
        std::shared_ptr<const Node> left; // null iff leaf
        std::shared_ptr<const Node> right;
    };

    explicit HallWord(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

std::vector<int> multidegree(const HallWord& w, int n);

// Canonical text form: name | "[" word "," word "]", no whitespace.
std::string format_word(const HallWord& w, const Alphabet& alphabet);
// Inverse of format_word; tolerates ASCII whitespace between tokens.
HallWord parse_word(std::string_view text, const Alphabet& alphabet);

// Tie break among new words of equal length. Any choice yields a length
// compatible total order and hence a valid basis; CreationOrder lists new
// brackets [x_i, x_j] by ascending (i, j).
enum class OrderPolicy {
    CreationOrder,
    LexTree, // lexicographic on the serialized tree
};

std::string_view to_string(OrderPolicy policy);
std::optional<OrderPolicy> parse_order_policy(std::string_view text);

struct RankedWord {
    HallWord word;
    int rank = 0;   // for [x_i, x_j] the serial i of the left factor; 0 for leaves
    int serial = 0; // 1-based position in the basis order
};

// The words of a Hall basis up to a length bound, in basis order. Serials
// are 1..size in list order; the order is compatible with word length; the
// first n entries are the generators.
class HallBasisTable {
public:
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    int alphabet_size() const noexcept { return alphabet_.size(); }
    int max_len() const noexcept { return max_len_; }
    OrderPolicy policy() const noexcept { return policy_; }

    const std::vector<RankedWord>& words() const noexcept { return words_; }
    int size() const noexcept { return static_cast<int>(words_.size()); }
    const RankedWord& at_serial(int serial) const; // 1-based

    std::span<const RankedWord> words_of_length(int len) const;
    int count_of_length(int len) const;

    std::optional<int> serial_of(const HallWord& w) const;
    std::string format(const HallWord& w) const { return format_word(w, alphabet_); }

private:
    friend HallBasisTable enumerate_hall_basis(const Alphabet&, int, OrderPolicy);

    explicit HallBasisTable(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    Alphabet alphabet_;
    int max_len_ = 0;
    OrderPolicy policy_ = OrderPolicy::CreationOrder;
    std::vector<RankedWord> words_;
    std::vector<int> length_offsets_; // words_ index of first word of each length
    std::vector<std::pair<HallWord, int>> serial_index_; // sorted by word
};

// Enumerate all basis words of length <= max_len. A bracket [x_i, x_j] is
// admitted iff r(x_j) <= i < j, its rank is i, and new words of each length
// are ordered by the policy. Throws DomainError for n == 0 or max_len == 0.
HallBasisTable enumerate_hall_basis(const Alphabet& alphabet, int max_len,
                                    OrderPolicy policy = OrderPolicy::CreationOrder);
HallBasisTable enumerate_hall_basis(int n, int max_len,
                                    OrderPolicy policy = OrderPolicy::CreationOrder);

struct SplitStep {
    HallWord head;
    std::vector<HallWord> next;
};

// One step of the inductive basis construction: pops the first word h of
// `current` and returns every ad(h)^i(x) with x in current \ {h}, i >= 0,
// truncated to length <= max_len and ordered length-compatibly under the
// policy. Throws DomainError on empty input.
SplitStep split_step(const Alphabet& alphabet, std::span<const HallWord> current,
                     int max_len, OrderPolicy policy = OrderPolicy::CreationOrder);

// Plain-text export, one row per word: "serial word length rank".
std::string render_table_text(const HallBasisTable& table);

} // namespace hallmilnor
