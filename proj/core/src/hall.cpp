#include "hallmilnor/hall.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <tuple>

namespace hallmilnor {

namespace {

bool valid_name(std::string_view name) {
    if (name.empty())
        return false;
    for (char c : name) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            return false;
    }
    return true;
}

} // namespace

Alphabet::Alphabet(std::vector<std::string> names) {
    if (names.empty())
        throw DomainError("alphabet must contain at least one generator");
    generators_.reserve(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!valid_name(names[i]))
            throw DomainError("invalid generator name '" + names[i] +
                              "': expected nonempty [a-zA-Z0-9_]+");
        for (const Generator& g : generators_) {
            if (g.name == names[i])
                throw DomainError("duplicate generator name '" + names[i] + "'");
        }
        generators_.push_back(Generator{static_cast<int>(i) + 1, std::move(names[i])});
    }
}

Alphabet Alphabet::with_default_names(int n) {
    if (n < 1)
        throw DomainError("alphabet size must be >= 1");
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        names.push_back("x" + std::to_string(i));
    return Alphabet(std::move(names));
}

const std::string& Alphabet::name(int index) const {
    if (index < 1 || index > size())
        throw DomainError("generator index " + std::to_string(index) + " out of range 1.." +
                          std::to_string(size()));
    return generators_[static_cast<std::size_t>(index) - 1].name;
}

std::optional<int> Alphabet::index_of(std::string_view name) const {
    for (const Generator& g : generators_) {
        if (g.name == name)
            return g.index;
    }
    return std::nullopt;
}

HallWord HallWord::leaf(int generator_index) {
    if (generator_index < 1)
        throw DomainError("generator index must be >= 1");
    auto node = std::make_shared<Node>();
    node->length = 1;
    node->max_generator = generator_index;
    node->generator_index = generator_index;
    return HallWord(std::move(node));
}

HallWord HallWord::bracket(const HallWord& left, const HallWord& right) {
    auto node = std::make_shared<Node>();
    node->length = left.length() + right.length();
    node->max_generator = std::max(left.max_generator(), right.max_generator());
    node->generator_index = 0;
    node->left = left.node_;
    node->right = right.node_;
    return HallWord(std::move(node));
}

int HallWord::generator() const {
    if (!is_leaf())
        throw DomainError("generator() called on a bracket word");
    return node_->generator_index;
}

HallWord HallWord::left() const {
    if (is_leaf())
        throw DomainError("left() called on a leaf");
    return HallWord(node_->left);
}

HallWord HallWord::right() const {
    if (is_leaf())
        throw DomainError("right() called on a leaf");
    return HallWord(node_->right);
}

std::vector<int> HallWord::multidegree(int n) const {
    if (n < max_generator())
        throw DomainError("word uses generator " + std::to_string(max_generator()) +
                          " beyond alphabet size " + std::to_string(n));
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    // Iterative leaf walk.
    std::vector<const Node*> stack{node_.get()};
    while (!stack.empty()) {
        const Node* node = stack.back();
        stack.pop_back();
        if (node->left == nullptr) {
            ++degree[static_cast<std::size_t>(node->generator_index) - 1];
        } else {
            stack.push_back(node->left.get());
            stack.push_back(node->right.get());
        }
    }
    return degree;
}

namespace {

std::strong_ordering compare_nodes(const HallWord& a, const HallWord& b) {
    const bool la = a.is_leaf(), lb = b.is_leaf();
    if (la != lb)
        return la ? std::strong_ordering::less : std::strong_ordering::greater;
    if (la)
        return a.generator() <=> b.generator();
    if (auto c = compare_nodes(a.left(), b.left()); c != 0)
        return c;
    return compare_nodes(a.right(), b.right());
}

} // namespace

bool operator==(const HallWord& a, const HallWord& b) {
    if (a.node_ == b.node_)
        return true;
    if (a.length() != b.length())
        return false;
    return compare_nodes(a, b) == 0;
}

std::strong_ordering operator<=>(const HallWord& a, const HallWord& b) {
    if (a.node_ == b.node_)
        return std::strong_ordering::equal;
    if (auto c = a.length() <=> b.length(); c != 0)
        return c;
    return compare_nodes(a, b);
}

std::vector<int> multidegree(const HallWord& w, int n) { return w.multidegree(n); }

std::string format_word(const HallWord& w, const Alphabet& alphabet) {
    if (w.is_leaf())
        return alphabet.name(w.generator());
    return "[" + format_word(w.left(), alphabet) + "," + format_word(w.right(), alphabet) + "]";
}

namespace {

class WordParser {
public:
    WordParser(std::string_view text, const Alphabet& alphabet)
        : text_(text), alphabet_(alphabet) {}

    HallWord parse() {
        HallWord w = parse_word();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("trailing input after word", pos_);
        return w;
    }

private:
    HallWord parse_word() {
        skip_ws();
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of input, expected a word", pos_);
        if (text_[pos_] == '[') {
            ++pos_;
            HallWord left = parse_word();
            expect(',');
            HallWord right = parse_word();
            expect(']');
            return HallWord::bracket(left, right);
        }
        return parse_leaf();
    }

    HallWord parse_leaf() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start)
            throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
        std::string_view name = text_.substr(start, pos_ - start);
        auto index = alphabet_.index_of(name);
        if (!index)
            throw ParseError("unknown generator '" + std::string(name) + "'", start);
        return HallWord::leaf(*index);
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size())
            throw ParseError(std::string("unexpected end of input, expected '") + c + "'", pos_);
        if (text_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "', found '" + text_[pos_] + "'",
                             pos_);
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::string_view text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
};

} // namespace

HallWord parse_word(std::string_view text, const Alphabet& alphabet) {
    return WordParser(text, alphabet).parse();
}

std::string_view to_string(OrderPolicy policy) {
    switch (policy) {
    case OrderPolicy::CreationOrder:
        return "creation-order";
    case OrderPolicy::LexTree:
        return "lex-tree";
    }
    return "creation-order";
}

std::optional<OrderPolicy> parse_order_policy(std::string_view text) {
    if (text == "creation-order" || text == "creation")
        return OrderPolicy::CreationOrder;
    if (text == "lex-tree" || text == "lex" || text == "lex-on-serialized-tree")
        return OrderPolicy::LexTree;
    return std::nullopt;
}

const RankedWord& HallBasisTable::at_serial(int serial) const {
    if (serial < 1 || serial > size())
        throw DomainError("serial " + std::to_string(serial) + " out of range 1.." +
                          std::to_string(size()));
    return words_[static_cast<std::size_t>(serial) - 1];
}

std::span<const RankedWord> HallBasisTable::words_of_length(int len) const {
    if (len < 1 || len > max_len_)
        return {};
    auto lo = static_cast<std::size_t>(length_offsets_[static_cast<std::size_t>(len) - 1]);
    auto hi = static_cast<std::size_t>(length_offsets_[static_cast<std::size_t>(len)]);
    return std::span<const RankedWord>(words_.data() + lo, hi - lo);
}

int HallBasisTable::count_of_length(int len) const {
    return static_cast<int>(words_of_length(len).size());
}

std::optional<int> HallBasisTable::serial_of(const HallWord& w) const {
    auto it = std::lower_bound(serial_index_.begin(), serial_index_.end(), w,
                               [](const auto& entry, const HallWord& key) {
                                   return entry.first < key;
                               });
    if (it == serial_index_.end() || !(it->first == w))
        return std::nullopt;
    return it->second;
}

HallBasisTable enumerate_hall_basis(const Alphabet& alphabet, int max_len, OrderPolicy policy) {
    if (max_len < 1)
        throw DomainError("max_len must be >= 1");

    HallBasisTable table(alphabet);
    table.max_len_ = max_len;
    table.policy_ = policy;

    const int n = alphabet.size();
    std::vector<RankedWord>& words = table.words_;
    table.length_offsets_.assign(static_cast<std::size_t>(max_len) + 1, 0);

    for (int i = 1; i <= n; ++i)
        words.push_back(RankedWord{HallWord::leaf(i), 0, i});
    table.length_offsets_[1] = n;

    for (int len = 2; len <= max_len; ++len) {
        // Admissible brackets [x_i, x_j] with r(x_j) <= i < j and
        // matching lengths, scanned by ascending (i, j).
        std::vector<RankedWord> batch;
        const int count = static_cast<int>(words.size());
        for (int i = 1; i <= count; ++i) {
            const RankedWord& wi = words[static_cast<std::size_t>(i) - 1];
            if (wi.word.length() >= len)
                break; // lengths are nondecreasing along the list
            for (int j = i + 1; j <= count; ++j) {
                const RankedWord& wj = words[static_cast<std::size_t>(j) - 1];
                if (wi.word.length() + wj.word.length() != len)
                    continue;
                if (wj.rank > i)
                    continue;
                batch.push_back(RankedWord{HallWord::bracket(wi.word, wj.word), i, 0});
            }
        }
        if (policy == OrderPolicy::LexTree) {
            std::stable_sort(batch.begin(), batch.end(),
                             [&alphabet](const RankedWord& a, const RankedWord& b) {
                                 return format_word(a.word, alphabet) <
                                        format_word(b.word, alphabet);
                             });
        }
        for (RankedWord& rw : batch) {
            rw.serial = static_cast<int>(words.size()) + 1;
            words.push_back(std::move(rw));
        }
        table.length_offsets_[static_cast<std::size_t>(len)] = static_cast<int>(words.size());
    }

    table.serial_index_.reserve(words.size());
    for (const RankedWord& rw : words)
        table.serial_index_.emplace_back(rw.word, rw.serial);
    std::sort(table.serial_index_.begin(), table.serial_index_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return table;
}

HallBasisTable enumerate_hall_basis(int n, int max_len, OrderPolicy policy) {
    return enumerate_hall_basis(Alphabet::with_default_names(n), max_len, policy);
}

SplitStep split_step(const Alphabet& alphabet, std::span<const HallWord> current, int max_len,
                     OrderPolicy policy) {
    if (current.empty())
        throw DomainError("split_step requires a nonempty word list");
    if (max_len < 1)
        throw DomainError("max_len must be >= 1");

    SplitStep result{current.front(), {}};
    const HallWord& head = result.head;

    // Over a length-compatible list the new list stays length-compatible
    // when same-length words are keyed by (ad power, source position);
    // for CreationOrder this reproduces the enumeration order.
    struct Entry {
        HallWord word;
        int ad_power;
        std::size_t source_pos;
    };
    std::vector<Entry> entries;
    for (std::size_t pos = 1; pos < current.size(); ++pos) {
        HallWord w = current[pos];
        for (int power = 0; w.length() <= max_len; ++power) {
            entries.push_back(Entry{w, power, pos});
            if (w.length() + head.length() > max_len)
                break;
            w = HallWord::bracket(head, w);
        }
    }

    if (policy == OrderPolicy::LexTree) {
        std::stable_sort(entries.begin(), entries.end(), [&](const Entry& a, const Entry& b) {
            if (a.word.length() != b.word.length())
                return a.word.length() < b.word.length();
            return format_word(a.word, alphabet) < format_word(b.word, alphabet);
        });
    } else {
        std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
            return std::make_tuple(a.word.length(), a.ad_power, a.source_pos) <
                   std::make_tuple(b.word.length(), b.ad_power, b.source_pos);
        });
    }

    result.next.reserve(entries.size());
    for (Entry& e : entries)
        result.next.push_back(std::move(e.word));
    return result;
}

std::string render_table_text(const HallBasisTable& table) {
    std::ostringstream out;
    for (const RankedWord& rw : table.words()) {
        out << rw.serial << ' ' << table.format(rw.word) << ' ' << rw.word.length() << ' '
            << rw.rank << '\n';
    }
    return out.str();
}

} // namespace hallmilnor
