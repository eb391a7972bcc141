#pragma once

#include <map>
#include <vector>

#include "hallmilnor/integer.hpp"

namespace hallmilnor {

// Ordered tuple of 1-based generator indices; a monomial of the free
// associative ring.
using GenSequence = std::vector<int>;

// Sparse integer combination of generator sequences. Multiplication is
// concatenation of sequences; zero coefficients are never stored.
class TensorElement {
public:
    TensorElement() = default;
    static TensorElement generator(int index);

    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<GenSequence, Int>& terms() const noexcept { return terms_; }
    Int coefficient(const GenSequence& seq) const;

    // Drops the entry when the coefficient becomes zero.
    void add_term(const GenSequence& seq, const Int& coeff);

    TensorElement& operator+=(const TensorElement& other);
    TensorElement& operator-=(const TensorElement& other);
    TensorElement& operator*=(const Int& scalar);

    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
    friend TensorElement operator*(TensorElement a, const Int& scalar) { return a *= scalar; }
    friend TensorElement operator*(const Int& scalar, TensorElement a) { return a *= scalar; }
    friend TensorElement operator-(const TensorElement& a);

    friend bool operator==(const TensorElement& a, const TensorElement& b) = default;

    // Terms whose sequence length equals len.
    TensorElement homogeneous_part(int len) const;
    // Distinct sequence lengths present, ascending.
    std::vector<int> degrees() const;

private:
    std::map<GenSequence, Int> terms_;
};

} // namespace hallmilnor
