#include "hallmilnor/tensor.hpp"

#include <algorithm>

namespace hallmilnor {

TensorElement TensorElement::generator(int index) {
    TensorElement e;
    e.add_term(GenSequence{index}, 1);
    return e;
}

Int TensorElement::coefficient(const GenSequence& seq) const {
    auto it = terms_.find(seq);
    return it == terms_.end() ? Int(0) : it->second;
}

void TensorElement::add_term(const GenSequence& seq, const Int& coeff) {
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.emplace(seq, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
    for (const auto& [seq, coeff] : other.terms_)
        add_term(seq, coeff);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& other) {
    for (const auto& [seq, coeff] : other.terms_)
        add_term(seq, -coeff);
    return *this;
}

TensorElement& TensorElement::operator*=(const Int& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [seq, coeff] : terms_)
        coeff *= scalar;
    return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
    TensorElement out;
    for (const auto& [sa, ca] : a.terms_) {
        for (const auto& [sb, cb] : b.terms_) {
            GenSequence seq;
            seq.reserve(sa.size() + sb.size());
            seq.insert(seq.end(), sa.begin(), sa.end());
            seq.insert(seq.end(), sb.begin(), sb.end());
            out.add_term(seq, ca * cb);
        }
    }
    return out;
}

TensorElement operator-(const TensorElement& a) {
    TensorElement out = a;
    for (auto& [seq, coeff] : out.terms_)
        coeff = -coeff;
    return out;
}

TensorElement TensorElement::homogeneous_part(int len) const {
    TensorElement out;
    for (const auto& [seq, coeff] : terms_) {
        if (static_cast<int>(seq.size()) == len)
            out.terms_.emplace(seq, coeff);
    }
    return out;
}

std::vector<int> TensorElement::degrees() const {
    std::vector<int> out;
    for (const auto& [seq, coeff] : terms_) {
        int len = static_cast<int>(seq.size());
        if (out.empty() || out.back() != len) {
            if (std::find(out.begin(), out.end(), len) == out.end())
                out.push_back(len);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hallmilnor
