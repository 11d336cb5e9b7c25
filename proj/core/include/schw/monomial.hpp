#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace schw {

/// Monomial in the indeterminates x_1, x_2, ... stored as a sorted sparse
/// list of (variable index, exponent) with all exponents positive. The empty
/// list is the constant monomial 1. The weight of x_{j1}...x_{jk} is
/// j1 + ... + jk, i.e. the exponent-weighted sum of variable indices.
class Monomial {
public:
    using Factor = std::pair<std::uint32_t, std::uint32_t>;  // (index >= 1, exponent >= 1)

    Monomial() = default;
    static Monomial one() { return Monomial(); }
    static Monomial variable(std::uint32_t index, std::uint32_t exponent = 1);
    static Monomial from_factors(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const { return f_; }
    bool is_constant() const { return f_.empty(); }

    long weight() const;
    std::uint32_t max_index() const { return f_.empty() ? 0 : f_.back().first; }
    std::uint32_t exponent_of(std::uint32_t index) const;
    long total_degree() const;

    Monomial times(const Monomial& o) const;
    /// Monomial with the exponent of one variable replaced (0 removes it).
    Monomial with_exponent(std::uint32_t index, std::uint32_t exponent) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    /// Canonical order: lower weight first; within a weight, compare
    /// exponents from the highest variable index downward, larger exponent
    /// first. This is a graded lexicographic order (with x_n > x_{n-1} >
    /// ... > x_1) and puts homogeneous families in the conventional
    /// "leading variable first" reading order, e.g.
    /// x4, x1*x3, x1^2*x2 for weight 4.
    static int canonical_cmp(const Monomial& a, const Monomial& b);

private:
    std::vector<Factor> f_;
};

struct MonomialCanonicalLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::canonical_cmp(a, b) < 0;
    }
};

}  // namespace schw
