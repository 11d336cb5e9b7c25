#include "schw/monomial.hpp"

#include <algorithm>

namespace schw {

Monomial Monomial::variable(std::uint32_t index, std::uint32_t exponent) {
    Monomial m;
    if (exponent > 0) m.f_.push_back({index, exponent});
    return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end());
    Monomial m;
    for (const auto& [idx, exp] : factors) {
        if (exp == 0) continue;
        if (!m.f_.empty() && m.f_.back().first == idx) {
            m.f_.back().second += exp;
        } else {
            m.f_.push_back({idx, exp});
        }
    }
    return m;
}

long Monomial::weight() const {
    long w = 0;
    for (const auto& [idx, exp] : f_) w += static_cast<long>(idx) * exp;
    return w;
}

std::uint32_t Monomial::exponent_of(std::uint32_t index) const {
    for (const auto& [idx, exp] : f_) {
        if (idx == index) return exp;
    }
    return 0;
}

long Monomial::total_degree() const {
    long d = 0;
    for (const auto& [idx, exp] : f_) d += exp;
    return d;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial m;
    m.f_.reserve(f_.size() + o.f_.size());
    std::size_t i = 0, j = 0;
    while (i < f_.size() || j < o.f_.size()) {
        if (j == o.f_.size() || (i < f_.size() && f_[i].first < o.f_[j].first)) {
            m.f_.push_back(f_[i++]);
        } else if (i == f_.size() || o.f_[j].first < f_[i].first) {
            m.f_.push_back(o.f_[j++]);
        } else {
            m.f_.push_back({f_[i].first, f_[i].second + o.f_[j].second});
            ++i;
            ++j;
        }
    }
    return m;
}

Monomial Monomial::with_exponent(std::uint32_t index, std::uint32_t exponent) const {
    std::vector<Factor> fs;
    fs.reserve(f_.size() + 1);
    bool placed = false;
    for (const auto& fac : f_) {
        if (fac.first == index) {
            placed = true;
            if (exponent > 0) fs.push_back({index, exponent});
        } else {
            fs.push_back(fac);
        }
    }
    if (!placed && exponent > 0) fs.push_back({index, exponent});
    return from_factors(std::move(fs));
}

int Monomial::canonical_cmp(const Monomial& a, const Monomial& b) {
    long wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb ? -1 : 1;
    // walk from the highest variable index down; larger exponent sorts first
    auto ia = a.f_.rbegin(), ib = b.f_.rbegin();
    while (ia != a.f_.rend() && ib != b.f_.rend()) {
        if (ia->first != ib->first) return ia->first > ib->first ? -1 : 1;
        if (ia->second != ib->second) return ia->second > ib->second ? -1 : 1;
        ++ia;
        ++ib;
    }
    if (ia != a.f_.rend()) return -1;  // a still has factors at lower indices
    if (ib != b.f_.rend()) return 1;
    return 0;
}

}  // namespace schw
