#pragma once

#include "cobord/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace cobord {

// Exponent vector over the generators m1, m2, ...; index i holds the
// exponent of m_{i+1}. Trailing zeros are trimmed so equal monomials
// compare equal.
using MExp = std::vector<std::uint32_t>;

inline void mexp_trim(MExp& e)
{
    while (!e.empty() && e.back() == 0)
        e.pop_back();
}

// deg m_i = i, so deg prod m_i^{e_i} = sum i*e_i.
inline std::int64_t mexp_degree(const MExp& e)
{
    std::int64_t d = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        d += static_cast<std::int64_t>(i + 1) * e[i];
    return d;
}

// Sparse polynomial in m1, m2, ... with exact rational coefficients:
// the rational model of the Lazard ring. Zero coefficients are never
// stored; term keys iterate in lexicographic order.
class LazardPoly {
public:
    using Terms = std::map<MExp, Rational>;

    LazardPoly() = default;

    static LazardPoly constant(Rational c)
    {
        LazardPoly p;
        if (c != 0)
            p.terms_.emplace(MExp{}, std::move(c));
        return p;
    }

    static LazardPoly one() { return constant(Rational(1)); }

    // m_i, 1-based, raised to the given power.
    static LazardPoly gen(std::uint32_t i, std::uint32_t power = 1)
    {
        LazardPoly p;
        if (i == 0)
            throw std::invalid_argument("LazardPoly::gen: generators are 1-based");
        if (power == 0)
            return one();
        MExp e(i, 0);
        e[i - 1] = power;
        p.terms_.emplace(std::move(e), Rational(1));
        return p;
    }

    static LazardPoly monomial(MExp e, Rational c)
    {
        LazardPoly p;
        mexp_trim(e);
        if (c != 0)
            p.terms_.emplace(std::move(e), std::move(c));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    Rational coefficient(MExp e) const
    {
        mexp_trim(e);
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    LazardPoly& operator+=(const LazardPoly& o)
    {
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }

    LazardPoly& operator-=(const LazardPoly& o)
    {
        for (const auto& [e, c] : o.terms_)
            add_term(e, -c);
        return *this;
    }

    LazardPoly operator-() const
    {
        LazardPoly r;
        for (const auto& [e, c] : terms_)
            r.terms_.emplace(e, -c);
        return r;
    }

    friend LazardPoly operator+(LazardPoly a, const LazardPoly& b) { return a += b; }
    friend LazardPoly operator-(LazardPoly a, const LazardPoly& b) { return a -= b; }

    friend LazardPoly operator*(const LazardPoly& a, const LazardPoly& b)
    {
        LazardPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                MExp e(std::max(ea.size(), eb.size()), 0);
                for (std::size_t i = 0; i < ea.size(); ++i)
                    e[i] += ea[i];
                for (std::size_t i = 0; i < eb.size(); ++i)
                    e[i] += eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        return r;
    }

    LazardPoly& operator*=(const LazardPoly& o) { return *this = *this * o; }

    LazardPoly& operator*=(const Rational& c)
    {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_)
            v *= c;
        return *this;
    }

    friend LazardPoly operator*(LazardPoly a, const Rational& c) { return a *= c; }
    friend LazardPoly operator*(const Rational& c, LazardPoly a) { return a *= c; }

    bool operator==(const LazardPoly& o) const { return terms_ == o.terms_; }

    // Degree when homogeneous; nullopt for mixed-degree polynomials.
    // The zero polynomial counts as homogeneous of every degree.
    std::optional<std::int64_t> homogeneous_degree() const
    {
        std::optional<std::int64_t> d;
        for (const auto& [e, c] : terms_) {
            std::int64_t de = mexp_degree(e);
            if (d && *d != de)
                return std::nullopt;
            d = de;
        }
        return d;
    }

    bool is_homogeneous_of(std::int64_t d) const
    {
        for (const auto& [e, c] : terms_)
            if (mexp_degree(e) != d)
                return false;
        return true;
    }

    std::string str() const;

private:
    void add_term(MExp e, Rational c)
    {
        mexp_trim(e);
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        } else if (it->second == 0) {
            terms_.erase(it);
        }
    }

    Terms terms_;
};

std::string mexp_str(const MExp& e);

}  // namespace cobord
