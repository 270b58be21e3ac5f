#pragma once

#include "cobord/lazard.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cobord {

// Raised when two series from incompatible contexts meet.
struct shape_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Exponent vector over the u-variables followed by the extra symbols.
using Exp = std::vector<std::uint32_t>;

inline std::uint32_t exp_total(const Exp& e)
{
    std::uint32_t t = 0;
    for (auto v : e)
        t += v;
    return t;
}

// Shape of a truncated series: number of u-variables, named extra
// symbols (appended after the u-variables in declared order), and the
// total-degree bound. Series are comparable only with equal shape.
struct SeriesShape {
    std::uint32_t arity = 0;
    std::vector<std::string> symbols;
    std::uint32_t trunc = 0;

    std::size_t width() const { return arity + symbols.size(); }
    bool operator==(const SeriesShape&) const = default;
};

// Degree-truncated multivariate power series with LazardPoly
// coefficients. Every stored monomial has total degree <= trunc and a
// nonzero coefficient; keys iterate lexicographically.
class Series {
public:
    using Terms = std::map<Exp, LazardPoly>;

    Series() = default;
    explicit Series(SeriesShape shape) : shape_(std::move(shape)) {}

    static Series zero(SeriesShape shape) { return Series(std::move(shape)); }

    static Series constant(SeriesShape shape, LazardPoly c)
    {
        Series s(std::move(shape));
        if (!c.is_zero())
            s.terms_.emplace(Exp(s.shape_.width(), 0), std::move(c));
        return s;
    }

    static Series constant(SeriesShape shape, Rational c)
    {
        return constant(std::move(shape), LazardPoly::constant(std::move(c)));
    }

    // Variable by flat index: u_1..u_arity then the symbols.
    static Series variable(SeriesShape shape, std::size_t index)
    {
        if (index >= shape.width())
            throw shape_error("Series::variable: index out of range");
        Series s(shape);
        if (shape.trunc >= 1) {
            Exp e(shape.width(), 0);
            e[index] = 1;
            s.terms_.emplace(std::move(e), LazardPoly::one());
        }
        return s;
    }

    static Series monomial(SeriesShape shape, Exp e, LazardPoly c)
    {
        if (e.size() != shape.width())
            throw shape_error("Series::monomial: key width mismatch");
        Series s(std::move(shape));
        if (!c.is_zero() && exp_total(e) <= s.shape_.trunc)
            s.terms_.emplace(std::move(e), std::move(c));
        return s;
    }

    const SeriesShape& shape() const { return shape_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    const LazardPoly& coefficient(const Exp& e) const
    {
        static const LazardPoly kZero;
        if (e.size() != shape_.width())
            throw shape_error("Series::coefficient: key width mismatch");
        auto it = terms_.find(e);
        return it == terms_.end() ? kZero : it->second;
    }

    LazardPoly constant_term() const { return coefficient(Exp(shape_.width(), 0)); }

    void add_term(Exp e, LazardPoly c)
    {
        if (e.size() != shape_.width())
            throw shape_error("Series::add_term: key width mismatch");
        if (c.is_zero() || exp_total(e) > shape_.trunc)
            return;
        auto [it, inserted] = terms_.try_emplace(std::move(e), std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    Series& operator+=(const Series& o)
    {
        require_same_shape(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }

    Series& operator-=(const Series& o)
    {
        require_same_shape(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, -c);
        return *this;
    }

    Series operator-() const
    {
        Series r(shape_);
        for (const auto& [e, c] : terms_)
            r.terms_.emplace(e, -c);
        return r;
    }

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }

    friend Series operator*(const Series& a, const Series& b)
    {
        a.require_same_shape(b);
        Series r(a.shape_);
        for (const auto& [ea, ca] : a.terms_) {
            std::uint32_t da = exp_total(ea);
            for (const auto& [eb, cb] : b.terms_) {
                if (da + exp_total(eb) > a.shape_.trunc)
                    continue;
                Exp e(ea);
                for (std::size_t i = 0; i < e.size(); ++i)
                    e[i] += eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        }
        return r;
    }

    Series& operator*=(const Series& o) { return *this = *this * o; }

    Series& scale(const LazardPoly& c)
    {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        Series r(shape_);
        for (const auto& [e, v] : terms_)
            r.add_term(e, v * c);
        return *this = std::move(r);
    }

    // Simultaneous composition: one image per u-variable, each with
    // zero constant term and a common shape, which becomes the shape of
    // the result. Extra symbols of this series must be declared in the
    // images' shape and are carried over by name.
    Series substitute(std::span<const Series> images) const;

    // Compositional inverse for arity-1 series with zero constant term
    // and linear coefficient 1, solved degree by degree.
    Series reversion() const;

    // Drop every monomial of total degree > maxdeg.
    Series truncated(std::uint32_t maxdeg) const
    {
        Series r(shape_);
        for (const auto& [e, c] : terms_)
            if (exp_total(e) <= maxdeg)
                r.terms_.emplace(e, c);
        return r;
    }

    // Same key space, new variable/symbol split. Width must match.
    Series reinterpreted(std::uint32_t new_arity, std::vector<std::string> symbols) const
    {
        SeriesShape ns{new_arity, std::move(symbols), shape_.trunc};
        if (ns.width() != shape_.width())
            throw shape_error("Series::reinterpreted: width mismatch");
        Series r(std::move(ns));
        r.terms_ = terms_;
        return r;
    }

    bool operator==(const Series& o) const { return shape_ == o.shape_ && terms_ == o.terms_; }

private:
    void require_same_shape(const Series& o) const
    {
        if (!(shape_ == o.shape_))
            throw shape_error("series shapes differ: incompatible contexts");
    }

    SeriesShape shape_;
    Terms terms_;
};

}  // namespace cobord
