#include "cobord/series.hpp"

#include <algorithm>
#include <array>

namespace cobord {

std::string mexp_str(const MExp& e)
{
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += "m" + std::to_string(i + 1);
        if (e[i] > 1)
            out += "^" + std::to_string(e[i]);
    }
    return out;
}

std::string LazardPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0)
                a = -a;
        }
        std::string mono = mexp_str(e);
        if (mono.empty()) {
            out += rational_str(a);
        } else {
            if (a != 1)
                out += rational_str(a) + "*";
            out += mono;
        }
        first = false;
    }
    return out;
}

Series Series::substitute(std::span<const Series> images) const
{
    if (images.size() != shape_.arity)
        throw shape_error("substitute: one image per u-variable required");

    SeriesShape target;
    if (!images.empty()) {
        target = images[0].shape();
        for (const auto& g : images) {
            if (!(g.shape() == target))
                throw shape_error("substitute: images have differing shapes");
            if (!g.constant_term().is_zero())
                throw std::invalid_argument(
                    "substitute: image has nonzero constant term; composition "
                    "undefined under truncation");
        }
    } else {
        // Arity-0 series are constants plus symbol monomials; keep shape.
        target = shape_;
    }

    // Symbols of this series carry over by name into the target shape.
    std::vector<std::size_t> sym_index(shape_.symbols.size());
    for (std::size_t j = 0; j < shape_.symbols.size(); ++j) {
        auto it = std::find(target.symbols.begin(), target.symbols.end(), shape_.symbols[j]);
        if (it == target.symbols.end())
            throw shape_error("substitute: symbol '" + shape_.symbols[j] +
                              "' not present in image shape");
        sym_index[j] = target.arity + static_cast<std::size_t>(it - target.symbols.begin());
    }

    // Image powers, computed on demand. Since images have zero constant
    // term, the k-th power vanishes beyond k > trunc.
    std::vector<std::vector<Series>> powers(images.size());
    auto power = [&](std::size_t i, std::uint32_t k) -> const Series& {
        auto& ps = powers[i];
        if (ps.empty())
            ps.push_back(Series::constant(target, Rational(1)));
        while (ps.size() <= k)
            ps.push_back(ps.back() * images[i]);
        return ps[k];
    };

    Series result(target);
    for (const auto& [e, c] : terms_) {
        bool dead = false;
        std::uint32_t min_deg = 0;
        for (std::size_t i = 0; i < shape_.arity && !dead; ++i) {
            min_deg += e[i];
            if (min_deg > target.trunc)
                dead = true;
        }
        if (dead)
            continue;
        Series term = Series::constant(target, c);
        for (std::size_t i = 0; i < shape_.arity && !term.is_zero(); ++i)
            if (e[i] > 0)
                term *= power(i, e[i]);
        if (term.is_zero())
            continue;
        // Multiply through by the symbol part of the monomial.
        Exp sym(target.width(), 0);
        for (std::size_t j = 0; j < shape_.symbols.size(); ++j)
            sym[sym_index[j]] = e[shape_.arity + j];
        if (exp_total(sym) > 0)
            term *= Series::monomial(target, std::move(sym), LazardPoly::one());
        result += term;
    }
    return result;
}

Series Series::reversion() const
{
    if (shape_.arity != 1 || !shape_.symbols.empty())
        throw shape_error("reversion: requires arity 1 with no extra symbols");
    if (!constant_term().is_zero())
        throw std::invalid_argument("reversion: nonzero constant term");
    if (!(coefficient(Exp{1}) == LazardPoly::one()))
        throw std::invalid_argument("reversion: linear coefficient is not 1");

    Series t = Series::variable(shape_, 0);
    for (std::uint32_t n = 2; n <= shape_.trunc; ++n) {
        std::array<Series, 1> img{t};
        Series r = substitute(img);
        LazardPoly c = r.coefficient(Exp{n});
        if (!c.is_zero())
            t.add_term(Exp{n}, -c);
    }
    return t;
}

}  // namespace cobord
