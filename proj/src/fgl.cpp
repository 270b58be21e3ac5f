#include "cobord/fgl.hpp"

#include <array>
#include <stdexcept>

namespace cobord {

Series JDecomposition::reconstruct(const SeriesShape& shape) const
{
    Series out(shape);
    for (const auto& [mask, part] : parts) {
        Exp uj(shape.width(), 0);
        for (std::uint32_t i = 0; i < m; ++i)
            if (mask & (1u << i))
                uj[i] = 1;
        out += part * Series::monomial(shape, std::move(uj), LazardPoly::one());
    }
    return out;
}

JDecomposition j_decompose(const Series& s, std::uint32_t m)
{
    if (s.shape().arity != m || !s.shape().symbols.empty())
        throw shape_error("j_decompose: series must have arity m and no extra symbols");
    JDecomposition d;
    d.m = m;
    for (const auto& [e, c] : s.terms()) {
        std::uint32_t mask = 0;
        Exp reduced = e;
        for (std::uint32_t i = 0; i < m; ++i)
            if (e[i] > 0) {
                mask |= 1u << i;
                reduced[i] -= 1;
            }
        auto [it, inserted] = d.parts.try_emplace(mask, Series(s.shape()));
        it->second.add_term(std::move(reduced), c);
    }
    std::erase_if(d.parts, [](const auto& kv) { return kv.second.is_zero(); });
    return d;
}

FglContext::FglContext(std::uint32_t trunc) : trunc_(trunc)
{
    if (trunc_ < 1)
        throw std::invalid_argument("FglContext: trunc must be >= 1");

    log_ = Series::variable(shape1(), 0);
    for (std::uint32_t i = 1; i + 1 <= trunc_; ++i)
        log_.add_term(Exp{i + 1}, LazardPoly::gen(i));
    exp_ = log_.reversion();

    // F(u, v) = exp(log(u1) + log(u2)).
    SeriesShape sh2 = shape(2);
    Series u1 = Series::variable(sh2, 0);
    Series u2 = Series::variable(sh2, 1);
    std::array<Series, 1> i1{u1}, i2{u2};
    Series sum = log_.substitute(i1) + log_.substitute(i2);
    std::array<Series, 1> is{sum};
    F_ = exp_.substitute(is);

    // Solve F(u, i(u)) = 0 degree by degree; the linear part of F in v
    // is 1, so subtracting the lowest defect term converges.
    Series u = Series::variable(shape1(), 0);
    inverse_ = -u;
    for (std::uint32_t n = 2; n <= trunc_; ++n) {
        std::array<Series, 2> imgs{u, inverse_};
        Series r = F_.substitute(imgs);
        LazardPoly c = r.coefficient(Exp{n});
        if (!c.is_zero())
            inverse_.add_term(Exp{n}, -c);
    }
}

Series FglContext::n_mult(std::int64_t n) const
{
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = mult_cache_.find(n);
        if (it != mult_cache_.end())
            return it->second;
    }
    Series result(shape1());
    if (n == 0) {
        // zero series
    } else if (n > 0) {
        result = Series::variable(shape1(), 0);
        for (std::int64_t k = 1; k < n; ++k) {
            std::array<Series, 2> imgs{Series::variable(shape1(), 0), result};
            result = F_.substitute(imgs);
        }
    } else {
        Series pos = n_mult(-n);
        std::array<Series, 1> imgs{inverse_};
        result = pos.substitute(imgs);
    }
    std::lock_guard<std::mutex> lock(mu_);
    return mult_cache_.try_emplace(n, std::move(result)).first->second;
}

Series FglContext::formal_sum(const std::vector<std::int64_t>& mults) const
{
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = sum_cache_.find(mults);
        if (it != sum_cache_.end())
            return it->second;
    }
    const std::uint32_t m = static_cast<std::uint32_t>(mults.size());
    SeriesShape sh = shape(m);
    Series result(sh);
    if (m > 0) {
        auto embed = [&](std::uint32_t var, std::int64_t n) {
            std::array<Series, 1> img{Series::variable(sh, var)};
            return n_mult(n).substitute(img);
        };
        result = embed(m - 1, mults[m - 1]);
        for (std::uint32_t i = m - 1; i-- > 0;) {
            std::array<Series, 2> imgs{embed(i, mults[i]), result};
            result = F_.substitute(imgs);
        }
    }
    std::lock_guard<std::mutex> lock(mu_);
    return sum_cache_.try_emplace(mults, std::move(result)).first->second;
}

Series FglContext::nfold_sum(std::uint32_t n) const
{
    if (n < 1)
        throw std::invalid_argument("nfold_sum: n must be >= 1");
    return formal_sum(std::vector<std::int64_t>(n, 1));
}

std::pair<Series, Series> FglContext::f11_g11() const
{
    SeriesShape sh2 = shape(2);
    Series residual = F_ - Series::variable(sh2, 0) - Series::variable(sh2, 1);
    // Every residual monomial is divisible by u*v, by the support rule
    // of the J-decomposition.
    Series f11(sh2);
    for (const auto& [e, c] : residual.terms()) {
        if (e[0] < 1 || e[1] < 1)
            throw std::logic_error("f11_g11: residual term not divisible by u*v");
        Exp r = e;
        r[0] -= 1;
        r[1] -= 1;
        f11.add_term(std::move(r), c);
    }
    Series g11 = Series::variable(sh2, 1) * f11;
    return {std::move(f11), std::move(g11)};
}

}  // namespace cobord
