#include "cobord/brute_oracle.hpp"

#include <algorithm>
#include <array>
#include <random>

namespace cobord::brute {

Series formal_sum(const FglContext& ctx, const std::vector<std::int64_t>& mults)
{
    const std::uint32_t m = static_cast<std::uint32_t>(mults.size());
    SeriesShape sh{m, {}, ctx.trunc()};
    Series result(sh);
    if (m == 0)
        return result;
    auto embed = [&](std::uint32_t var, std::int64_t n) {
        std::array<Series, 1> img{Series::variable(sh, var)};
        return ctx.n_mult(n).substitute(img);
    };
    result = embed(0, mults[0]);
    for (std::uint32_t i = 1; i < m; ++i) {
        std::array<Series, 2> imgs{result, embed(i, mults[i])};
        result = ctx.fgl().substitute(imgs);
    }
    return result;
}

namespace {

// Keep only monomials whose variable support lies inside the mask.
Series specialize(const Series& s, std::uint32_t keep_mask, std::uint32_t m)
{
    Series out(s.shape());
    for (const auto& [e, c] : s.terms()) {
        bool kill = false;
        for (std::uint32_t i = 0; i < m && !kill; ++i)
            if (e[i] > 0 && !(keep_mask & (1u << i)))
                kill = true;
        if (!kill)
            out.add_term(e, c);
    }
    return out;
}

}  // namespace

JDecomposition j_decompose(const Series& s, std::uint32_t m)
{
    if (s.shape().arity != m || !s.shape().symbols.empty())
        throw shape_error("brute::j_decompose: series must have arity m and no symbols");
    JDecomposition d;
    d.m = m;
    for (std::uint32_t J = 0; J < (1u << m); ++J) {
        // Moebius over sub-masks isolates the part supported exactly
        // on J.
        Series exact(s.shape());
        std::uint32_t K = J;
        while (true) {
            Series part = specialize(s, K, m);
            if ((face_size(J) - face_size(K)) % 2 == 1)
                exact -= part;
            else
                exact += part;
            if (K == 0)
                break;
            K = (K - 1) & J;
        }
        if (exact.is_zero())
            continue;
        Series fj(s.shape());
        for (const auto& [e, c] : exact.terms()) {
            Exp r = e;
            for (std::uint32_t i = 0; i < m; ++i)
                if (J & (1u << i)) {
                    if (r[i] == 0)
                        throw std::logic_error("brute::j_decompose: division failure");
                    r[i] -= 1;
                }
            fj.add_term(std::move(r), c);
        }
        d.parts.emplace(J, std::move(fj));
    }
    return d;
}

FaceClass normalize(std::shared_ptr<const FaceModule> mod, const std::map<Face, Series>& raw,
                    std::uint64_t seed)
{
    const SncConfig& cfg = mod->cfg();
    const std::uint32_t m = cfg.m();
    std::mt19937_64 rng(seed);

    struct Item {
        Face J;
        Exp e;
        LazardPoly c;
    };
    std::vector<Item> work;
    for (const auto& [J, s] : raw)
        for (const auto& [e, c] : s.terms())
            work.push_back(Item{J, e, c});

    FaceClass out(mod);
    while (!work.empty()) {
        Item it = std::move(work.back());
        work.pop_back();
        std::vector<std::uint32_t> movable;
        for (std::uint32_t k = 0; k < m; ++k)
            if (!(it.J & (1u << k)) && it.e[k] > 0)
                movable.push_back(k);
        if (movable.empty()) {
            if (exp_total(it.e) <= cfg.dim - face_size(it.J))
                out.add_part(it.J,
                             Series::monomial(mod->shape(), std::move(it.e), std::move(it.c)));
            continue;
        }
        std::uint32_t k = movable[rng() % movable.size()];
        Face nf = it.J | (1u << k);
        if (!cfg.has_face(nf))
            continue;
        it.e[k] -= 1;
        it.J = nf;
        work.push_back(std::move(it));
    }
    return out;
}

namespace {

std::vector<std::int64_t> bundle_mults(const FaceModule& mod, const BundleExpr& b)
{
    const std::uint32_t m = mod.cfg().m();
    std::vector<std::int64_t> mults(m + mod.symbols().size(), 0);
    for (std::size_t k = 0; k < b.component_part.size(); ++k)
        mults[k] = b.component_part[k];
    for (const auto& [name, e] : b.free_part) {
        auto it = std::find(mod.symbols().begin(), mod.symbols().end(), name);
        if (it == mod.symbols().end())
            throw shape_error("brute: undeclared free symbol '" + name + "'");
        mults[m + static_cast<std::size_t>(it - mod.symbols().begin())] = e;
    }
    return mults;
}

Series operator_series(const FaceModule& mod, const BundleExpr& b)
{
    return formal_sum(mod.ctx(), bundle_mults(mod, b))
        .reinterpreted(mod.cfg().m(), mod.symbols());
}

void accumulate(std::map<Face, Series>& raw, Face J, Series s)
{
    if (s.is_zero())
        return;
    auto it = raw.find(J);
    if (it == raw.end())
        raw.emplace(J, std::move(s));
    else
        it->second += s;
}

Series lift_series(const FaceModule& mod, const std::vector<std::uint32_t>& ks, const Series& sub)
{
    SeriesShape sh = mod.shape();
    Series out(sh);
    for (const auto& [e, c] : sub.terms()) {
        Exp a(sh.width(), 0);
        for (std::size_t i = 0; i < ks.size(); ++i)
            a[ks[i]] = e[i];
        for (std::size_t j = ks.size(); j < e.size(); ++j)
            a[mod.cfg().m() + (j - ks.size())] = e[j];
        out.add_term(std::move(a), c);
    }
    return out;
}

Face lift_face(const std::vector<std::uint32_t>& ks, Face K)
{
    Face out = 0;
    for (std::size_t i = 0; i < ks.size(); ++i)
        if (K & (1u << i))
            out |= 1u << ks[i];
    return out;
}

}  // namespace

FaceClass chern(const BundleExpr& b, const FaceClass& x, std::uint64_t seed)
{
    Series op = operator_series(x.mod(), b);
    std::map<Face, Series> raw;
    for (const auto& [J, s] : x.parts())
        accumulate(raw, J, op * s);
    return normalize(x.mod_ptr(), raw, seed);
}

ClassWithSupport divisor_class(std::shared_ptr<const FaceModule> mod, const CartierDiv& E,
                               std::uint64_t seed)
{
    const SncConfig& cfg = mod->cfg();
    std::vector<std::int64_t> mults(E.mults.begin(), E.mults.end());
    JDecomposition dec = brute::j_decompose(formal_sum(mod->ctx(), mults), cfg.m());

    Face supp = E.support();
    std::map<Face, Series> raw;
    for (const auto& [J, fj] : dec.parts) {
        if (J == 0 || (J & supp) != J || !cfg.has_face(J))
            continue;
        accumulate(raw, J, fj.reinterpreted(cfg.m(), mod->symbols()));
    }
    ClassWithSupport out;
    out.cls = normalize(mod, raw, seed);
    out.support = support_of(cfg, PseudoDiv::divisorial(E));
    return out;
}

ClassWithSupport intersect(const PseudoDiv& C, const PseudoDiv& D, const PseudoSeq& seq,
                           const FaceClass& x, std::uint64_t seed)
{
    auto mod = x.mod_ptr();
    const SncConfig& cfg = mod->cfg();
    std::map<Face, Series> raw;
    for (const auto& [J, s] : x.parts()) {
        if (face_in_support(cfg, J, D)) {
            accumulate(raw, J, operator_series(*mod, C.bundle()) * s);
            continue;
        }
        auto ks = cfg.meet(J);
        CartierDiv Ct;
        for (std::uint32_t k : ks)
            Ct.mults.push_back(C.div.mults[k]);
        if (Ct.is_zero())
            continue;
        auto sub = mod->face_frame(J);
        auto dc = divisor_class(sub, Ct, seed);
        for (const auto& [K, f] : dc.cls.parts())
            accumulate(raw, J | lift_face(ks, K), lift_series(*mod, ks, f) * s);
    }
    ClassWithSupport out;
    out.cls = normalize(mod, raw, seed);
    out.support = support_of(cfg, D);
    return out;
}

FaceClass apply_2var_series(const Series& op2, const Series& A, const Series& B,
                            const FaceClass& x, std::uint64_t seed)
{
    if (op2.shape().arity != 2 || !op2.shape().symbols.empty())
        throw shape_error("brute::apply_2var_series: operator must be a 2-variable series");
    SeriesShape sh = A.shape();
    std::vector<Series> apow{Series::constant(sh, Rational(1))};
    std::vector<Series> bpow{Series::constant(sh, Rational(1))};
    auto power = [&](std::vector<Series>& ps, const Series& base, std::uint32_t k) {
        while (ps.size() <= k)
            ps.push_back(ps.back() * base);
        return ps[k];
    };
    Series total(sh);
    for (const auto& [e, c] : op2.terms()) {
        if (e[0] > sh.trunc || e[1] > sh.trunc)
            continue;
        Series term = power(apow, A, e[0]) * power(bpow, B, e[1]);
        term.scale(c);
        total += term;
    }
    std::map<Face, Series> raw;
    for (const auto& [J, s] : x.parts())
        accumulate(raw, J, total * s);
    return normalize(x.mod_ptr(), raw, seed);
}

}  // namespace cobord::brute
