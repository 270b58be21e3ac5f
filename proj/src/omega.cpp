#include "cobord/omega.hpp"

#include "cobord/brute_oracle.hpp"

#include <algorithm>
#include <array>

namespace cobord {

FaceModule::FaceModule(std::shared_ptr<const SncConfig> cfg,
                       std::shared_ptr<const FglContext> ctx, std::vector<std::string> symbols)
    : cfg_(std::move(cfg)), ctx_(std::move(ctx)), symbols_(std::move(symbols))
{
    if (ctx_->trunc() < cfg_->dim)
        throw std::invalid_argument("FaceModule: trunc must be >= ambient dimension");
}

std::shared_ptr<const FaceModule> make_module(SncConfig cfg, std::shared_ptr<const FglContext> ctx,
                                              std::vector<std::string> symbols)
{
    cfg.validate();
    return std::make_shared<FaceModule>(std::make_shared<SncConfig>(std::move(cfg)),
                                        std::move(ctx), std::move(symbols));
}

std::string FaceModule::monomial_str(const Exp& e) const
{
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += var_name(i);
        if (e[i] > 1)
            out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

std::shared_ptr<const FaceModule> FaceModule::face_frame(Face J) const
{
    if (!cfg_->has_face(J))
        throw std::invalid_argument("face_frame: not a face of the frame");
    std::lock_guard<std::mutex> lock(mu_);
    auto it = frames_.find(J);
    if (it != frames_.end())
        return it->second;

    auto ks = cfg_->meet(J);
    auto sub = std::make_shared<SncConfig>();
    sub->dim = cfg_->dim - face_size(J);
    for (std::uint32_t k : ks)
        sub->components.push_back(cfg_->components[k]);
    for (Face F2 : cfg_->faces) {
        if ((F2 & J) != J)
            continue;
        Face K = 0;
        for (std::size_t i = 0; i < ks.size(); ++i)
            if (F2 & (1u << ks[i]))
                K |= 1u << i;
        sub->faces.insert(K);
    }
    sub->validate();
    auto mod = std::make_shared<FaceModule>(std::move(sub), ctx_, symbols_);
    frames_.emplace(J, mod);
    return mod;
}

Series FaceModule::operator_series(const BundleExpr& b) const
{
    const std::uint32_t m = cfg_->m();
    if (b.component_part.size() > m)
        throw shape_error("operator_series: bundle references unknown components");
    std::vector<std::int64_t> mults(m + symbols_.size(), 0);
    for (std::size_t k = 0; k < b.component_part.size(); ++k)
        mults[k] = b.component_part[k];
    for (const auto& [name, e] : b.free_part) {
        auto it = std::find(symbols_.begin(), symbols_.end(), name);
        if (it == symbols_.end())
            throw shape_error("operator_series: undeclared free symbol '" + name + "'");
        mults[m + static_cast<std::size_t>(it - symbols_.begin())] = e;
    }
    return ctx_->formal_sum(mults).reinterpreted(m, symbols_);
}

FaceClass FaceClass::single(std::shared_ptr<const FaceModule> mod, Face J, Series s)
{
    FaceClass c(mod);
    c.add_part(J, s);
    return c;
}

SupportSet support_of(const SncConfig& cfg, const PseudoDiv& D)
{
    SupportSet out;
    for (Face J : cfg.faces)
        if (D.is_global() || (J & D.div.support()) != 0)
            out.faces.insert(J);
    return out;
}

FaceClass unit(std::shared_ptr<const FaceModule> mod)
{
    return FaceClass::single(mod, 0, Series::constant(mod->shape(), Rational(1)));
}

FaceClass normalize(std::shared_ptr<const FaceModule> mod, const std::map<Face, Series>& raw)
{
    const SncConfig& cfg = mod->cfg();
    const std::uint32_t m = cfg.m();
    FaceClass out(mod);
    for (const auto& [J, series] : raw) {
        if (!cfg.has_face(J))
            throw std::invalid_argument("normalize: part attached to a non-face");
        for (const auto& [e, c] : series.terms()) {
            // Stray u-variables each move the term one face deeper;
            // downward closure makes the rewrite order irrelevant.
            Face target = J;
            for (std::uint32_t k = 0; k < m; ++k)
                if (!(J & (1u << k)) && e[k] > 0)
                    target |= 1u << k;
            if (!cfg.has_face(target))
                continue;
            Exp r = e;
            std::uint32_t deg = 0;
            for (std::uint32_t k = 0; k < m; ++k) {
                if (!(J & (1u << k)) && e[k] > 0)
                    r[k] -= 1;
                deg += r[k];
            }
            for (std::size_t i = m; i < r.size(); ++i)
                deg += r[i];
            if (deg > cfg.dim - face_size(target))
                continue;
            out.add_part(target, Series::monomial(mod->shape(), std::move(r), c));
        }
    }
    return out;
}

FaceClass apply_operator(const FaceClass& x, const Series& op)
{
    std::map<Face, Series> raw;
    for (const auto& [J, s] : x.parts())
        raw.emplace(J, op * s);
    return normalize(x.mod_ptr(), raw);
}

FaceClass chern(const BundleExpr& b, const FaceClass& x)
{
    return apply_operator(x, x.mod().operator_series(b));
}

ClassWithSupport divisor_class(std::shared_ptr<const FaceModule> mod, const CartierDiv& E,
                               const PseudoSeq& seq)
{
    const SncConfig& cfg = mod->cfg();
    if (E.mults.size() != cfg.m())
        throw std::invalid_argument("divisor_class: divisor on a different frame");
    if (E.is_zero())
        throw precondition_error("divisor_class: the zero divisor has no divisor class");
    if (auto fail = divisor_admissibility_failure(cfg, E, seq))
        throw precondition_error("divisor_class: divisor not admissible: face " +
                                 face_str(fail->face, cfg.m()) + ", prefix " +
                                 std::to_string(fail->prefix));

    std::vector<std::int64_t> mults(E.mults.begin(), E.mults.end());
    Series S = mod->ctx().formal_sum(mults);
    JDecomposition dec = j_decompose(S, cfg.m());

    Face supp = E.support();
    ClassWithSupport out;
    out.cls = FaceClass(mod);
    for (Face J : cfg.faces) {
        if (J == 0 || (J & supp) != J)
            continue;
        auto it = dec.parts.find(J);
        if (it == dec.parts.end())
            continue;
        Series part = it->second.reinterpreted(cfg.m(), mod->symbols())
                          .truncated(cfg.dim - face_size(J));
        out.cls.add_part(J, part);
    }
    out.support = support_of(cfg, PseudoDiv::divisorial(E));
    return out;
}

namespace {

// Restriction of a sequence to the face frame: entries containing the
// face become global pseudo-divisors there, the rest restrict their
// multiplicities to the components meeting the face.
PseudoSeq restrict_seq(const SncConfig& cfg, Face J, const PseudoSeq& seq)
{
    PseudoSeq out;
    out.reserve(seq.size());
    for (const auto& entry : seq) {
        FaceRestriction r = restrict_to_face(cfg, J, entry);
        if (r.full)
            out.push_back(PseudoDiv::global(BundleExpr{}));
        else
            out.push_back(PseudoDiv::divisorial(CartierDiv{r.mults}));
    }
    return out;
}

Series lift_series(const FaceModule& mod, const std::vector<std::uint32_t>& ks, const Series& sub)
{
    SeriesShape sh = mod.shape();
    Series out(sh);
    const std::size_t nsub = ks.size();
    for (const auto& [e, c] : sub.terms()) {
        Exp a(sh.width(), 0);
        for (std::size_t i = 0; i < nsub; ++i)
            a[ks[i]] = e[i];
        for (std::size_t j = nsub; j < e.size(); ++j)
            a[mod.cfg().m() + (j - nsub)] = e[j];
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

ClassWithSupport intersect(const PseudoDiv& C, const PseudoDiv& D, const PseudoSeq& seq,
                           const FaceClass& x)
{
    auto mod = x.mod_ptr();
    const SncConfig& cfg = mod->cfg();
    if (!supported_in(C, D))
        throw precondition_error("intersect: C is not supported in D");

    ClassWithSupport out;
    out.cls = FaceClass(mod);
    for (const auto& [J, s] : x.parts()) {
        if (face_in_support(cfg, J, D)) {
            out.cls += chern(C.bundle(), FaceClass::single(mod, J, s));
            continue;
        }
        // Here D and C are divisorial and D is the leading entry for
        // the face map.
        PseudoSeq dseq;
        dseq.push_back(D);
        dseq.insert(dseq.end(), seq.begin(), seq.end());
        if (!face_map_admissible(cfg, J, dseq))
            throw precondition_error("intersect: face " + face_str(J, cfg.m()) +
                                     " is not admissible for (D, seq)");
        auto ks = cfg.meet(J);
        CartierDiv Ct;
        for (std::uint32_t k : ks)
            Ct.mults.push_back(C.div.mults[k]);
        if (Ct.is_zero())
            continue;  // C restricts to the empty divisor on the face
        auto sub = mod->face_frame(J);
        auto dc = divisor_class(sub, Ct, restrict_seq(cfg, J, seq));
        for (const auto& [K, f] : dc.cls.parts()) {
            Face JK = J | lift_face(ks, K);
            Series prod = (lift_series(*mod, ks, f) * s)
                              .truncated(cfg.dim - face_size(JK));
            out.cls.add_part(JK, prod);
        }
    }
    out.support = support_of(cfg, D);
    return out;
}

FaceClass pushforward(const FaceClass& x, const SupportSet& from)
{
    for (const auto& [J, s] : x.parts())
        if (!from.contains(J))
            throw precondition_error("pushforward: class is not supported in the given support");
    return x;
}

PseudoSeq forget(const PseudoSeq& seq, std::size_t keep)
{
    if (keep > seq.size())
        throw std::invalid_argument("forget: prefix longer than the sequence");
    return PseudoSeq(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(keep));
}

std::optional<Difference> first_difference(const FaceClass& a, const FaceClass& b)
{
    std::set<Face> faces;
    for (const auto& [J, s] : a.parts())
        faces.insert(J);
    for (const auto& [J, s] : b.parts())
        faces.insert(J);
    const Series empty(a.is_zero() && !b.is_zero() ? b.parts().begin()->second.shape()
                       : !a.is_zero()              ? a.parts().begin()->second.shape()
                                                   : SeriesShape{});
    for (Face J : faces) {
        auto ia = a.parts().find(J);
        auto ib = b.parts().find(J);
        const Series& sa = ia == a.parts().end() ? empty : ia->second;
        const Series& sb = ib == b.parts().end() ? empty : ib->second;
        std::set<Exp> keys;
        for (const auto& [e, c] : sa.terms())
            keys.insert(e);
        for (const auto& [e, c] : sb.terms())
            keys.insert(e);
        for (const Exp& e : keys) {
            LazardPoly ca = sa.shape().width() == e.size() ? sa.coefficient(e) : LazardPoly();
            LazardPoly cb = sb.shape().width() == e.size() ? sb.coefficient(e) : LazardPoly();
            if (!(ca == cb))
                return Difference{J, e, std::move(ca), std::move(cb)};
        }
    }
    return std::nullopt;
}

std::string difference_str(const FaceModule& mod, const Difference& d)
{
    return "diff=(face=" + face_str(d.face, mod.cfg().m()) +
           ", monomial=" + mod.monomial_str(d.monomial) + ", lhs=" + d.lhs.str() +
           ", rhs=" + d.rhs.str() + ")";
}

std::string div_str(const CartierDiv& d)
{
    std::string out = "(";
    for (std::size_t k = 0; k < d.mults.size(); ++k) {
        if (k)
            out += ",";
        out += std::to_string(d.mults[k]);
    }
    return out + ")";
}

std::string pseudo_str(const PseudoDiv& p)
{
    if (!p.is_global())
        return "div" + div_str(p.div);
    std::string out = "global(c=(";
    for (std::size_t k = 0; k < p.bundle_.component_part.size(); ++k) {
        if (k)
            out += ",";
        out += std::to_string(p.bundle_.component_part[k]);
    }
    out += ")";
    for (const auto& [name, e] : p.bundle_.free_part)
        out += "," + name + "^" + std::to_string(e);
    return out + ")";
}

std::string seq_str(const PseudoSeq& s)
{
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ";";
        out += pseudo_str(s[i]);
    }
    return out + "]";
}

std::string config_digest(const SncConfig& cfg)
{
    std::string out = "m=" + std::to_string(cfg.m()) + ",d=" + std::to_string(cfg.dim) + ",faces=";
    bool first = true;
    for (Face f : cfg.faces) {
        if (f == 0)
            continue;
        if (!first)
            out += ";";
        out += face_str(f, cfg.m());
        first = false;
    }
    if (first)
        out += "-";
    return out;
}

bool is_smooth_divisor(const SncConfig& cfg, const CartierDiv& Z)
{
    for (std::uint32_t mult : Z.mults)
        if (mult > 1)
            return false;
    Face supp = Z.support();
    for (std::uint32_t i = 0; i < cfg.m(); ++i)
        for (std::uint32_t j = i + 1; j < cfg.m(); ++j)
            if ((supp & (1u << i)) && (supp & (1u << j)) &&
                cfg.has_face((1u << i) | (1u << j)))
                return false;
    return true;
}

namespace {

Report compare_sides(const FaceModule& mod, std::string identity, std::string digest,
                     const FaceClass& lhs, const FaceClass& rhs, const FaceClass& brute_lhs,
                     const FaceClass& brute_rhs)
{
    Report rep;
    rep.identity = std::move(identity);
    rep.digest = std::move(digest);
    if (auto d = first_difference(lhs, brute_lhs)) {
        rep.pass = false;
        rep.detail = "oracle mismatch on lhs " + difference_str(mod, *d);
        return rep;
    }
    if (auto d = first_difference(rhs, brute_rhs)) {
        rep.pass = false;
        rep.detail = "oracle mismatch on rhs " + difference_str(mod, *d);
        return rep;
    }
    if (auto d = first_difference(lhs, rhs)) {
        rep.pass = false;
        rep.detail = difference_str(mod, *d);
        return rep;
    }
    rep.pass = true;
    return rep;
}

PseudoSeq prepend(const PseudoDiv& d, const PseudoSeq& seq)
{
    PseudoSeq out;
    out.reserve(seq.size() + 1);
    out.push_back(d);
    out.insert(out.end(), seq.begin(), seq.end());
    return out;
}

}  // namespace

Report verify_lemma_1_13(std::shared_ptr<const FaceModule> mod, const CartierDiv& E,
                         const PseudoSeq& seq, std::uint32_t k, std::uint32_t p)
{
    const SncConfig& cfg = mod->cfg();
    std::string digest = config_digest(cfg) + " E=" + div_str(E) + " seq=" + seq_str(seq) +
                         " k=" + std::to_string(k + 1) + " p=" + std::to_string(p);

    SplitResult split = split_component(cfg, k, p);
    auto refined =
        std::make_shared<FaceModule>(std::make_shared<SncConfig>(split.refined),
                                     std::shared_ptr<const FglContext>(mod, &mod->ctx()),
                                     mod->symbols());
    CartierDiv Er = split.transport(E);
    PseudoSeq seqr = split.transport(seq);

    if (!divisor_admissible(cfg, E, seq))
        throw precondition_error("verify_lemma_1_13: coarse divisor not admissible");
    if (!divisor_admissible(split.refined, Er, seqr))
        throw precondition_error("verify_lemma_1_13: refined divisor not admissible");

    FaceClass fine = divisor_class(refined, Er, seqr).cls;
    FaceClass coarse = divisor_class(mod, E, seq).cls;

    // Transport the coarse formula: on each refined face replacing a
    // coarse one, the operator of O(E_k) expands as the formal sum of
    // the part operators; disjointness of the parts does the rest
    // under normalization.
    SeriesShape rsh = refined->shape();
    std::vector<Series> images(cfg.m(), Series(rsh));
    for (std::uint32_t i = 0; i < cfg.m(); ++i) {
        if (i == k) {
            std::vector<Series> parts;
            for (std::uint32_t nk : split.component_map[k])
                parts.push_back(Series::variable(rsh, nk));
            images[i] = mod->ctx().nfold_sum(p).substitute(parts);
        } else {
            images[i] = Series::variable(rsh, split.component_map[i][0]);
        }
    }
    std::map<Face, Series> raw;
    for (const auto& [J, s] : coarse.parts()) {
        Series moved = s.substitute(images);
        for (Face Jr : split.face_map.at(J)) {
            auto [it, inserted] = raw.try_emplace(Jr, moved);
            if (!inserted)
                it->second += moved;
        }
    }
    FaceClass transported = normalize(refined, raw);

    // Oracle checks: both divisor classes and the transport rewriting.
    if (auto d = first_difference(fine, brute::divisor_class(refined, Er).cls))
        return Report{"lemma_1_13", digest, false,
                      "oracle mismatch on refined class " + difference_str(*refined, *d)};
    if (auto d = first_difference(coarse, brute::divisor_class(mod, E).cls))
        return Report{"lemma_1_13", digest, false,
                      "oracle mismatch on coarse class " + difference_str(*mod, *d)};
    if (auto d = first_difference(transported, brute::normalize(refined, raw)))
        return Report{"lemma_1_13", digest, false,
                      "oracle mismatch on transport " + difference_str(*refined, *d)};

    Report rep;
    rep.identity = "lemma_1_13";
    rep.digest = digest;
    if (auto d = first_difference(transported, fine)) {
        rep.pass = false;
        rep.detail = difference_str(*refined, *d);
    } else {
        rep.pass = true;
    }
    return rep;
}

Report verify_lemma_1_14(std::shared_ptr<const FaceModule> mod, const CartierDiv& E,
                         const PseudoSeq& seq)
{
    std::string digest =
        config_digest(mod->cfg()) + " E=" + div_str(E) + " seq=" + seq_str(seq);
    good_position(mod->cfg(), E, seq);

    auto dc = divisor_class(mod, E, seq);
    FaceClass lhs = pushforward(dc.cls, dc.support);
    FaceClass rhs = chern(bundle_of(E), unit(mod));

    return compare_sides(*mod, "lemma_1_14", digest, lhs, rhs,
                         brute::divisor_class(mod, E).cls,
                         brute::chern(bundle_of(E), unit(mod)));
}

Report verify_lemma_2_7(std::shared_ptr<const FaceModule> mod, const CartierDiv& Z,
                        const PseudoDiv& C, const PseudoDiv& D, const PseudoSeq& seq)
{
    const SncConfig& cfg = mod->cfg();
    std::string digest = config_digest(cfg) + " Z=" + div_str(Z) + " C=" + pseudo_str(C) +
                         " D=" + pseudo_str(D) + " seq=" + seq_str(seq);

    if (!is_smooth_divisor(cfg, Z))
        throw precondition_error("verify_lemma_2_7: Z is not a smooth frame divisor");
    if (D.is_global())
        throw precondition_error("verify_lemma_2_7: D must be divisorial");
    if (!supported_in(C, D))
        throw precondition_error("verify_lemma_2_7: C is not supported in D");
    PseudoSeq dseq = prepend(D, seq);
    good_position(cfg, Z, dseq);

    FaceClass z_class = divisor_class(mod, Z, dseq).cls;
    FaceClass lhs = intersect(C, D, seq, z_class).cls;

    FaceClass rhs(mod);
    FaceClass brute_rhs(mod);
    if (C.div.is_zero()) {
        // Intersection with the zero pseudo-divisor is zero, matching
        // the first Chern class of the trivial bundle.
    } else {
        FaceClass c_class = divisor_class(mod, C.div, seq).cls;
        rhs = chern(bundle_of(Z), c_class);
        brute_rhs = brute::chern(bundle_of(Z), brute::divisor_class(mod, C.div).cls);
    }

    return compare_sides(*mod, "lemma_2_7", digest, lhs, rhs,
                         brute::intersect(C, D, seq, z_class).cls, brute_rhs);
}

Report verify_lemma_4_2(std::shared_ptr<const FaceModule> mod, const CartierDiv& D,
                        const CartierDiv& C0, const CartierDiv& C1, const PseudoSeq& seq)
{
    const SncConfig& cfg = mod->cfg();
    std::string digest = config_digest(cfg) + " D=" + div_str(D) + " C0=" + div_str(C0) +
                         " C1=" + div_str(C1) + " seq=" + seq_str(seq);

    if (C0.is_zero() || C1.is_zero())
        throw precondition_error("verify_lemma_4_2: C0 and C1 must be nonzero");
    if (!is_smooth_divisor(cfg, C1))
        throw precondition_error("verify_lemma_4_2: C1 is not a smooth frame divisor");
    CartierDiv C = add_divs(C0, C1);
    Face ds = D.support();
    if ((C.support() & ds) != C.support())
        throw precondition_error("verify_lemma_4_2: support(C0+C1) not contained in |D|");
    PseudoSeq dseq = prepend(PseudoDiv::divisorial(D), seq);
    if (!face_map_admissible(cfg, 0, dseq))
        throw precondition_error("verify_lemma_4_2: ambient map not admissible for (D, seq)");

    FaceClass lhs = divisor_class(mod, C, seq).cls;
    FaceClass cls0 = divisor_class(mod, C0, seq).cls;
    FaceClass cls1 = divisor_class(mod, C1, seq).cls;

    auto [f11, g11] = mod->ctx().f11_g11();
    Series A = mod->operator_series(bundle_of(C1));
    Series B = mod->operator_series(bundle_of(C0));
    std::array<Series, 2> imgs{A, B};
    Series g11_op = g11.substitute(imgs);
    FaceClass rhs = cls0 + cls1 + apply_operator(cls1, g11_op);

    FaceClass brute_rhs = brute::divisor_class(mod, C0).cls;
    brute_rhs += brute::divisor_class(mod, C1).cls;
    brute_rhs += brute::apply_2var_series(g11, A, B, brute::divisor_class(mod, C1).cls);

    return compare_sides(*mod, "lemma_4_2", digest, lhs, rhs, brute::divisor_class(mod, C).cls,
                         brute_rhs);
}

Report verify_prop_4_3(std::shared_ptr<const FaceModule> mod, const CartierDiv& D,
                       const CartierDiv& Dp, const CartierDiv& C, const CartierDiv& Cp,
                       const PseudoSeq& seq)
{
    const SncConfig& cfg = mod->cfg();
    std::string digest = config_digest(cfg) + " D=" + div_str(D) + " D'=" + div_str(Dp) +
                         " C=" + div_str(C) + " C'=" + div_str(Cp) + " seq=" + seq_str(seq);

    PseudoDiv pD = PseudoDiv::divisorial(D);
    PseudoDiv pDp = PseudoDiv::divisorial(Dp);
    PseudoDiv pC = PseudoDiv::divisorial(C);
    PseudoDiv pCp = PseudoDiv::divisorial(Cp);
    if (!supported_in(pC, pD) || !supported_in(pCp, pDp))
        throw precondition_error("verify_prop_4_3: support preconditions violated");
    if (!face_map_admissible(cfg, 0, prepend(pD, seq)) ||
        !face_map_admissible(cfg, 0, prepend(pDp, seq)))
        throw precondition_error("verify_prop_4_3: ambient admissibility violated");

    FaceClass x1 = divisor_class(mod, Cp, prepend(pD, seq)).cls;
    FaceClass lhs = intersect(pC, pD, seq, x1).cls;

    FaceClass x2 = divisor_class(mod, C, prepend(pDp, seq)).cls;
    FaceClass rhs = intersect(pCp, pDp, seq, x2).cls;

    return compare_sides(*mod, "prop_4_3", digest, lhs, rhs,
                         brute::intersect(pC, pD, seq, brute::divisor_class(mod, Cp).cls).cls,
                         brute::intersect(pCp, pDp, seq, brute::divisor_class(mod, C).cls).cls);
}

namespace {

bool intersect_defined(const PseudoDiv& C, const PseudoDiv& D, const PseudoSeq& seq,
                       const FaceClass& x)
{
    const SncConfig& cfg = x.mod().cfg();
    if (!supported_in(C, D))
        return false;
    for (const auto& [J, s] : x.parts()) {
        if (face_in_support(cfg, J, D))
            continue;
        PseudoSeq dseq;
        dseq.push_back(D);
        dseq.insert(dseq.end(), seq.begin(), seq.end());
        if (!face_map_admissible(cfg, J, dseq))
            return false;
    }
    return true;
}

}  // namespace

Report verify_prop_6_3_7(std::shared_ptr<const FaceModule> mod, const PseudoDiv& D,
                         const PseudoDiv& Dp, const PseudoSeq& seq)
{
    const SncConfig& cfg = mod->cfg();
    std::string digest = config_digest(cfg) + " D=" + pseudo_str(D) + " D'=" + pseudo_str(Dp) +
                         " seq=" + seq_str(seq);

    if (!(D.bundle() == Dp.bundle()))
        throw precondition_error("verify_prop_6_3_7: bundle expressions differ");
    if (!face_map_admissible(cfg, 0, prepend(D, seq)) ||
        !face_map_admissible(cfg, 0, prepend(Dp, seq)))
        throw precondition_error("verify_prop_6_3_7: ambient admissibility violated");

    SupportSet all;
    all.faces = cfg.faces;

    std::vector<FaceClass> generators;
    generators.push_back(unit(mod));
    for (Face J : cfg.faces)
        if (J != 0)
            generators.push_back(
                FaceClass::single(mod, J, Series::constant(mod->shape(), Rational(1))));

    Report rep;
    rep.identity = "prop_6_3_7";
    rep.digest = digest;
    rep.pass = true;
    for (const auto& x : generators) {
        // Compare where both decorated intersections are defined.
        if (!intersect_defined(D, D, seq, x) || !intersect_defined(Dp, Dp, seq, x))
            continue;
        FaceClass lhs = pushforward(intersect(D, D, seq, x).cls, all);
        FaceClass rhs = pushforward(intersect(Dp, Dp, seq, x).cls, all);
        if (auto d = first_difference(lhs, brute::intersect(D, D, seq, x).cls)) {
            rep.pass = false;
            rep.detail = "oracle mismatch on lhs " + difference_str(*mod, *d);
            return rep;
        }
        if (auto d = first_difference(rhs, brute::intersect(Dp, Dp, seq, x).cls)) {
            rep.pass = false;
            rep.detail = "oracle mismatch on rhs " + difference_str(*mod, *d);
            return rep;
        }
        if (auto d = first_difference(lhs, rhs)) {
            rep.pass = false;
            rep.detail = difference_str(*mod, *d);
            return rep;
        }
    }
    return rep;
}

}  // namespace cobord
