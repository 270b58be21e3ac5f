#include "cobord/snc.hpp"

#include <algorithm>

namespace cobord {

std::string face_str(Face f, std::uint32_t m)
{
    if (f == 0)
        return "{}";
    std::string out = "{";
    bool first = true;
    for (std::uint32_t k = 0; k < m; ++k)
        if (f & (1u << k)) {
            if (!first)
                out += ",";
            out += std::to_string(k + 1);
            first = false;
        }
    return out + "}";
}

void SncConfig::validate() const
{
    if (m() > 31)
        throw std::invalid_argument("SncConfig: at most 31 components supported");
    if (!has_face(0))
        throw std::invalid_argument("SncConfig: the empty face must be present");
    for (Face f : faces) {
        if (f >= (1u << m()))
            throw std::invalid_argument("SncConfig: face references unknown component");
        if (face_size(f) > dim)
            throw std::invalid_argument("SncConfig: face " + face_str(f, m()) +
                                        " exceeds the ambient dimension");
        for (std::uint32_t k = 0; k < m(); ++k) {
            Face sub = f & ~(1u << k);
            if (sub != f && !has_face(sub))
                throw std::invalid_argument("SncConfig: faces not downward closed at " +
                                            face_str(f, m()));
        }
    }
}

SncConfig make_config(std::uint32_t dim, std::vector<std::string> components,
                      std::vector<Face> nonempty_faces)
{
    SncConfig cfg;
    cfg.dim = dim;
    cfg.components = std::move(components);
    cfg.faces.insert(0);
    for (Face f : nonempty_faces)
        cfg.faces.insert(f);
    cfg.validate();
    return cfg;
}

CartierDiv add_divs(const CartierDiv& a, const CartierDiv& b)
{
    if (a.mults.size() != b.mults.size())
        throw std::invalid_argument("add_divs: divisors on different frames");
    CartierDiv r = a;
    for (std::size_t k = 0; k < r.mults.size(); ++k)
        r.mults[k] += b.mults[k];
    return r;
}

BundleExpr tensor(const BundleExpr& a, const BundleExpr& b)
{
    BundleExpr r = a;
    r.component_part.resize(std::max(a.component_part.size(), b.component_part.size()), 0);
    for (std::size_t k = 0; k < b.component_part.size(); ++k)
        r.component_part[k] += b.component_part[k];
    for (const auto& [name, e] : b.free_part) {
        r.free_part[name] += e;
        if (r.free_part[name] == 0)
            r.free_part.erase(name);
    }
    return r;
}

BundleExpr bundle_of(const CartierDiv& d)
{
    BundleExpr b;
    b.component_part.assign(d.mults.begin(), d.mults.end());
    return b;
}

PseudoDiv pd_sum(const PseudoDiv& a, const PseudoDiv& b)
{
    if (!a.is_global() && !b.is_global())
        return PseudoDiv::divisorial(add_divs(a.div, b.div));
    return PseudoDiv::global(tensor(a.bundle(), b.bundle()));
}

bool supported_in(const PseudoDiv& c, const PseudoDiv& d)
{
    if (d.is_global())
        return true;
    if (c.is_global())
        return false;  // a divisor never has support all of Y
    Face cs = c.div.support();
    return (cs & d.div.support()) == cs;
}

bool face_in_support(const SncConfig& cfg, Face J, const PseudoDiv& D)
{
    if (!cfg.has_face(J))
        throw std::invalid_argument("face_in_support: " + face_str(J, cfg.m()) +
                                    " is not a face of the frame");
    if (D.is_global())
        return true;
    return (J & D.div.support()) != 0;
}

std::optional<std::size_t> leading(const SncConfig& cfg, Face J, const PseudoSeq& seq)
{
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (!face_in_support(cfg, J, seq[i]))
            return i;
    return std::nullopt;
}

FaceRestriction restrict_to_face(const SncConfig& cfg, Face J, const PseudoDiv& D)
{
    if (face_in_support(cfg, J, D))
        return FaceRestriction::whole_face();
    FaceRestriction r;
    for (std::uint32_t k : cfg.meet(J))
        r.mults.push_back(D.div.mults[k]);
    return r;
}

namespace {

// Restriction of the meet(J)-indexed vectors to the coordinates of a
// deeper face J2: positions of J2\J inside meet(J).
std::vector<std::size_t> deep_positions(const SncConfig& cfg, Face J, Face J2)
{
    std::vector<std::size_t> pos;
    auto ks = cfg.meet(J);
    for (std::size_t i = 0; i < ks.size(); ++i)
        if (J2 & (1u << ks[i]))
            pos.push_back(i);
    return pos;
}

}  // namespace

bool intersection_is_cartier(const SncConfig& cfg, Face J,
                             std::span<const FaceRestriction> divs)
{
    std::vector<const std::vector<std::uint32_t>*> vecs;
    for (const auto& d : divs) {
        if (d.full)
            continue;  // intersecting with the whole face is a no-op
        bool zero = std::all_of(d.mults.begin(), d.mults.end(),
                                [](std::uint32_t v) { return v == 0; });
        if (zero)
            return true;  // empty divisor: the intersection is empty
        vecs.push_back(&d.mults);
    }
    if (vecs.size() <= 1)
        return true;

    for (Face J2 : cfg.faces) {
        if ((J2 & J) != J || J2 == J)
            continue;
        auto pos = deep_positions(cfg, J, J2);
        // Componentwise minimum must be attained by one of the vectors.
        std::vector<std::uint32_t> mn(pos.size());
        for (std::size_t i = 0; i < pos.size(); ++i) {
            mn[i] = (*vecs[0])[pos[i]];
            for (const auto* v : vecs)
                mn[i] = std::min(mn[i], (*v)[pos[i]]);
        }
        bool attained = false;
        for (const auto* v : vecs) {
            bool eq = true;
            for (std::size_t i = 0; i < pos.size() && eq; ++i)
                eq = (*v)[pos[i]] == mn[i];
            if (eq) {
                attained = true;
                break;
            }
        }
        if (!attained)
            return false;
    }
    return true;
}

std::optional<PrefixIntersection> prefix_intersection(const SncConfig& cfg, Face J,
                                                      std::span<const FaceRestriction> divs)
{
    if (!intersection_is_cartier(cfg, J, divs))
        return std::nullopt;
    PrefixIntersection out;
    bool any = false;
    std::vector<std::uint32_t> mn;
    for (const auto& d : divs) {
        if (d.full)
            continue;
        if (std::all_of(d.mults.begin(), d.mults.end(),
                        [](std::uint32_t v) { return v == 0; })) {
            out.kind = PrefixIntersection::Kind::Empty;
            return out;
        }
        if (!any) {
            mn = d.mults;
            any = true;
        } else {
            for (std::size_t i = 0; i < mn.size(); ++i)
                mn[i] = std::min(mn[i], d.mults[i]);
        }
    }
    if (!any) {
        out.kind = PrefixIntersection::Kind::WholeFace;
        return out;
    }
    out.kind = PrefixIntersection::Kind::Divisor;
    out.mults = std::move(mn);
    return out;
}

bool face_map_admissible(const SncConfig& cfg, Face J, const PseudoSeq& seq)
{
    if (!cfg.has_face(J))
        throw std::invalid_argument("face_map_admissible: " + face_str(J, cfg.m()) +
                                    " is not a face of the frame");
    std::vector<FaceRestriction> restricted;
    restricted.reserve(seq.size());
    for (std::size_t s = 0; s < seq.size(); ++s) {
        restricted.push_back(restrict_to_face(cfg, J, seq[s]));
        if (!intersection_is_cartier(cfg, J, restricted))
            return false;
    }
    return true;
}

std::optional<AdmissibilityFailure> divisor_admissibility_failure(const SncConfig& cfg,
                                                                  const CartierDiv& E,
                                                                  const PseudoSeq& seq)
{
    Face supp = E.support();
    for (Face J : cfg.faces) {
        if (J == 0 || (J & supp) != J)
            continue;
        std::vector<FaceRestriction> restricted;
        for (std::size_t s = 0; s < seq.size(); ++s) {
            restricted.push_back(restrict_to_face(cfg, J, seq[s]));
            if (!intersection_is_cartier(cfg, J, restricted))
                return AdmissibilityFailure{J, s + 1};
        }
    }
    return std::nullopt;
}

bool divisor_admissible(const SncConfig& cfg, const CartierDiv& E, const PseudoSeq& seq)
{
    return !divisor_admissibility_failure(cfg, E, seq).has_value();
}

bool good_position(const SncConfig& cfg, const CartierDiv& E, const PseudoSeq& seq)
{
    std::vector<FaceRestriction> restricted;
    for (std::size_t s = 0; s < seq.size(); ++s) {
        restricted.push_back(restrict_to_face(cfg, 0, seq[s]));
        if (!intersection_is_cartier(cfg, 0, restricted))
            throw precondition_error(
                "good_position: ambient map not admissible; prefix of length " +
                std::to_string(s + 1) + " fails the Cartier test");
    }

    auto lead = leading(cfg, 0, seq);
    bool good;
    if (!lead.has_value()) {
        good = true;
    } else if (!seq[*lead].is_global()) {
        // Within the fixed frame E + div D_i0 is automatically SNC.
        good = true;
    } else {
        good = false;  // unreachable: a global entry contains every face
    }

    if (good && !divisor_admissible(cfg, E, seq))
        throw std::logic_error(
            "good_position: contract violation: divisor in good position is "
            "not admissible");
    return good;
}

CartierDiv SplitResult::transport(const CartierDiv& d) const
{
    CartierDiv out;
    out.mults.assign(refined.m(), 0);
    for (std::size_t k = 0; k < d.mults.size(); ++k)
        for (std::uint32_t nk : component_map[k])
            out.mults[nk] = d.mults[k];
    return out;
}

BundleExpr SplitResult::transport(const BundleExpr& b) const
{
    BundleExpr out;
    out.component_part.assign(refined.m(), 0);
    for (std::size_t k = 0; k < b.component_part.size(); ++k)
        for (std::uint32_t nk : component_map[k])
            out.component_part[nk] = b.component_part[k];
    out.free_part = b.free_part;
    return out;
}

PseudoDiv SplitResult::transport(const PseudoDiv& p) const
{
    if (p.is_global())
        return PseudoDiv::global(transport(p.bundle_));
    return PseudoDiv::divisorial(transport(p.div));
}

PseudoSeq SplitResult::transport(const PseudoSeq& s) const
{
    PseudoSeq out;
    out.reserve(s.size());
    for (const auto& p : s)
        out.push_back(transport(p));
    return out;
}

SplitResult split_component(const SncConfig& cfg, std::uint32_t k, std::uint32_t p)
{
    if (k >= cfg.m())
        throw std::invalid_argument("split_component: invalid component index");
    if (p < 2)
        throw std::invalid_argument("split_component: need at least two parts");

    SplitResult res;
    res.refined.dim = cfg.dim;
    res.component_map.resize(cfg.m());

    // New layout: components before k keep their index, the p parts of
    // k come next, components after k shift up by p - 1.
    for (std::uint32_t i = 0; i < cfg.m(); ++i) {
        if (i < k) {
            res.refined.components.push_back(cfg.components[i]);
            res.component_map[i] = {i};
        } else if (i == k) {
            for (std::uint32_t q = 0; q < p; ++q) {
                res.refined.components.push_back(cfg.components[k] + "." +
                                                 std::to_string(q + 1));
                res.component_map[i].push_back(k + q);
            }
        } else {
            res.refined.components.push_back(cfg.components[i]);
            res.component_map[i] = {i + p - 1};
        }
    }

    auto remap_without_k = [&](Face J) {
        Face out = 0;
        for (std::uint32_t i = 0; i < cfg.m(); ++i)
            if ((J & (1u << i)) && i != k)
                out |= 1u << res.component_map[i][0];
        return out;
    };

    for (Face J : cfg.faces) {
        std::vector<Face> images;
        if (J & (1u << k)) {
            Face base = remap_without_k(J);
            for (std::uint32_t q = 0; q < p; ++q)
                images.push_back(base | (1u << (k + q)));
        } else {
            images.push_back(remap_without_k(J));
        }
        for (Face f : images)
            res.refined.faces.insert(f);
        res.face_map.emplace(J, std::move(images));
    }
    res.refined.validate();
    return res;
}

}  // namespace cobord
