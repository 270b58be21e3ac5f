#pragma once

#include "cobord/fgl.hpp"
#include "cobord/snc.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace cobord {

// Evaluation context for the face-module model: a frame, a formal
// group law context with trunc >= dim, and the declared free symbols.
class FaceModule {
public:
    FaceModule(std::shared_ptr<const SncConfig> cfg, std::shared_ptr<const FglContext> ctx,
               std::vector<std::string> symbols);

    const SncConfig& cfg() const { return *cfg_; }
    const FglContext& ctx() const { return *ctx_; }
    const std::vector<std::string>& symbols() const { return symbols_; }

    SeriesShape shape() const
    {
        return SeriesShape{cfg_->m(), symbols_, ctx_->trunc()};
    }

    std::string var_name(std::size_t i) const
    {
        return i < cfg_->m() ? cfg_->components[i] : symbols_[i - cfg_->m()];
    }

    std::string monomial_str(const Exp& e) const;

    // The frame of the face E^J: components are the components meeting
    // the face, dimension drops by |J|. Cached per face.
    std::shared_ptr<const FaceModule> face_frame(Face J) const;

    // Multiplication operator realizing the first Chern class of the
    // bundle: the formal sum over component and symbol variables.
    Series operator_series(const BundleExpr& b) const;

private:
    std::shared_ptr<const SncConfig> cfg_;
    std::shared_ptr<const FglContext> ctx_;
    std::vector<std::string> symbols_;
    mutable std::mutex mu_;
    mutable std::map<Face, std::shared_ptr<const FaceModule>> frames_;
};

std::shared_ptr<const FaceModule> make_module(SncConfig cfg, std::shared_ptr<const FglContext> ctx,
                                              std::vector<std::string> symbols = {});

// Element of the face-module model of refined cobordism: one series
// per face, in normal form (the series at face J involves only the
// u-variables of J plus free symbols) and truncated at the face
// dimension.
class FaceClass {
public:
    FaceClass() = default;
    explicit FaceClass(std::shared_ptr<const FaceModule> mod) : mod_(std::move(mod)) {}

    static FaceClass single(std::shared_ptr<const FaceModule> mod, Face J, Series s);

    const FaceModule& mod() const { return *mod_; }
    std::shared_ptr<const FaceModule> mod_ptr() const { return mod_; }
    const std::map<Face, Series>& parts() const { return parts_; }
    bool is_zero() const { return parts_.empty(); }

    void add_part(Face J, const Series& s)
    {
        if (s.is_zero())
            return;
        auto [it, inserted] = parts_.try_emplace(J, s);
        if (!inserted) {
            it->second += s;
            if (it->second.is_zero())
                parts_.erase(it);
        }
    }

    FaceClass& operator+=(const FaceClass& o)
    {
        for (const auto& [J, s] : o.parts_)
            add_part(J, s);
        return *this;
    }

    friend FaceClass operator+(FaceClass a, const FaceClass& b) { return a += b; }

    FaceClass operator-() const
    {
        FaceClass r(mod_);
        for (const auto& [J, s] : parts_)
            r.parts_.emplace(J, -s);
        return r;
    }

    FaceClass& operator-=(const FaceClass& o) { return *this += -o; }

    FaceClass scaled(const LazardPoly& c) const
    {
        FaceClass r(mod_);
        for (const auto& [J, s] : parts_) {
            Series t = s;
            t.scale(c);
            r.add_part(J, t);
        }
        return r;
    }

    bool operator==(const FaceClass& o) const { return parts_ == o.parts_; }

private:
    std::shared_ptr<const FaceModule> mod_;
    std::map<Face, Series> parts_;
};

// Set of faces closed under passing to deeper faces; models the
// support of a divisor as a union of components.
struct SupportSet {
    std::set<Face> faces;
    bool contains(Face f) const { return faces.count(f) != 0; }
};

SupportSet support_of(const SncConfig& cfg, const PseudoDiv& D);

struct ClassWithSupport {
    FaceClass cls;
    SupportSet support;
};

FaceClass unit(std::shared_ptr<const FaceModule> mod);

// Normal-form rewriting: a u-variable not belonging to its face moves
// the term one face deeper (or kills it when the deeper face is not in
// the frame), then monomials beyond the face dimension are dropped.
FaceClass normalize(std::shared_ptr<const FaceModule> mod, const std::map<Face, Series>& raw);

// Multiply every part by the operator series and renormalize.
FaceClass apply_operator(const FaceClass& x, const Series& op);

FaceClass chern(const BundleExpr& b, const FaceClass& x);

ClassWithSupport divisor_class(std::shared_ptr<const FaceModule> mod, const CartierDiv& E,
                               const PseudoSeq& seq);

// Intersection with the pseudo-divisor C supported in D, landing on
// the support of D.
ClassWithSupport intersect(const PseudoDiv& C, const PseudoDiv& D, const PseudoSeq& seq,
                           const FaceClass& x);

// Face-basis inclusion: identity on the representation, checks support.
FaceClass pushforward(const FaceClass& x, const SupportSet& from);

PseudoSeq forget(const PseudoSeq& seq, std::size_t keep);

struct Difference {
    Face face;
    Exp monomial;
    LazardPoly lhs, rhs;
};

std::optional<Difference> first_difference(const FaceClass& a, const FaceClass& b);

std::string difference_str(const FaceModule& mod, const Difference& d);

// Verification report; deterministic field ordering.
struct Report {
    std::string identity;
    std::string digest;
    bool pass = false;
    std::string detail;

    std::string str() const
    {
        std::string s = "identity=" + identity + " config=" + digest +
                        " status=" + (pass ? "pass" : "fail");
        if (!detail.empty())
            s += " " + detail;
        return s;
    }
};

std::string div_str(const CartierDiv& d);
std::string pseudo_str(const PseudoDiv& p);
std::string seq_str(const PseudoSeq& s);
std::string config_digest(const SncConfig& cfg);

Report verify_lemma_1_13(std::shared_ptr<const FaceModule> mod, const CartierDiv& E,
                         const PseudoSeq& seq, std::uint32_t k, std::uint32_t p);
Report verify_lemma_1_14(std::shared_ptr<const FaceModule> mod, const CartierDiv& E,
                         const PseudoSeq& seq);
Report verify_lemma_2_7(std::shared_ptr<const FaceModule> mod, const CartierDiv& Z,
                        const PseudoDiv& C, const PseudoDiv& D, const PseudoSeq& seq);
Report verify_lemma_4_2(std::shared_ptr<const FaceModule> mod, const CartierDiv& D,
                        const CartierDiv& C0, const CartierDiv& C1, const PseudoSeq& seq);
Report verify_prop_4_3(std::shared_ptr<const FaceModule> mod, const CartierDiv& D,
                       const CartierDiv& Dp, const CartierDiv& C, const CartierDiv& Cp,
                       const PseudoSeq& seq);
Report verify_prop_6_3_7(std::shared_ptr<const FaceModule> mod, const PseudoDiv& D,
                         const PseudoDiv& Dp, const PseudoSeq& seq);

// A smooth frame divisor: reduced and with pairwise-disjoint
// components.
bool is_smooth_divisor(const SncConfig& cfg, const CartierDiv& Z);

}  // namespace cobord
