#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace cobord {

// Face of the frame: bitmask over component indices (bit k for
// component k, 0-based). The empty face is the ambient scheme.
using Face = std::uint32_t;

inline std::uint32_t face_size(Face f) { return static_cast<std::uint32_t>(__builtin_popcount(f)); }

std::string face_str(Face f, std::uint32_t m);

struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Combinatorial frame for an ambient smooth scheme with a fixed SNC
// configuration: ambient dimension, named components, and the
// downward-closed collection of nonempty faces.
struct SncConfig {
    std::uint32_t dim = 0;
    std::vector<std::string> components;
    std::set<Face> faces;  // always contains the empty face

    std::uint32_t m() const { return static_cast<std::uint32_t>(components.size()); }
    bool has_face(Face f) const { return faces.count(f) != 0; }

    // Components meeting the face: k not in J with J|{k} still a face.
    std::vector<std::uint32_t> meet(Face J) const
    {
        std::vector<std::uint32_t> ks;
        for (std::uint32_t k = 0; k < m(); ++k)
            if (!(J & (1u << k)) && has_face(J | (1u << k)))
                ks.push_back(k);
        return ks;
    }

    void validate() const;
};

SncConfig make_config(std::uint32_t dim, std::vector<std::string> components,
                      std::vector<Face> nonempty_faces);

// Frame-supported effective Cartier divisor: one multiplicity per
// component; the zero vector is the empty divisor.
struct CartierDiv {
    std::vector<std::uint32_t> mults;

    Face support() const
    {
        Face s = 0;
        for (std::size_t k = 0; k < mults.size(); ++k)
            if (mults[k] > 0)
                s |= 1u << k;
        return s;
    }
    bool is_zero() const { return support() == 0; }
    bool operator==(const CartierDiv&) const = default;
};

CartierDiv add_divs(const CartierDiv& a, const CartierDiv& b);

// Purely formal line bundle: tensor powers of the component bundles
// O(E_k) and of named free symbols.
struct BundleExpr {
    std::vector<std::int64_t> component_part;
    std::map<std::string, std::int64_t> free_part;

    bool operator==(const BundleExpr&) const = default;
};

BundleExpr tensor(const BundleExpr& a, const BundleExpr& b);
BundleExpr bundle_of(const CartierDiv& d);

// Pseudo-divisor: a frame divisor with its canonical section, or a
// global pseudo-divisor (Y, L, 0) whose support is all of Y.
struct PseudoDiv {
    enum class Kind { Divisorial, Global };
    Kind kind = Kind::Divisorial;
    CartierDiv div;      // Divisorial only
    BundleExpr bundle_;  // Global only

    static PseudoDiv divisorial(CartierDiv d)
    {
        PseudoDiv p;
        p.kind = Kind::Divisorial;
        p.div = std::move(d);
        return p;
    }
    static PseudoDiv global(BundleExpr b)
    {
        PseudoDiv p;
        p.kind = Kind::Global;
        p.bundle_ = std::move(b);
        return p;
    }

    bool is_global() const { return kind == Kind::Global; }
    BundleExpr bundle() const { return is_global() ? bundle_ : bundle_of(div); }
    bool operator==(const PseudoDiv&) const = default;
};

using PseudoSeq = std::vector<PseudoDiv>;

PseudoDiv pd_sum(const PseudoDiv& a, const PseudoDiv& b);

// C supported in D: C a sub-pseudo-divisor of some multiple of D;
// support containment is what remains of that in the frame model.
bool supported_in(const PseudoDiv& c, const PseudoDiv& d);

// Whether the face E^J lies inside the support of D.
bool face_in_support(const SncConfig& cfg, Face J, const PseudoDiv& D);

// Index (0-based) of the leading pseudo-divisor for the face map
// E^J -> Y, absent when every entry contains the face.
std::optional<std::size_t> leading(const SncConfig& cfg, Face J, const PseudoSeq& seq);

// A pseudo-divisor restricted to a face: either the restriction covers
// the whole face, or it is a divisor on the face with multiplicities
// over the components meeting the face (cfg.meet(J) order).
struct FaceRestriction {
    bool full = false;
    std::vector<std::uint32_t> mults;

    static FaceRestriction whole_face() { return FaceRestriction{true, {}}; }
};

FaceRestriction restrict_to_face(const SncConfig& cfg, Face J, const PseudoDiv& D);

// Scheme-theoretic intersection of frame divisors on E^J, modeled by
// monomial ideals in local SNC coordinates: Cartier iff at every deeper
// face the restricted exponent vectors attain their componentwise
// minimum.
bool intersection_is_cartier(const SncConfig& cfg, Face J,
                             std::span<const FaceRestriction> divs);

// The intersection of restricted divisors, when the Cartier test
// passes: whole face, empty, or the componentwise-minimum divisor
// (multiplicities in cfg.meet(J) order).
struct PrefixIntersection {
    enum class Kind { WholeFace, Empty, Divisor } kind;
    std::vector<std::uint32_t> mults;  // Divisor only
};

std::optional<PrefixIntersection> prefix_intersection(const SncConfig& cfg, Face J,
                                                      std::span<const FaceRestriction> divs);

bool face_map_admissible(const SncConfig& cfg, Face J, const PseudoSeq& seq);

// First violation of admissibility among the faces of E, if any.
struct AdmissibilityFailure {
    Face face;
    std::size_t prefix;  // 1-based prefix length that fails
};

std::optional<AdmissibilityFailure> divisor_admissibility_failure(const SncConfig& cfg,
                                                                  const CartierDiv& E,
                                                                  const PseudoSeq& seq);

bool divisor_admissible(const SncConfig& cfg, const CartierDiv& E, const PseudoSeq& seq);

// Good position of E with respect to the sequence. Requires the
// ambient map to be admissible; within a fixed frame E + div D_i0 is
// automatically SNC, so the outcome reduces to the leading-entry case
// analysis. Verifies the implication good-position => admissible as a
// contract and throws std::logic_error if it ever fails.
bool good_position(const SncConfig& cfg, const CartierDiv& E, const PseudoSeq& seq);

// Component split: replace component k by p pairwise-disjoint parts.
struct SplitResult {
    SncConfig refined;
    // old component index -> new indices (p entries for k, 1 otherwise)
    std::vector<std::vector<std::uint32_t>> component_map;
    // old face -> the refined faces it decomposes into
    std::map<Face, std::vector<Face>> face_map;

    CartierDiv transport(const CartierDiv& d) const;
    BundleExpr transport(const BundleExpr& b) const;
    PseudoDiv transport(const PseudoDiv& p) const;
    PseudoSeq transport(const PseudoSeq& s) const;
};

SplitResult split_component(const SncConfig& cfg, std::uint32_t k, std::uint32_t p);

}  // namespace cobord
