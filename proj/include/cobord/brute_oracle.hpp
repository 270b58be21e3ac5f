#pragma once

// Independent brute-force recomputation path for the face-module
// operations: raw series products, inclusion-exclusion J-extraction and
// a stepwise rewriter with a randomizable rewrite order, normalizing in
// one monolithic pass. Used to cross-check every structured identity
// computation; shares no rewriting machinery with the production path.

#include "cobord/omega.hpp"

namespace cobord::brute {

inline constexpr std::uint64_t kDefaultSeed = 0x9e3779b97f4a7c15ull;

// Right-nested formal sum (the production path nests the other way).
Series formal_sum(const FglContext& ctx, const std::vector<std::int64_t>& mults);

// J-decomposition by inclusion-exclusion over variable specializations.
JDecomposition j_decompose(const Series& s, std::uint32_t m);

// Stepwise normal-form rewriter; the order in which stray variables
// are moved into the face is drawn from the seed.
FaceClass normalize(std::shared_ptr<const FaceModule> mod, const std::map<Face, Series>& raw,
                    std::uint64_t seed = kDefaultSeed);

FaceClass chern(const BundleExpr& b, const FaceClass& x, std::uint64_t seed = kDefaultSeed);

ClassWithSupport divisor_class(std::shared_ptr<const FaceModule> mod, const CartierDiv& E,
                               std::uint64_t seed = kDefaultSeed);

ClassWithSupport intersect(const PseudoDiv& C, const PseudoDiv& D, const PseudoSeq& seq,
                           const FaceClass& x, std::uint64_t seed = kDefaultSeed);

// Apply a two-variable operator series op(A, B) to a class by explicit
// monomial expansion, normalizing once at the end.
FaceClass apply_2var_series(const Series& op2, const Series& A, const Series& B,
                            const FaceClass& x, std::uint64_t seed = kDefaultSeed);

}  // namespace cobord::brute
