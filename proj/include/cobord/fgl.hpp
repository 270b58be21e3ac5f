#pragma once

#include "cobord/series.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace cobord {

// Canonical decomposition S = sum_J u^J F_J where J runs over {0,1}^m
// (stored as a bitmask, bit i for u_{i+1}) and F_J involves only the
// variables selected by J.
struct JDecomposition {
    std::uint32_t m = 0;
    std::map<std::uint32_t, Series> parts;  // zero parts omitted

    Series reconstruct(const SeriesShape& shape) const;
};

JDecomposition j_decompose(const Series& s, std::uint32_t m);

// The universal formal group law over Q[m1, m2, ...], built from the
// logarithm l(u) = u + sum_i m_i u^{i+1}: F(u, v) = l^{-1}(l(u) + l(v)).
// Everything is truncated at total degree `trunc`. Immutable after
// construction except the memo caches, which are idempotent and guarded.
class FglContext {
public:
    explicit FglContext(std::uint32_t trunc);

    std::uint32_t trunc() const { return trunc_; }
    const Series& log() const { return log_; }
    const Series& exp() const { return exp_; }
    const Series& fgl() const { return F_; }

    // Formal inverse i(u) with F(u, i(u)) = 0, solved degree by degree
    // from the group law itself (cross-checked against exp(-log u) in
    // the tests).
    const Series& formal_inverse() const { return inverse_; }

    // n-fold formal multiple n .F u; negative n goes through the
    // formal inverse.
    Series n_mult(std::int64_t n) const;

    // F^{n1,...,nm}(u1,...,um), left-associated as
    // F(n1.u1, F(n2.u2, ...)); cached by multiplicity tuple.
    Series formal_sum(const std::vector<std::int64_t>& mults) const;

    Series nfold_sum(std::uint32_t n) const;

    // F = u + v + uv*F11; returns (F11, G11) with G11 = v*F11.
    std::pair<Series, Series> f11_g11() const;

private:
    SeriesShape shape1() const { return SeriesShape{1, {}, trunc_}; }
    SeriesShape shape(std::uint32_t m) const { return SeriesShape{m, {}, trunc_}; }

    std::uint32_t trunc_;
    Series log_, exp_, F_, inverse_;
    mutable std::mutex mu_;
    mutable std::map<std::vector<std::int64_t>, Series> sum_cache_;
    mutable std::map<std::int64_t, Series> mult_cache_;
};

}  // namespace cobord
