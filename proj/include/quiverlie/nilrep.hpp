#pragma once

#include <cstdint>
#include <vector>

#include "quiverlie/matrix.hpp"
#include "quiverlie/partitions.hpp"

namespace quiverlie {

// An explicit nilpotent representation of the cyclic quiver: graded pieces
// M_0,...,M_{n-1} and arrows M_i -> M_{i+1} as exact-rational matrices.
struct NilpotentRep {
    DimensionVector dims;
    std::vector<RatMatrix> arrows;  // arrows[i] has shape dims[i+1] x dims[i]

    int n() const { return dims.n(); }

    NilpotentRep(DimensionVector d, std::vector<RatMatrix> a)
        : dims(std::move(d)), arrows(std::move(a)) {
        if (arrows.size() != static_cast<size_t>(dims.n()))
            throw std::invalid_argument("need one arrow per vertex");
        for (int i = 0; i < dims.n(); ++i) {
            const auto& m = arrows[static_cast<size_t>(i)];
            if (m.rows() != static_cast<size_t>(dims.at(i + 1)) ||
                m.cols() != static_cast<size_t>(dims.at(i)))
                throw std::invalid_argument("arrow shape mismatch at vertex " + std::to_string(i));
        }
    }
};

// Direct sum of the indecomposables of kappa with identity arrows.  Basis of
// M_i: for each part in canonical order, its boxes j in [p,q] with j = i mod n,
// ascending.
inline NilpotentRep rep_from_partition(const KostantPartition& kappa) {
    int n = kappa.n();
    DimensionVector dims = kappa.dim();
    std::vector<long long> next(static_cast<size_t>(n), 0);
    // box (part index, j) -> index within its graded piece
    std::map<std::pair<size_t, long long>, long long> index;
    const auto& parts = kappa.parts();
    for (size_t r = 0; r < parts.size(); ++r)
        for (long long j = parts[r].p(); j <= parts[r].q(); ++j) {
            int res = static_cast<int>(floor_mod(j, n));
            index[{r, j}] = next[static_cast<size_t>(res)]++;
        }
    std::vector<RatMatrix> arrows;
    for (int i = 0; i < n; ++i)
        arrows.emplace_back(static_cast<size_t>(dims.at(i + 1)), static_cast<size_t>(dims.at(i)));
    for (size_t r = 0; r < parts.size(); ++r)
        for (long long j = parts[r].p(); j < parts[r].q(); ++j) {
            int res = static_cast<int>(floor_mod(j, n));
            arrows[static_cast<size_t>(res)].at(static_cast<size_t>(index[{r, j + 1}]),
                                                static_cast<size_t>(index[{r, j}])) = 1;
        }
    return NilpotentRep(dims, std::move(arrows));
}

// Conjugate by a graded isomorphism: arrows'_i = g_{i+1} . A_i . g_i^{-1}.
inline NilpotentRep conjugated(const NilpotentRep& rep, const std::vector<RatMatrix>& g) {
    int n = rep.n();
    if (g.size() != static_cast<size_t>(n)) throw std::invalid_argument("need one map per vertex");
    std::vector<RatMatrix> ginv;
    for (const auto& m : g) ginv.push_back(inverse(m));
    std::vector<RatMatrix> arrows;
    for (int i = 0; i < n; ++i)
        arrows.push_back(g[static_cast<size_t>(floor_mod(i + 1, n))] *
                         rep.arrows[static_cast<size_t>(i)] * ginv[static_cast<size_t>(i)]);
    return NilpotentRep(rep.dims, std::move(arrows));
}

// Composite arrow M_p -> M_q (p <= q), indices taken in the unrolled
// n-periodic representation.
inline RatMatrix composite_arrow(const NilpotentRep& rep, long long p, long long q) {
    int n = rep.n();
    RatMatrix m = RatMatrix::identity(static_cast<size_t>(rep.dims.at(p)));
    for (long long j = p; j < q; ++j)
        m = rep.arrows[static_cast<size_t>(floor_mod(j, n))] * m;
    return m;
}

inline bool is_nilpotent(const NilpotentRep& rep) {
    long long total = rep.dims.total();
    if (total == 0) return true;
    // the full-period cycle matrix at vertex 0 must be nilpotent
    RatMatrix cyc = composite_arrow(rep, 0, rep.n());
    RatMatrix pow = cyc;
    for (long long k = 1; k < total + 1 && !pow.is_zero(); ++k) pow = pow * cyc;
    return pow.is_zero();
}

// Recovers the isomorphism class of rep: with s = 0, the kernels
// N^_p = ker(N_p -> N_n) satisfy rank(N^_p -> N^_q) = kappa_{<=p}^{>=q},
// and two-dimensional inclusion-exclusion on the cumulative coordinates
// yields the multiplicities kappa_p^q.
inline KostantPartition partition_from_rep(const NilpotentRep& rep) {
    if (!is_nilpotent(rep)) throw std::domain_error("representation is not nilpotent");
    int n = rep.n();
    const long long s = 0;
    long long len_bound = rep.dims.total();  // no part is longer than the total dimension
    long long p_min = s - len_bound - 1;     // below every part; cumulative ranks vanish here

    // cum[q - p_min ... ] per q in [s, s+n-1]
    auto cum = [&](long long p, long long q) -> long long {
        if (p < p_min) return 0;
        RatMatrix ker = nullspace(composite_arrow(rep, p, s + n));
        if (ker.cols() == 0) return 0;
        return rank(composite_arrow(rep, p, q) * ker);
    };

    std::map<std::pair<long long, long long>, long long> cumulative;
    for (long long q = s; q <= s + n - 1; ++q)
        for (long long p = q; p >= p_min; --p) cumulative[{p, q}] = cum(p, q);
    auto cum_at = [&](long long p, long long q) -> long long {
        if (q > s + n - 1) return 0;  // every part ends within one window
        if (p < p_min) return 0;
        return cumulative[{p, q}];
    };

    std::vector<Raiz> parts;
    for (long long q = s; q <= s + n - 1; ++q)
        for (long long p = q; p > p_min; --p) {
            long long m = cum_at(p, q) - cum_at(p - 1, q) - cum_at(p, q + 1) + cum_at(p - 1, q + 1);
            if (m < 0) throw std::domain_error("rank recovery produced a negative multiplicity");
            for (long long j = 0; j < m; ++j) parts.emplace_back(n, p, q);
        }
    KostantPartition out(n, parts);
    if (!(out.dim() == rep.dims))
        throw std::domain_error("rank recovery does not match the representation dimension");
    return out;
}

// Deterministic pseudo-random stream (splitmix64).  Distributions below are
// defined arithmetically so results are identical across platforms.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long long uniform(long long lo, long long hi) {  // inclusive bounds
        return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
};

// Random invertible graded map with integer entries and determinant +-1
// (product of a unit lower- and a unit upper-triangular matrix), so the
// inverse is integral and conjugation stays well conditioned.
inline RatMatrix random_unimodular(size_t k, Rng& rng) {
    RatMatrix lo = RatMatrix::identity(k), up = RatMatrix::identity(k);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < i; ++j) {
            lo.at(i, j) = rat_ll(rng.uniform(-2, 2));
            up.at(j, i) = rat_ll(rng.uniform(-2, 2));
        }
    return lo * up;
}

// Random multiset of raiz with total dimension at most max_total.
inline KostantPartition random_partition(int n, long long max_total, Rng& rng) {
    std::vector<Raiz> parts;
    long long budget = max_total;
    while (budget > 0) {
        if (rng.uniform(0, 3) == 0) break;  // stop early sometimes
        long long len = rng.uniform(1, budget);
        long long end = rng.uniform(0, n - 1);
        parts.emplace_back(n, end - len + 1, end);
        budget -= len;
    }
    return KostantPartition(n, parts);
}

}  // namespace quiverlie
