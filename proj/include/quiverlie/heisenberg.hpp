#pragma once

#include "quiverlie/operators.hpp"

namespace quiverlie {

// P_n = sum over Kostant partitions of (1,...,1) of (-1)^{sK+1} x^kappa.
inline Polynomial poly_P(int n) {
    check_rank(n);
    Polynomial p(n);
    for (const auto& k : enumerate_kostant(DimensionVector::cycle(n)))
        p.add_term(k, Rat(k.kcount() % 2 == 1 ? 1 : -1L));
    return p;
}

// zeta: rank kn -> rank n, (p,q) mod kn |-> (p,q) mod n; extended to
// polynomials as the algebra map x_v |-> x_{zeta(v)}.
inline Raiz zeta(const Raiz& v, int n) {
    if (v.n() % n != 0) throw std::invalid_argument("zeta requires source rank divisible by n");
    if (v.is_unit()) return Raiz::unit(n);
    return Raiz(n, v.p(), v.q());
}

inline KostantPartition zeta(const KostantPartition& a, int n) {
    std::vector<Raiz> parts;
    for (const auto& t : a.parts()) parts.push_back(zeta(t, n));
    return KostantPartition(n, std::move(parts));
}

inline Polynomial zeta(const Polynomial& p, int n) {
    Polynomial out(n);
    for (const auto& [a, c] : p.terms()) out.add_term(zeta(a, n), c);
    return out;
}

// The k raiz of rank kn projecting to theta under zeta.
inline std::vector<Raiz> zeta_fiber(const Raiz& theta, int k) {
    std::vector<Raiz> out;
    int kn = theta.n() * k;
    for (int j = 0; j < k; ++j)
        out.emplace_back(kn, theta.p() + static_cast<long long>(j) * theta.n(),
                         theta.q() + static_cast<long long>(j) * theta.n());
    std::sort(out.begin(), out.end());
    return out;
}

// Source rank n, target rank kn.  The rank-kn constants are the uniform
// split c^{(kn)}_j = c^{(n)}_{j mod n} / k, the unique symmetric choice for
// which the intertwining of zeta with the orbit-summed f_i is exact.
struct RankPair {
    int n;
    int k;
    ModuleParams base;  // rank n

    RankPair(int n_, int k_, ModuleParams base_) : n(n_), k(k_), base(std::move(base_)) {
        check_rank(n);
        if (k < 2) throw std::invalid_argument("rank multiplier k must be at least 2");
        if (base.n() != n) throw std::invalid_argument("params rank mismatch");
    }

    ModuleParams lifted() const {
        std::vector<Rat> c;
        for (int j = 0; j < n * k; ++j) c.push_back(base.c(j) / k);
        return ModuleParams(n * k, std::move(c));
    }
};

// Orbit sum of a Chevalley generator: mu(xi_i) = sum_{a in nZ/knZ} xi_{i+a},
// acting on rank-kn polynomials with the lifted constants.
inline LinOp mu_chevalley(Chevalley kind, const Residue& i, const RankPair& pair) {
    ModuleParams up = pair.lifted();
    int kn = pair.n * pair.k;
    LinOp op = chevalley(kind, Residue(kn, i.value()), up);
    for (int a = 1; a < pair.k; ++a)
        op = op + chevalley(kind, Residue(kn, i.value() + a * pair.n), up);
    return op;
}

// mu(E~(theta)) = sum over the zeta-fiber of theta of E~.
inline LinOp mu_Etilde(const Raiz& theta, const RankPair& pair) {
    auto fiber = zeta_fiber(theta, pair.k);
    LinOp op = gen_Etilde(fiber[0]);
    for (size_t j = 1; j < fiber.size(); ++j) op = op + gen_Etilde(fiber[j]);
    return op;
}

// The n raiz of rank n with dimension p*(1,...,1): one ending at each vertex.
inline std::vector<Raiz> full_cycle_raiz(int n, long long p) {
    std::vector<Raiz> out;
    for (int end = 0; end < n; ++end) out.emplace_back(n, end - p * n + 1, end);
    std::sort(out.begin(), out.end());
    return out;
}

// Heisenberg operators:
//   a_p = sum_{dim theta = p alpha_n} E~(theta)          (p > 0)
//   a_{-p} = multiplication by c0 * zeta(P_{pn})          (p > 0)
//   a_0 = c0 * id,
// with [a_p, a_q] = delta_{p,-q} p n c0.
inline LinOp heis_a(long long p, const ModuleParams& params) {
    int n = params.n();
    if (p == 0) return op_scalar(n, params.c0());
    if (p > 0) {
        auto cyc = full_cycle_raiz(n, p);
        LinOp op = gen_Etilde(cyc[0]);
        for (size_t j = 1; j < cyc.size(); ++j) op = op + gen_Etilde(cyc[j]);
        return op;
    }
    long long q = -p;
    Polynomial poly = zeta(poly_P(static_cast<int>(q) * n), n) * params.c0();
    return op_mul_poly(poly, DimensionVector::cycle(n) * q);
}

}  // namespace quiverlie
