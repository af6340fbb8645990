#pragma once

#include <functional>
#include <memory>
#include <utility>

#include "quiverlie/params.hpp"
#include "quiverlie/polynomial.hpp"

namespace quiverlie {

// A locally finite linear operator on Q[x_theta].  Generators are
// degree-homogeneous with a declared shift (dim of the image = dim of the
// input + shift); sums of mismatched shifts (the cross-rank orbit lifts,
// homogeneous only for the coarser grading) drop the declaration.
// Closed under sum, rational scaling, composition and commutator.
class LinOp {
public:
    using MonoFn = std::function<Polynomial(const KostantPartition&)>;

    LinOp(int n, std::optional<DimensionVector> shift, MonoFn act)
        : n_(n), shift_(std::move(shift)), act_(std::move(act)) {
        check_rank(n);
    }

    int n() const { return n_; }
    const std::optional<DimensionVector>& shift() const { return shift_; }

    Polynomial apply(const KostantPartition& a) const { return act_(a); }

    Polynomial apply(const Polynomial& p) const {
        Polynomial out(n_);
        for (const auto& [a, c] : p.terms()) out += act_(a) * c;
        return out;
    }

private:
    int n_;
    std::optional<DimensionVector> shift_;
    MonoFn act_;
};

inline LinOp op_zero(int n, DimensionVector shift) {
    return LinOp(n, std::move(shift),
                 [n](const KostantPartition&) { return Polynomial::zero(n); });
}

inline LinOp op_scalar(int n, Rat c) {
    return LinOp(n, DimensionVector(n), [c](const KostantPartition& a) {
        return Polynomial::monomial(a, c);
    });
}

inline LinOp op_identity(int n) { return op_scalar(n, Rat(1)); }

// Multiplication by x_theta (the unit raiz gives the identity).
inline LinOp op_mul_x(const Raiz& theta) {
    return LinOp(theta.n(), theta.dim(), [theta](const KostantPartition& a) {
        return Polynomial::monomial(a.with(theta));
    });
}

// Multiplication by a polynomial homogeneous of the declared dimension.
inline LinOp op_mul_poly(const Polynomial& p, const DimensionVector& shift) {
    for (const auto& [a, c] : p.terms())
        if (a.dim() != shift)
            throw std::invalid_argument("multiplication operator: polynomial not homogeneous of the declared degree");
    return LinOp(p.n(), shift,
                 [p](const KostantPartition& a) { return p * Polynomial::monomial(a); });
}

inline LinOp op_mul_poly(const Polynomial& p) {
    auto d = p.homogeneous_dim();
    if (!d)
        throw std::invalid_argument("multiplication operator needs a nonzero homogeneous polynomial");
    return op_mul_poly(p, *d);
}

// d/dx_theta; the unit raiz differentiates to zero.
inline LinOp op_deriv(const Raiz& theta) {
    DimensionVector shift(theta.n());
    shift -= theta.dim();
    return LinOp(theta.n(), std::move(shift), [theta](const KostantPartition& a) {
        Polynomial out(theta.n());
        long long m = a.mult(theta);
        if (m > 0) out.add_term(a.without(theta), rat_ll(m));
        return out;
    });
}

namespace detail {
inline std::optional<DimensionVector> common_shift(const LinOp& a, const LinOp& b) {
    if (a.shift() && b.shift() && *a.shift() == *b.shift()) return a.shift();
    return std::nullopt;
}
inline std::optional<DimensionVector> summed_shift(const LinOp& a, const LinOp& b) {
    if (a.shift() && b.shift()) return *a.shift() + *b.shift();
    return std::nullopt;
}
}  // namespace detail

inline LinOp operator+(const LinOp& a, const LinOp& b) {
    if (a.n() != b.n()) throw std::invalid_argument("rank mismatch between operators");
    return LinOp(a.n(), detail::common_shift(a, b),
                 [a, b](const KostantPartition& m) { return a.apply(m) + b.apply(m); });
}

inline LinOp operator-(const LinOp& a, const LinOp& b) {
    if (a.n() != b.n()) throw std::invalid_argument("rank mismatch between operators");
    return LinOp(a.n(), detail::common_shift(a, b),
                 [a, b](const KostantPartition& m) { return a.apply(m) - b.apply(m); });
}

inline LinOp operator*(const Rat& c, const LinOp& a) {
    return LinOp(a.n(), a.shift(), [c, a](const KostantPartition& m) { return a.apply(m) * c; });
}

// Composition: (a o b)(P) = a(b(P)).
inline LinOp compose(const LinOp& a, const LinOp& b) {
    if (a.n() != b.n()) throw std::invalid_argument("rank mismatch between operators");
    return LinOp(a.n(), detail::summed_shift(a, b),
                 [a, b](const KostantPartition& m) { return a.apply(b.apply(m)); });
}

inline LinOp commutator(const LinOp& a, const LinOp& b) {
    if (a.n() != b.n()) throw std::invalid_argument("rank mismatch between operators");
    return LinOp(a.n(), detail::summed_shift(a, b), [a, b](const KostantPartition& m) {
        return a.apply(b.apply(m)) - b.apply(a.apply(m));
    });
}

// --------------------------------------------------------------------------
// Generator operators.  theta in B_i below means theta begins at i; the sums
// over the companion raiz run over the parts of the acted-on monomial, which
// makes every operator a finite scan.  The unit raiz enters as in the module
// convention: x_unit = 1 (so E~ has a pure d/dx_theta term) and
// d/dx_unit = 0 (so E and B have none).
// --------------------------------------------------------------------------

// E(theta) = sum_{v in E_{i-1}} x_{v ~ theta} d/dx_v  for theta in B_i.
inline LinOp gen_E(const Raiz& theta) {
    if (theta.is_unit()) throw std::invalid_argument("gen_E requires a non-unit raiz");
    Residue tail = theta.begins_at() - 1;
    return LinOp(theta.n(), theta.dim(), [theta, tail](const KostantPartition& a) {
        Polynomial out(theta.n());
        for (const auto& [v, m] : a.distinct())
            if (in_E(v, tail)) out.add_term(a.replaced(v, smile(v, theta)), rat_ll(m));
        return out;
    });
}

// E~(theta) = sum_{v in E_{i-1}} x_v d/dx_{v ~ theta}  for theta in B_i;
// the v = unit term is a plain d/dx_theta.
inline LinOp gen_Etilde(const Raiz& theta) {
    if (theta.is_unit()) throw std::invalid_argument("gen_Etilde requires a non-unit raiz");
    DimensionVector shift(theta.n());
    shift -= theta.dim();
    return LinOp(theta.n(), std::move(shift), [theta](const KostantPartition& a) {
        Polynomial out(theta.n());
        for (const auto& [eta, m] : a.distinct()) {
            auto v = try_frown(eta, theta);
            if (v) out.add_term(a.replaced(eta, *v), rat_ll(m));
        }
        return out;
    });
}

// B(theta) = sum_{v in B_{i+1}} x_{theta ~ v} d/dx_v  for theta in E_i.
inline LinOp gen_B(const Raiz& theta) {
    if (theta.is_unit()) throw std::invalid_argument("gen_B requires a non-unit raiz");
    Residue head = theta.ends_at() + 1;
    return LinOp(theta.n(), theta.dim(), [theta, head](const KostantPartition& a) {
        Polynomial out(theta.n());
        for (const auto& [v, m] : a.distinct())
            if (in_B(v, head)) out.add_term(a.replaced(v, smile(theta, v)), rat_ll(m));
        return out;
    });
}

// BB_i = sum_{theta in B_{i+1}} x_theta d/dx_theta: diagonal, counts parts
// beginning at i+1.
inline LinOp gen_Bsum(const Residue& i) {
    Residue head = i + 1;
    return LinOp(i.n(), DimensionVector(i.n()), [head](const KostantPartition& a) {
        long long cnt = 0;
        for (const auto& t : a.parts())
            if (in_B(t, head)) ++cnt;
        return Polynomial::monomial(a, rat_ll(cnt));
    });
}

// EE_i = sum_{theta in E_{i-1}} x_theta d/dx_theta: diagonal, counts parts
// ending at i-1.
inline LinOp gen_Esum(const Residue& i) {
    Residue tail = i - 1;
    return LinOp(i.n(), DimensionVector(i.n()), [tail](const KostantPartition& a) {
        long long cnt = 0;
        for (const auto& t : a.parts())
            if (in_E(t, tail)) ++cnt;
        return Polynomial::monomial(a, rat_ll(cnt));
    });
}

// Delta_i = BB_{i-1} - BB_i + c_i.
inline LinOp gen_Delta(const Residue& i, const ModuleParams& params) {
    return gen_Bsum(i - 1) - gen_Bsum(i) + op_scalar(i.n(), params.c(i));
}

enum class Chevalley { E, H, F, FPrime };

// The transposed Chevalley operators on N:
//   e_i = E~(i),   h_i = EE_{i+1} - EE_i + Delta_i,
//   f_i = B(i) - E(i) + x_i Delta_i,   f'_i = f_i - c_i x_i.
inline LinOp chevalley(Chevalley kind, const Residue& i, const ModuleParams& params) {
    Raiz si = Raiz::simple(i);
    switch (kind) {
        case Chevalley::E:
            return gen_Etilde(si);
        case Chevalley::H:
            return gen_Esum(i + 1) - gen_Esum(i) + gen_Delta(i, params);
        case Chevalley::F:
            return gen_B(si) - gen_E(si) + compose(op_mul_x(si), gen_Delta(i, params));
        case Chevalley::FPrime:
            return chevalley(Chevalley::F, i, params) - params.c(i) * op_mul_x(si);
    }
    throw std::logic_error("unreachable");
}

// --------------------------------------------------------------------------
// Geometric matrix coefficients.
// --------------------------------------------------------------------------

// M(i,A) = c_i + #(parts of A beginning at i) - #(parts beginning at i+1);
// equivalently c_i + sum_{theta in B_{i+1}} (m(i~theta,A) - m(theta,A)) with
// the unit convention i~unit = i.
inline Rat coeff_M(const Residue& i, const KostantPartition& a, const ModuleParams& params) {
    long long bi = 0, bi1 = 0;
    for (const auto& t : a.parts()) {
        if (in_B(t, i)) ++bi;
        if (in_B(t, i + 1)) ++bi1;
    }
    return params.c(i) + rat_ll(bi - bi1);
}

// eps_i(A, A'): multiplicity of the pivot when A is A' with one part ending
// at i shortened by frown with i; zero otherwise.
inline long long eps_coeff(const KostantPartition& a, const KostantPartition& a1,
                           const Residue& i) {
    if (a1.dim() != a.dim() + DimensionVector::simple(i))
        throw std::invalid_argument("eps_coeff: |A'| must equal |A| + i");
    Raiz si = Raiz::simple(i);
    for (const auto& [t, m] : a1.distinct()) {
        if (!in_E(t, i)) continue;
        if (a1.replaced(t, frown(t, si)) == a) return m;
    }
    return 0;
}

// phi_i(A', A): M(i,A) for the added-point case, -m for the vertical smile
// case, +m for the finite-cover smile case, zero otherwise.
inline Rat phi_coeff(const KostantPartition& a1, const KostantPartition& a, const Residue& i,
                     const ModuleParams& params) {
    if (a1.dim() != a.dim() + DimensionVector::simple(i))
        throw std::invalid_argument("phi_coeff: |A'| must equal |A| + i");
    Raiz si = Raiz::simple(i);
    if (a1 == a.with(si)) return coeff_M(i, a, params);
    for (const auto& [t, m] : a.distinct()) {
        if (in_E(t, i - 1) && a1 == a.replaced(t, smile(t, si))) return rat_ll(-m);
        if (in_B(t, i + 1) && a1 == a.replaced(t, smile(si, t))) return rat_ll(m);
    }
    return Rat(0);
}

// --------------------------------------------------------------------------
// Matrices on graded pieces.
// --------------------------------------------------------------------------

struct PieceMatrix {
    DimensionVector source_alpha, target_alpha;
    std::vector<KostantPartition> source_basis, target_basis;
    std::vector<std::vector<Rat>> entries;  // entries[row][col], rows = target
};

// Exact matrix of op restricted to the span of {x^A : A in FK(alpha)}.
inline PieceMatrix matrix_of(const LinOp& op, const DimensionVector& alpha) {
    if (!op.shift())
        throw std::invalid_argument("matrix extraction requires a degree-homogeneous operator");
    DimensionVector target = alpha + *op.shift();
    PieceMatrix m{alpha, target, enumerate_kostant(alpha), {}, {}};
    if (target.nonnegative()) m.target_basis = enumerate_kostant(target);
    std::map<KostantPartition, size_t> row;
    for (size_t r = 0; r < m.target_basis.size(); ++r) row[m.target_basis[r]] = r;
    m.entries.assign(m.target_basis.size(), std::vector<Rat>(m.source_basis.size(), Rat(0)));
    for (size_t c = 0; c < m.source_basis.size(); ++c) {
        Polynomial img = op.apply(m.source_basis[c]);
        for (const auto& [a, x] : img.terms()) {
            auto it = row.find(a);
            if (it == row.end())
                throw std::domain_error("operator image leaves the declared graded piece");
            m.entries[it->second][c] = x;
        }
    }
    return m;
}

// --------------------------------------------------------------------------
// Piece-wise operator equality.
// --------------------------------------------------------------------------

// All monomials x^A with |A| <= max_total, in canonical order (by total
// degree, then weight, then partition order).
inline std::vector<KostantPartition> monomials_up_to(int n, long long max_total) {
    std::vector<Raiz> raiz;
    for (int end = 0; end < n; ++end)
        for (long long len = 1; len <= max_total; ++len) raiz.emplace_back(n, end - len + 1, end);
    std::sort(raiz.begin(), raiz.end());
    std::vector<KostantPartition> out;
    std::vector<Raiz> acc;
    struct Rec {
        const std::vector<Raiz>& raiz;
        int n;
        std::vector<KostantPartition>& out;
        void go(size_t idx, long long budget, std::vector<Raiz>& acc) {
            if (idx == raiz.size()) {
                out.emplace_back(n, acc);
                return;
            }
            go(idx + 1, budget, acc);
            long long len = raiz[idx].length(), m = 0;
            while ((m + 1) * len <= budget) {
                ++m;
                acc.push_back(raiz[idx]);
                go(idx + 1, budget - m * len, acc);
            }
            for (long long j = 0; j < m; ++j) acc.pop_back();
        }
    } rec{raiz, n, out};
    rec.go(0, max_total, acc);
    std::sort(out.begin(), out.end(), [](const KostantPartition& x, const KostantPartition& y) {
        long long tx = x.dim().total(), ty = y.dim().total();
        if (tx != ty) return tx < ty;
        if (x.dim() != y.dim()) return x.dim() < y.dim();
        return x < y;
    });
    return out;
}

// First monomial of the list where the two operators disagree, if any.
inline std::optional<KostantPartition> first_disagreement(
    const LinOp& a, const LinOp& b, const std::vector<KostantPartition>& monomials) {
    for (const auto& m : monomials)
        if (a.apply(m) != b.apply(m)) return m;
    return std::nullopt;
}

inline bool op_equal_on(const LinOp& a, const LinOp& b, const DimensionVector& alpha) {
    for (const auto& m : enumerate_kostant(alpha))
        if (a.apply(m) != b.apply(m)) return false;
    return true;
}

}  // namespace quiverlie
