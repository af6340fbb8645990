#pragma once

#include <atomic>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "quiverlie/heisenberg.hpp"
#include "quiverlie/nilrep.hpp"
#include "quiverlie/operators.hpp"
#include "quiverlie/strata.hpp"

namespace quiverlie {

struct CheckFailure {
    std::string relation;
    std::string piece;     // dimension vector of the witness monomial
    std::string monomial;  // the witness monomial
    std::string expected;
    std::string actual;
};

struct CheckOutcome {
    long long pieces = 0;
    std::optional<CheckFailure> failure;
};

struct Check {
    std::string id;
    std::function<CheckOutcome()> fn;
};

struct SuiteResult {
    std::string name;
    bool pass = true;
    long long checks = 0;   // identities verified
    long long pieces = 0;   // (identity, monomial/piece) pairs evaluated
    std::optional<CheckFailure> failure;  // first failure in canonical order
};

// Runs every check; task order is irrelevant, results are assembled by index,
// so single-worker and multi-worker runs report identically.
inline SuiteResult run_checks(std::string name, const std::vector<Check>& checks, int workers) {
    std::vector<CheckOutcome> results(checks.size());
    std::atomic<size_t> next{0};
    auto work = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= checks.size()) break;
            results[i] = checks[i].fn();
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    SuiteResult res;
    res.name = std::move(name);
    res.checks = static_cast<long long>(checks.size());
    for (size_t i = 0; i < checks.size(); ++i) {
        res.pieces += results[i].pieces;
        if (results[i].failure && res.pass) {
            res.pass = false;
            res.failure = results[i].failure;
            res.failure->relation = checks[i].id + ": " + res.failure->relation;
        }
    }
    return res;
}

using MonoList = std::shared_ptr<const std::vector<KostantPartition>>;

inline MonoList shared_monomials(int n, long long max_total) {
    return std::make_shared<const std::vector<KostantPartition>>(monomials_up_to(n, max_total));
}

// One check asserting lhs == rhs on every monomial of the list.
inline Check op_identity_check(std::string id, std::function<LinOp()> lhs,
                               std::function<LinOp()> rhs, MonoList monos) {
    auto fn = [lhs = std::move(lhs), rhs = std::move(rhs), monos]() -> CheckOutcome {
        CheckOutcome out;
        LinOp l = lhs(), r = rhs();
        for (const auto& m : *monos) {
            ++out.pieces;
            Polynomial pl = l.apply(m), pr = r.apply(m);
            if (pl != pr) {
                out.failure = CheckFailure{"operator identity", m.dim().str(), m.str(),
                                           pr.str(), pl.str()};
                return out;
            }
        }
        return out;
    };
    return Check{std::move(id), std::move(fn)};
}

inline long long cartan_entry(const Residue& i, const Residue& j) {
    return DimensionVector::simple(j).cartan(i);
}

inline bool adjacent(const Residue& i, const Residue& j) { return j == i + 1 || j == i - 1; }

// --------------------------------------------------------------------------
// Serre relations and the Cartan action (the transposed realization).
//
// On N the transposed operators satisfy
//   [e_i, f_j] = delta_ij h_i,   [h_i, e_j] = -a_ij e_j,
//   [h_i, f_j] = +a_ij f_j,      [h_i, h_j] = 0,
// together with the e- and f-Serre chains; equivalently, the abstract
// Chevalley-Serre relations hold under the dictionary e |-> f^T, f |-> -e^T,
// h |-> h^T.  The suite checks the identities in the transposed form.
// --------------------------------------------------------------------------

inline std::vector<Check> serre_checks(const ModuleParams& params, long long max_degree) {
    int n = params.n();
    MonoList monos = shared_monomials(n, max_degree);
    std::vector<Check> checks;
    auto E = [params](const Residue& i) { return chevalley(Chevalley::E, i, params); };
    auto F = [params](const Residue& i) { return chevalley(Chevalley::F, i, params); };
    auto H = [params](const Residue& i) { return chevalley(Chevalley::H, i, params); };

    for (int iv = 0; iv < n; ++iv)
        for (int jv = 0; jv < n; ++jv) {
            Residue i(n, iv), j(n, jv);
            std::string ij = "[i=" + std::to_string(iv) + ",j=" + std::to_string(jv) + "]";
            long long a_ij = cartan_entry(i, j);
            if (iv != jv) {
                if (!adjacent(i, j)) {
                    checks.push_back(op_identity_check(
                        "serre/ee-commute" + ij, [=] { return commutator(E(i), E(j)); },
                        [=] {
                            return op_zero(n, DimensionVector(n) - DimensionVector::simple(i) -
                                                  DimensionVector::simple(j));
                        },
                        monos));
                    checks.push_back(op_identity_check(
                        "serre/ff-commute" + ij, [=] { return commutator(F(i), F(j)); },
                        [=] {
                            return op_zero(n, DimensionVector::simple(i) +
                                                  DimensionVector::simple(j));
                        },
                        monos));
                } else {
                    long long exp = 1 - a_ij;  // 2, or 3 when n = 2
                    checks.push_back(op_identity_check(
                        "serre/ad-e^" + std::to_string(exp) + ij,
                        [=] {
                            LinOp op = E(j);
                            for (long long k = 0; k < exp; ++k) op = commutator(E(i), op);
                            return op;
                        },
                        [=] {
                            DimensionVector s(n);
                            s -= DimensionVector::simple(i) * exp + DimensionVector::simple(j);
                            return op_zero(n, s);
                        },
                        monos));
                    checks.push_back(op_identity_check(
                        "serre/ad-f^" + std::to_string(exp) + ij,
                        [=] {
                            LinOp op = F(j);
                            for (long long k = 0; k < exp; ++k) op = commutator(F(i), op);
                            return op;
                        },
                        [=] {
                            return op_zero(n, DimensionVector::simple(i) * exp +
                                                  DimensionVector::simple(j));
                        },
                        monos));
                }
            }
            checks.push_back(op_identity_check(
                "chevalley/ef" + ij, [=] { return commutator(E(i), F(j)); },
                [=]() -> LinOp {
                    if (iv == jv) return H(i);
                    return op_zero(n, DimensionVector::simple(j) - DimensionVector::simple(i));
                },
                monos));
            checks.push_back(op_identity_check(
                "cartan/he" + ij, [=] { return commutator(H(i), E(j)); },
                [=] { return rat_ll(-a_ij) * E(j); }, monos));
            checks.push_back(op_identity_check(
                "cartan/hf" + ij, [=] { return commutator(H(i), F(j)); },
                [=] { return rat_ll(a_ij) * F(j); }, monos));
            checks.push_back(op_identity_check(
                "cartan/hh" + ij, [=] { return commutator(H(i), H(j)); },
                [=] { return op_zero(n, DimensionVector(n)); }, monos));
        }

    // h_i acts on N_{-alpha} by the scalar c_i + <i', alpha>.
    for (int iv = 0; iv < n; ++iv) {
        Residue i(n, iv);
        checks.push_back(Check{
            "weight/h-eigenvalue[i=" + std::to_string(iv) + "]", [=]() -> CheckOutcome {
                CheckOutcome out;
                LinOp h = chevalley(Chevalley::H, i, params);
                for (const auto& m : *monos) {
                    ++out.pieces;
                    Rat expect = params.c(i) + rat_ll(m.dim().cartan(i));
                    Polynomial want = Polynomial::monomial(m, expect);
                    Polynomial got = h.apply(m);
                    if (got != want) {
                        out.failure = CheckFailure{"h-eigenvalue", m.dim().str(), m.str(),
                                                   want.str(), got.str()};
                        return out;
                    }
                }
                return out;
            }});
    }

    // sum_i h_i is the central element: scalar c0 on every piece.
    checks.push_back(op_identity_check(
        "weight/central-charge",
        [=] {
            LinOp s = chevalley(Chevalley::H, Residue(n, 0), params);
            for (int iv = 1; iv < n; ++iv)
                s = s + chevalley(Chevalley::H, Residue(n, iv), params);
            return s;
        },
        [=] { return op_scalar(n, params.c0()); }, monos));

    return checks;
}

inline SuiteResult serre_suite(const ModuleParams& params, long long max_degree, int workers) {
    return run_checks("serre", serre_checks(params, max_degree), workers);
}

// --------------------------------------------------------------------------
// Bracket identities of the building-block operators.
//
// With the unit-raiz convention (x_unit = 1 inside E~, d/dx_unit = 0) the
// E~ operators carry a pure d/dx_theta term, so four of the brackets with E~
// pick up a margin term on top of their zero-margin form:
//   [E~(i), B(j)]   = delta_{j,i-1} x_j d/dx_i
//   [E~(i), BB_j]   = delta_{i,j+1} d/dx_i
//   [E~(i), E(j)]   = delta_ij (EE_i - EE_{i+1} + x_i d/dx_i)
//   [Delta_i, E~(theta)] = (delta_{b,i+1} - delta_{b,i}) d/dx_theta,
//                          b = begins_at(theta).
// The margins cancel inside [e_i, f_j], which is why the Chevalley relations
// are unaffected.  Every other bracket in the family is margin-free.
// --------------------------------------------------------------------------

inline std::vector<Check> commlemma_checks(const ModuleParams& params, long long max_degree) {
    int n = params.n();
    MonoList monos = shared_monomials(n, max_degree);
    std::vector<Check> checks;

    std::vector<Raiz> thetas;
    {
        DimensionVector box(n);
        for (int r = 0; r < n; ++r) box.at(r) = max_degree;
        for (const auto& t : raiz_within(box))
            if (t.length() <= max_degree) thetas.push_back(t);
    }

    auto neg = [](const DimensionVector& d) { return DimensionVector(d.n()) - d; };
    // E~/E/B of a composite, zero when the smile is undefined
    auto EtildeS = [n](const Raiz& t1, const Raiz& t2) -> LinOp {
        auto s = try_smile(t1, t2);
        DimensionVector shift = DimensionVector(n) - t1.dim() - t2.dim();
        return s ? gen_Etilde(*s) : op_zero(n, shift);
    };
    auto ES = [n](const Raiz& t1, const Raiz& t2) -> LinOp {
        auto s = try_smile(t1, t2);
        return s ? gen_E(*s) : op_zero(n, t1.dim() + t2.dim());
    };
    auto BS = [n](const Raiz& t1, const Raiz& t2) -> LinOp {
        auto s = try_smile(t1, t2);
        return s ? gen_B(*s) : op_zero(n, t1.dim() + t2.dim());
    };
    auto XS = [n](const Raiz& t1, const Raiz& t2) -> LinOp {
        auto s = try_smile(t1, t2);
        return s ? op_mul_x(*s) : op_zero(n, t1.dim() + t2.dim());
    };

    for (const auto& t1 : thetas)
        for (const auto& t2 : thetas) {
            std::string tt = "[" + t1.str() + "," + t2.str() + "]";
            checks.push_back(op_identity_check(
                "bracket/EtEt" + tt, [=] { return commutator(gen_Etilde(t1), gen_Etilde(t2)); },
                [=] { return EtildeS(t1, t2) - EtildeS(t2, t1); }, monos));
            checks.push_back(op_identity_check(
                "bracket/EE" + tt, [=] { return commutator(gen_E(t1), gen_E(t2)); },
                [=] { return ES(t2, t1) - ES(t1, t2); }, monos));
            checks.push_back(op_identity_check(
                "bracket/BB" + tt, [=] { return commutator(gen_B(t1), gen_B(t2)); },
                [=] { return BS(t1, t2) - BS(t2, t1); }, monos));
            checks.push_back(op_identity_check(
                "bracket/EB" + tt, [=] { return commutator(gen_E(t1), gen_B(t2)); },
                [=] { return op_zero(n, t1.dim() + t2.dim()); }, monos));
            checks.push_back(op_identity_check(
                "bracket/Ex" + tt, [=] { return commutator(gen_E(t1), op_mul_x(t2)); },
                [=] { return XS(t2, t1); }, monos));
            checks.push_back(op_identity_check(
                "bracket/Bx" + tt, [=] { return commutator(gen_B(t1), op_mul_x(t2)); },
                [=] { return XS(t1, t2); }, monos));
        }

    for (int iv = 0; iv < n; ++iv) {
        Residue i(n, iv);
        for (int jv = 0; jv < n; ++jv) {
            Residue j(n, jv);
            std::string ij = "[i=" + std::to_string(iv) + ",j=" + std::to_string(jv) + "]";
            checks.push_back(op_identity_check(
                "bracket/BsumBsum" + ij, [=] { return commutator(gen_Bsum(i), gen_Bsum(j)); },
                [=] { return op_zero(n, DimensionVector(n)); }, monos));
            Raiz si = Raiz::simple(i), sj = Raiz::simple(j);
            checks.push_back(op_identity_check(
                "bracket/EtB" + ij, [=] { return commutator(gen_Etilde(si), gen_B(sj)); },
                [=]() -> LinOp {
                    if (j == i - 1) return compose(op_mul_x(sj), op_deriv(si));
                    return op_zero(n, sj.dim() - si.dim());
                },
                monos));
            checks.push_back(op_identity_check(
                "bracket/EtBsum" + ij, [=] { return commutator(gen_Etilde(si), gen_Bsum(j)); },
                [=]() -> LinOp {
                    if (i == j + 1) return op_deriv(si);
                    return op_zero(n, neg(si.dim()));
                },
                monos));
            checks.push_back(op_identity_check(
                "bracket/EtE" + ij, [=] { return commutator(gen_Etilde(si), gen_E(sj)); },
                [=]() -> LinOp {
                    if (iv != jv) return op_zero(n, sj.dim() - si.dim());
                    return gen_Esum(i) - gen_Esum(i + 1) +
                           compose(op_mul_x(si), op_deriv(si));
                },
                monos));
            checks.push_back(op_identity_check(
                "bracket/Etx" + ij, [=] { return commutator(gen_Etilde(si), op_mul_x(sj)); },
                [=]() -> LinOp {
                    if (iv == jv) return op_identity(n);
                    return op_zero(n, sj.dim() - si.dim());
                },
                monos));
            checks.push_back(op_identity_check(
                "bracket/DeltaDelta" + ij,
                [=] { return commutator(gen_Delta(i, params), gen_Delta(j, params)); },
                [=] { return op_zero(n, DimensionVector(n)); }, monos));
        }
        for (const auto& t : thetas) {
            std::string it = "[i=" + std::to_string(iv) + "," + t.str() + "]";
            checks.push_back(op_identity_check(
                "bracket/BBsum" + it, [=] { return commutator(gen_B(t), gen_Bsum(i)); },
                [=]() -> LinOp {
                    bool e = in_E(t, i), b = in_B(t, i + 1);
                    if (e && !b) return gen_B(t);
                    if (b && !e) return Rat(-1) * gen_B(t);
                    return op_zero(n, t.dim());
                },
                monos));
            checks.push_back(op_identity_check(
                "bracket/EBsum" + it, [=] { return commutator(gen_E(t), gen_Bsum(i)); },
                [=] { return op_zero(n, t.dim()); }, monos));
            checks.push_back(op_identity_check(
                "bracket/Bsumx" + it, [=] { return commutator(gen_Bsum(i), op_mul_x(t)); },
                [=]() -> LinOp {
                    if (in_B(t, i + 1)) return op_mul_x(t);
                    return op_zero(n, t.dim());
                },
                monos));
            checks.push_back(op_identity_check(
                "bracket/DeltaE" + it, [=] { return commutator(gen_Delta(i, params), gen_E(t)); },
                [=] { return op_zero(n, t.dim()); }, monos));
            checks.push_back(op_identity_check(
                "bracket/DeltaEt" + it,
                [=] { return commutator(gen_Delta(i, params), gen_Etilde(t)); },
                [=]() -> LinOp {
                    if (in_B(t, i + 1)) return op_deriv(t);
                    if (in_B(t, i)) return Rat(-1) * op_deriv(t);
                    return op_zero(n, neg(t.dim()));
                },
                monos));
            checks.push_back(op_identity_check(
                "bracket/DeltaB" + it, [=] { return commutator(gen_Delta(i, params), gen_B(t)); },
                [=] { return rat_ll(t.dim().cartan(i)) * gen_B(t); }, monos));
            checks.push_back(op_identity_check(
                "bracket/Deltax" + it,
                [=] { return commutator(gen_Delta(i, params), op_mul_x(t)); },
                [=]() -> LinOp {
                    if (in_B(t, i)) return op_mul_x(t);
                    if (in_B(t, i + 1)) return Rat(-1) * op_mul_x(t);
                    return op_zero(n, t.dim());
                },
                monos));
        }
    }

    // cycle sums: summed over the n raiz of dimension p*alpha_n,
    //   sum [E~(theta), B(i)]        = d_{theta1} + x_i d_{theta2}
    //   sum [E~(theta), E(i)]        = d_{theta1} + x_i d_{theta3}
    //   sum [E~(theta), x_i Delta_i] = x_i (d_{theta3} - d_{theta2})
    // with dim theta1 = p alpha_n - i, theta2 in B_{i+1}, theta3 in B_i.
    long long pmax_again = std::max<long long>(1, max_degree / n);
    for (long long p = 1; p <= pmax_again; ++p)
        for (int iv = 0; iv < n; ++iv) {
            Residue i(n, iv);
            Raiz si = Raiz::simple(i);
            // theta1: begins at i+1, ends at i-1; theta2: begins i+1; theta3: begins i
            Raiz theta1(n, iv + 1, iv + p * n - 1);
            Raiz theta2(n, iv + 1, iv + p * n);
            Raiz theta3(n, iv, iv + p * n - 1);
            auto sum_comm = [=](const LinOp& rhs_factor) {
                auto cyc = full_cycle_raiz(n, p);
                LinOp s = commutator(gen_Etilde(cyc[0]), rhs_factor);
                for (size_t j = 1; j < cyc.size(); ++j)
                    s = s + commutator(gen_Etilde(cyc[j]), rhs_factor);
                return s;
            };
            std::string pi = "[p=" + std::to_string(p) + ",i=" + std::to_string(iv) + "]";
            checks.push_back(op_identity_check(
                "cyclesum/EtB" + pi, [=] { return sum_comm(gen_B(si)); },
                [=] { return op_deriv(theta1) + compose(op_mul_x(si), op_deriv(theta2)); },
                monos));
            checks.push_back(op_identity_check(
                "cyclesum/EtE" + pi, [=] { return sum_comm(gen_E(si)); },
                [=] { return op_deriv(theta1) + compose(op_mul_x(si), op_deriv(theta3)); },
                monos));
            checks.push_back(op_identity_check(
                "cyclesum/EtxDelta" + pi,
                [=] { return sum_comm(compose(op_mul_x(si), gen_Delta(i, params))); },
                [=] {
                    return compose(op_mul_x(si), op_deriv(theta3)) -
                           compose(op_mul_x(si), op_deriv(theta2));
                },
                monos));
        }

    return checks;
}

inline SuiteResult commlemma_suite(const ModuleParams& params, long long max_degree,
                                   int workers) {
    return run_checks("commlemmas", commlemma_checks(params, max_degree), workers);
}

// --------------------------------------------------------------------------
// Geometric/differential cross-check: the eps_i and phi_i matrices equal the
// transposes of the matrices of e_i and f_i on graded pieces.
// --------------------------------------------------------------------------

inline std::vector<DimensionVector> alphas_up_to(int n, long long max_total) {
    std::vector<DimensionVector> out;
    DimensionVector cur(n);
    std::function<void(int, long long)> rec = [&](int r, long long rem) {
        if (r == n) {
            out.push_back(cur);
            return;
        }
        for (long long v = 0; v <= rem; ++v) {
            cur.at(r) = v;
            rec(r + 1, rem - v);
        }
        cur.at(r) = 0;
    };
    rec(0, max_total);
    std::sort(out.begin(), out.end(), [](const DimensionVector& a, const DimensionVector& b) {
        if (a.total() != b.total()) return a.total() < b.total();
        return a < b;
    });
    return out;
}

inline std::vector<Check> crosscheck_checks(const ModuleParams& params, long long max_degree) {
    int n = params.n();
    std::vector<Check> checks;
    for (const auto& alpha : alphas_up_to(n, max_degree))
        for (int iv = 0; iv < n; ++iv) {
            Residue i(n, iv);
            std::string id_tail = "[i=" + std::to_string(iv) + ",alpha=" + alpha.str() + "]";
            checks.push_back(Check{
                "crosscheck/eps" + id_tail, [=]() -> CheckOutcome {
                    CheckOutcome out;
                    DimensionVector alpha1 = alpha + DimensionVector::simple(i);
                    auto src = enumerate_kostant(alpha);
                    auto tgt = enumerate_kostant(alpha1);
                    PieceMatrix m = matrix_of(chevalley(Chevalley::E, i, params), alpha1);
                    for (size_t r = 0; r < src.size(); ++r)
                        for (size_t c = 0; c < tgt.size(); ++c) {
                            ++out.pieces;
                            Rat geo = rat_ll(eps_coeff(src[r], tgt[c], i));
                            if (m.entries[r][c] != geo) {
                                out.failure = CheckFailure{
                                    "eps vs e^T", alpha.str(),
                                    src[r].str() + " <- " + tgt[c].str(), rat_str(geo),
                                    rat_str(m.entries[r][c])};
                                return out;
                            }
                        }
                    return out;
                }});
            checks.push_back(Check{
                "crosscheck/phi" + id_tail, [=]() -> CheckOutcome {
                    CheckOutcome out;
                    DimensionVector alpha1 = alpha + DimensionVector::simple(i);
                    auto src = enumerate_kostant(alpha);
                    auto tgt = enumerate_kostant(alpha1);
                    PieceMatrix m = matrix_of(chevalley(Chevalley::F, i, params), alpha);
                    for (size_t r = 0; r < tgt.size(); ++r)
                        for (size_t c = 0; c < src.size(); ++c) {
                            ++out.pieces;
                            Rat geo = phi_coeff(tgt[r], src[c], i, params);
                            if (m.entries[r][c] != geo) {
                                out.failure = CheckFailure{
                                    "phi vs f^T", alpha.str(),
                                    tgt[r].str() + " <- " + src[c].str(), rat_str(geo),
                                    rat_str(m.entries[r][c])};
                                return out;
                            }
                        }
                    return out;
                }});
            // component catalog agrees with the matrix coefficients
            checks.push_back(Check{
                "crosscheck/components" + id_tail, [=]() -> CheckOutcome {
                    CheckOutcome out;
                    for (const auto& a : enumerate_kostant(alpha)) {
                        for (const auto& rec : components_over_source(a, i)) {
                            ++out.pieces;
                            Rat expect = rec.kind == ComponentKind::HorizontalC
                                             ? coeff_M(i, a, params)
                                             : (rec.kind == ComponentKind::VerticalP1
                                                    ? rat_ll(-rec.multiplicity)
                                                    : rat_ll(rec.multiplicity));
                            Rat got = phi_coeff(rec.target, rec.source, i, params);
                            if (got != expect) {
                                out.failure = CheckFailure{
                                    "component value vs phi", alpha.str(),
                                    a.str() + " -> " + rec.target.str(), rat_str(expect),
                                    rat_str(got)};
                                return out;
                            }
                        }
                    }
                    DimensionVector alpha1 = alpha + DimensionVector::simple(i);
                    for (const auto& a1 : enumerate_kostant(alpha1)) {
                        for (const auto& rec : components_over_target(a1, i)) {
                            ++out.pieces;
                            long long got = eps_coeff(rec.source, rec.target, i);
                            if (got != rec.multiplicity) {
                                out.failure = CheckFailure{
                                    "component degree vs eps", alpha.str(),
                                    rec.source.str() + " <- " + a1.str(),
                                    std::to_string(rec.multiplicity), std::to_string(got)};
                                return out;
                            }
                        }
                    }
                    return out;
                }});
        }
    return checks;
}

inline SuiteResult crosscheck_suite(const ModuleParams& params, long long max_degree,
                                    int workers) {
    return run_checks("crosscheck", crosscheck_checks(params, max_degree), workers);
}

// --------------------------------------------------------------------------
// Heisenberg relations and commutation with the Chevalley operators.
// --------------------------------------------------------------------------

inline std::vector<Check> heisenberg_checks(const ModuleParams& params, long long max_degree,
                                            long long pmax) {
    int n = params.n();
    MonoList monos = shared_monomials(n, max_degree);
    std::vector<Check> checks;
    DimensionVector cyc = DimensionVector::cycle(n);
    for (long long p = -pmax; p <= pmax; ++p)
        for (long long q = -pmax; q <= pmax; ++q) {
            std::string pq = "[p=" + std::to_string(p) + ",q=" + std::to_string(q) + "]";
            checks.push_back(op_identity_check(
                "heis/aa" + pq, [=] { return commutator(heis_a(p, params), heis_a(q, params)); },
                [=]() -> LinOp {
                    DimensionVector shift = cyc * (-(p + q));
                    if (p + q != 0) return op_zero(n, shift);
                    return op_scalar(n, rat_ll(p) * rat_ll(n) * params.c0());
                },
                monos));
        }
    for (long long p = -pmax; p <= pmax; ++p) {
        if (p == 0) continue;
        for (int iv = 0; iv < n; ++iv) {
            Residue i(n, iv);
            std::string pi = "[p=" + std::to_string(p) + ",i=" + std::to_string(iv) + "]";
            checks.push_back(op_identity_check(
                "heis/ae" + pi,
                [=] { return commutator(heis_a(p, params), chevalley(Chevalley::E, i, params)); },
                [=] { return op_zero(n, cyc * (-p) - DimensionVector::simple(i)); }, monos));
            checks.push_back(op_identity_check(
                "heis/af" + pi,
                [=] { return commutator(heis_a(p, params), chevalley(Chevalley::F, i, params)); },
                [=] { return op_zero(n, cyc * (-p) + DimensionVector::simple(i)); }, monos));
        }
    }
    return checks;
}

inline SuiteResult heisenberg_suite(const ModuleParams& params, long long max_degree,
                                    long long pmax, int workers) {
    return run_checks("heisenberg", heisenberg_checks(params, max_degree, pmax), workers);
}

// --------------------------------------------------------------------------
// Properties of P_n: E~(theta) P_n is 1 or 0, and f'_i P_n = 0.
// --------------------------------------------------------------------------

inline std::vector<Check> pn_checks(int n_max) {
    std::vector<Check> checks;
    for (int n = 2; n <= n_max; ++n) {
        checks.push_back(Check{"pn/Etilde[n=" + std::to_string(n) + "]", [n]() -> CheckOutcome {
                                   CheckOutcome out;
                                   Polynomial P = poly_P(n);
                                   DimensionVector cyc = DimensionVector::cycle(n);
                                   for (const auto& t : raiz_within(cyc)) {
                                       ++out.pieces;
                                       Polynomial got = gen_Etilde(t).apply(P);
                                       Polynomial want = t.dim() == cyc ? Polynomial::one(n)
                                                                        : Polynomial::zero(n);
                                       if (got != want) {
                                           out.failure =
                                               CheckFailure{"E~(theta) P_n", cyc.str(), t.str(),
                                                            want.str(), got.str()};
                                           return out;
                                       }
                                   }
                                   return out;
                               }});
        checks.push_back(Check{"pn/fprime[n=" + std::to_string(n) + "]", [n]() -> CheckOutcome {
                                   CheckOutcome out;
                                   Polynomial P = poly_P(n);
                                   ModuleParams zero = ModuleParams::zeros(n);
                                   for (int iv = 0; iv < n; ++iv) {
                                       ++out.pieces;
                                       Residue i(n, iv);
                                       Polynomial got =
                                           chevalley(Chevalley::FPrime, i, zero).apply(P);
                                       if (!got.is_zero()) {
                                           out.failure = CheckFailure{
                                               "f'_i P_n", DimensionVector::cycle(n).str(),
                                               "i=" + std::to_string(iv), "0", got.str()};
                                           return out;
                                       }
                                   }
                                   return out;
                               }});
    }
    return checks;
}

inline SuiteResult pn_suite(int n_max, int workers) {
    return run_checks("pn", pn_checks(n_max), workers);
}

// --------------------------------------------------------------------------
// Intertwining of zeta with the orbit-lifted action: xi . zeta(P) =
// zeta(mu(xi) . P) on all rank-kn monomials within the box 3 * alpha_{kn}.
// --------------------------------------------------------------------------

// The xi operators for one (n,k): each entry holds the rank-n action and its
// orbit lift to rank kn.
inline std::vector<std::pair<LinOp, LinOp>> intertwine_ops(const RankPair& pair) {
    std::vector<std::pair<LinOp, LinOp>> ops;
    int n = pair.n;
    for (int iv = 0; iv < n; ++iv) {
        Residue i(n, iv);
        for (Chevalley kind : {Chevalley::E, Chevalley::H, Chevalley::F})
            ops.emplace_back(chevalley(kind, i, pair.base), mu_chevalley(kind, i, pair));
    }
    for (int end = 0; end < n; ++end)
        for (long long len = 1; len <= 2 * n; ++len) {
            Raiz theta(n, end - len + 1, end);
            ops.emplace_back(gen_Etilde(theta), mu_Etilde(theta, pair));
        }
    return ops;
}

// One check per weight cell of the rank-kn box; the basis of the cell is
// enumerated once and every xi is tested on it, so the full box is streamed
// without ever materializing it.
inline std::vector<Check> intertwine_checks(const RankPair& pair, long long cycles) {
    int n = pair.n, kn = pair.n * pair.k;
    std::vector<Check> checks;
    for (const auto& alpha : box_lattice(DimensionVector::cycle(kn) * cycles)) {
        checks.push_back(Check{
            "intertwine[k=" + std::to_string(pair.k) + ",alpha=" + alpha.str() + "]",
            [pair, alpha, n]() -> CheckOutcome {
                CheckOutcome out;
                auto ops = intertwine_ops(pair);
                for (const auto& m : enumerate_kostant(alpha)) {
                    Polynomial down = zeta(Polynomial::monomial(m), n);
                    for (size_t x = 0; x < ops.size(); ++x) {
                        ++out.pieces;
                        Polynomial lhs = ops[x].first.apply(down);
                        Polynomial rhs = zeta(ops[x].second.apply(m), n);
                        if (lhs != rhs) {
                            out.failure = CheckFailure{
                                "zeta intertwining (xi #" + std::to_string(x) + ")",
                                m.dim().str(), m.str(), rhs.str(), lhs.str()};
                            return out;
                        }
                    }
                }
                return out;
            }});
    }
    return checks;
}

inline SuiteResult intertwine_suite(const RankPair& pair, long long cycles, int workers) {
    return run_checks("intertwine", intertwine_checks(pair, cycles), workers);
}

// --------------------------------------------------------------------------
// Dimension calculus and weight-space counting.
// --------------------------------------------------------------------------

inline std::vector<Check> dims_checks(int n, long long count_degree, long long calc_degree,
                                      long long strata_degree) {
    std::vector<Check> checks;

    // |FK(alpha)| against the truncated Euler product, per |alpha|.
    checks.push_back(Check{"dims/count[n=" + std::to_string(n) +
                               ",D=" + std::to_string(count_degree) + "]",
                           [n, count_degree]() -> CheckOutcome {
                               CheckOutcome out;
                               DimensionVector box(n);
                               for (int r = 0; r < n; ++r) box.at(r) = count_degree;
                               auto table = kostant_count_table(box);
                               for (const auto& alpha : alphas_up_to(n, count_degree)) {
                                   ++out.pieces;
                                   long long enumd =
                                       static_cast<long long>(enumerate_kostant(alpha).size());
                                   long long counted = table.at(alpha);
                                   if (enumd != counted) {
                                       out.failure = CheckFailure{
                                           "|FK| vs Euler product", alpha.str(), "-",
                                           std::to_string(counted), std::to_string(enumd)};
                                       return out;
                                   }
                               }
                               return out;
                           }});

    // dim_X + dim_pi = dim F_kappa and the step-fiber telescoping sum.
    checks.push_back(Check{
        "dims/fiber-calculus[n=" + std::to_string(n) + ",D=" + std::to_string(calc_degree) + "]",
        [n, calc_degree]() -> CheckOutcome {
            CheckOutcome out;
            for (const auto& kappa : monomials_up_to(n, calc_degree)) {
                if (kappa.empty()) continue;
                for (long long s = 0; s < n; ++s) {
                    ++out.pieces;
                    long long fx = dim_X(kappa, s), fpi = dim_pi_fiber(kappa, s);
                    long long fk = dim_simple_fiber(kappa);
                    if (fx + fpi != fk) {
                        out.failure = CheckFailure{
                            "dim_X + dim_pi = dim F", kappa.dim().str(),
                            kappa.str() + " s=" + std::to_string(s), std::to_string(fk),
                            std::to_string(fx) + "+" + std::to_string(fpi)};
                        return out;
                    }
                    long long telescope = 0;
                    long long floor_p = kappa_coords(kappa, s).min_p() - 1;
                    for (long long t = s; t > floor_p; --t)
                        telescope += dim_step_fiber(kappa, s, t);
                    if (dim_step_fiber(kappa, s, floor_p) != 0) {
                        out.failure = CheckFailure{"step fiber must vanish below support",
                                                   kappa.dim().str(), kappa.str(), "0", "≠0"};
                        return out;
                    }
                    if (telescope != fx) {
                        out.failure = CheckFailure{
                            "sum of step fibers = dim_X", kappa.dim().str(),
                            kappa.str() + " s=" + std::to_string(s), std::to_string(fx),
                            std::to_string(telescope)};
                        return out;
                    }
                }
            }
            return out;
        }});

    // Top-dimensional strata are exactly the simple multipartitions.
    for (const auto& alpha : alphas_up_to(n, strata_degree))
        checks.push_back(Check{
            "dims/top-strata[alpha=" + alpha.str() + "]", [n, alpha]() -> CheckOutcome {
                CheckOutcome out;
                long long want = alpha.total();
                long long top = 0;
                long long fk = static_cast<long long>(enumerate_kostant(alpha).size());
                for (const auto& mu : enumerate_multipartitions(alpha)) {
                    ++out.pieces;
                    long long d = dim_stratum(mu).dim;
                    if (d > want) {
                        out.failure = CheckFailure{"stratum dimension exceeds |alpha|",
                                                   alpha.str(), mu.str(), "<=" + std::to_string(want),
                                                   std::to_string(d)};
                        return out;
                    }
                    if (d == want) {
                        ++top;
                        if (!mu.simple()) {
                            out.failure =
                                CheckFailure{"top stratum must be a simple multipartition",
                                             alpha.str(), mu.str(), "simple", "not simple"};
                            return out;
                        }
                    }
                }
                if (top != fk) {
                    out.failure =
                        CheckFailure{"number of top strata = |FK|", alpha.str(), "-",
                                     std::to_string(fk), std::to_string(top)};
                    return out;
                }
                return out;
            }});

    return checks;
}

inline SuiteResult dims_suite(int n, long long count_degree, long long calc_degree,
                              long long strata_degree, int workers) {
    return run_checks("dims", dims_checks(n, count_degree, calc_degree, strata_degree), workers);
}

// --------------------------------------------------------------------------
// Semismallness over all small weights.
// --------------------------------------------------------------------------

inline std::vector<Check> semismall_checks(int n, long long max_degree) {
    std::vector<Check> checks;
    for (const auto& alpha : alphas_up_to(n, max_degree))
        for (int iv = 0; iv < n; ++iv)
            checks.push_back(Check{
                "semismall[alpha=" + alpha.str() + ",i=" + std::to_string(iv) + "]",
                [n, alpha, iv]() -> CheckOutcome {
                    CheckOutcome out;
                    SemismallReport rep = verify_semismall(alpha, Residue(n, iv));
                    out.pieces = static_cast<long long>(rep.rows.size());
                    if (!rep.pass) {
                        std::string bad = "attainment";
                        for (const auto& row : rep.rows)
                            if (!row.ok) {
                                bad = row.mu.str();
                                break;
                            }
                        out.failure = CheckFailure{"semismall bound", alpha.str(), bad,
                                                   "codim >= 2r", "violated"};
                    }
                    return out;
                }});
    return checks;
}

inline SuiteResult semismall_suite(int n, long long max_degree, int workers) {
    return run_checks("semismall", semismall_checks(n, max_degree), workers);
}

// --------------------------------------------------------------------------
// Randomized representation recovery.
// --------------------------------------------------------------------------

inline std::vector<Check> recovery_checks(int n, long long trials, uint64_t seed,
                                          long long max_total) {
    // inputs are drawn up front from one deterministic stream; verification
    // of each trial is then an independent task
    Rng rng(seed);
    std::vector<Check> checks;
    for (long long trial = 0; trial < trials; ++trial) {
        KostantPartition kappa = random_partition(n, max_total, rng);
        std::vector<RatMatrix> g;
        for (int i = 0; i < n; ++i)
            g.push_back(random_unimodular(static_cast<size_t>(kappa.dim().at(i)), rng));
        checks.push_back(Check{
            "recovery[n=" + std::to_string(n) + ",trial=" + std::to_string(trial) + "]",
            [kappa, g]() -> CheckOutcome {
                CheckOutcome out;
                out.pieces = 1;
                NilpotentRep rep = conjugated(rep_from_partition(kappa), g);
                if (!is_nilpotent(rep)) {
                    out.failure = CheckFailure{"conjugate must stay nilpotent", kappa.dim().str(),
                                               kappa.str(), "nilpotent", "not nilpotent"};
                    return out;
                }
                KostantPartition got = partition_from_rep(rep);
                if (got != kappa)
                    out.failure = CheckFailure{"rank recovery", kappa.dim().str(), kappa.str(),
                                               kappa.str(), got.str()};
                return out;
            }});
    }
    return checks;
}

inline SuiteResult recovery_suite(int n, long long trials, uint64_t seed, long long max_total,
                                  int workers) {
    return run_checks("recovery", recovery_checks(n, trials, seed, max_total), workers);
}

}  // namespace quiverlie
