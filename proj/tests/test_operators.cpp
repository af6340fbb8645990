#include <catch2/catch_amalgamated.hpp>

#include "quiverlie/operators.hpp"
#include "quiverlie/suites.hpp"

using namespace quiverlie;

namespace {

DimensionVector dv(std::initializer_list<long long> vals) {
    DimensionVector d(static_cast<int>(vals.size()));
    int r = 0;
    for (auto v : vals) d.at(r++) = v;
    return d;
}

KostantPartition kp(int n, std::initializer_list<std::pair<long long, long long>> parts) {
    std::vector<Raiz> v;
    for (auto [p, q] : parts) v.emplace_back(n, p, q);
    return KostantPartition(n, v);
}

const ModuleParams P2 = ModuleParams::from_geometry(2, Geometry{0, 1, {0, 0}});
const ModuleParams P3 = ModuleParams::from_geometry(3, Geometry{0, 1, {0, 0, 0}});

}  // namespace

TEST_CASE("geometric constants") {
    CHECK(P2.c(0) == 2);
    CHECK(P2.c(1) == 3);
    CHECK(P2.c0() == 5);
    // genus 1, d 0: central charge 0
    ModuleParams flat = ModuleParams::from_geometry(2, Geometry{1, 0, {0, 0}});
    CHECK(flat.c0() == 0);
    ModuleParams neg = ModuleParams::from_geometry(3, Geometry{0, -2, {0, 0, 0}});
    CHECK(neg.c0() == (2 - 2 * 0) * 3 + (-2));
}

TEST_CASE("polynomial arithmetic") {
    Polynomial one = Polynomial::one(2);
    Polynomial x0 = Polynomial::variable(Raiz(2, 0, 0));
    Polynomial x1 = Polynomial::variable(Raiz(2, 1, 1));
    CHECK((x0 * x1).coeff(kp(2, {{0, 0}, {1, 1}})) == 1);
    CHECK((x0 + x0 - x0 * Rat(2)).is_zero());
    CHECK(Polynomial::variable(Raiz::unit(2)) == one);
    CHECK((x0 * one) == x0);

    // grading: deg x^A = -|A|; products add dimensions
    auto d = (x0 * x0 * x1).homogeneous_dim();
    REQUIRE(d.has_value());
    CHECK(*d == dv({2, 1}));
    CHECK_FALSE((x0 + x1).homogeneous_dim().has_value());
}

TEST_CASE("derivative") {
    Polynomial one = Polynomial::one(2);
    Raiz t(2, 0, 0);
    CHECK(derivative(t, one).is_zero());
    Polynomial sq = Polynomial::variable(t) * Polynomial::variable(t);
    CHECK(derivative(t, sq) == Polynomial::variable(t) * Rat(2));
    Polynomial mix = Polynomial::variable(t) * Polynomial::variable(Raiz(2, 1, 1));
    CHECK(derivative(t, mix) == Polynomial::variable(Raiz(2, 1, 1)));
    CHECK(derivative(Raiz::unit(2), sq).is_zero());
}

TEST_CASE("generator operators on monomials") {
    Raiz t00(2, 0, 0);
    // E~(theta) x_theta = 1 (the unit term)
    CHECK(gen_Etilde(t00).apply(Polynomial::variable(t00)) == Polynomial::one(2));
    // E~((0,0)) x_{(-1,0)} = x_{(1,1)}: the part (-1,0) = (1,1) ~ (0,0)
    CHECK(gen_Etilde(t00).apply(Polynomial::variable(Raiz(2, -1, 0))) ==
          Polynomial::variable(Raiz(2, 1, 1)));
    // Delta_i(1) = c_i
    CHECK(gen_Delta(Residue(2, 0), P2).apply(Polynomial::one(2)) == Polynomial::one(2) * P2.c(0));
    CHECK(gen_Delta(Residue(2, 1), P2).apply(Polynomial::one(2)) == Polynomial::one(2) * P2.c(1));

    // E((0,0)) on x_{(1,1)}: (1,1) ends at begins(theta)-1 = 1, smile gives (-1,0)
    CHECK(gen_E(t00).apply(Polynomial::variable(Raiz(2, 1, 1))) ==
          Polynomial::variable(Raiz(2, -1, 0)));
    // B((0,0)) on x_{(1,1)}: (1,1) begins at ends(theta)+1 = 1, smile gives (0,1)
    CHECK(gen_B(t00).apply(Polynomial::variable(Raiz(2, 1, 1))) ==
          Polynomial::variable(Raiz(2, 0, 1)));

    CHECK_THROWS_AS(gen_E(Raiz::unit(2)), std::invalid_argument);
    CHECK_THROWS_AS(gen_Etilde(Raiz::unit(2)), std::invalid_argument);
    CHECK_THROWS_AS(gen_B(Raiz::unit(2)), std::invalid_argument);
}

TEST_CASE("chevalley operators at the lowest weight") {
    Residue i0(2, 0);
    CHECK(chevalley(Chevalley::E, i0, P2).apply(Polynomial::variable(Raiz::simple(i0))) ==
          Polynomial::one(2));
    CHECK(chevalley(Chevalley::F, i0, P2).apply(Polynomial::one(2)) ==
          Polynomial::variable(Raiz::simple(i0)) * P2.c(0));
    CHECK(chevalley(Chevalley::H, i0, P2).apply(Polynomial::one(2)) ==
          Polynomial::one(2) * P2.c(0));
    // f' strips the constant part
    CHECK(chevalley(Chevalley::FPrime, i0, P2).apply(Polynomial::one(2)).is_zero());
}

TEST_CASE("eps coefficients") {
    Residue i0(2, 0);
    CHECK(eps_coeff(kp(2, {{1, 1}, {1, 1}}), kp(2, {{-1, 0}, {1, 1}}), i0) == 1);
    CHECK(eps_coeff(KostantPartition(2), kp(2, {{0, 0}}), i0) == 1);
    CHECK(eps_coeff(kp(2, {{0, 1}}), kp(2, {{0, 1}, {0, 0}}), i0) == 1);
    // unrelated pair: no part of A' ends at 0
    CHECK(eps_coeff(kp(2, {{0, 1}, {1, 1}}), kp(2, {{0, 1}, {0, 1}}), i0) == 0);
    // multiplicity of the pivot counts
    CHECK(eps_coeff(kp(2, {{0, 0}}), kp(2, {{0, 0}, {0, 0}}), i0) == 2);
    CHECK_THROWS_AS(eps_coeff(kp(2, {{0, 0}}), kp(2, {{0, 0}}), i0), std::invalid_argument);
}

TEST_CASE("phi coefficients") {
    Residue i0(2, 0);
    // added point: M(i, empty) = c_i
    CHECK(phi_coeff(kp(2, {{0, 0}}), KostantPartition(2), i0, P2) == P2.c(0));
    // vertical case: theta = (1,1) in E_{i-1} = E_1, target (-1,0)
    CHECK(phi_coeff(kp(2, {{-1, 0}}), kp(2, {{1, 1}}), i0, P2) == Rat(-1));
    // finite cover case: theta = (1,1) in B_{i+1} = B_1, target (0,1)
    CHECK(phi_coeff(kp(2, {{0, 1}}), kp(2, {{1, 1}}), i0, P2) == Rat(1));
    // M(i,A) with begin-counts: A = {(0,0)}, i = 0
    CHECK(phi_coeff(kp(2, {{0, 0}, {0, 0}}), kp(2, {{0, 0}}), i0, P2) == P2.c(0) + 1);
    CHECK_THROWS_AS(phi_coeff(kp(2, {{0, 0}}), kp(2, {{0, 0}}), i0, P2), std::invalid_argument);
}

TEST_CASE("matrix extraction") {
    DimensionVector alpha = dv({1, 1});
    PieceMatrix id = matrix_of(op_identity(2), alpha);
    REQUIRE(id.source_basis.size() == 3);
    for (size_t r = 0; r < 3; ++r)
        for (size_t c = 0; c < 3; ++c) CHECK(id.entries[r][c] == (r == c ? 1 : 0));

    // h_i is scalar c_i + <i', alpha> on the piece
    for (int iv = 0; iv < 2; ++iv) {
        Residue i(2, iv);
        PieceMatrix h = matrix_of(chevalley(Chevalley::H, i, P2), alpha);
        Rat want = P2.c(i) + rat_ll(alpha.cartan(i));
        for (size_t r = 0; r < 3; ++r)
            for (size_t c = 0; c < 3; ++c) CHECK(h.entries[r][c] == (r == c ? want : Rat(0)));
    }

    // matrix of e_i on the piece alpha+i is the eps matrix (rows FK(alpha))
    Residue i0(2, 0);
    DimensionVector alpha1 = alpha + DimensionVector::simple(i0);
    PieceMatrix e = matrix_of(chevalley(Chevalley::E, i0, P2), alpha1);
    auto src = enumerate_kostant(alpha);
    auto tgt = enumerate_kostant(alpha1);
    REQUIRE(e.target_basis == src);
    REQUIRE(e.source_basis == tgt);
    for (size_t r = 0; r < src.size(); ++r)
        for (size_t c = 0; c < tgt.size(); ++c)
            CHECK(e.entries[r][c] == rat_ll(eps_coeff(src[r], tgt[c], i0)));
}

TEST_CASE("matrix of a composition is the product of matrices") {
    Residue i0(2, 0), i1(2, 1);
    DimensionVector alpha = dv({2, 1});
    LinOp e0 = chevalley(Chevalley::E, i0, P2), f1 = chevalley(Chevalley::F, i1, P2);
    PieceMatrix lhs = matrix_of(compose(f1, e0), alpha);
    PieceMatrix a = matrix_of(e0, alpha);
    PieceMatrix b = matrix_of(f1, alpha - DimensionVector::simple(i0));
    REQUIRE(lhs.entries.size() == b.entries.size());
    for (size_t r = 0; r < lhs.entries.size(); ++r)
        for (size_t c = 0; c < lhs.entries[r].size(); ++c) {
            Rat sum(0);
            for (size_t k = 0; k < a.entries.size(); ++k)
                sum += b.entries[r][k] * a.entries[k][c];
            CHECK(lhs.entries[r][c] == sum);
        }
}

TEST_CASE("commutator on pieces") {
    Residue i0(2, 0), i1(2, 1);
    // [e_i, x_i] = 1 on every piece
    LinOp c = commutator(chevalley(Chevalley::E, i0, P2), op_mul_x(Raiz::simple(i0)));
    for (const auto& alpha : {dv({0, 0}), dv({1, 1}), dv({2, 1})})
        CHECK(op_equal_on(c, op_identity(2), alpha));
    // [h_i, h_j] = 0
    LinOp hh = commutator(chevalley(Chevalley::H, i0, P2), chevalley(Chevalley::H, i1, P2));
    CHECK(op_equal_on(hh, op_zero(2, DimensionVector(2)), dv({2, 2})));
    // [E~(t1), E~(t2)] = E~(t1 ~ t2) - E~(t2 ~ t1)
    Raiz t1(2, 0, 0), t2(2, 1, 1);
    LinOp lhs = commutator(gen_Etilde(t1), gen_Etilde(t2));
    LinOp rhs = gen_Etilde(smile(t1, t2)) - gen_Etilde(smile(t2, t1));
    for (const auto& alpha : {dv({1, 1}), dv({2, 2}), dv({2, 1})})
        CHECK(op_equal_on(lhs, rhs, alpha));
}

TEST_CASE("e_i images drop the part count by at most one") {
    // every monomial of e_i(x^{A'}) has K equal to K(A') or K(A') - 1
    for (int n : {2, 3}) {
        ModuleParams params = n == 2 ? P2 : P3;
        for (const auto& a1 : monomials_up_to(n, 4))
            for (int iv = 0; iv < n; ++iv) {
                Polynomial img = chevalley(Chevalley::E, Residue(n, iv), params).apply(a1);
                for (const auto& [b, c] : img.terms()) {
                    bool ok = b.kcount() == a1.kcount() || b.kcount() == a1.kcount() - 1;
                    CHECK(ok);
                }
            }
    }
}

TEST_CASE("matrix of a commutator is the matrix commutator") {
    Residue i0(2, 0), i1(2, 1);
    LinOp e0 = chevalley(Chevalley::E, i0, P2), f1 = chevalley(Chevalley::F, i1, P2);
    DimensionVector alpha = dv({2, 1});
    PieceMatrix lhs = matrix_of(commutator(e0, f1), alpha);
    // e0 o f1 goes through alpha + i1; f1 o e0 goes through alpha - i0
    PieceMatrix f1_at = matrix_of(f1, alpha);
    PieceMatrix e0_up = matrix_of(e0, alpha + DimensionVector::simple(i1));
    PieceMatrix e0_at = matrix_of(e0, alpha);
    PieceMatrix f1_dn = matrix_of(f1, alpha - DimensionVector::simple(i0));
    for (size_t r = 0; r < lhs.entries.size(); ++r)
        for (size_t c = 0; c < lhs.entries[r].size(); ++c) {
            Rat ef(0), fe(0);
            for (size_t k = 0; k < f1_at.entries.size(); ++k)
                ef += e0_up.entries[r][k] * f1_at.entries[k][c];
            for (size_t k = 0; k < e0_at.entries.size(); ++k)
                fe += f1_dn.entries[r][k] * e0_at.entries[k][c];
            CHECK(lhs.entries[r][c] == ef - fe);
        }
}

TEST_CASE("inhomogeneous sums refuse matrix extraction") {
    LinOp mixed = op_mul_x(Raiz(2, 0, 0)) + op_mul_x(Raiz(2, 1, 1));
    CHECK_FALSE(mixed.shift().has_value());
    CHECK_THROWS_AS(matrix_of(mixed, dv({1, 0})), std::invalid_argument);
}

TEST_CASE("suites at small degree") {
    SuiteResult serre = serre_suite(P3, 3, 1);
    CHECK(serre.pass);
    SuiteResult quartic = serre_suite(P2, 4, 1);
    CHECK(quartic.pass);

    SuiteResult comm = commlemma_suite(P2, 3, 1);
    CHECK(comm.pass);

    SuiteResult cross = crosscheck_suite(P3, 3, 1);
    CHECK(cross.pass);

    // identical results with several workers
    SuiteResult serre4 = serre_suite(P3, 3, 4);
    CHECK(serre4.pass == serre.pass);
    CHECK(serre4.checks == serre.checks);
    CHECK(serre4.pieces == serre.pieces);
}

TEST_CASE("a failing identity reports the first witness in canonical order") {
    // compare e_0 with 2 e_0: fails on the first monomial it acts on
    MonoList monos = shared_monomials(2, 2);
    std::vector<Check> checks;
    checks.push_back(op_identity_check(
        "bogus", [] { return chevalley(Chevalley::E, Residue(2, 0), P2); },
        [] { return Rat(2) * chevalley(Chevalley::E, Residue(2, 0), P2); }, monos));
    SuiteResult res = run_checks("bogus-suite", checks, 1);
    CHECK_FALSE(res.pass);
    REQUIRE(res.failure.has_value());
    CHECK(res.failure->monomial == "{0..0}");
}
