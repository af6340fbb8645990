#include <catch2/catch_amalgamated.hpp>

#include "quiverlie/heisenberg.hpp"
#include "quiverlie/suites.hpp"

using namespace quiverlie;

namespace {

KostantPartition kp(int n, std::initializer_list<std::pair<long long, long long>> parts) {
    std::vector<Raiz> v;
    for (auto [p, q] : parts) v.emplace_back(n, p, q);
    return KostantPartition(n, v);
}

const ModuleParams P2 = ModuleParams::from_geometry(2, Geometry{0, 1, {0, 0}});
const ModuleParams P3 = ModuleParams::from_geometry(3, Geometry{0, 1, {0, 0, 0}});

}  // namespace

TEST_CASE("P_2 is the signed sum over FK(1,1)") {
    Polynomial p = poly_P(2);
    CHECK(p.term_count() == 3);
    CHECK(p.coeff(kp(2, {{0, 1}})) == 1);
    CHECK(p.coeff(kp(2, {{-1, 0}})) == 1);
    CHECK(p.coeff(kp(2, {{0, 0}, {1, 1}})) == Rat(-1));
}

TEST_CASE("P_n homogeneity and signs") {
    for (int n : {2, 3, 4}) {
        Polynomial p = poly_P(n);
        CHECK(p.term_count() == (1u << n) - 1);  // 2^n - 1 partitions of the cycle
        auto d = p.homogeneous_dim();
        REQUIRE(d.has_value());
        CHECK(*d == DimensionVector::cycle(n));
        for (const auto& [a, c] : p.terms()) {
            if (a.kcount() == 1) CHECK(c == 1);  // single-raiz monomials carry +1
            CHECK((c == 1 || c == Rat(-1)));
        }
    }
}

TEST_CASE("zeta on raiz and polynomials") {
    // rank 4 -> rank 2
    CHECK(zeta(Raiz(4, 0, 3), 2) == Raiz(2, -2, 1));
    CHECK(zeta(Raiz(4, 2, 2), 2) == Raiz(2, 0, 0));
    CHECK(zeta(Raiz::unit(4), 2).is_unit());
    CHECK_THROWS_AS(zeta(Raiz(3, 0, 0), 2), std::invalid_argument);

    Polynomial p = Polynomial::variable(Raiz(4, 0, 1)) * Polynomial::variable(Raiz(4, 2, 3));
    Polynomial z = zeta(p, 2);
    CHECK(z == Polynomial::monomial(kp(2, {{0, 1}, {0, 1}})));

    // zeta merges monomials: x_{(0,0)} + x_{(2,2)} over rank 4 both map to x_{(0,0)}
    Polynomial q = Polynomial::variable(Raiz(4, 0, 0)) + Polynomial::variable(Raiz(4, 2, 2));
    CHECK(zeta(q, 2) == Polynomial::variable(Raiz(2, 0, 0)) * Rat(2));
}

TEST_CASE("zeta fibers") {
    auto fiber = zeta_fiber(Raiz(2, 0, 0), 2);
    REQUIRE(fiber.size() == 2);
    CHECK(fiber[0] == Raiz(4, 0, 0));
    CHECK(fiber[1] == Raiz(4, 2, 2));
    for (const auto& v : zeta_fiber(Raiz(2, -1, 0), 3)) CHECK(zeta(v, 2) == Raiz(2, -1, 0));
}

TEST_CASE("rank pair constants") {
    RankPair pair(2, 2, P2);
    ModuleParams up = pair.lifted();
    CHECK(up.n() == 4);
    // uniform split: column sums over the orbit recover c^{(n)}
    for (int i = 0; i < 2; ++i) {
        Rat sum(0);
        for (int a = 0; a < 2; ++a) sum += up.c(i + 2 * a);
        CHECK(sum == P2.c(i));
    }
    CHECK(up.c0() == P2.c0());
}

TEST_CASE("mu of h acts on constants by c_i") {
    RankPair pair(2, 2, P2);
    for (int iv = 0; iv < 2; ++iv) {
        Polynomial got = mu_chevalley(Chevalley::H, Residue(2, iv), pair).apply(Polynomial::one(4));
        CHECK(got == Polynomial::one(4) * P2.c(iv));
    }
}

TEST_CASE("heisenberg operators") {
    // a_1 x_theta = 1 for every full-cycle raiz theta
    LinOp a1 = heis_a(1, P2);
    for (const auto& t : full_cycle_raiz(2, 1))
        CHECK(a1.apply(Polynomial::variable(t)) == Polynomial::one(2));

    // a_{-1}(1) = c0 * zeta(P_2) = c0 * P_2
    LinOp am1 = heis_a(-1, P2);
    CHECK(am1.apply(Polynomial::one(2)) == zeta(poly_P(2), 2) * P2.c0());

    // a_0 is the scalar c0
    CHECK(heis_a(0, P2).apply(Polynomial::one(2)) == Polynomial::one(2) * P2.c0());

    // degree bookkeeping: a_p shifts dim by -p alpha_n, a_{-p} by +p alpha_n
    REQUIRE(a1.shift().has_value());
    CHECK(*a1.shift() == DimensionVector(2) - DimensionVector::cycle(2));
    REQUIRE(am1.shift().has_value());
    CHECK(*am1.shift() == DimensionVector::cycle(2));

    // [a_1, a_{-1}] = n c0 on small pieces
    LinOp c = commutator(a1, am1);
    for (const auto& alpha : box_lattice(DimensionVector::cycle(2) * 2))
        CHECK(op_equal_on(c, op_scalar(2, Rat(2) * P2.c0()), alpha));
}

TEST_CASE("zero central charge keeps a_{-p} total") {
    ModuleParams flat = ModuleParams::from_geometry(2, Geometry{1, 0, {0, 0}});
    REQUIRE(flat.c0() == 0);
    LinOp am1 = heis_a(-1, flat);
    CHECK(am1.apply(Polynomial::one(2)).is_zero());
    SuiteResult res = heisenberg_suite(flat, 4, 1, 1);
    CHECK(res.pass);
}

TEST_CASE("pn suite to rank 4") {
    SuiteResult res = pn_suite(4, 1);
    CHECK(res.pass);
}

TEST_CASE("intertwining for (2,2) on two cycles") {
    SuiteResult res = intertwine_suite(RankPair(2, 2, P2), 2, 1);
    CHECK(res.pass);
}

TEST_CASE("heisenberg suite at small degree") {
    CHECK(heisenberg_suite(P2, 4, 1, 1).pass);
    CHECK(heisenberg_suite(P3, 3, 1, 1).pass);
}
