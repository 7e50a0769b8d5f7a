#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wgm/locring.hpp"
#include "wgm/matrix.hpp"
#include "wgm/mpoly.hpp"
#include "wgm/ratfun.hpp"

using namespace wgm;

namespace {

MPoly rand_poly(std::mt19937_64& rng, const VarsPtr& vars, int maxdeg, int terms)
{
    std::uniform_int_distribution<int> dc(-6, 6);
    std::uniform_int_distribution<int> de(0, maxdeg);
    MPoly p(vars);
    for (int t = 0; t < terms; ++t) {
        Expo e(vars->size());
        int budget = maxdeg;
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] = std::min(de(rng), budget);
            budget -= e[i];
        }
        p.add_term(e, Rat(dc(rng)));
    }
    return p;
}

LocElem rand_elem(std::mt19937_64& rng, const RingPtr& ring, int maxdeg, int maxdexp)
{
    std::uniform_int_distribution<int> dd(0, maxdexp);
    std::vector<int> dexp(ring->ndens());
    for (auto& e : dexp)
        e = dd(rng);
    return LocElem(ring, rand_poly(rng, ring->vars_ptr(), maxdeg, 4), dexp);
}

}  // namespace

TEST_CASE("rational basics")
{
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat_parse("-7/21") == rat(-1, 3));
    CHECK(rat_str(rat(-3, 9)) == "-1/3");
    CHECK(rat_pow(rat(2, 3), 3) == rat(8, 27));
    CHECK(rat_pow(rat(2), -2) == rat(1, 4));
}

TEST_CASE("poly_arith examples")
{
    auto vars = make_vars({"x", "lam"});
    MPoly x = MPoly::var(vars, 0);
    MPoly lam = MPoly::var(vars, 1);
    MPoly one(vars, Rat(1));

    CHECK((x + one) * (x - one) == x * x - one);
    MPoly p = rand_poly(*new std::mt19937_64(7), vars, 3, 4);
    CHECK(p + MPoly(vars) == p);

    // (x^2-lam)^2 against schoolbook expansion
    MPoly h = x * x - lam;
    MPoly lhs = h * h;
    MPoly rhs = x.pow(4) - (x * x * lam) * Rat(2) + lam * lam;
    CHECK(lhs == rhs);
}

TEST_CASE("ring axioms on random triples")
{
    std::mt19937_64 rng(20240901);
    auto vars = make_vars({"x", "y"});
    for (int i = 0; i < 500; ++i) {
        MPoly a = rand_poly(rng, vars, 3, 3);
        MPoly b = rand_poly(rng, vars, 3, 3);
        MPoly c = rand_poly(rng, vars, 3, 3);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
    }
}

TEST_CASE("poly print/parse round trip")
{
    auto vars = make_vars({"x", "lam"});
    MPoly p = parse_poly(vars, "x^4 - 2*lam*x^2 + lam^2");
    CHECK(to_string(p) == "x^4 - 2*x^2*lam + lam^2");
    CHECK(parse_poly(vars, to_string(p)) == p);
    CHECK(parse_poly(vars, "(x+1)*(x-1)") == parse_poly(vars, "x^2-1"));
    CHECK(parse_poly(vars, "x/2") == MPoly::var(vars, 0) * Rat(1, 2));
    CHECK_THROWS_AS(parse_poly(vars, "x^-2"), ParseError);
    CHECK_THROWS_AS(parse_poly(vars, "z+1"), ParseError);
    CHECK_THROWS_AS(parse_poly(vars, "1/(x+1)"), ParseError);
}

TEST_CASE("exact division and primitive gcd")
{
    auto vars = make_vars({"x", "y"});
    MPoly x = MPoly::var(vars, 0), y = MPoly::var(vars, 1);
    MPoly p = (x + y) * (x - y) * (x + y);
    MPoly q;
    CHECK(try_divide(p, x + y, &q));
    CHECK(q == (x + y) * (x - y));
    CHECK(!try_divide(p, x + MPoly(vars, Rat(2)), &q));

    CHECK(gcd(p, (x + y) * (x + y)) == (x + y) * (x + y));
    CHECK(gcd(x * y, MPoly(vars)) == x * y);
    CHECK(gcd((x + y) * Rat(4, 3), (x + y) * Rat(-2)) == x + y);
    CHECK(gcd(x + y, x - y).is_constant());

    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        MPoly a = rand_poly(rng, vars, 2, 3);
        MPoly b = rand_poly(rng, vars, 2, 3);
        MPoly g = rand_poly(rng, vars, 2, 2);
        if (a.is_zero() || b.is_zero() || g.is_zero())
            continue;
        MPoly gg = gcd(a * g, b * g);
        MPoly dummy;
        REQUIRE(try_divide(gg, gcd(a, b), &dummy));
        REQUIRE(try_divide(a * g, gg, &dummy));
        REQUIRE(try_divide(b * g, gg, &dummy));
    }
}

TEST_CASE("partial derivatives on localized elements")
{
    auto ring = LocRing::make({"x", "lam"}, std::vector<std::string>{"x^2-lam"});
    LocElem h = parse_locelem(ring, "x^2-lam");
    LocElem inv_h = parse_locelem(ring, "1/(x^2-lam)");

    // d/dx (x^2-lam) = 2x
    CHECK(h.derivative(0) == parse_locelem(ring, "2*x"));
    // d/dlam 1/(x^2-lam) = 1/(x^2-lam)^2
    CHECK(inv_h.derivative(1) == inv_h * inv_h);
    // constants die
    CHECK(LocElem::constant(ring, rat(5)).derivative(0).is_zero());

    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        LocElem a = rand_elem(rng, ring, 3, 2);
        LocElem b = rand_elem(rng, ring, 3, 2);
        int v = static_cast<int>(rng() % 2);
        REQUIRE((a * b).derivative(v) == a.derivative(v) * b + b.derivative(v) * a);
        // mixed partials commute
        REQUIRE(a.derivative(0).derivative(1) == a.derivative(1).derivative(0));
    }
}

TEST_CASE("canonicalization is idempotent and unique")
{
    auto ring = LocRing::make({"x", "lam"}, std::vector<std::string>{"x^2-lam", "lam"});
    LocElem e = parse_locelem(ring, "(x^2-lam)*lam/((x^2-lam)^2*lam^2)");
    CHECK(e == parse_locelem(ring, "1/((x^2-lam)*lam)"));
    LocElem re(e.ring(), e.num(), e.dexp());
    CHECK(re == e);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        LocElem a = rand_elem(rng, ring, 3, 2);
        LocElem again(a.ring(), a.num(), a.dexp());
        REQUIRE(again == a);
        REQUIRE((a - a).is_zero());
    }
}

TEST_CASE("units and declared denominators")
{
    auto ring = LocRing::make({"x", "lam"}, std::vector<std::string>{"x^2-lam", "lam"});
    CHECK(parse_locelem(ring, "3*lam*(x^2-lam)").is_unit());
    CHECK(parse_locelem(ring, "lam^2/(x^2-lam)").inverse() ==
          parse_locelem(ring, "(x^2-lam)/lam^2"));
    CHECK_THROWS_AS(parse_locelem(ring, "1/x"), NonUnitError);
    CHECK_THROWS_AS(parse_locelem(ring, "x+lam").inverse(), NonUnitError);

    // ring construction rejects bad denominator sets
    CHECK_THROWS_AS(LocRing::make({"x"}, std::vector<std::string>{"x^2"}), Error);
    CHECK_THROWS_AS(LocRing::make({"x"}, std::vector<std::string>{"2"}), Error);
    CHECK_THROWS_AS(LocRing::make({"x"}, std::vector<std::string>{"x", "x^2-x"}),
                    Error);
}

TEST_CASE("uni_gcd_bezout examples")
{
    auto vars = make_vars({"x", "lam"});
    int xv = 0;

    auto check_identity = [&](const MPoly& a, const MPoly& b) {
        Bezout bz = gcd_bezout(UniPoly::from_mpoly(a, xv), UniPoly::from_mpoly(b, xv));
        UniPoly lhs = bz.u * UniPoly::from_mpoly(a, xv) +
                      bz.v * UniPoly::from_mpoly(b, xv);
        REQUIRE(lhs == bz.g);
        if (!bz.g.is_zero())
            REQUIRE(bz.g.lc() == PolyFrac::one(vars));
        return bz;
    };

    MPoly x = MPoly::var(vars, 0), lam = MPoly::var(vars, 1);

    // a = x^3-lam, b = 3x^2: g = 1, u = -1/lam, v = x/(3 lam)
    Bezout b1 = check_identity(x.pow(3) - lam, x * x * Rat(3));
    CHECK(b1.g.degree() == 0);
    CHECK(b1.u == UniPoly::from_frac(PolyFrac(-MPoly(vars, Rat(1)), lam), 0));
    CHECK(b1.v == UniPoly(vars, 0, {PolyFrac::zero(vars),
                                    PolyFrac(MPoly(vars, Rat(1)), lam * Rat(3))}));

    // a = x, b = 0: g = x monic, u = 1, v = 0
    Bezout b2 = check_identity(x, MPoly(vars));
    CHECK(b2.g == UniPoly::from_mpoly(x, xv));
    CHECK(b2.u == UniPoly::from_frac(PolyFrac::one(vars), 0));
    CHECK(b2.v.is_zero());

    // a = x^2-lam, b = 2x: g = 1, u = -1/lam, v = x/(2 lam)
    Bezout b3 = check_identity(x * x - lam, x * Rat(2));
    CHECK(b3.g.degree() == 0);
    CHECK(b3.u == UniPoly::from_frac(PolyFrac(-MPoly(vars, Rat(1)), lam), 0));
    CHECK(b3.v == UniPoly(vars, 0, {PolyFrac::zero(vars),
                                    PolyFrac(MPoly(vars, Rat(1)), lam * Rat(2))}));

    std::mt19937_64 rng(77);
    for (int i = 0; i < 200; ++i) {
        MPoly a = rand_poly(rng, vars, 6, 4);
        MPoly b = rand_poly(rng, vars, 6, 4);
        if (a.is_zero() && b.is_zero())
            continue;
        check_identity(a, b);
    }
}

TEST_CASE("squarefree decomposition")
{
    auto vars = make_vars({"x", "lam"});
    MPoly x = MPoly::var(vars, 0), lam = MPoly::var(vars, 1);

    auto fac1 = squarefree_decompose(x * x * (x - MPoly(vars, Rat(1))), 0);
    REQUIRE(fac1.size() == 2);
    CHECK(fac1[0].first == x - MPoly(vars, Rat(1)));
    CHECK(fac1[0].second == 1);
    CHECK(fac1[1].first == x);
    CHECK(fac1[1].second == 2);

    auto fac2 = squarefree_decompose(x * x - lam, 0);
    REQUIRE(fac2.size() == 1);
    CHECK(fac2[0] == std::make_pair(x * x - lam, 1));

    auto fac3 = squarefree_decompose((x * x - lam).pow(3), 0);
    REQUIRE(fac3.size() == 1);
    CHECK(fac3[0] == std::make_pair(x * x - lam, 3));
    // gcd(p, p') oracle agrees
    MPoly p = (x * x - lam).pow(3);
    CHECK(gcd(p, p.derivative(0)) == (x * x - lam).pow(2));

    CHECK_THROWS_AS(squarefree_decompose(MPoly(vars), 0), Error);
}

TEST_CASE("partial fractions")
{
    auto vars = make_vars({"x"});
    MPoly x = MPoly::var(vars, 0);
    UniPoly num = UniPoly::from_mpoly(x.pow(4) + MPoly(vars, Rat(1)), 0);
    std::vector<std::pair<UniPoly, int>> fac = {
        {UniPoly::from_mpoly(x, 0), 2},
        {UniPoly::from_mpoly(x - MPoly(vars, Rat(1)), 0), 1}};
    ParFrac pf = partial_fractions(num, fac);
    // reassemble and compare
    UniPoly den = fac[0].first * fac[0].first * fac[1].first;
    UniPoly acc = pf.poly * den;
    for (const auto& t : pf.terms) {
        UniPoly rest = UniPoly::from_frac(PolyFrac::one(vars), 0);
        for (size_t i = 0; i < fac.size(); ++i) {
            int pw = fac[i].second - (static_cast<int>(i) == t.factor ? t.power : 0);
            for (int k = 0; k < pw; ++k)
                rest = rest * fac[i].first;
        }
        acc = acc + t.num * rest;
        REQUIRE(t.num.degree() < fac[t.factor].first.degree());
    }
    CHECK(acc == num);
}

TEST_CASE("exact linear algebra over Q")
{
    Mat<Rat> m(3, 4, Rat(0));
    // rows: x + y + z = 1; 2x + 2y + 2z = 2; x - y = 0
    m(0, 0) = 1; m(0, 1) = 1; m(0, 2) = 1; m(0, 3) = 1;
    m(1, 0) = 2; m(1, 1) = 2; m(1, 2) = 2; m(1, 3) = 2;
    m(2, 0) = 1; m(2, 1) = -1;
    CHECK(mat_rank(m, Rat(0)) == 2);

    Mat<Rat> a(2, 2, Rat(0));
    a(0, 0) = 1; a(0, 1) = 2; a(1, 0) = 3; a(1, 1) = 4;
    auto x = solve(a, std::vector<Rat>{rat(5), rat(11)}, Rat(0));
    REQUIRE(x.has_value());
    CHECK((*x)[0] == rat(1));
    CHECK((*x)[1] == rat(2));

    Mat<Rat> s(2, 3, Rat(0));
    s(0, 0) = 1; s(0, 1) = 1; s(0, 2) = 1;
    s(1, 0) = 0; s(1, 1) = 1; s(1, 2) = 2;
    Mat<Rat> ker = nullspace(s, Rat(0), Rat(1));
    REQUIRE(ker.cols() == 1);
    CHECK(ker(0, 0) == rat(1));
    CHECK(ker(1, 0) == rat(-2));
    CHECK(ker(2, 0) == rat(1));
}

TEST_CASE("linear algebra over Q(lam)")
{
    auto vars = make_vars({"lam"});
    auto c = [&](int n, int d) {
        return PolyFrac::constant(vars, rat(n, d));
    };
    PolyFrac lam = PolyFrac::var(vars, 0);
    Mat<PolyFrac> m(2, 2, PolyFrac::zero(vars));
    m(0, 0) = lam;
    m(0, 1) = c(1, 1);
    m(1, 0) = c(1, 1);
    m(1, 1) = lam.inverse();
    // rank 1: rows proportional by lam
    CHECK(mat_rank(m, PolyFrac::zero(vars)) == 1);
    CHECK(to_string(lam.inverse() * c(-1, 2)) == "-1/(2*lam)");
}
