#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adm/cyclotomic.hpp"
#include "adm/params.hpp"
#include "adm/poly.hpp"
#include "adm/rational.hpp"

using namespace adm;

TEST_CASE("rational basics") {
    Rational a(BigInt(6), BigInt(-4));
    CHECK(a.str() == "-3/2");
    CHECK((a * a).str() == "9/4");
    CHECK(Rational::parse("7/21").str() == "1/3");
    CHECK(Rational::parse("-5").is_integer());
    CHECK((Rational(1) / Rational(BigInt(3)) + Rational(BigInt(2), BigInt(3))).is_one());
    CHECK_THROWS_AS(Rational(1) / Rational(0), PreconditionError);
    CHECK(Rational(BigInt(2), BigInt(3)).pow(3).str() == "8/27");
    CHECK(Rational(-1) < Rational(BigInt(1), BigInt(2)));
}

TEST_CASE("cyclotomic field") {
    Cyclotomic6 z = Cyclotomic6::zeta();
    CHECK(z * z == z - Cyclotomic6(1));       // zeta^2 = zeta - 1
    CHECK(z * z * z == Cyclotomic6(-1));      // zeta^3 = -1
    CHECK(z * z.conj() == Cyclotomic6(1));    // conj(zeta) = zeta^{-1}
    CHECK(z + z.conj() == Cyclotomic6(1));    // zeta + conj(zeta) = 1
    CHECK(zeta_pow(0) == Cyclotomic6(1));
    CHECK(zeta_pow(2) == z * z);
    CHECK(zeta_pow(3) == Cyclotomic6(-1));
    CHECK(zeta_pow(-1) == z.conj());
    for (long long n = -7; n <= 7; n++) CHECK(zeta_pow(n) * zeta_pow(-n) == Cyclotomic6(1));
    // conjugation is an automorphism
    Cyclotomic6 u(Rational(2), Rational(BigInt(-3), BigInt(5)));
    Cyclotomic6 v(Rational(BigInt(1), BigInt(7)), Rational(4));
    CHECK((u * v).conj() == u.conj() * v.conj());
    CHECK((u + v).conj() == u.conj() + v.conj());
    CHECK(u / v * v == u);
}

TEST_CASE("polynomial ring and canonical rendering") {
    auto w = MultiPoly16::var(PW), x = MultiPoly16::var(PX), y = MultiPoly16::var(PY),
         z = MultiPoly16::var(PZ);
    auto j = MultiPoly16::var(PJ), k = MultiPoly16::var(PK), l = MultiPoly16::var(PL);
    MultiPoly16 e1 = j * w * y * z + k * w * x * y + l * w * x * z;
    CHECK(e1.render() == "j*w*y*z + k*w*x*y + l*w*x*z");
    CHECK((e1 + MultiPoly16::zero()) == e1);
    CHECK((e1 * MultiPoly16::one()) == e1);
    CHECK((e1 - e1).is_zero());
    CHECK(MultiPoly16::parse(e1.render()) == e1);
    CHECK(MultiPoly16::parse("w*x - 2*w*x + w*x").is_zero());
    CHECK(MultiPoly16::parse("3/2*w^2").render() == "3/2*w^2");

    BiPoly bx = BiPoly::var(0), by = BiPoly::var(1);
    BiPoly p = bx * bx + bx + by;
    CHECK(p.render() == "x^2 + x + y");
    // substitute x = zeta, y = conj(zeta): zeta^2 + zeta + conj(zeta) = zeta
    Cyclotomic6 zv = Cyclotomic6::zeta();
    CHECK(p.eval<Cyclotomic6>({zv, zv.conj()}) == zv);
}

TEST_CASE("polynomial rename and substitute") {
    auto x = MultiPoly16::var(PX), y = MultiPoly16::var(PY);
    std::array<int, 16> perm;
    for (int i = 0; i < 16; i++) perm[i] = i;
    perm[PX] = PY;
    perm[PY] = PX;
    CHECK((x * x + y).rename(perm) == y * y + x);

    std::array<MultiPoly16, 16> idsub;
    for (int i = 0; i < 16; i++) idsub[i] = MultiPoly16::var(i);
    MultiPoly16 q = MultiPoly16::parse("w*x^2 - 5*y + 1/3");
    CHECK(q.substitute(idsub) == q);
}

TEST_CASE("eti compatibility conditions") {
    ParamSeq16 p = ParamSeq16::symbolic();
    CHECK_THROWS_AS(check_eti_conditions(p), PreconditionError);

    std::array<Rational, 16> ones;
    ones.fill(Rational(1));
    auto all1 = check_eti_conditions(ParamSeq16::numeric(ones));
    CHECK_FALSE(all1.cond_xyz);  // 1 != 3
    CHECK_FALSE(all1.all());

    std::array<Rational, 16> v;
    v.fill(Rational(0));
    v[PW] = v[PX] = v[PY] = v[PZ] = Rational(1);
    v[PJ] = v[PA] = v[PF] = v[PH] = Rational(1);
    CHECK(check_eti_conditions(ParamSeq16::numeric(v)).all());

    // solve yz = aw + by + cz for a with random-ish nonzero values
    std::array<Rational, 16> r;
    r.fill(Rational(0));
    r[PW] = Rational(BigInt(3), BigInt(2));
    r[PX] = Rational(5);
    r[PY] = Rational(BigInt(-2), BigInt(7));
    r[PZ] = Rational(4);
    r[PB] = Rational(BigInt(1), BigInt(3));
    r[PC] = Rational(-2);
    r[PA] = (r[PY] * r[PZ] - r[PB] * r[PY] - r[PC] * r[PZ]) / r[PW];
    CHECK(check_eti_conditions(ParamSeq16::numeric(r)).cond_yz);
}
