#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <semidec/field.hpp>
#include <semidec/rng.hpp>

#include <set>

using namespace semidec;

TEST_CASE("construction rejects bad parameters")
{
    CHECK_THROWS_AS(Field::make(15, 1), Error);
    CHECK_THROWS_AS(Field::make(1, 1), Error);
    CHECK_THROWS_AS(Field::make(2, 63), Error); // order above the 2^62 cap
    try {
        Field::make(15, 1);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotPrime);
    }
    try {
        Field::make(2, 63);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::OrderOverflow);
    }
}

TEST_CASE("prime field arithmetic matches integer arithmetic mod p")
{
    Field F = Field::make(10007, 1);
    Rng rng(1);
    for (int t = 0; t < 2000; ++t) {
        uint64_t a = rng.below(10007), b = rng.below(10007);
        CHECK(F.add(a, b) == (a + b) % 10007);
        CHECK(F.sub(a, b) == (a + 10007 - b) % 10007);
        CHECK(F.mul(a, b) == (a * b) % 10007);
        CHECK(F.neg(a) == (10007 - a) % 10007);
    }
}

TEST_CASE("inverse and division")
{
    for (uint64_t p : {13ull, 257ull, 65537ull}) {
        Field F = Field::make(p, 1);
        Rng rng(p);
        for (int t = 0; t < 500; ++t) {
            Fe a = F.uniformNonzero(rng);
            CHECK(F.mul(a, F.inv(a)) == F.one());
            Fe b = F.uniformNonzero(rng);
            CHECK(F.mul(F.div(a, b), b) == a);
        }
        CHECK_THROWS_AS(F.inv(0), Error);
    }
}

TEST_CASE("pow agrees with repeated multiplication and Fermat")
{
    Field F = Field::make(257, 1);
    Rng rng(3);
    for (int t = 0; t < 200; ++t) {
        Fe a = F.uniform(rng);
        uint64_t e = rng.below(40);
        Fe ref = F.one();
        for (uint64_t i = 0; i < e; ++i) ref = F.mul(ref, a);
        CHECK(F.pow(a, e) == ref);
    }
    for (int t = 0; t < 100; ++t) {
        Fe a = F.uniformNonzero(rng);
        CHECK(F.pow(a, F.order() - 1) == F.one());
    }
}

TEST_CASE("extension field axioms")
{
    for (auto [p, m] : {std::pair<uint64_t, size_t>{2, 4}, {5, 3}, {13, 2}}) {
        Field F = Field::make(p, m);
        uint64_t q = 1;
        for (size_t i = 0; i < m; ++i) q *= p;
        CHECK(F.order() == q);
        Rng rng(p * 100 + m);
        for (int t = 0; t < 300; ++t) {
            Fe a = F.uniform(rng), b = F.uniform(rng), c = F.uniform(rng);
            CHECK(F.add(a, b) == F.add(b, a));
            CHECK(F.mul(a, b) == F.mul(b, a));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            CHECK(F.add(a, F.neg(a)) == 0);
        }
        for (int t = 0; t < 100; ++t) {
            Fe a = F.uniformNonzero(rng);
            CHECK(F.mul(a, F.inv(a)) == F.one());
            CHECK(F.pow(a, q - 1) == F.one());
        }
    }
}

TEST_CASE("generator has full multiplicative order")
{
    for (auto [p, m] : {std::pair<uint64_t, size_t>{13, 1}, {257, 1}, {5, 2}, {2, 4}}) {
        Field F = Field::make(p, m);
        Fe g = F.findGenerator();
        std::set<Fe> seen;
        Fe cur = F.one();
        for (uint64_t i = 0; i + 1 < F.order(); ++i) {
            seen.insert(cur);
            cur = F.mul(cur, g);
        }
        CHECK(seen.size() == F.order() - 1);
    }
}

TEST_CASE("uniform sampling stays in range and hits everything on a tiny field")
{
    Field F = Field::make(5, 1);
    Rng rng(9);
    std::set<Fe> seen;
    for (int t = 0; t < 500; ++t) {
        Fe a = F.uniform(rng);
        CHECK(a < 5);
        seen.insert(a);
        CHECK(F.uniformNonzero(rng) != 0);
    }
    CHECK(seen.size() == 5);
}

TEST_CASE("binomial coefficients mod p match Pascal's triangle")
{
    for (uint64_t p : {5ull, 13ull, 65537ull}) {
        Field F = Field::make(p, 1);
        uint64_t tri[40][40] = {};
        for (int i = 0; i < 40; ++i) {
            tri[i][0] = 1 % p;
            for (int j = 1; j <= i; ++j) tri[i][j] = (tri[i - 1][j - 1] + tri[i - 1][j]) % p;
        }
        for (int i = 0; i < 40; ++i)
            for (int j = 0; j <= i; ++j) CHECK(F.binomMod(i, j) == tri[i][j]);
        CHECK(F.binomMod(3, 7) == 0);
    }
}

TEST_CASE("element strings round trip")
{
    for (auto [p, m] : {std::pair<uint64_t, size_t>{257, 1}, {5, 3}}) {
        Field F = Field::make(p, m);
        Rng rng(7);
        for (int t = 0; t < 200; ++t) {
            Fe a = F.uniform(rng);
            CHECK(F.elementFromString(F.elementToString(a)) == a);
        }
    }
    Field F = Field::make(13, 1);
    CHECK_THROWS_AS(F.elementFromString("zzz"), Error);
}

TEST_CASE("transform-friendliness flags")
{
    CHECK(Field::make(65537, 1).nttFriendly());
    CHECK_FALSE(Field::make(13, 1).nttFriendly());
    CHECK_FALSE(Field::make(7, 1).nttFriendly());
    CHECK_FALSE(Field::make(257, 1).nttFriendly()); // 2-adicity 8 is below the cutoff
    CHECK_FALSE(Field::make(5, 2).nttFriendly());
}

TEST_CASE("subfield tuple map is a distance-preserving field embedding")
{
    Field B = Field::make(13, 1);
    Field E = Field::make(13, 4);
    PsiMap psi = PsiMap::powerBasis(B, E);
    Rng rng(11);
    for (int t = 0; t < 500; ++t) {
        std::vector<Fe> a(4), b(4), sum(4);
        for (int i = 0; i < 4; ++i) {
            a[i] = B.uniform(rng);
            b[i] = B.uniform(rng);
            sum[i] = B.add(a[i], b[i]);
        }
        Fe ea = psi.embed(a), eb = psi.embed(b);
        CHECK(psi.invert(ea) == a);
        CHECK(E.add(ea, eb) == psi.embed(sum));
        // scalar multiplication by a base element commutes with the embedding
        Fe c = B.uniform(rng);
        std::vector<Fe> scaled(4);
        for (int i = 0; i < 4; ++i) scaled[i] = B.mul(c, a[i]);
        CHECK(E.mul(psi.embed({c, 0, 0, 0}), ea) == psi.embed(scaled));
        // tuples map to zero iff they are zero
        CHECK((ea == 0) == (a == std::vector<Fe>{0, 0, 0, 0}));
    }
}
