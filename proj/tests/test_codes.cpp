#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <semidec/codes.hpp>
#include <semidec/rng.hpp>

using namespace semidec;

namespace {

Message randomMessage(const CodeSpec& spec, Rng& rng)
{
    Message msg;
    for (size_t h = 0; h < spec.messagePolyCount(); ++h) {
        std::vector<Fe> c(spec.k);
        for (Fe& x : c) x = spec.F().uniform(rng);
        msg.emplace_back(spec.F(), std::move(c));
    }
    return msg;
}

} // namespace

TEST_CASE("parameter validation")
{
    Field F = Field::make(13, 1);
    CHECK_THROWS_AS(makeCodeSpec(Family::RS, 8, 0, F, 1), Error);
    CHECK_THROWS_AS(makeCodeSpec(Family::RS, 8, 9, F, 1), Error);
    CHECK_THROWS_AS(makeCodeSpec(Family::RS, 8, 2, F, 2), Error);          // RS is width 1
    CHECK_THROWS_AS(makeCodeSpec(Family::RS, 13, 2, F, 1), Error);         // n > q-1 default points
    CHECK_THROWS_AS(makeCodeSpec(Family::MULT, 8, 2, F, 13), Error);       // char <= s
    CHECK_THROWS_AS(makeCodeSpec(Family::IRS, 3, 2, F, 2, std::nullopt,
                                 std::vector<Fe>{1, 2, 2}),
                    Error); // duplicates
    CHECK_THROWS_AS(makeCodeSpec(Family::IRS, 3, 2, F, 2, std::nullopt,
                                 std::vector<Fe>{0, 1, 2}),
                    Error); // zero point
    Field G = Field::make(17, 1);
    CHECK_THROWS_AS(makeCodeSpec(Family::FRS, 6, 2, G, 4), Error); // sn > q-1
    // non-appropriate FRS points: alpha_2 = gamma * alpha_1 collides
    Field H = Field::make(65537, 1);
    Fe g = H.findGenerator();
    CHECK_THROWS_AS(makeCodeSpec(Family::FRS, 2, 1, H, 3, g, std::vector<Fe>{1, g}), Error);
}

TEST_CASE("plain evaluation encoding")
{
    Field F = Field::make(257, 1);
    CodeSpec spec = makeCodeSpec(Family::RS, 20, 7, F, 1);
    Rng rng(1);
    Message msg = randomMessage(spec, rng);
    Word w = encode(spec, msg);
    for (size_t i = 0; i < spec.n; ++i) CHECK(w.at(i, 0) == msg[0].evalAt(spec.alphas[i]));
}

TEST_CASE("interleaved encoding is componentwise evaluation")
{
    Field F = Field::make(257, 1);
    CodeSpec spec = makeCodeSpec(Family::IRS, 16, 5, F, 3);
    Rng rng(2);
    Message msg = randomMessage(spec, rng);
    Word w = encode(spec, msg);
    for (size_t i = 0; i < spec.n; ++i)
        for (size_t h = 0; h < spec.s; ++h) CHECK(w.at(i, h) == msg[h].evalAt(spec.alphas[i]));
}

TEST_CASE("folded encoding bundles shifted evaluations")
{
    Field F = Field::make(65537, 1);
    CodeSpec spec = makeCodeSpec(Family::FRS, 12, 6, F, 4);
    Rng rng(3);
    Message msg = randomMessage(spec, rng);
    Word w = encode(spec, msg);
    for (size_t i = 0; i < spec.n; ++i) {
        Fe x = spec.alphas[i];
        for (size_t h = 0; h < spec.s; ++h) {
            CHECK(w.at(i, h) == msg[0].evalAt(x));
            x = F.mul(x, spec.gamma);
        }
    }
    // default points are gamma^{(i-1)s}, making all sn locations distinct
    CHECK(spec.alphas[0] == F.one());
    CHECK(spec.alphas[1] == F.pow(spec.gamma, spec.s));
}

TEST_CASE("derivative encoding carries the first s derivative values")
{
    Field F = Field::make(65537, 1);
    CodeSpec spec = makeCodeSpec(Family::MULT, 10, 6, F, 3);
    Rng rng(4);
    Message msg = randomMessage(spec, rng);
    Word w = encode(spec, msg);
    for (size_t i = 0; i < spec.n; ++i)
        for (size_t h = 0; h < spec.s; ++h)
            CHECK(w.at(i, h) == hasse(msg[0], h).evalAt(spec.alphas[i]));
}

TEST_CASE("distance counts differing symbols, not components")
{
    Field F = Field::make(13, 1);
    Word a(4, 3), b(4, 3);
    CHECK(distance(a, b) == 0);
    b.at(1, 0) = 5;
    b.at(1, 2) = 6; // same symbol, still one
    b.at(3, 1) = 1;
    CHECK(distance(a, b) == 2);
    Word c(5, 3);
    CHECK_THROWS_AS(distance(a, c), Error);
}

TEST_CASE("message validation")
{
    Field F = Field::make(13, 1);
    CodeSpec spec = makeCodeSpec(Family::IRS, 8, 3, F, 2);
    Message tooFew = {Poly::zero(F)};
    CHECK_THROWS_AS(encode(spec, tooFew), Error);
    Message tooBig = {Poly::monomial(F, 1, 3), Poly::zero(F)};
    CHECK_THROWS_AS(encode(spec, tooBig), Error);
}

TEST_CASE("interleaved words map to extension-field vectors and back")
{
    Field F = Field::make(13, 1);
    CodeSpec spec = makeCodeSpec(Family::IRS, 12, 4, F, 3);
    IrsIsomorphism iso(spec);
    Rng rng(5);
    for (int t = 0; t < 200; ++t) {
        Word a(spec.n, spec.s), b(spec.n, spec.s);
        for (Fe& v : a.data) v = F.uniform(rng);
        for (Fe& v : b.data) v = F.uniform(rng);
        auto va = iso.toSubfieldRS(a);
        auto vb = iso.toSubfieldRS(b);
        CHECK(iso.fromSubfieldRS(va) == a);
        size_t d = 0;
        for (size_t i = 0; i < spec.n; ++i)
            if (va[i] != vb[i]) ++d;
        CHECK(d == distance(a, b));
    }
}

TEST_CASE("encoding commutes with the extension-field identification")
{
    Field F = Field::make(13, 1);
    CodeSpec spec = makeCodeSpec(Family::IRS, 12, 4, F, 3);
    IrsIsomorphism iso(spec);
    CodeSpec rsSpec = iso.subfieldSpec();
    Rng rng(6);
    for (int t = 0; t < 100; ++t) {
        Message msg = randomMessage(spec, rng);
        Poly f = iso.messageToSubfield(msg);
        CHECK(iso.messageFromSubfield(f) == msg);
        Word w = encode(spec, msg);
        Word rw = encode(rsSpec, {f});
        std::vector<Fe> mapped = iso.toSubfieldRS(w);
        for (size_t i = 0; i < spec.n; ++i) CHECK(mapped[i] == rw.at(i, 0));
    }
}
