#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <semidec/channel.hpp>
#include <semidec/decode.hpp>
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

DecodeResult dispatch(const CodeSpec& spec, const Word& y, size_t L, size_t e, MinimizePath path)
{
    switch (spec.family) {
    case Family::RS:
    case Family::IRS: return decodeIRS(spec, y, e, path);
    case Family::FRS: return decodeFRS(spec, y, L, e, path);
    default: return decodeMULT(spec, y, L, e, path);
    }
}

} // namespace

TEST_CASE("radius and failure-probability formulas")
{
    CHECK(radiusBound(Family::RS, 8, 2, 1, 1) == doctest::Approx(3.0));
    CHECK(radiusBound(Family::IRS, 64, 16, 4, 4) == doctest::Approx(38.4));
    CHECK(radiusBound(Family::FRS, 32, 20, 8, 4) == doctest::Approx(22.4));
    CHECK(radiusBound(Family::MULT, 32, 24, 4, 2) == doctest::Approx(2.0 / 3.0 * 23.0));
    CHECK(e0Bound(Family::IRS, 64, 16, 4, 4, 38) == doctest::Approx(10.0));
    CHECK(e0Bound(Family::IRS, 64, 16, 4, 4, 24) == doctest::Approx(24.0));
    CHECK(e0Bound(Family::FRS, 32, 20, 8, 4, 22) == doctest::Approx(6.0));
    CHECK(inRegion(Family::IRS, 64, 16, 4, 4, 10, 38));
    CHECK_FALSE(inRegion(Family::IRS, 64, 16, 4, 4, 11, 38));
    CHECK_FALSE(inRegion(Family::IRS, 64, 16, 4, 4, 0, 39));
    CHECK(theoryFailureBound(Family::IRS, 38, 65537, 4, 4) == doctest::Approx(38.0 / 65537.0));
    CHECK(theoryFailureBound(Family::FRS, 22, 65537, 8, 4) ==
          doctest::Approx(22.0 * 5.0 / 65537.0));
}

TEST_CASE("zero-error round trip for every family")
{
    struct Case {
        Family fam;
        uint64_t q;
        size_t n, k, s, L;
    };
    for (const Case& c : {Case{Family::RS, 13, 8, 2, 1, 1}, Case{Family::IRS, 257, 24, 8, 4, 4},
                          Case{Family::FRS, 65537, 32, 20, 8, 4},
                          Case{Family::MULT, 65537, 32, 24, 4, 2}}) {
        Field F = Field::make(c.q, 1);
        CodeSpec spec = makeCodeSpec(c.fam, c.n, c.k, F, c.s);
        for (size_t t = 0; t < 25; ++t) {
            Rng rng = Rng::derive(c.q, t);
            Message msg = randomMessage(spec, rng);
            Word y = encode(spec, msg);
            DecodeResult res = dispatch(spec, y, c.L, 0, MinimizePath::Auto);
            REQUIRE(res.success);
            CHECK(res.message == msg);
            CHECK(res.reencodeDistance == 0);
        }
    }
}

TEST_CASE("full-radius decoding with random errors")
{
    struct Case {
        Family fam;
        uint64_t q;
        size_t n, k, s, L, e;
    };
    for (const Case& c :
         {Case{Family::RS, 65537, 16, 4, 1, 1, 6}, Case{Family::IRS, 65537, 24, 8, 4, 4, 12},
          Case{Family::FRS, 65537, 32, 20, 8, 4, 22}, Case{Family::MULT, 65537, 32, 24, 4, 2, 15}}) {
        Field F = Field::make(c.q, 1);
        CodeSpec spec = makeCodeSpec(c.fam, c.n, c.k, F, c.s);
        size_t ok = 0, trials = 40;
        for (size_t t = 0; t < trials; ++t) {
            Rng rng = Rng::derive(c.q + c.n, t);
            Message msg = randomMessage(spec, rng);
            Word cw = encode(spec, msg);
            ChannelSpec ch{0, c.e, Adversary::RandomReplace, rng.next()};
            auto [y, pat] = applySemiAdversarial(F, cw, ch);
            DecodeResult res = dispatch(spec, y, c.L, c.e, MinimizePath::Auto);
            if (res.success && res.message == msg) ++ok;
        }
        // failure probability at this field size is ~e(s-L+1)/65537 per trial
        CHECK(ok == trials);
    }
}

TEST_CASE("interpolation paths give identical decodes")
{
    Field F = Field::make(257, 1);
    CodeSpec spec = makeCodeSpec(Family::IRS, 24, 8, F, 4);
    for (size_t t = 0; t < 30; ++t) {
        Rng rng = Rng::derive(31, t);
        Message msg = randomMessage(spec, rng);
        Word cw = encode(spec, msg);
        size_t e = rng.below(14);
        ChannelSpec ch{0, e, Adversary::RandomReplace, rng.next()};
        auto [y, pat] = applySemiAdversarial(F, cw, ch);
        DecodeResult a = decodeIRS(spec, y, e, MinimizePath::Iterative);
        DecodeResult b = decodeIRS(spec, y, e, MinimizePath::Fast);
        CHECK(a.success == b.success);
        CHECK(a.reason == b.reason);
        CHECK(a.minimizeMaxDegree == b.minimizeMaxDegree);
        if (a.success) CHECK(a.message == b.message);
    }
}

TEST_CASE("failures are reported, not thrown")
{
    Field F = Field::make(257, 1);
    CodeSpec spec = makeCodeSpec(Family::IRS, 24, 8, F, 4);
    size_t failures = 0;
    for (size_t t = 0; t < 30; ++t) {
        Rng rng = Rng::derive(77, t);
        Message msg = randomMessage(spec, rng);
        Word cw = encode(spec, msg);
        ChannelSpec ch{16, 16, Adversary::RandomReplace, rng.next()}; // way out of region
        auto [y, pat] = applySemiAdversarial(F, cw, ch);
        DecodeResult res = decodeIRS(spec, y, 16);
        if (!res.success) {
            ++failures;
            CHECK(res.reason != FailReason::None);
        }
    }
    CHECK(failures > 0);
}

TEST_CASE("shape and parameter errors")
{
    Field F = Field::make(257, 1);
    CodeSpec irs = makeCodeSpec(Family::IRS, 16, 4, F, 2);
    CodeSpec frs = makeCodeSpec(Family::FRS, 16, 4, F, 2);
    Word wrong(16, 3);
    CHECK_THROWS_AS(decodeIRS(irs, wrong, 2), Error);
    CHECK_THROWS_AS(decodeFRS(irs, Word(16, 2), 1, 2), Error);
    CHECK_THROWS_AS(decodeFRS(frs, Word(16, 2), 3, 2), Error); // L > s
    CHECK_THROWS_AS(decodeMULT(frs, Word(16, 2), 1, 2), Error);
}

TEST_CASE("stacked linear system solves the same instances")
{
    // for each family: corrupt within radius, solve the fixed-degree system,
    // and read the message out of a kernel vector
    {
        Field F = Field::make(257, 1);
        CodeSpec spec = makeCodeSpec(Family::IRS, 16, 4, F, 2);
        for (size_t t = 0; t < 10; ++t) {
            Rng rng = Rng::derive(1000, t);
            Message msg = randomMessage(spec, rng);
            Word cw = encode(spec, msg);
            size_t ebar = 6;
            ChannelSpec ch{0, ebar, Adversary::RandomReplace, rng.next()};
            auto [y, pat] = applySemiAdversarial(F, cw, ch);
            auto ker = fixedDegreeSolve(spec, y, spec.s, ebar, ebar);
            REQUIRE(!ker.empty());
            size_t mCols = spec.k + ebar;
            const auto& v = ker[0];
            std::vector<Fe> ec(ebar + 1);
            ec[0] = v[spec.s * mCols + ebar];
            for (size_t g = 1; g <= ebar; ++g) ec[g] = v[spec.s * mCols + g - 1];
            Poly E(F, ec);
            REQUIRE(!E.isZero());
            for (size_t h = 0; h < spec.s; ++h) {
                std::vector<Fe> ac(v.begin() + static_cast<ptrdiff_t>(h * mCols),
                                   v.begin() + static_cast<ptrdiff_t>((h + 1) * mCols));
                auto [f, r] = divRem(Poly(F, ac), E);
                CHECK(r.isZero());
                CHECK(f == msg[h]);
            }
        }
    }
    {
        Field F = Field::make(65537, 1);
        CodeSpec spec = makeCodeSpec(Family::FRS, 16, 8, F, 4);
        size_t L = 2, rows = spec.s - L + 1;
        for (size_t t = 0; t < 5; ++t) {
            Rng rng = Rng::derive(2000, t);
            Message msg = randomMessage(spec, rng);
            Word cw = encode(spec, msg);
            size_t ebar = 6;
            ChannelSpec ch{0, ebar, Adversary::RandomReplace, rng.next()};
            auto [y, pat] = applySemiAdversarial(F, cw, ch);
            size_t d1 = ebar * rows;
            auto ker = fixedDegreeSolve(spec, y, L, d1, d1);
            REQUIRE(!ker.empty());
            size_t mCols = spec.k + d1;
            const auto& v = ker[0];
            std::vector<Fe> ec(d1 + 1);
            ec[0] = v[L * mCols + d1];
            for (size_t g = 1; g <= d1; ++g) ec[g] = v[L * mCols + g - 1];
            Poly E(F, ec);
            REQUIRE(!E.isZero());
            std::vector<Fe> ac(v.begin(), v.begin() + static_cast<ptrdiff_t>(mCols));
            auto [f, r] = divRem(Poly(F, ac), E);
            CHECK(r.isZero());
            CHECK(f == msg[0]);
        }
    }
    {
        Field F = Field::make(65537, 1);
        CodeSpec spec = makeCodeSpec(Family::MULT, 16, 8, F, 4);
        size_t L = 2, rows = spec.s - L + 1;
        for (size_t t = 0; t < 5; ++t) {
            Rng rng = Rng::derive(3000, t);
            Message msg = randomMessage(spec, rng);
            Word cw = encode(spec, msg);
            size_t e = 4;
            ChannelSpec ch{0, e, Adversary::RandomReplace, rng.next()};
            auto [y, pat] = applySemiAdversarial(F, cw, ch);
            size_t d1 = e * rows;
            auto ker = fixedDegreeSolve(spec, y, L, d1, d1);
            REQUIRE(!ker.empty());
            size_t mCols = spec.k + d1;
            bool recovered = false;
            for (const auto& v : ker) {
                std::vector<Fe> ec(d1 + 1);
                ec[0] = v[L * mCols + d1];
                for (size_t g = 1; g <= d1; ++g) ec[g] = v[L * mCols + g - 1];
                Poly E(F, ec);
                if (E.isZero()) continue;
                std::vector<Fe> ac(v.begin(), v.begin() + static_cast<ptrdiff_t>(mCols));
                auto [f, r] = divRem(Poly(F, ac), E);
                if (r.isZero() && f == msg[0]) recovered = true;
            }
            CHECK(recovered);
        }
    }
}

TEST_CASE("stacked system matrix has full column rank on clean in-region inputs")
{
    Field F = Field::make(257, 1);
    CodeSpec spec = makeCodeSpec(Family::IRS, 16, 4, F, 2);
    Rng rng(55);
    Message msg = randomMessage(spec, rng);
    Word cw = encode(spec, msg);
    ChannelSpec ch{0, 4, Adversary::RandomReplace, 9};
    auto [y, pat] = applySemiAdversarial(F, cw, ch);
    BlockMatrix B = buildBlockMatrix(spec, y, spec.s, 4, 4);
    CHECK(B.rows == spec.s * spec.n);
    CHECK(B.cols == spec.s * (spec.k + 4) + 4);
    CHECK(rankOf(B, F) == B.cols);
}
