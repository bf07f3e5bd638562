#ifndef SEMIDEC_CHANNEL_HPP
#define SEMIDEC_CHANNEL_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "codes.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "rng.hpp"

namespace semidec {

enum class Adversary { RandomReplace, Burst, SingleComponent, ZeroOut, PositionTargeted };

inline const char* adversaryName(Adversary a)
{
    switch (a) {
    case Adversary::RandomReplace: return "randomReplace";
    case Adversary::Burst: return "burst";
    case Adversary::SingleComponent: return "singleComponent";
    case Adversary::ZeroOut: return "zeroOut";
    case Adversary::PositionTargeted: return "positionTargeted";
    }
    return "?";
}

inline Adversary adversaryFromString(const std::string& s)
{
    if (s == "randomReplace") return Adversary::RandomReplace;
    if (s == "burst") return Adversary::Burst;
    if (s == "singleComponent") return Adversary::SingleComponent;
    if (s == "zeroOut") return Adversary::ZeroOut;
    if (s == "positionTargeted") return Adversary::PositionTargeted;
    throw Error(Errc::ParseError, "unknown adversary strategy: " + s);
}

struct ChannelSpec {
    size_t e0 = 0;
    size_t e = 0;
    Adversary adversary = Adversary::RandomReplace;
    uint64_t seed = 0;
};

/// Full provenance of one corruption: positions outside setI were written by the
/// adversary, positions in setI minus setJ got fresh uniform tuples, setJ is clean.
struct ErrorPattern {
    std::vector<size_t> setI;
    std::vector<size_t> setJ;
    std::vector<std::pair<size_t, std::vector<Fe>>> adversarialWrites;
    std::vector<size_t> randomPositions;
};

namespace detail {

inline std::vector<size_t> sampleSubset(Rng& rng, std::vector<size_t> pool, size_t count)
{
    for (size_t i = 0; i < count; ++i) {
        size_t j = i + static_cast<size_t>(rng.below(pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    std::sort(pool.begin(), pool.end());
    return pool;
}

inline std::vector<Fe> differingTuple(const Field& F, Rng& rng, const Word& c, size_t pos)
{
    std::vector<Fe> t(c.s);
    for (;;) {
        bool same = true;
        for (size_t h = 0; h < c.s; ++h) {
            t[h] = F.uniform(rng);
            if (t[h] != c.at(pos, h)) same = false;
        }
        if (!same) return t;
    }
}

} // namespace detail

inline std::pair<Word, ErrorPattern> applySemiAdversarial(const Field& F, const Word& c,
                                                          const ChannelSpec& spec)
{
    size_t n = c.n;
    if (spec.e0 > spec.e || spec.e > n)
        throw Error(Errc::BudgetExceedsLength, "need e0 <= e <= n");
    Rng advRng = Rng::derive(spec.seed, 1);
    Rng noiseRng = Rng::derive(spec.seed, 2);

    // adversary phase: pick attacked positions and replacement tuples; it never
    // sees the random-noise draws
    std::vector<size_t> attacked;
    ErrorPattern pat;
    std::vector<size_t> all(n);
    for (size_t i = 0; i < n; ++i) all[i] = i;
    switch (spec.adversary) {
    case Adversary::Burst: {
        size_t start = spec.e0 < n ? static_cast<size_t>(advRng.below(n - spec.e0 + 1)) : 0;
        for (size_t i = 0; i < spec.e0; ++i) attacked.push_back(start + i);
        break;
    }
    case Adversary::PositionTargeted:
        for (size_t i = 0; i < spec.e0; ++i) attacked.push_back(i);
        break;
    default:
        attacked = spec.e0 ? detail::sampleSubset(advRng, all, spec.e0) : std::vector<size_t>{};
        break;
    }
    for (size_t pos : attacked) {
        std::vector<Fe> t;
        switch (spec.adversary) {
        case Adversary::ZeroOut:
            t.assign(c.s, 0);
            break;
        case Adversary::SingleComponent: {
            t.resize(c.s);
            for (size_t h = 0; h < c.s; ++h) t[h] = c.at(pos, h);
            size_t h = static_cast<size_t>(advRng.below(c.s));
            Fe old = t[h];
            do {
                t[h] = F.uniform(advRng);
            } while (t[h] == old);
            break;
        }
        default:
            t = detail::differingTuple(F, advRng, c, pos);
            break;
        }
        pat.adversarialWrites.emplace_back(pos, std::move(t));
    }

    std::vector<bool> inAttacked(n, false);
    for (size_t pos : attacked) inAttacked[pos] = true;
    for (size_t i = 0; i < n; ++i)
        if (!inAttacked[i]) pat.setI.push_back(i);

    // noise phase: uniform tuples on a random (e - e0)-subset of I
    pat.randomPositions = spec.e > spec.e0
        ? detail::sampleSubset(noiseRng, pat.setI, spec.e - spec.e0)
        : std::vector<size_t>{};
    {
        std::vector<bool> isRandom(n, false);
        for (size_t pos : pat.randomPositions) isRandom[pos] = true;
        for (size_t pos : pat.setI)
            if (!isRandom[pos]) pat.setJ.push_back(pos);
    }

    Word y = c;
    for (const auto& [pos, tuple] : pat.adversarialWrites)
        for (size_t h = 0; h < c.s; ++h) y.at(pos, h) = tuple[h];
    for (size_t pos : pat.randomPositions)
        for (size_t h = 0; h < c.s; ++h) y.at(pos, h) = F.uniform(noiseRng);
    return {std::move(y), std::move(pat)};
}

} // namespace semidec

#endif
