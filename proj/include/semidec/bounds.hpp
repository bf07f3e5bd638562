#ifndef SEMIDEC_BOUNDS_HPP
#define SEMIDEC_BOUNDS_HPP

#include <functional>
#include <vector>

#include "channel.hpp"
#include "codes.hpp"
#include "errors.hpp"
#include "poly.hpp"
#include "rng.hpp"

namespace semidec {

struct BallQuery {
    Word center;
    size_t radius = 0;
    const CodeSpec* code = nullptr;
};

namespace detail {

inline bool exhaustiveBudgetOk(const CodeSpec& spec)
{
    double total = 1.0;
    for (size_t i = 0; i < spec.k * spec.messagePolyCount(); ++i) {
        total *= static_cast<double>(spec.F().order());
        if (total > 1e6) return false;
    }
    return true;
}

inline void forEachMessage(const CodeSpec& spec, const std::function<void(const Message&)>& fn)
{
    const Field& F = spec.F();
    size_t polys = spec.messagePolyCount();
    size_t coeffs = spec.k * polys;
    std::vector<Fe> odo(coeffs, 0);
    uint64_t q = F.order();
    for (;;) {
        Message msg(polys, Poly::zero(F));
        for (size_t p = 0; p < polys; ++p) {
            std::vector<Fe> c(odo.begin() + static_cast<ptrdiff_t>(p * spec.k),
                              odo.begin() + static_cast<ptrdiff_t>((p + 1) * spec.k));
            msg[p] = Poly(F, std::move(c));
        }
        fn(msg);
        size_t i = 0;
        while (i < coeffs) {
            if (++odo[i] < q) break;
            odo[i] = 0;
            ++i;
        }
        if (i == coeffs) return;
    }
}

} // namespace detail

/// All messages whose codewords lie within the given Hamming ball.  Uses full
/// message enumeration when the code is tiny; for RS with n - radius >= k it
/// instead interpolates through every k-subset of agreeing positions, which is
/// still exact (any codeword that close agrees with the center on >= k points).
inline std::vector<Message> ballIntersect(const BallQuery& query)
{
    const CodeSpec& spec = *query.code;
    const Field& F = spec.F();
    if (query.center.n != spec.n || query.center.s != spec.s)
        throw Error(Errc::ShapeMismatch, "ball center shape mismatch");
    std::vector<Message> hits;
    if (detail::exhaustiveBudgetOk(spec)) {
        detail::forEachMessage(spec, [&](const Message& msg) {
            if (distance(encode(spec, msg), query.center) <= query.radius)
                hits.push_back(msg);
        });
        return hits;
    }
    if (spec.family == Family::RS && spec.n >= query.radius &&
        spec.n - query.radius >= spec.k) {
        std::vector<size_t> comb(spec.k);
        for (size_t i = 0; i < spec.k; ++i) comb[i] = i;
        std::vector<Word> seen;
        for (;;) {
            std::vector<Fe> xs(spec.k), ys(spec.k);
            for (size_t i = 0; i < spec.k; ++i) {
                xs[i] = spec.alphas[comb[i]];
                ys[i] = query.center.at(comb[i], 0);
            }
            Poly f = lagrange(F, xs, ys);
            Word cw = encode(spec, {f});
            if (distance(cw, query.center) <= query.radius) {
                bool dup = false;
                for (const Word& w : seen)
                    if (w == cw) {
                        dup = true;
                        break;
                    }
                if (!dup) {
                    seen.push_back(cw);
                    hits.push_back({f});
                }
            }
            // next k-combination of [0, n)
            size_t i = spec.k;
            while (i > 0) {
                --i;
                if (comb[i] != i + spec.n - spec.k) {
                    ++comb[i];
                    for (size_t j = i + 1; j < spec.k; ++j) comb[j] = comb[j - 1] + 1;
                    break;
                }
                if (i == 0) return hits;
            }
        }
    }
    throw Error(Errc::BudgetExceeded, "ball enumeration budget exceeded");
}

/// Fraction of semi-adversarial transmissions whose radius-e ball around the
/// received word contains exactly the sent codeword.
inline double checkSemiAdvUnique(const CodeSpec& spec, size_t e0, size_t e, size_t trials,
                                 uint64_t seed, Adversary adv = Adversary::RandomReplace)
{
    const Field& F = spec.F();
    size_t unique = 0;
    for (size_t t = 0; t < trials; ++t) {
        Rng rng = Rng::derive(seed, t, 0xba11);
        Message msg(spec.messagePolyCount(), Poly::zero(F));
        for (Poly& f : msg) {
            std::vector<Fe> c(spec.k);
            for (Fe& x : c) x = F.uniform(rng);
            f = Poly(F, std::move(c));
        }
        Word c = encode(spec, msg);
        ChannelSpec ch{e0, e, adv, Rng::derive(seed, t, 0xc4a7).next()};
        auto [y, pat] = applySemiAdversarial(F, c, ch);
        BallQuery q{y, e, &spec};
        std::vector<Message> hits = ballIntersect(q);
        if (hits.size() == 1 && encode(spec, hits[0]) == c) ++unique;
    }
    return static_cast<double>(unique) / static_cast<double>(trials);
}

/// Impossibility witness beyond the generalized Singleton-type frontier: L+1
/// codewords sharing a (k-1)-prefix, spliced into a word z such that every y
/// agreeing with z off the trailing index set K keeps all of them inside B(y, e).
struct GssbWitness {
    Word z;
    std::vector<size_t> kSet;                 // last e - e0 positions
    std::vector<Message> witnesses;           // L + 1 messages, c_0 first
    std::vector<std::vector<size_t>> blocks;  // B_0 .. B_L partitioning the middle positions
};

inline GssbWitness gssbWitness(const CodeSpec& spec, size_t e0, size_t e, size_t L, uint64_t seed)
{
    if (spec.family != Family::RS)
        throw Error(Errc::InvalidParameters, "witness construction is for RS specs");
    const Field& F = spec.F();
    size_t n = spec.n, k = spec.k;
    if (L < 1 || L + 1 > F.order())
        throw Error(Errc::PreconditionViolated, "need 1 <= L and L+1 <= q");
    if (e0 > e || e > n) throw Error(Errc::PreconditionViolated, "need e0 <= e <= n");
    long slack = static_cast<long>(n) - static_cast<long>(k) - static_cast<long>(e);
    // floor(e0/L) must exceed (1-R)n - e = n - k - e
    if (static_cast<long>(e0 / L) <= slack)
        throw Error(Errc::PreconditionViolated, "floor(e0/L) <= n - k - e");
    if (static_cast<long>(n) - static_cast<long>(k - 1) - static_cast<long>(e - e0) < 0)
        throw Error(Errc::PreconditionViolated, "no room for the spliced middle segment");
    size_t m = n - (k - 1) - (e - e0);
    size_t part = m / (L + 1);
    // codewords agreeing on the first k-1 coordinates: shared random prefix values,
    // distinct values at the k-th point
    Rng rng = Rng::derive(seed, 0x6bb);
    std::vector<Fe> xs(spec.alphas.begin(), spec.alphas.begin() + static_cast<ptrdiff_t>(k));
    std::vector<Fe> shared(k - 1);
    for (Fe& v : shared) v = F.uniform(rng);
    GssbWitness w;
    for (size_t j = 0; j <= L; ++j) {
        std::vector<Fe> ys = shared;
        ys.push_back(F.fromInt(j)); // distinct since L+1 <= q
        w.witnesses.push_back({lagrange(F, xs, ys)});
    }
    std::vector<Word> cws;
    for (const Message& msg : w.witnesses) cws.push_back(encode(spec, msg));
    // middle positions k-1 .. n-(e-e0)-1 split as [B_0 | B_1 | ... | B_L],
    // B_0 taking the remainder
    w.blocks.assign(L + 1, {});
    size_t pos = k - 1;
    size_t b0 = m - L * part;
    for (size_t t = 0; t < b0; ++t) w.blocks[0].push_back(pos++);
    for (size_t j = 1; j <= L; ++j)
        for (size_t t = 0; t < part; ++t) w.blocks[j].push_back(pos++);
    for (size_t i = n - (e - e0); i < n; ++i) w.kSet.push_back(i);
    w.z = cws[0];
    for (size_t j = 1; j <= L; ++j)
        for (size_t i : w.blocks[j]) w.z.at(i, 0) = cws[j].at(i, 0);
    // self-certification
    if (distance(w.z, cws[0]) > e0)
        throw Error(Errc::PreconditionViolated, "splice exceeds the adversarial budget");
    for (size_t j = 0; j <= L; ++j)
        if (k - 1 + w.blocks[j].size() + e < n)
            throw Error(Errc::PreconditionViolated, "witness block too small: k-1+|B_j| < n-e");
    return w;
}

/// Check the witness promise directly: the splice costs at most e0 changes and,
/// whatever values y takes on kSet, every witness codeword stays within distance e.
inline bool gssbVerify(const CodeSpec& spec, const GssbWitness& w, size_t e0, size_t e)
{
    std::vector<Word> cws;
    for (const Message& msg : w.witnesses) cws.push_back(encode(spec, msg));
    if (distance(w.z, cws[0]) > e0) return false;
    std::vector<bool> inK(spec.n, false);
    for (size_t i : w.kSet) inK[i] = true;
    for (const Word& cw : cws) {
        size_t offK = 0;
        for (size_t i = 0; i < spec.n; ++i)
            if (!inK[i] && cw.at(i, 0) != w.z.at(i, 0)) ++offK;
        if (offK + w.kSet.size() > e) return false;
    }
    return true;
}

} // namespace semidec

#endif
