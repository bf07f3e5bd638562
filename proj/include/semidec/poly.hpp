#ifndef SEMIDEC_POLY_HPP
#define SEMIDEC_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace semidec {

/// deg(0); below every achievable degree, safe to add small offsets to.
constexpr int kDegNegInf = INT32_MIN / 4;

constexpr size_t kKaratsubaThreshold = 32;
constexpr size_t kNttThreshold = 256;
constexpr size_t kNewtonDivThreshold = 64;
constexpr size_t kHornerThreshold = 16;

/// Toggle for the scaling benchmark's quadratic control build; when false, mul
/// and divRem always take the schoolbook route.
inline bool& fastPolyOpsEnabled()
{
    static bool enabled = true;
    return enabled;
}

class Poly {
public:
    Poly() : F_(nullptr) {}
    explicit Poly(const Field& f) : F_(&f) {}
    Poly(const Field& f, std::vector<Fe> coeffs) : F_(&f), c_(std::move(coeffs)) { trim(); }

    static Poly zero(const Field& f) { return Poly(f); }
    static Poly constant(const Field& f, Fe v) { return Poly(f, {v}); }
    static Poly monomial(const Field& f, Fe coeff, size_t degree)
    {
        std::vector<Fe> c(degree + 1, 0);
        c[degree] = coeff;
        return Poly(f, std::move(c));
    }

    const Field& field() const { return *F_; }
    const std::vector<Fe>& coeffs() const { return c_; }
    bool isZero() const { return c_.empty(); }
    int deg() const { return c_.empty() ? kDegNegInf : static_cast<int>(c_.size()) - 1; }
    Fe coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Fe leading() const { return c_.empty() ? 0 : c_.back(); }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    Fe evalAt(Fe x) const
    {
        Fe r = 0;
        for (size_t i = c_.size(); i-- > 0;) r = F_->add(F_->mul(r, x), c_[i]);
        return r;
    }

    Poly operator+(const Poly& o) const
    {
        checkField(o);
        std::vector<Fe> r(std::max(c_.size(), o.c_.size()), 0);
        for (size_t i = 0; i < r.size(); ++i) r[i] = F_->add(coeff(i), o.coeff(i));
        return Poly(*F_, std::move(r));
    }

    Poly operator-(const Poly& o) const
    {
        checkField(o);
        std::vector<Fe> r(std::max(c_.size(), o.c_.size()), 0);
        for (size_t i = 0; i < r.size(); ++i) r[i] = F_->sub(coeff(i), o.coeff(i));
        return Poly(*F_, std::move(r));
    }

    Poly operator-() const
    {
        std::vector<Fe> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = F_->neg(c_[i]);
        return Poly(*F_, std::move(r));
    }

    Poly scaled(Fe s) const
    {
        std::vector<Fe> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = F_->mul(c_[i], s);
        return Poly(*F_, std::move(r));
    }

    /// Multiply by X^t.
    Poly shiftedUp(size_t t) const
    {
        if (isZero()) return *this;
        std::vector<Fe> r(c_.size() + t, 0);
        std::copy(c_.begin(), c_.end(), r.begin() + static_cast<ptrdiff_t>(t));
        return Poly(*F_, std::move(r));
    }

    Poly truncated(size_t t) const
    {
        std::vector<Fe> r(c_.begin(), c_.begin() + static_cast<ptrdiff_t>(std::min(t, c_.size())));
        return Poly(*F_, std::move(r));
    }

    Poly reversed(size_t atDegree) const
    {
        std::vector<Fe> r(atDegree + 1, 0);
        for (size_t i = 0; i < c_.size() && i <= atDegree; ++i) r[atDegree - i] = c_[i];
        return Poly(*F_, std::move(r));
    }

    void checkField(const Poly& o) const
    {
        if (F_ != o.F_ && !(F_ && o.F_ && F_->sameAs(*o.F_)))
            throw Error(Errc::FieldMismatch, "polynomials over different fields");
    }

private:
    const Field* F_;
    std::vector<Fe> c_;

    void trim()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

namespace detail {

inline std::vector<Fe> schoolbookMul(const Field& F, const Fe* a, size_t na, const Fe* b, size_t nb)
{
    if (na == 0 || nb == 0) return {};
    std::vector<Fe> r(na + nb - 1, 0);
    for (size_t i = 0; i < na; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < nb; ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    return r;
}

inline std::vector<Fe> karatsubaMul(const Field& F, const Fe* a, size_t na, const Fe* b, size_t nb)
{
    if (std::min(na, nb) < kKaratsubaThreshold) return schoolbookMul(F, a, na, b, nb);
    size_t h = (std::max(na, nb) + 1) / 2;
    size_t na0 = std::min(na, h), nb0 = std::min(nb, h);
    size_t na1 = na - na0, nb1 = nb - nb0;
    std::vector<Fe> z0 = karatsubaMul(F, a, na0, b, nb0);
    std::vector<Fe> z2 = karatsubaMul(F, a + na0, na1, b + nb0, nb1);
    std::vector<Fe> asum(std::max(na0, na1), 0), bsum(std::max(nb0, nb1), 0);
    for (size_t i = 0; i < na0; ++i) asum[i] = a[i];
    for (size_t i = 0; i < na1; ++i) asum[i] = F.add(asum[i], a[na0 + i]);
    for (size_t i = 0; i < nb0; ++i) bsum[i] = b[i];
    for (size_t i = 0; i < nb1; ++i) bsum[i] = F.add(bsum[i], b[nb0 + i]);
    std::vector<Fe> z1 = karatsubaMul(F, asum.data(), asum.size(), bsum.data(), bsum.size());
    for (size_t i = 0; i < z0.size(); ++i) z1[i] = F.sub(z1[i], z0[i]);
    for (size_t i = 0; i < z2.size(); ++i) z1[i] = F.sub(z1[i], z2[i]);
    std::vector<Fe> r(na + nb - 1, 0);
    for (size_t i = 0; i < z0.size(); ++i) r[i] = z0[i];
    for (size_t i = 0; i < z1.size(); ++i)
        if (h + i < r.size()) r[h + i] = F.add(r[h + i], z1[i]);
    for (size_t i = 0; i < z2.size(); ++i)
        if (2 * h + i < r.size()) r[2 * h + i] = F.add(r[2 * h + i], z2[i]);
    return r;
}

inline void nttInPlace(const Field& F, std::vector<Fe>& a, bool inverse)
{
    size_t n = a.size();
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j |= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        Fe w = F.pow(F.nttRoot(), (1ULL << F.twoAdicity()) / len);
        if (inverse) w = F.inv(w);
        for (size_t i = 0; i < n; i += len) {
            Fe wn = 1;
            for (size_t j = 0; j < len / 2; ++j) {
                Fe u = a[i + j], v = F.mul(a[i + j + len / 2], wn);
                a[i + j] = F.add(u, v);
                a[i + j + len / 2] = F.sub(u, v);
                wn = F.mul(wn, w);
            }
        }
    }
    if (inverse) {
        Fe ninv = F.inv(static_cast<Fe>(n)); // n < p since 2^twoAdicity | p-1
        for (auto& x : a) x = F.mul(x, ninv);
    }
}

inline std::vector<Fe> nttMul(const Field& F, const Fe* a, size_t na, const Fe* b, size_t nb)
{
    size_t need = na + nb - 1;
    size_t n2 = 1;
    while (n2 < need) n2 <<= 1;
    std::vector<Fe> fa(a, a + na), fb(b, b + nb);
    fa.resize(n2, 0);
    fb.resize(n2, 0);
    nttInPlace(F, fa, false);
    nttInPlace(F, fb, false);
    for (size_t i = 0; i < n2; ++i) fa[i] = F.mul(fa[i], fb[i]);
    nttInPlace(F, fa, true);
    fa.resize(need);
    return fa;
}

} // namespace detail

inline Poly mul(const Poly& a, const Poly& b)
{
    a.checkField(b);
    if (a.isZero() || b.isZero()) return Poly::zero(a.field());
    const Field& F = a.field();
    size_t na = a.coeffs().size(), nb = b.coeffs().size();
    const Fe* pa = a.coeffs().data();
    const Fe* pb = b.coeffs().data();
    std::vector<Fe> r;
    size_t need = na + nb - 1;
    size_t n2 = 1;
    while (n2 < need) n2 <<= 1;
    if (!fastPolyOpsEnabled()) {
        r = detail::schoolbookMul(F, pa, na, pb, nb);
    } else if (F.nttFriendly() && need >= kNttThreshold && n2 <= (1ULL << F.twoAdicity())) {
        r = detail::nttMul(F, pa, na, pb, nb);
    } else {
        r = detail::karatsubaMul(F, pa, na, pb, nb);
    }
    return Poly(F, std::move(r));
}

inline Poly operator*(const Poly& a, const Poly& b) { return mul(a, b); }

namespace detail {

/// Inverse of f as a power series mod X^t (f(0) != 0), by Newton iteration.
inline Poly invSeries(const Poly& f, size_t t)
{
    const Field& F = f.field();
    Poly g = Poly::constant(F, F.inv(f.coeff(0)));
    size_t cur = 1;
    while (cur < t) {
        cur = std::min(2 * cur, t);
        Poly fg = mul(f.truncated(cur), g).truncated(cur);
        Poly two = Poly::constant(F, F.add(F.one(), F.one()));
        g = mul(g, two - fg).truncated(cur);
    }
    return g;
}

} // namespace detail

inline std::pair<Poly, Poly> divRem(const Poly& a, const Poly& b)
{
    a.checkField(b);
    if (b.isZero()) throw Error(Errc::DivideByZero, "polynomial division by zero");
    const Field& F = a.field();
    if (a.deg() < b.deg()) return {Poly::zero(F), a};
    size_t da = static_cast<size_t>(a.deg()), db = static_cast<size_t>(b.deg());
    if (fastPolyOpsEnabled() && F.nttFriendly() && db >= kNewtonDivThreshold) {
        size_t qlen = da - db + 1;
        Poly revb = b.reversed(db);
        Poly qrev = mul(a.reversed(da), detail::invSeries(revb, qlen)).truncated(qlen);
        Poly q = qrev.reversed(qlen - 1);
        Poly r = a - mul(q, b);
        return {q, r};
    }
    std::vector<Fe> rem = a.coeffs();
    std::vector<Fe> q(da - db + 1, 0);
    Fe lcinv = F.inv(b.leading());
    const std::vector<Fe>& bc = b.coeffs();
    for (size_t i = da + 1; i-- > db;) {
        Fe c = F.mul(rem[i], lcinv);
        if (c == 0) continue;
        q[i - db] = c;
        for (size_t j = 0; j <= db; ++j)
            rem[i - db + j] = F.sub(rem[i - db + j], F.mul(c, bc[j]));
    }
    return {Poly(F, std::move(q)), Poly(F, std::move(rem))};
}

/// Hasse derivative f^{(i)}: coefficient j is binom(j+i, i) * f_{j+i}.
inline Poly hasse(const Poly& f, uint64_t i)
{
    if (i == 0) return f;
    const Field& F = f.field();
    if (f.deg() < static_cast<int>(i)) return Poly::zero(F);
    size_t out = static_cast<size_t>(f.deg()) - i + 1;
    std::vector<Fe> r(out, 0);
    for (size_t j = 0; j < out; ++j) r[j] = F.mulScalar(f.coeff(j + i), F.binomMod(j + i, i));
    return Poly(F, std::move(r));
}

inline Poly vanishing(const Field& F, const std::vector<Fe>& points, uint64_t multiplicity)
{
    if (multiplicity < 1) throw Error(Errc::InvalidParameters, "multiplicity must be >= 1");
    // balanced product of the linear factors, then binary powering
    std::vector<Poly> level;
    level.reserve(points.size());
    for (Fe a : points) level.push_back(Poly(F, {F.neg(a), F.one()}));
    if (level.empty()) level.push_back(Poly::constant(F, F.one()));
    while (level.size() > 1) {
        std::vector<Poly> next;
        next.reserve((level.size() + 1) / 2);
        for (size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(mul(level[i], level[i + 1]));
        if (level.size() & 1) next.push_back(level.back());
        level = std::move(next);
    }
    Poly base = level[0];
    Poly result = Poly::constant(F, F.one());
    uint64_t e = multiplicity;
    while (e) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return result;
}

namespace detail {

struct SubproductTree {
    const Field* F;
    size_t n;
    // prods[l][i] covers points [i*2^l, min(n, (i+1)*2^l))
    std::vector<std::vector<Poly>> prods;
    mutable std::vector<std::vector<Poly>> invs; // lazy reversed-inverse cache per node

    SubproductTree(const Field& field, const std::vector<Fe>& points) : F(&field), n(points.size())
    {
        std::vector<Poly> level;
        level.reserve(n);
        for (Fe a : points) level.push_back(Poly(*F, {F->neg(a), F->one()}));
        prods.push_back(level);
        while (prods.back().size() > 1) {
            const std::vector<Poly>& prev = prods.back();
            std::vector<Poly> next;
            next.reserve((prev.size() + 1) / 2);
            for (size_t i = 0; i + 1 < prev.size(); i += 2) next.push_back(mul(prev[i], prev[i + 1]));
            if (prev.size() & 1) next.push_back(prev.back());
            prods.push_back(std::move(next));
        }
        invs.resize(prods.size());
        for (size_t l = 0; l < prods.size(); ++l)
            invs[l].assign(prods[l].size(), Poly::zero(*F));
    }

    const Poly& root() const { return prods.back()[0]; }

    /// Remainder of f by the node polynomial, reusing the cached Newton inverse.
    Poly remBy(size_t level, size_t idx, const Poly& f) const
    {
        const Poly& b = prods[level][idx];
        if (f.deg() < b.deg()) return f;
        size_t da = static_cast<size_t>(f.deg()), db = static_cast<size_t>(b.deg());
        size_t qlen = da - db + 1;
        if (!fastPolyOpsEnabled() || !F->nttFriendly() || db < kNewtonDivThreshold || qlen > db)
            return divRem(f, b).second;
        Poly& g = invs[level][idx];
        if (g.isZero()) g = invSeries(b.reversed(db), db);
        Poly qrev = mul(f.reversed(da), g).truncated(qlen);
        Poly q = qrev.reversed(qlen - 1);
        return f - mul(q, b);
    }

    void evalDown(size_t level, size_t idx, const Poly& fmod, std::vector<Fe>& out) const
    {
        if (level == 0) {
            out[idx] = fmod.coeff(0);
            return;
        }
        size_t li = 2 * idx, ri = 2 * idx + 1;
        const std::vector<Poly>& lev = prods[level - 1];
        if (ri >= lev.size()) {
            evalDown(level - 1, li, fmod, out);
            return;
        }
        evalDown(level - 1, li, remBy(level - 1, li, fmod), out);
        evalDown(level - 1, ri, remBy(level - 1, ri, fmod), out);
    }

    Poly combineUp(size_t level, size_t idx, const std::vector<Poly>& leaves) const
    {
        if (level == 0) return leaves[idx];
        size_t li = 2 * idx, ri = 2 * idx + 1;
        const std::vector<Poly>& lev = prods[level - 1];
        if (ri >= lev.size()) return combineUp(level - 1, li, leaves);
        Poly a = combineUp(level - 1, li, leaves);
        Poly b = combineUp(level - 1, ri, leaves);
        return mul(a, lev[ri]) + mul(b, lev[li]);
    }
};

} // namespace detail

inline std::vector<Fe> multipointEval(const Poly& f, const std::vector<Fe>& points)
{
    const Field& F = f.field();
    std::vector<Fe> out(points.size(), 0);
    if (points.empty()) return out;
    if (!fastPolyOpsEnabled() || points.size() < kHornerThreshold ||
        f.deg() < static_cast<int>(kHornerThreshold)) {
        for (size_t i = 0; i < points.size(); ++i) out[i] = f.evalAt(points[i]);
        return out;
    }
    detail::SubproductTree tree(F, points);
    size_t top = tree.prods.size() - 1;
    tree.evalDown(top, 0, divRem(f, tree.root()).second, out);
    return out;
}

inline Poly lagrange(const Field& F, const std::vector<Fe>& xs, const std::vector<Fe>& ys)
{
    if (xs.size() != ys.size()) throw Error(Errc::DimensionMismatch, "point/value count mismatch");
    if (xs.empty()) return Poly::zero(F);
    {
        std::vector<Fe> sorted = xs;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error(Errc::DuplicatePoint, "duplicate interpolation point");
    }
    detail::SubproductTree tree(F, xs);
    Poly mprime = hasse(tree.root(), 1);
    std::vector<Fe> denom = multipointEval(mprime, xs);
    std::vector<Poly> leaves(xs.size());
    for (size_t i = 0; i < xs.size(); ++i)
        leaves[i] = Poly::constant(F, F.div(ys[i], denom[i]));
    return tree.combineUp(tree.prods.size() - 1, 0, leaves);
}

namespace detail {

inline Poly invMod(const Poly& a, const Poly& m)
{
    const Field& F = a.field();
    Poly r0 = m, r1 = divRem(a, m).second;
    Poly t0 = Poly::zero(F), t1 = Poly::constant(F, F.one());
    while (!r1.isZero()) {
        auto [q, r] = divRem(r0, r1);
        Poly tn = t0 - mul(q, t1);
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = tn;
    }
    if (r0.deg() != 0)
        throw Error(Errc::InvalidParameters, "modular inverse does not exist");
    return t0.scaled(F.inv(r0.coeff(0))) ;
}

struct HermiteNode {
    Poly f;
    Poly m;
};

inline HermiteNode hermiteCombine(const HermiteNode& a, const HermiteNode& b)
{
    // f = a.f mod a.m and f = b.f mod b.m, coprime moduli
    Poly diff = divRem(b.f - a.f, b.m).second;
    Poly t = divRem(mul(diff, invMod(a.m, b.m)), b.m).second;
    return {a.f + mul(a.m, t), mul(a.m, b.m)};
}

} // namespace detail

/// Minimal-degree f with Hasse derivatives f^{(i-1)}(alpha_j) = values[j][i-1]; each point may
/// carry its own derivative count.
inline Poly hermite(const Field& F, const std::vector<Fe>& xs,
                    const std::vector<std::vector<Fe>>& values)
{
    if (xs.size() != values.size())
        throw Error(Errc::DimensionMismatch, "point/value-block count mismatch");
    if (xs.empty()) return Poly::zero(F);
    {
        std::vector<Fe> sorted = xs;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error(Errc::DuplicatePoint, "duplicate interpolation point");
    }
    std::vector<detail::HermiteNode> level;
    level.reserve(xs.size());
    for (size_t j = 0; j < xs.size(); ++j) {
        const std::vector<Fe>& vals = values[j];
        if (vals.empty()) throw Error(Errc::DimensionMismatch, "empty derivative block");
        // Taylor polynomial at the point: the Hasse derivatives are its coefficients
        Poly shift(F, {F.neg(xs[j]), F.one()}); // X - alpha
        Poly t = Poly::zero(F);
        Poly pw = Poly::constant(F, F.one());
        for (size_t i = 0; i < vals.size(); ++i) {
            t = t + pw.scaled(vals[i]);
            pw = mul(pw, shift);
        }
        level.push_back({t, pw}); // pw = (X - alpha)^{s_j}
    }
    while (level.size() > 1) {
        std::vector<detail::HermiteNode> next;
        next.reserve((level.size() + 1) / 2);
        for (size_t i = 0; i + 1 < level.size(); i += 2)
            next.push_back(detail::hermiteCombine(level[i], level[i + 1]));
        if (level.size() & 1) next.push_back(level.back());
        level = std::move(next);
    }
    return divRem(level[0].f, level[0].m).second;
}

} // namespace semidec

#endif
