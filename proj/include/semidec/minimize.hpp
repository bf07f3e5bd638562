#ifndef SEMIDEC_MINIMIZE_HPP
#define SEMIDEC_MINIMIZE_HPP

#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "linalg.hpp"
#include "poly.hpp"

namespace semidec {

/// Find a nonzero (E, C_1..C_h) minimizing max(deg X^{k-1}E, deg(Q_i E + Q_0 C_i)),
/// excluding tuples where every one of those components is constant.
struct MinimizeProblem {
    Poly q0;
    std::vector<Poly> qs;
    int shift; // k

    // Optional fast-path data: q0 = prod (X - points[j]) squarefree and
    // qs[i](points[j]) = pointValues[i][j].  When present the solver may use a
    // divide-and-conquer interpolation basis instead of iterative reduction.
    std::vector<Fe> points;
    std::vector<std::vector<Fe>> pointValues;

    void validate() const
    {
        if (q0.isZero()) throw Error(Errc::DegenerateProblem, "Q_0 is zero");
        if (shift < 1) throw Error(Errc::InvalidParameters, "shift must be >= 1");
        if (qs.empty()) throw Error(Errc::InvalidParameters, "need at least one Q_i");
        for (const Poly& q : qs) q0.checkField(q);
        if (!points.empty()) {
            if (static_cast<int>(points.size()) != q0.deg())
                throw Error(Errc::InvalidParameters, "point count != deg Q_0");
            if (pointValues.size() != qs.size())
                throw Error(Errc::DimensionMismatch, "one value row per Q_i required");
            for (const auto& row : pointValues)
                if (row.size() != points.size())
                    throw Error(Errc::DimensionMismatch, "value row length != point count");
        }
    }
};

struct MinimizeSolution {
    Poly e;
    std::vector<Poly> cs;
    std::vector<Poly> bs; // bs[i] = Q_{i+1} E + Q_0 C_{i+1}
    std::vector<int> degrees; // deg X^{k-1}E, deg B_1, ..., deg B_h (kDegNegInf allowed)
    int maxDegree;
};

enum class MinimizePath { Auto, Iterative, Fast };

namespace detail {

using PolyRow = std::vector<Poly>;

/// Shifted degree of one component; column 0 carries the X^{k-1} weight.
inline int shiftedDeg(const Poly& p, int w)
{
    return p.isZero() ? kDegNegInf : p.deg() + w;
}

inline int rowDeg(const PolyRow& row, const std::vector<int>& w)
{
    int d = kDegNegInf;
    for (size_t t = 0; t < row.size(); ++t) d = std::max(d, shiftedDeg(row[t], w[t]));
    return d;
}

/// Rightmost column attaining the shifted row degree.
inline size_t pivotOf(const PolyRow& row, const std::vector<int>& w)
{
    int d = rowDeg(row, w);
    size_t piv = 0;
    for (size_t t = 0; t < row.size(); ++t)
        if (shiftedDeg(row[t], w[t]) == d) piv = t;
    return piv;
}

/// row_a -= c * X^delta * row_b
inline void rowReduce(const Field&, PolyRow& a, const PolyRow& b, Fe c, size_t delta)
{
    for (size_t t = 0; t < a.size(); ++t) {
        if (b[t].isZero()) continue;
        a[t] = a[t] - b[t].scaled(c).shiftedUp(delta);
    }
}

/// Mulders-Storjohann iterative reduction to shifted weak Popov form.
inline void weakPopov(const Field& F, std::vector<PolyRow>& rows, const std::vector<int>& w)
{
    size_t m = rows.size();
    std::vector<size_t> piv(m);
    for (size_t r = 0; r < m; ++r) piv[r] = pivotOf(rows[r], w);
    for (;;) {
        bool conflict = false;
        for (size_t r1 = 0; r1 < m && !conflict; ++r1) {
            for (size_t r2 = r1 + 1; r2 < m && !conflict; ++r2) {
                if (piv[r1] != piv[r2]) continue;
                size_t t = piv[r1];
                size_t a = r1, b = r2;
                if (rows[a][t].deg() < rows[b][t].deg()) std::swap(a, b);
                Fe c = F.div(rows[a][t].leading(), rows[b][t].leading());
                size_t delta = static_cast<size_t>(rows[a][t].deg() - rows[b][t].deg());
                rowReduce(F, rows[a], rows[b], c, delta);
                piv[a] = pivotOf(rows[a], w);
                conflict = true;
            }
        }
        if (!conflict) return;
    }
}

/// One linear vanishing condition at x: sum_t lam[t] * v_t(x) = 0.
struct PtCond {
    Fe x;
    std::vector<Fe> lam;
};

constexpr size_t kKotterLeaf = 32;

struct BasisResult {
    std::vector<PolyRow> rows;
    std::vector<int> degs; // shifted row degrees; leading position of row r is r
};

/// Interpolation-basis update: maintains a shifted weak Popov basis whose row r
/// leads at column r under the order (shifted degree, column index).
inline BasisResult kotterLeaf(const Field& F, const std::vector<PtCond>& conds,
                              const std::vector<int>& w)
{
    size_t m = w.size();
    BasisResult res;
    res.rows.assign(m, PolyRow(m, Poly::zero(F)));
    for (size_t r = 0; r < m; ++r) res.rows[r][r] = Poly::constant(F, F.one());
    res.degs = w;
    std::vector<Fe> disc(m);
    for (const PtCond& c : conds) {
        for (size_t r = 0; r < m; ++r) {
            Fe v = 0;
            for (size_t t = 0; t < m; ++t) {
                if (c.lam[t] == 0 || res.rows[r][t].isZero()) continue;
                v = F.add(v, F.mul(c.lam[t], res.rows[r][t].evalAt(c.x)));
            }
            disc[r] = v;
        }
        size_t star = m;
        for (size_t r = 0; r < m; ++r) {
            if (disc[r] == 0) continue;
            if (star == m || res.degs[r] < res.degs[star]) star = r;
        }
        if (star == m) continue; // already satisfied
        Fe dsinv = F.inv(disc[star]);
        for (size_t r = 0; r < m; ++r) {
            if (r == star || disc[r] == 0) continue;
            Fe coef = F.mul(disc[r], dsinv);
            for (size_t t = 0; t < m; ++t)
                res.rows[r][t] = res.rows[r][t] - res.rows[star][t].scaled(coef);
        }
        Poly lin(F, {F.neg(c.x), F.one()});
        for (size_t t = 0; t < m; ++t) res.rows[star][t] = mul(res.rows[star][t], lin);
        res.degs[star] += 1;
    }
    return res;
}

/// Polynomial matrix product A (r x k) * B (k x c).  On NTT-friendly fields each
/// entry is transformed once and products accumulate pointwise, so the transform
/// count is r*k + k*c + r*c instead of 3*r*k*c.
inline std::vector<PolyRow> matPolyMul(const Field& F, const std::vector<PolyRow>& A,
                                       const std::vector<PolyRow>& B)
{
    size_t rows = A.size(), inner = B.size(), cols = B[0].size();
    std::vector<PolyRow> C(rows, PolyRow(cols, Poly::zero(F)));
    int da = kDegNegInf, db = kDegNegInf;
    for (const PolyRow& row : A)
        for (const Poly& f : row) da = std::max(da, f.deg());
    for (const PolyRow& row : B)
        for (const Poly& f : row) db = std::max(db, f.deg());
    if (da < 0 || db < 0) return C;
    size_t need = static_cast<size_t>(da + db) + 1;
    size_t n2 = 1;
    while (n2 < need) n2 <<= 1;
    bool viaNtt = fastPolyOpsEnabled() && F.nttFriendly() && need >= kNttThreshold &&
                  n2 <= (1ULL << F.twoAdicity());
    if (!viaNtt) {
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < cols; ++c) {
                Poly acc = Poly::zero(F);
                for (size_t u = 0; u < inner; ++u) {
                    if (A[r][u].isZero() || B[u][c].isZero()) continue;
                    acc = acc + mul(A[r][u], B[u][c]);
                }
                C[r][c] = acc;
            }
        return C;
    }
    auto transform = [&](const Poly& f) {
        std::vector<Fe> t(f.coeffs());
        t.resize(n2, 0);
        nttInPlace(F, t, false);
        return t;
    };
    std::vector<std::vector<std::vector<Fe>>> ta(rows, std::vector<std::vector<Fe>>(inner));
    std::vector<std::vector<std::vector<Fe>>> tb(inner, std::vector<std::vector<Fe>>(cols));
    for (size_t r = 0; r < rows; ++r)
        for (size_t u = 0; u < inner; ++u)
            if (!A[r][u].isZero()) ta[r][u] = transform(A[r][u]);
    for (size_t u = 0; u < inner; ++u)
        for (size_t c = 0; c < cols; ++c)
            if (!B[u][c].isZero()) tb[u][c] = transform(B[u][c]);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) {
            std::vector<Fe> acc(n2, 0);
            bool any = false;
            for (size_t u = 0; u < inner; ++u) {
                if (ta[r][u].empty() || tb[u][c].empty()) continue;
                any = true;
                for (size_t j = 0; j < n2; ++j)
                    acc[j] = F.add(acc[j], F.mul(ta[r][u][j], tb[u][c][j]));
            }
            if (!any) continue;
            nttInPlace(F, acc, true);
            acc.resize(need);
            C[r][c] = Poly(F, std::move(acc));
        }
    return C;
}

/// Divide and conquer over the point tree, carrying the m x h residual matrix S:
/// row r of the basis-so-far satisfies sum_t M_rt * S_ti == 0 mod the node modulus.
/// At each split the right half sees S' = (M_left * S) mod G_right, whose values at
/// the right points equal the rewritten vanishing conditions; leaves run the
/// incremental basis update on those values directly.
inline BasisResult residualBasis(const Field& F, const SubproductTree& tree, size_t level,
                                 size_t idx, const std::vector<Fe>& points,
                                 const std::vector<PolyRow>& S, const std::vector<int>& w)
{
    size_t m = w.size(), h = S[0].size();
    size_t lopt = idx << level;
    size_t hipt = std::min(points.size(), (idx + 1) << level);
    if (level == 0 || (hipt - lopt) * h <= kKotterLeaf) {
        std::vector<PtCond> conds;
        conds.reserve((hipt - lopt) * h);
        for (size_t j = lopt; j < hipt; ++j) {
            Fe x = points[j];
            for (size_t i = 0; i < h; ++i) {
                PtCond c;
                c.x = x;
                c.lam.resize(m);
                for (size_t t = 0; t < m; ++t) c.lam[t] = S[t][i].evalAt(x);
                conds.push_back(std::move(c));
            }
        }
        return kotterLeaf(F, conds, w);
    }
    size_t li = 2 * idx, ri = 2 * idx + 1;
    if (ri >= tree.prods[level - 1].size())
        return residualBasis(F, tree, level - 1, li, points, S, w);
    auto reduceAll = [&](size_t lvl, size_t node, const std::vector<PolyRow>& mat) {
        std::vector<PolyRow> out(mat.size(), PolyRow(h, Poly::zero(F)));
        for (size_t r = 0; r < mat.size(); ++r)
            for (size_t i = 0; i < h; ++i)
                if (!mat[r][i].isZero()) out[r][i] = tree.remBy(lvl, node, mat[r][i]);
        return out;
    };
    BasisResult left = residualBasis(F, tree, level - 1, li, points, reduceAll(level - 1, li, S), w);
    std::vector<PolyRow> S2 = matPolyMul(F, left.rows, reduceAll(level - 1, ri, S));
    for (PolyRow& row : S2)
        for (Poly& f : row)
            if (!f.isZero()) f = tree.remBy(level - 1, ri, f);
    BasisResult right = residualBasis(F, tree, level - 1, ri, points, S2, left.degs);
    BasisResult out;
    out.degs = right.degs;
    out.rows = matPolyMul(F, right.rows, left.rows);
    return out;
}

inline std::vector<int> materializedDegrees(const PolyRow& row, int k)
{
    std::vector<int> d(row.size());
    d[0] = row[0].isZero() ? kDegNegInf : row[0].deg() + k - 1;
    for (size_t t = 1; t < row.size(); ++t) d[t] = row[t].deg();
    return d;
}

inline MinimizeSolution finishSolution(const MinimizeProblem& p, std::vector<PolyRow> rows)
{
    const Field& F = p.q0.field();
    int k = p.shift;
    size_t h = p.qs.size();
    // pick: minimal max-degree among rows with some non-constant component,
    // tie-broken by lexicographically smallest degree tuple
    int bestIdx = -1;
    std::vector<int> bestTuple;
    int bestMax = 0;
    for (size_t r = 0; r < rows.size(); ++r) {
        std::vector<int> tup = materializedDegrees(rows[r], k);
        int mx = kDegNegInf;
        for (int d : tup) mx = std::max(mx, d);
        if (mx <= 0) continue; // all components constant or zero: excluded
        if (bestIdx < 0 || mx < bestMax || (mx == bestMax && tup < bestTuple)) {
            bestIdx = static_cast<int>(r);
            bestTuple = tup;
            bestMax = mx;
        }
    }
    if (bestIdx < 0) {
        // every basis row is all-constant; the cheapest admissible element is X times
        // the lexicographically best row
        int cIdx = -1;
        std::vector<int> cTuple;
        for (size_t r = 0; r < rows.size(); ++r) {
            std::vector<int> tup = materializedDegrees(rows[r], k);
            if (cIdx < 0 || tup < cTuple) {
                cIdx = static_cast<int>(r);
                cTuple = tup;
            }
        }
        if (cIdx < 0) throw Error(Errc::DegenerateProblem, "empty basis");
        for (Poly& comp : rows[static_cast<size_t>(cIdx)]) comp = comp.shiftedUp(1);
        bestIdx = cIdx;
        bestTuple = materializedDegrees(rows[static_cast<size_t>(cIdx)], k);
        bestMax = *std::max_element(bestTuple.begin(), bestTuple.end());
    }
    PolyRow row = rows[static_cast<size_t>(bestIdx)];
    // normalize: leading coefficient of the first component attaining maxDegree becomes 1
    Fe lead = 0;
    for (size_t t = 0; t <= h; ++t) {
        if (bestTuple[t] == bestMax) {
            lead = row[t].leading();
            break;
        }
    }
    Fe scale = F.inv(lead);
    for (Poly& comp : row) comp = comp.scaled(scale);
    MinimizeSolution sol;
    sol.e = row[0];
    sol.bs.assign(row.begin() + 1, row.end());
    sol.cs.resize(h);
    for (size_t i = 0; i < h; ++i) {
        auto [q, r] = divRem(sol.bs[i] - mul(p.qs[i], sol.e), p.q0);
        if (!r.isZero())
            throw Error(Errc::DegenerateProblem, "solution left the generated module");
        sol.cs[i] = q;
    }
    sol.degrees = bestTuple;
    sol.maxDegree = bestMax;
    return sol;
}

} // namespace detail

inline MinimizeSolution solve(const MinimizeProblem& p, MinimizePath path = MinimizePath::Auto)
{
    p.validate();
    const Field& F = p.q0.field();
    size_t h = p.qs.size();
    bool fast = (path == MinimizePath::Fast) ||
                (path == MinimizePath::Auto && !p.points.empty() && fastPolyOpsEnabled());
    if (fast && p.points.empty())
        throw Error(Errc::InvalidParameters, "fast path requires point data");
    if (fast) {
        detail::SubproductTree tree(F, p.points);
        // residual column i carries the condition B_i - Q_i E == 0 mod Q_0
        std::vector<detail::PolyRow> S(h + 1, detail::PolyRow(h, Poly::zero(F)));
        for (size_t i = 0; i < h; ++i) {
            S[0][i] = -p.qs[i];
            S[i + 1][i] = Poly::constant(F, F.one());
        }
        std::vector<int> w(h + 1, 0);
        w[0] = p.shift - 1;
        detail::BasisResult basis =
            detail::residualBasis(F, tree, tree.prods.size() - 1, 0, p.points, S, w);
        return detail::finishSolution(p, std::move(basis.rows));
    }
    std::vector<detail::PolyRow> rows;
    rows.reserve(h + 1);
    {
        detail::PolyRow g0(h + 1, Poly::zero(F));
        g0[0] = Poly::constant(F, F.one());
        for (size_t i = 0; i < h; ++i) g0[i + 1] = p.qs[i];
        rows.push_back(std::move(g0));
        for (size_t i = 0; i < h; ++i) {
            detail::PolyRow g(h + 1, Poly::zero(F));
            g[i + 1] = p.q0;
            rows.push_back(std::move(g));
        }
    }
    std::vector<int> w(h + 1, 0);
    w[0] = p.shift - 1;
    detail::weakPopov(F, rows, w);
    return detail::finishSolution(p, std::move(rows));
}

/// Exhaustive oracle: grows the target degree D one step at a time and solves the
/// coefficient-wise linear system directly.  Independent of solve().
inline MinimizeSolution bruteForceSolve(const MinimizeProblem& p)
{
    p.validate();
    const Field& F = p.q0.field();
    if (p.q0.deg() > 64) throw Error(Errc::BudgetExceeded, "deg Q_0 > 64 in brute-force oracle");
    int k = p.shift;
    size_t h = p.qs.size();
    int d0 = p.q0.deg();
    int cap = std::max(k - 1, d0) + 1;
    for (int D = 0; D <= cap; ++D) {
        int edeg = D - (k - 1); // deg E <= edeg
        size_t eCount = edeg >= 0 ? static_cast<size_t>(edeg) + 1 : 0;
        // deg C_i may exceed D - deg Q_0 when it must cancel the top of Q_i E
        std::vector<int> cdeg(h);
        std::vector<size_t> cCount(h), cOff(h);
        size_t cols = eCount;
        for (size_t i = 0; i < h; ++i) {
            int hi = edeg >= 0 && !p.qs[i].isZero() ? p.qs[i].deg() + edeg - d0 : kDegNegInf;
            cdeg[i] = std::max(D - d0, hi);
            cCount[i] = cdeg[i] >= 0 ? static_cast<size_t>(cdeg[i]) + 1 : 0;
            cOff[i] = cols;
            cols += cCount[i];
        }
        if (cols == 0) continue;
        // unknown vector: E coefficients, then C_1.., each appearing in the
        // constraint rows "coefficient of X^t in Q_i E + Q_0 C_i is 0 for t > D"
        Matrix sys;
        for (size_t i = 0; i < h; ++i) {
            int top = std::max(p.qs[i].deg() + edeg, d0 + cdeg[i]);
            for (int t = D + 1; t <= top; ++t) {
                std::vector<Fe> rowv(cols, 0);
                for (size_t a = 0; a < eCount; ++a) {
                    int qidx = t - static_cast<int>(a);
                    if (qidx >= 0) rowv[a] = p.qs[i].coeff(static_cast<size_t>(qidx));
                }
                for (size_t b = 0; b < cCount[i]; ++b) {
                    int qidx = t - static_cast<int>(b);
                    if (qidx >= 0) rowv[cOff[i] + b] = p.q0.coeff(static_cast<size_t>(qidx));
                }
                sys.push_back(std::move(rowv));
            }
        }
        std::vector<std::vector<Fe>> kernel =
            sys.empty() ? kernelBasis(F, Matrix{std::vector<Fe>(cols, 0)}, cols)
                        : kernelBasis(F, sys, cols);
        for (const std::vector<Fe>& v : kernel) {
            std::vector<Fe> ec(v.begin(), v.begin() + static_cast<ptrdiff_t>(eCount));
            Poly E(F, std::move(ec));
            std::vector<Poly> cs(h, Poly::zero(F));
            for (size_t i = 0; i < h; ++i) {
                std::vector<Fe> cc(v.begin() + static_cast<ptrdiff_t>(cOff[i]),
                                   v.begin() + static_cast<ptrdiff_t>(cOff[i] + cCount[i]));
                cs[i] = Poly(F, std::move(cc));
            }
            std::vector<int> tup(h + 1);
            tup[0] = E.isZero() ? kDegNegInf : E.deg() + k - 1;
            std::vector<Poly> bs(h, Poly::zero(F));
            int mx = tup[0];
            for (size_t i = 0; i < h; ++i) {
                bs[i] = mul(p.qs[i], E) + mul(p.q0, cs[i]);
                tup[i + 1] = bs[i].deg();
                mx = std::max(mx, tup[i + 1]);
            }
            if (mx <= 0 || mx > D) continue; // excluded, or a spurious lower-degree miss
            MinimizeSolution sol;
            sol.e = E;
            sol.cs = cs;
            sol.bs = bs;
            sol.degrees = tup;
            sol.maxDegree = mx;
            return sol;
        }
    }
    throw Error(Errc::BudgetExceeded, "brute-force degree cap exceeded");
}

} // namespace semidec

#endif
