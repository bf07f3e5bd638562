#ifndef SEMIDEC_DECODE_HPP
#define SEMIDEC_DECODE_HPP

#include <string>
#include <vector>

#include "codes.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "minimize.hpp"
#include "poly.hpp"

namespace semidec {

enum class FailReason { None, InexactDivision, DegreeOverflow, DistanceExceeded, DegenerateInterpolant };

inline const char* failReasonName(FailReason r)
{
    switch (r) {
    case FailReason::None: return "none";
    case FailReason::InexactDivision: return "inexactDivision";
    case FailReason::DegreeOverflow: return "degreeOverflow";
    case FailReason::DistanceExceeded: return "distanceExceeded";
    case FailReason::DegenerateInterpolant: return "degenerateInterpolant";
    }
    return "?";
}

struct DecodeResult {
    bool success = false;
    Message message;
    FailReason reason = FailReason::None;
    int minimizeMaxDegree = kDegNegInf; // chosen max-degree from the interpolation step
    int locatorDegree = kDegNegInf;     // deg E
    long reencodeDistance = -1;         // symbol distance of the re-encoding, when computed
};

// --- decoding-radius and failure-probability formulas ---

inline double radiusBound(Family fam, size_t n, size_t k, size_t s, size_t L)
{
    double nn = static_cast<double>(n), kk = static_cast<double>(k);
    double ss = static_cast<double>(s), ll = static_cast<double>(L);
    switch (fam) {
    case Family::RS: return (nn - kk) / 2.0;
    case Family::IRS: return ss / (ss + 1.0) * (nn - kk);
    case Family::FRS: return ll / (ll + 1.0) * (nn - kk / (ss - ll + 1.0));
    case Family::MULT: return ll / (ll + 1.0) * (nn - kk / (ss - ll + 1.0) - 1.0);
    }
    return 0;
}

inline double e0Bound(Family fam, size_t n, size_t k, size_t s, size_t L, size_t e)
{
    double nn = static_cast<double>(n), kk = static_cast<double>(k);
    double ss = static_cast<double>(s), ll = static_cast<double>(L);
    double ee = static_cast<double>(e);
    switch (fam) {
    case Family::RS:
    case Family::IRS: return std::min(ee, nn - kk - ee);
    case Family::FRS:
    case Family::MULT: return std::min(ee, nn - ee - kk / (ss - ll + 1.0));
    }
    return 0;
}

inline bool inRegion(Family fam, size_t n, size_t k, size_t s, size_t L, size_t e0, size_t e)
{
    return static_cast<double>(e) <= radiusBound(fam, n, k, s, L) &&
           static_cast<double>(e0) <= e0Bound(fam, n, k, s, L, e);
}

inline double theoryFailureBound(Family fam, size_t e, uint64_t q, size_t s, size_t L)
{
    double ee = static_cast<double>(e), qq = static_cast<double>(q);
    switch (fam) {
    case Family::RS:
    case Family::IRS: return ee / qq;
    case Family::FRS:
    case Family::MULT: return ee * static_cast<double>(s - L + 1) / qq;
    }
    return 0;
}

namespace detail {

inline DecodeResult fail(FailReason r, const MinimizeSolution* sol = nullptr)
{
    DecodeResult res;
    res.success = false;
    res.reason = r;
    if (sol) {
        res.minimizeMaxDegree = sol->maxDegree;
        res.locatorDegree = sol->e.deg();
    }
    return res;
}

/// Shared tail of all three decoders: divide out the locator, check degrees,
/// re-encode and compare.
inline DecodeResult finishDecode(const CodeSpec& spec, const Word& y, size_t e,
                                 const MinimizeSolution& sol, size_t msgPolys)
{
    if (sol.e.isZero()) return fail(FailReason::DegenerateInterpolant, &sol);
    Message msg;
    msg.reserve(msgPolys);
    for (size_t h = 0; h < msgPolys; ++h) {
        auto [f, r] = divRem(sol.bs[h], sol.e);
        if (!r.isZero()) return fail(FailReason::InexactDivision, &sol);
        if (f.deg() >= static_cast<int>(spec.k)) return fail(FailReason::DegreeOverflow, &sol);
        msg.push_back(std::move(f));
    }
    Word reenc = encode(spec, msg);
    size_t d = distance(y, reenc);
    DecodeResult res;
    res.minimizeMaxDegree = sol.maxDegree;
    res.locatorDegree = sol.e.deg();
    res.reencodeDistance = static_cast<long>(d);
    if (d > e) {
        res.success = false;
        res.reason = FailReason::DistanceExceeded;
        return res;
    }
    res.success = true;
    res.message = std::move(msg);
    return res;
}

} // namespace detail

/// Interleaved RS decoder (s = 1 gives the classic locator-based RS decoder).
inline DecodeResult decodeIRS(const CodeSpec& spec, const Word& y, size_t e,
                              MinimizePath path = MinimizePath::Auto)
{
    if (spec.family != Family::IRS && spec.family != Family::RS)
        throw Error(Errc::InvalidParameters, "decodeIRS needs an RS or IRS spec");
    if (y.n != spec.n || y.s != spec.s) throw Error(Errc::ShapeMismatch, "word shape mismatch");
    const Field& F = spec.F();
    MinimizeProblem prob;
    prob.q0 = vanishing(F, spec.alphas, 1);
    prob.shift = static_cast<int>(spec.k);
    prob.points = spec.alphas;
    prob.qs.reserve(spec.s);
    prob.pointValues.assign(spec.s, std::vector<Fe>(spec.n, 0));
    for (size_t h = 0; h < spec.s; ++h) {
        for (size_t i = 0; i < spec.n; ++i) prob.pointValues[h][i] = y.at(i, h);
        prob.qs.push_back(lagrange(F, spec.alphas, prob.pointValues[h]));
    }
    MinimizeSolution sol = solve(prob, path);
    return detail::finishDecode(spec, y, e, sol, spec.s);
}

/// Folded RS decoder with list-length parameter L.
inline DecodeResult decodeFRS(const CodeSpec& spec, const Word& y, size_t L, size_t e,
                              MinimizePath path = MinimizePath::Auto)
{
    if (spec.family != Family::FRS) throw Error(Errc::InvalidParameters, "decodeFRS needs an FRS spec");
    if (L < 1 || L > spec.s) throw Error(Errc::InvalidParameters, "need 1 <= L <= s");
    if (y.n != spec.n || y.s != spec.s) throw Error(Errc::ShapeMismatch, "word shape mismatch");
    const Field& F = spec.F();
    size_t rows = spec.s - L + 1;
    std::vector<Fe> pts = foldedPoints(spec, rows); // index j*rows + i
    MinimizeProblem prob;
    prob.q0 = vanishing(F, pts, 1);
    prob.shift = static_cast<int>(spec.k);
    prob.points = pts;
    prob.pointValues.assign(L, std::vector<Fe>(pts.size(), 0));
    prob.qs.reserve(L);
    for (size_t h = 0; h < L; ++h) {
        for (size_t j = 0; j < spec.n; ++j)
            for (size_t i = 0; i < rows; ++i) prob.pointValues[h][j * rows + i] = y.at(j, i + h);
        prob.qs.push_back(lagrange(F, pts, prob.pointValues[h]));
    }
    MinimizeSolution sol = solve(prob, path);
    return detail::finishDecode(spec, y, e, sol, 1);
}

/// Multiplicity-code decoder with list-length parameter L.
inline DecodeResult decodeMULT(const CodeSpec& spec, const Word& y, size_t L, size_t e,
                               MinimizePath path = MinimizePath::Auto)
{
    if (spec.family != Family::MULT)
        throw Error(Errc::InvalidParameters, "decodeMULT needs a MULT spec");
    if (L < 1 || L > spec.s) throw Error(Errc::InvalidParameters, "need 1 <= L <= s");
    if (y.n != spec.n || y.s != spec.s) throw Error(Errc::ShapeMismatch, "word shape mismatch");
    const Field& F = spec.F();
    size_t rows = spec.s - L + 1;
    MinimizeProblem prob;
    prob.q0 = vanishing(F, spec.alphas, rows);
    prob.shift = static_cast<int>(spec.k);
    prob.qs.reserve(L);
    for (size_t h = 0; h < L; ++h) {
        // block t at alpha_i carries binom(h+t, h) y_{i, h+t}
        std::vector<std::vector<Fe>> blocks(spec.n, std::vector<Fe>(rows, 0));
        for (size_t i = 0; i < spec.n; ++i)
            for (size_t t = 0; t < rows; ++t)
                blocks[i][t] = F.mulScalar(y.at(i, h + t), F.binomMod(h + t, h));
        prob.qs.push_back(hermite(F, spec.alphas, blocks));
    }
    MinimizeSolution sol = solve(prob, MinimizePath::Iterative == path || path == MinimizePath::Auto
                                           ? MinimizePath::Iterative
                                           : path);
    return detail::finishDecode(spec, y, e, sol, 1);
}

// --- fixed-degree interpolation systems and their block matrices ---

struct BlockMatrix {
    Matrix mat;          // without the received-word column
    std::vector<Fe> yCol; // augmented column multiplying the locator's constant term
    size_t rows = 0;
    size_t cols = 0;
    size_t blockCount = 0; // number of M blocks
    size_t mCols = 0;      // columns per M block
    size_t nCols = 0;      // columns of the locator block
};

namespace detail {

/// Hasse derivative of the monomial X^d, order r, at x: binom(d, r) x^{d-r}.
inline Fe monomialDeriv(const Field& F, Fe x, size_t d, size_t r)
{
    if (r > d) return 0;
    return F.mulScalar(F.pow(x, d - r), F.binomMod(d, r));
}

} // namespace detail

/// Stacked linear system of the fixed-degree interpolation for the given family.
/// d1 bounds deg E (locator columns), d2 sets the A_h degree bound k-1+d2; pass
/// d1 = d2 = ebar for RS/IRS/FRS.
inline BlockMatrix buildBlockMatrix(const CodeSpec& spec, const Word& y, size_t L, size_t d1,
                                    size_t d2)
{
    const Field& F = spec.F();
    size_t n = spec.n;
    size_t hCount, rowsPerBlock;
    if (spec.family == Family::RS || spec.family == Family::IRS) {
        hCount = spec.s;
        rowsPerBlock = n;
    } else {
        hCount = L;
        rowsPerBlock = (spec.s - L + 1) * n;
    }
    size_t mCols = spec.k + d2;
    size_t nCols = d1;
    size_t cols = hCount * mCols + nCols;
    size_t rows = hCount * rowsPerBlock;
    if (rows * cols > 40000000)
        throw Error(Errc::BudgetExceeded, "block matrix too large");
    BlockMatrix B;
    B.rows = rows;
    B.cols = cols;
    B.blockCount = hCount;
    B.mCols = mCols;
    B.nCols = nCols;
    B.mat.assign(rows, std::vector<Fe>(cols, 0));
    B.yCol.assign(rows, 0);
    size_t derivs = spec.family == Family::MULT ? spec.s - L + 1 : 1;
    size_t folds = spec.family == Family::FRS ? spec.s - L + 1 : 1;
    for (size_t h = 0; h < hCount; ++h) {
        for (size_t j = 0; j < n; ++j) {
            for (size_t i = 0; i < derivs * folds; ++i) { // fold index or derivative order
                size_t row = h * rowsPerBlock + j * derivs * folds + i;
                if (spec.family == Family::MULT) {
                    Fe x = spec.alphas[j];
                    for (size_t d = 0; d < mCols; ++d)
                        B.mat[row][h * mCols + d] = detail::monomialDeriv(F, x, d, i);
                    // -N_h = -(L_h N): the locator derivatives folded with the
                    // received derivative values
                    for (size_t g = 1; g <= nCols; ++g) {
                        Fe acc = 0;
                        for (size_t ell = 0; ell <= i; ++ell) {
                            Fe yv = y.at(j, i - ell + h);
                            Fe coef = F.binomMod(h + i - ell, h);
                            Fe ev = detail::monomialDeriv(F, x, g, ell);
                            acc = F.add(acc, F.mul(F.mulScalar(yv, coef), ev));
                        }
                        B.mat[row][hCount * mCols + g - 1] = F.neg(acc);
                    }
                    B.yCol[row] = F.neg(F.mulScalar(y.at(j, i + h), F.binomMod(h + i, h)));
                } else {
                    Fe x = spec.family == Family::FRS
                               ? F.mul(spec.alphas[j], F.pow(spec.gamma, i))
                               : spec.alphas[j];
                    Fe yv = spec.family == Family::FRS ? y.at(j, i + h) : y.at(j, h);
                    Fe p = F.one();
                    for (size_t d = 0; d < mCols; ++d) {
                        B.mat[row][h * mCols + d] = p;
                        p = F.mul(p, x);
                    }
                    Fe xg = x;
                    for (size_t g = 1; g <= nCols; ++g) {
                        B.mat[row][hCount * mCols + g - 1] = F.neg(F.mul(yv, xg));
                        xg = F.mul(xg, x);
                    }
                    B.yCol[row] = F.neg(yv);
                }
            }
        }
    }
    return B;
}

inline size_t rankOf(const BlockMatrix& B, const Field& F) { return rankOf(F, B.mat); }

/// Kernel basis of the augmented system (B | Y); vector layout is the A_h
/// coefficient blocks, then the locator coefficients b_1..b_{d1}, then b_0.
inline std::vector<std::vector<Fe>> fixedDegreeSolve(const CodeSpec& spec, const Word& y, size_t L,
                                                     size_t d1, size_t d2)
{
    const Field& F = spec.F();
    BlockMatrix B = buildBlockMatrix(spec, y, L, d1, d2);
    Matrix aug = B.mat;
    for (size_t r = 0; r < B.rows; ++r) aug[r].push_back(B.yCol[r]);
    return kernelBasis(F, aug, B.cols + 1);
}

} // namespace semidec

#endif
