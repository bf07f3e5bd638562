#ifndef SEMIDEC_FIELD_HPP
#define SEMIDEC_FIELD_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rng.hpp"

namespace semidec {

/// Field elements are packed base-p digit vectors: element a_0 + a_1*g + ... + a_{m-1}*g^{m-1}
/// is stored as the integer a_0 + a_1*p + ... + a_{m-1}*p^{m-1}.  For prime fields this is
/// just the residue.  Canonical form is unique by construction.
using Fe = uint64_t;

namespace detail {

inline uint64_t mulmod128(uint64_t a, uint64_t b, uint64_t mod)
{
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % mod);
}

inline uint64_t powmod128(uint64_t a, uint64_t e, uint64_t mod)
{
    uint64_t r = 1 % mod;
    a %= mod;
    while (e) {
        if (e & 1) r = mulmod128(r, a, mod);
        a = mulmod128(a, a, mod);
        e >>= 1;
    }
    return r;
}

inline bool isPrimeU64(uint64_t n)
{
    if (n < 2) return false;
    for (uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        uint64_t x = powmod128(a % n, d, n);
        if (x <= 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod128(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

} // namespace detail

class Field {
public:
    static constexpr int kMaxExtensionDigits = 63;

    static Field make(uint64_t p, uint64_t m)
    {
        if (!detail::isPrimeU64(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
        if (m < 1) throw Error(Errc::InvalidParameters, "extension degree must be >= 1");
        __uint128_t order = 1;
        for (uint64_t i = 0; i < m; ++i) {
            order *= p;
            if (order > (static_cast<__uint128_t>(1) << 62))
                throw Error(Errc::OrderOverflow, "field order exceeds the 2^62 budget");
        }
        Field f;
        f.p_ = p;
        f.m_ = m;
        f.order_ = static_cast<uint64_t>(order);
        f.barrett_ = (p > 1) ? static_cast<uint64_t>((static_cast<__uint128_t>(1) << 64) / p) : 0;
        uint64_t t = p - 1;
        while (t && (t & 1) == 0) {
            t >>= 1;
            ++f.twoAdicity_;
        }
        if (m > 1) f.modulus_ = findIrreducible(p, m);
        if (m == 1) {
            f.nttFriendly_ = f.twoAdicity_ >= 10;
            if (f.twoAdicity_ >= 1) f.nttRoot_ = f.findTwoPowerRoot();
        }
        if (m == 1 && p < (1ULL << 21)) f.buildFactorials();
        return f;
    }

    uint64_t characteristic() const { return p_; }
    uint64_t extensionDegree() const { return m_; }
    uint64_t order() const { return order_; }
    bool isPrimeField() const { return m_ == 1; }
    const std::vector<uint64_t>& modulus() const { return modulus_; }
    bool nttFriendly() const { return nttFriendly_; }
    int twoAdicity() const { return twoAdicity_; }
    /// Element of multiplicative order exactly 2^twoAdicity() (prime fields only).
    Fe nttRoot() const { return nttRoot_; }

    bool sameAs(const Field& o) const
    {
        return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
    }

    Fe zero() const { return 0; }
    Fe one() const { return 1; }

    Fe add(Fe a, Fe b) const
    {
        if (m_ == 1) {
            Fe s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        uint64_t da[kMaxExtensionDigits], db[kMaxExtensionDigits];
        unpack(a, da);
        unpack(b, db);
        for (uint64_t i = 0; i < m_; ++i) {
            uint64_t s = da[i] + db[i];
            da[i] = s >= p_ ? s - p_ : s;
        }
        return pack(da);
    }

    Fe neg(Fe a) const
    {
        if (m_ == 1) return a == 0 ? 0 : p_ - a;
        uint64_t d[kMaxExtensionDigits];
        unpack(a, d);
        for (uint64_t i = 0; i < m_; ++i) d[i] = d[i] == 0 ? 0 : p_ - d[i];
        return pack(d);
    }

    Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }

    Fe mul(Fe a, Fe b) const
    {
        if (m_ == 1) return reduce(a * b);
        uint64_t da[kMaxExtensionDigits], db[kMaxExtensionDigits];
        uint64_t prod[2 * kMaxExtensionDigits] = {0};
        unpack(a, da);
        unpack(b, db);
        for (uint64_t i = 0; i < m_; ++i) {
            if (da[i] == 0) continue;
            for (uint64_t j = 0; j < m_; ++j) {
                prod[i + j] = addResidue(prod[i + j], reduce(da[i] * db[j]));
            }
        }
        // fold X^m and above through the monic modulus
        for (uint64_t i = 2 * m_ - 2; i + 1 > m_; --i) {
            uint64_t c = prod[i];
            if (c == 0) continue;
            prod[i] = 0;
            for (uint64_t j = 0; j < m_; ++j) {
                uint64_t sub = reduce(c * modulus_[j]);
                prod[i - m_ + j] = addResidue(prod[i - m_ + j], sub == 0 ? 0 : p_ - sub);
            }
        }
        return pack(prod);
    }

    Fe mulScalar(Fe a, uint64_t s) const
    {
        s %= p_;
        if (m_ == 1) return reduce(a * s);
        uint64_t d[kMaxExtensionDigits];
        unpack(a, d);
        for (uint64_t i = 0; i < m_; ++i) d[i] = reduce(d[i] * s);
        return pack(d);
    }

    Fe pow(Fe a, uint64_t e) const
    {
        Fe r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    Fe inv(Fe a) const
    {
        if (a == 0) throw Error(Errc::DivideByZero, "inv(0)");
        if (m_ == 1) {
            // extended Euclid on integers
            int64_t t = 0, newt = 1;
            int64_t r = static_cast<int64_t>(p_), newr = static_cast<int64_t>(a);
            while (newr != 0) {
                int64_t q = r / newr;
                int64_t tmp = t - q * newt;
                t = newt;
                newt = tmp;
                tmp = r - q * newr;
                r = newr;
                newr = tmp;
            }
            if (t < 0) t += static_cast<int64_t>(p_);
            return static_cast<Fe>(t);
        }
        return pow(a, order_ - 2);
    }

    Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }

    Fe fromInt(uint64_t v) const { return isPrimeField() ? v % p_ : embedScalar(v % p_); }

    Fe uniform(Rng& rng) const { return rng.below(order_); }

    Fe uniformNonzero(Rng& rng) const { return 1 + rng.below(order_ - 1); }

    /// Multiplicative generator: order exactly q-1, verified against every prime factor.
    Fe findGenerator() const
    {
        if (order_ == 2) return 1;
        std::vector<uint64_t> primes = factorize(order_ - 1);
        for (Fe cand = 2; cand < order_; ++cand) {
            bool ok = true;
            for (uint64_t ell : primes) {
                if (pow(cand, (order_ - 1) / ell) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) return cand;
        }
        throw Error(Errc::InvalidParameters, "no generator found"); // unreachable for a field
    }

    /// binom(a, b) reduced mod the characteristic, via Lucas' theorem.
    uint64_t binomMod(uint64_t a, uint64_t b) const
    {
        if (b > a) return 0;
        uint64_t r = 1;
        while (a || b) {
            uint64_t ad = a % p_, bd = b % p_;
            if (bd > ad) return 0;
            r = reducePrime(r * binomDigit(ad, bd));
            a /= p_;
            b /= p_;
        }
        return r;
    }

    void unpackDigits(Fe a, std::vector<uint64_t>& out) const
    {
        out.assign(m_, 0);
        for (uint64_t i = 0; i < m_; ++i) {
            out[i] = a % p_;
            a /= p_;
        }
    }

    Fe packDigits(const std::vector<uint64_t>& digits) const
    {
        if (digits.size() != m_) throw Error(Errc::DimensionMismatch, "digit count != extension degree");
        uint64_t d[kMaxExtensionDigits];
        for (uint64_t i = 0; i < m_; ++i) d[i] = digits[i] % p_;
        return pack(d);
    }

    /// Little-endian decimal residue list; plain decimal for prime fields.
    std::string elementToString(Fe a) const
    {
        if (m_ == 1) return std::to_string(a);
        std::string s;
        for (uint64_t i = 0; i < m_; ++i) {
            if (i) s += ':';
            s += std::to_string(a % p_);
            a /= p_;
        }
        return s;
    }

    Fe elementFromString(const std::string& s) const
    {
        uint64_t d[kMaxExtensionDigits] = {0};
        uint64_t idx = 0, val = 0;
        bool any = false;
        for (char ch : s) {
            if (ch == ':') {
                if (idx >= m_ || !any) throw Error(Errc::ParseError, "bad element: " + s);
                d[idx++] = val % p_;
                val = 0;
                any = false;
            } else if (ch >= '0' && ch <= '9') {
                val = val * 10 + static_cast<uint64_t>(ch - '0');
                any = true;
            } else {
                throw Error(Errc::ParseError, "bad element: " + s);
            }
        }
        if (!any || idx != m_ - 1) throw Error(Errc::ParseError, "bad element: " + s);
        d[idx] = val % p_;
        return pack(d);
    }

private:
    uint64_t p_ = 0;
    uint64_t m_ = 1;
    uint64_t order_ = 0;
    uint64_t barrett_ = 0;
    int twoAdicity_ = 0;
    bool nttFriendly_ = false;
    Fe nttRoot_ = 0;
    std::vector<uint64_t> modulus_; // monic, length m+1, only for m > 1
    std::vector<uint64_t> fact_, invFact_;

    uint64_t reducePrime(uint64_t x) const { return reduce(x); }

    // Barrett reduction of a 64-bit value; exact for p < 2^32.
    uint64_t reduce(uint64_t x) const
    {
        uint64_t q = static_cast<uint64_t>((static_cast<__uint128_t>(x) * barrett_) >> 64);
        uint64_t t = x - q * p_;
        while (t >= p_) t -= p_;
        return t;
    }

    uint64_t addResidue(uint64_t a, uint64_t b) const
    {
        uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }

    void unpack(Fe a, uint64_t* d) const
    {
        for (uint64_t i = 0; i < m_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
    }

    Fe pack(const uint64_t* d) const
    {
        Fe a = 0;
        for (uint64_t i = m_; i-- > 0;) a = a * p_ + d[i];
        return a;
    }

    Fe embedScalar(uint64_t v) const { return v; } // digit 0 of the packed form

    void buildFactorials()
    {
        fact_.resize(p_);
        invFact_.resize(p_);
        fact_[0] = 1;
        for (uint64_t i = 1; i < p_; ++i) fact_[i] = reduce(fact_[i - 1] * i);
        invFact_[p_ - 1] = inv(fact_[p_ - 1]);
        for (uint64_t i = p_ - 1; i-- > 0;) invFact_[i] = reduce(invFact_[i + 1] * (i + 1));
    }

    // binom(a, b) for a single base-p digit pair, a,b < p.
    uint64_t binomDigit(uint64_t a, uint64_t b) const
    {
        if (!fact_.empty()) return reduce(reduce(fact_[a] * invFact_[b]) * invFact_[a - b]);
        uint64_t num = 1, den = 1;
        if (b > a - b) b = a - b;
        for (uint64_t t = 1; t <= b; ++t) {
            num = reduce(num * ((a - b + t) % p_));
            den = reduce(den * t);
        }
        // all factors of den are nonzero mod p since t < p
        uint64_t deninv = den;
        {
            int64_t t0 = 0, t1 = 1;
            int64_t r0 = static_cast<int64_t>(p_), r1 = static_cast<int64_t>(den);
            while (r1) {
                int64_t q = r0 / r1;
                int64_t tmp = t0 - q * t1;
                t0 = t1;
                t1 = tmp;
                tmp = r0 - q * r1;
                r0 = r1;
                r1 = tmp;
            }
            deninv = static_cast<uint64_t>(t0 < 0 ? t0 + static_cast<int64_t>(p_) : t0);
        }
        return reduce(num * deninv);
    }

    Fe findTwoPowerRoot() const
    {
        // any a with a^((p-1)/2) != 1 gives a 2^v-th root of unity a^((p-1)/2^v)
        for (Fe a = 2; a < order_; ++a) {
            if (pow(a, (p_ - 1) >> 1) != 1) return pow(a, (p_ - 1) >> twoAdicity_);
        }
        return 1; // p = 2
    }

    static std::vector<uint64_t> factorize(uint64_t n)
    {
        std::vector<uint64_t> primes;
        for (uint64_t d = 2; d <= 1000000 && d * d <= n; d == 2 ? d = 3 : d += 2) {
            if (n % d == 0) {
                primes.push_back(d);
                while (n % d == 0) n /= d;
            }
        }
        if (n > 1) {
            if (!detail::isPrimeU64(n))
                throw Error(Errc::FactorizationBudgetExceeded, "q-1 has a large composite cofactor");
            primes.push_back(n);
        }
        return primes;
    }

    // --- irreducible-modulus search over F_p (digit-vector polynomial arithmetic) ---

    struct Fp {
        uint64_t p;
        uint64_t add(uint64_t a, uint64_t b) const
        {
            uint64_t s = a + b;
            return s >= p ? s - p : s;
        }
        uint64_t sub(uint64_t a, uint64_t b) const { return add(a, b ? p - b : 0); }
        uint64_t mul(uint64_t a, uint64_t b) const { return (a * b) % p; }
        uint64_t inv(uint64_t a) const
        {
            uint64_t r = 1, e = p - 2;
            while (e) {
                if (e & 1) r = mul(r, a);
                a = mul(a, a);
                e >>= 1;
            }
            return r;
        }
    };

    using PVec = std::vector<uint64_t>;

    static void pnorm(PVec& a)
    {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }

    static PVec pmulmod(const Fp& F, const PVec& a, const PVec& b, const PVec& mod)
    {
        PVec r(a.size() + b.size(), 0);
        for (size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            for (size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
        }
        size_t m = mod.size() - 1;
        for (size_t i = r.size(); i-- > m;) {
            uint64_t c = r[i];
            if (!c) continue;
            r[i] = 0;
            for (size_t j = 0; j < m; ++j) r[i - m + j] = F.sub(r[i - m + j], F.mul(c, mod[j]));
        }
        r.resize(m);
        pnorm(r);
        return r;
    }

    static PVec ppowmod(const Fp& F, PVec base, uint64_t e, const PVec& mod)
    {
        PVec r{1};
        while (e) {
            if (e & 1) r = pmulmod(F, r, base, mod);
            base = pmulmod(F, base, base, mod);
            e >>= 1;
        }
        return r;
    }

    static PVec pgcd(const Fp& F, PVec a, PVec b)
    {
        pnorm(a);
        pnorm(b);
        while (!b.empty()) {
            // a mod b
            uint64_t lcinv = F.inv(b.back());
            while (a.size() >= b.size() && !a.empty()) {
                uint64_t c = F.mul(a.back(), lcinv);
                size_t off = a.size() - b.size();
                for (size_t j = 0; j < b.size(); ++j) a[off + j] = F.sub(a[off + j], F.mul(c, b[j]));
                pnorm(a);
            }
            std::swap(a, b);
        }
        return a;
    }

    static bool isIrreducible(const Fp& F, const PVec& f, uint64_t p, uint64_t m)
    {
        // gcd(X^{p^i} - X, f) = 1 for i < m, and X^{p^m} = X mod f
        PVec xp{0, 1}; // X
        for (uint64_t i = 1; i <= m; ++i) {
            xp = ppowmod(F, xp, p, f); // X^{p^i} mod f
            PVec diff = xp;
            if (diff.size() < 2) diff.resize(2, 0);
            diff[1] = F.sub(diff[1], 1);
            pnorm(diff);
            if (i < m) {
                PVec g = pgcd(F, diff, f);
                if (!(g.size() == 1)) return false;
            } else {
                if (!diff.empty()) return false;
            }
        }
        return true;
    }

    static std::vector<uint64_t> findIrreducible(uint64_t p, uint64_t m)
    {
        Fp F{p};
        Rng rng = Rng::derive(p, m, 0x1dede1ULL);
        for (int attempt = 0; attempt < 8192; ++attempt) {
            PVec f(m + 1, 0);
            f[m] = 1;
            for (uint64_t i = 0; i < m; ++i) f[i] = rng.below(p);
            if (f[0] == 0) f[0] = 1 + rng.below(p - 1); // constant term 0 is always reducible
            if (isIrreducible(F, f, p, m)) return f;
        }
        throw Error(Errc::NoIrreducibleFound, "irreducible search budget exhausted");
    }
};

/// Appendix-style bijection F_q^s <-> F_{q^s}: psi(a_1..a_s) = a_1 + g a_2 + ... + g^{s-1} a_s.
/// The base field must be prime; the extension shares its characteristic with degree s.
class PsiMap {
public:
    PsiMap(const Field& base, const Field& ext, Fe gamma) : base_(&base), ext_(&ext), gamma_(gamma)
    {
        if (!base.isPrimeField())
            throw Error(Errc::DimensionMismatch, "psi requires a prime base field");
        if (ext.characteristic() != base.characteristic())
            throw Error(Errc::DimensionMismatch, "extension characteristic mismatch");
        s_ = ext.extensionDegree();
        // columns = digit vectors of gamma^j
        basis_.assign(s_, std::vector<uint64_t>(s_, 0));
        Fe g = ext.one();
        for (uint64_t j = 0; j < s_; ++j) {
            std::vector<uint64_t> digits;
            ext.unpackDigits(g, digits);
            for (uint64_t i = 0; i < s_; ++i) basis_[i][j] = digits[i];
            g = ext.mul(g, gamma);
        }
        invBasis_ = invertMatrix(basis_);
    }

    /// Power-basis default: gamma is the class of X in the extension.
    static PsiMap powerBasis(const Field& base, const Field& ext)
    {
        return PsiMap(base, ext, ext.characteristic());
    }

    Fe gamma() const { return gamma_; }
    const Field& ext() const { return *ext_; }
    const Field& base() const { return *base_; }

    Fe embed(const std::vector<Fe>& tuple) const
    {
        if (tuple.size() != s_) throw Error(Errc::DimensionMismatch, "psi tuple size != s");
        std::vector<uint64_t> digits(s_, 0);
        uint64_t p = base_->characteristic();
        for (uint64_t i = 0; i < s_; ++i) {
            uint64_t acc = 0;
            for (uint64_t j = 0; j < s_; ++j) acc = (acc + basis_[i][j] * (tuple[j] % p)) % p;
            digits[i] = acc;
        }
        return ext_->packDigits(digits);
    }

    std::vector<Fe> invert(Fe b) const
    {
        std::vector<uint64_t> digits;
        ext_->unpackDigits(b, digits);
        uint64_t p = base_->characteristic();
        std::vector<Fe> tuple(s_, 0);
        for (uint64_t i = 0; i < s_; ++i) {
            uint64_t acc = 0;
            for (uint64_t j = 0; j < s_; ++j) acc = (acc + invBasis_[i][j] * digits[j]) % p;
            tuple[i] = acc;
        }
        return tuple;
    }

private:
    const Field* base_;
    const Field* ext_;
    Fe gamma_;
    uint64_t s_;
    std::vector<std::vector<uint64_t>> basis_, invBasis_;

    std::vector<std::vector<uint64_t>> invertMatrix(std::vector<std::vector<uint64_t>> a) const
    {
        uint64_t n = s_;
        uint64_t p = base_->characteristic();
        std::vector<std::vector<uint64_t>> inv(n, std::vector<uint64_t>(n, 0));
        for (uint64_t i = 0; i < n; ++i) inv[i][i] = 1;
        auto mulp = [p](uint64_t x, uint64_t y) { return (x * y) % p; };
        auto subp = [p](uint64_t x, uint64_t y) { return (x + p - y % p) % p; };
        for (uint64_t col = 0; col < n; ++col) {
            uint64_t piv = col;
            while (piv < n && a[piv][col] == 0) ++piv;
            if (piv == n)
                throw Error(Errc::InvalidParameters, "gamma powers do not form a basis");
            std::swap(a[piv], a[col]);
            std::swap(inv[piv], inv[col]);
            uint64_t s = 1;
            { // invert pivot in F_p
                uint64_t b = a[col][col], e = p - 2, r = 1;
                while (e) {
                    if (e & 1) r = mulp(r, b);
                    b = mulp(b, b);
                    e >>= 1;
                }
                s = r;
            }
            for (uint64_t j = 0; j < n; ++j) {
                a[col][j] = mulp(a[col][j], s);
                inv[col][j] = mulp(inv[col][j], s);
            }
            for (uint64_t r = 0; r < n; ++r) {
                if (r == col || a[r][col] == 0) continue;
                uint64_t c = a[r][col];
                for (uint64_t j = 0; j < n; ++j) {
                    a[r][j] = subp(a[r][j], mulp(c, a[col][j]));
                    inv[r][j] = subp(inv[r][j], mulp(c, inv[col][j]));
                }
            }
        }
        return inv;
    }
};

} // namespace semidec

#endif
