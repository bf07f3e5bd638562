#ifndef SEMIDEC_CODES_HPP
#define SEMIDEC_CODES_HPP

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "poly.hpp"

namespace semidec {

enum class Family { RS, IRS, FRS, MULT };

inline const char* familyName(Family f)
{
    switch (f) {
    case Family::RS: return "RS";
    case Family::IRS: return "IRS";
    case Family::FRS: return "FRS";
    case Family::MULT: return "MULT";
    }
    return "?";
}

inline Family familyFromString(const std::string& s)
{
    if (s == "RS") return Family::RS;
    if (s == "IRS") return Family::IRS;
    if (s == "FRS") return Family::FRS;
    if (s == "MULT") return Family::MULT;
    throw Error(Errc::ParseError, "unknown code family: " + s);
}

/// Length-n sequence of s-component symbols, stored symbol-major.
struct Word {
    size_t n = 0;
    size_t s = 0;
    std::vector<Fe> data;

    Word() = default;
    Word(size_t n_, size_t s_) : n(n_), s(s_), data(n_ * s_, 0) {}

    Fe& at(size_t i, size_t h) { return data[i * s + h]; }
    Fe at(size_t i, size_t h) const { return data[i * s + h]; }

    bool sameShape(const Word& o) const { return n == o.n && s == o.s; }
    bool operator==(const Word& o) const { return n == o.n && s == o.s && data == o.data; }
};

/// One polynomial of degree < k, or s of them for IRS.
using Message = std::vector<Poly>;

struct CodeSpec {
    Family family = Family::RS;
    size_t n = 0;
    size_t k = 0;
    const Field* field = nullptr;
    size_t s = 1;
    Fe gamma = 0; // FRS only
    std::vector<Fe> alphas;

    const Field& F() const { return *field; }
    size_t messagePolyCount() const { return family == Family::IRS ? s : 1; }
};

inline CodeSpec makeCodeSpec(Family family, size_t n, size_t k, const Field& F, size_t s,
                             std::optional<Fe> gamma = std::nullopt,
                             std::optional<std::vector<Fe>> alphas = std::nullopt)
{
    if (k < 1 || k > n) throw Error(Errc::InvalidParameters, "need 1 <= k <= n");
    if (s < 1) throw Error(Errc::InvalidParameters, "need s >= 1");
    if (family == Family::RS && s != 1) throw Error(Errc::InvalidParameters, "RS requires s = 1");
    if (family == Family::MULT && F.characteristic() <= s)
        throw Error(Errc::InvalidParameters, "MULT requires field characteristic > s");
    CodeSpec spec;
    spec.family = family;
    spec.n = n;
    spec.k = k;
    spec.field = &F;
    spec.s = s;
    if (family == Family::FRS) {
        spec.gamma = gamma ? *gamma : F.findGenerator();
        if (spec.gamma == 0) throw Error(Errc::InvalidParameters, "gamma must be nonzero");
    }
    if (alphas) {
        spec.alphas = *alphas;
        if (spec.alphas.size() != n)
            throw Error(Errc::InvalidParameters, "need exactly n evaluation points");
    } else {
        if (family == Family::FRS) {
            if (s * n > F.order() - 1)
                throw Error(Errc::InvalidParameters, "sn exceeds q-1, no appropriate points");
            spec.alphas.resize(n);
            Fe step = F.pow(spec.gamma, s);
            Fe cur = F.one();
            for (size_t i = 0; i < n; ++i) {
                spec.alphas[i] = cur;
                cur = F.mul(cur, step);
            }
        } else {
            if (n > F.order() - 1)
                throw Error(Errc::InvalidParameters, "n exceeds q-1, not enough nonzero points");
            Fe g = F.findGenerator();
            spec.alphas.resize(n);
            Fe cur = g;
            for (size_t i = 0; i < n; ++i) {
                spec.alphas[i] = cur;
                cur = F.mul(cur, g);
            }
        }
    }
    {
        std::vector<Fe> sorted = spec.alphas;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error(Errc::InvalidParameters, "evaluation points must be distinct");
    }
    if (family == Family::IRS || family == Family::MULT) {
        for (Fe a : spec.alphas)
            if (a == 0)
                throw Error(Errc::InvalidParameters, "evaluation points must be nonzero");
    }
    if (family == Family::FRS) {
        std::vector<Fe> all;
        all.reserve(s * n);
        for (Fe a : spec.alphas) {
            Fe cur = a;
            for (size_t j = 0; j < s; ++j) {
                all.push_back(cur);
                cur = F.mul(cur, spec.gamma);
            }
        }
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end())
            throw Error(Errc::InvalidParameters, "points are not appropriate: sn values collide");
    }
    return spec;
}

/// Evaluation locations gamma^i * alpha_j for i in [0, rows), j in [0, n), i fastest.
inline std::vector<Fe> foldedPoints(const CodeSpec& spec, size_t rows)
{
    const Field& F = spec.F();
    std::vector<Fe> pts;
    pts.reserve(spec.n * rows);
    for (size_t j = 0; j < spec.n; ++j) {
        Fe cur = spec.alphas[j];
        for (size_t i = 0; i < rows; ++i) {
            pts.push_back(cur);
            cur = F.mul(cur, spec.gamma);
        }
    }
    return pts;
}

inline void validateMessage(const CodeSpec& spec, const Message& msg)
{
    if (msg.size() != spec.messagePolyCount())
        throw Error(Errc::ShapeMismatch, "wrong number of message polynomials");
    for (const Poly& f : msg) {
        if (f.deg() >= static_cast<int>(spec.k))
            throw Error(Errc::ShapeMismatch, "message degree >= k");
        f.checkField(Poly::zero(spec.F()));
    }
}

inline Word encode(const CodeSpec& spec, const Message& msg)
{
    validateMessage(spec, msg);
    Word w(spec.n, spec.s);
    switch (spec.family) {
    case Family::RS: {
        std::vector<Fe> ev = multipointEval(msg[0], spec.alphas);
        for (size_t i = 0; i < spec.n; ++i) w.at(i, 0) = ev[i];
        break;
    }
    case Family::IRS: {
        for (size_t h = 0; h < spec.s; ++h) {
            std::vector<Fe> ev = multipointEval(msg[h], spec.alphas);
            for (size_t i = 0; i < spec.n; ++i) w.at(i, h) = ev[i];
        }
        break;
    }
    case Family::FRS: {
        std::vector<Fe> pts = foldedPoints(spec, spec.s);
        std::vector<Fe> ev = multipointEval(msg[0], pts);
        for (size_t i = 0; i < spec.n; ++i)
            for (size_t h = 0; h < spec.s; ++h) w.at(i, h) = ev[i * spec.s + h];
        break;
    }
    case Family::MULT: {
        for (size_t h = 0; h < spec.s; ++h) {
            std::vector<Fe> ev = multipointEval(hasse(msg[0], h), spec.alphas);
            for (size_t i = 0; i < spec.n; ++i) w.at(i, h) = ev[i];
        }
        break;
    }
    }
    return w;
}

inline size_t distance(const Word& a, const Word& b)
{
    if (!a.sameShape(b)) throw Error(Errc::ShapeMismatch, "word shapes differ");
    size_t d = 0;
    for (size_t i = 0; i < a.n; ++i) {
        for (size_t h = 0; h < a.s; ++h) {
            if (a.at(i, h) != b.at(i, h)) {
                ++d;
                break;
            }
        }
    }
    return d;
}

/// Coordinatewise bijection between IRS words over a prime field and length-n
/// vectors over the degree-s extension, preserving symbol Hamming distance.
class IrsIsomorphism {
public:
    explicit IrsIsomorphism(const CodeSpec& spec)
        : spec_(&spec),
          ext_(std::make_unique<Field>(Field::make(spec.F().characteristic(), spec.s))),
          psi_(std::make_unique<PsiMap>(PsiMap::powerBasis(spec.F(), *ext_)))
    {
        if (spec.family != Family::IRS)
            throw Error(Errc::InvalidParameters, "isomorphism is defined for IRS specs");
    }

    const Field& extField() const { return *ext_; }
    const PsiMap& psi() const { return *psi_; }

    std::vector<Fe> toSubfieldRS(const Word& w) const
    {
        if (w.n != spec_->n || w.s != spec_->s)
            throw Error(Errc::FieldMismatch, "word shape does not match the IRS spec");
        std::vector<Fe> out(w.n);
        std::vector<Fe> tuple(w.s);
        for (size_t i = 0; i < w.n; ++i) {
            for (size_t h = 0; h < w.s; ++h) tuple[h] = w.at(i, h);
            out[i] = psi_->embed(tuple);
        }
        return out;
    }

    Word fromSubfieldRS(const std::vector<Fe>& v) const
    {
        if (v.size() != spec_->n)
            throw Error(Errc::FieldMismatch, "vector length does not match the IRS spec");
        Word w(spec_->n, spec_->s);
        for (size_t i = 0; i < spec_->n; ++i) {
            std::vector<Fe> tuple = psi_->invert(v[i]);
            for (size_t h = 0; h < spec_->s; ++h) w.at(i, h) = tuple[h];
        }
        return w;
    }

    /// Message f_1..f_s combined as sum_h gamma^{h-1} f_h over the extension.
    Poly messageToSubfield(const Message& msg) const
    {
        validateMessage(*spec_, msg);
        const Field& E = *ext_;
        std::vector<Fe> coeffs(spec_->k, 0);
        std::vector<Fe> tuple(spec_->s);
        for (size_t j = 0; j < spec_->k; ++j) {
            for (size_t h = 0; h < spec_->s; ++h) tuple[h] = msg[h].coeff(j);
            coeffs[j] = psi_->embed(tuple);
        }
        return Poly(E, std::move(coeffs));
    }

    Message messageFromSubfield(const Poly& f) const
    {
        Message msg(spec_->s, Poly::zero(spec_->F()));
        std::vector<std::vector<Fe>> coeffs(spec_->s, std::vector<Fe>(spec_->k, 0));
        for (size_t j = 0; j < spec_->k; ++j) {
            std::vector<Fe> tuple = psi_->invert(f.coeff(j));
            for (size_t h = 0; h < spec_->s; ++h) coeffs[h][j] = tuple[h];
        }
        for (size_t h = 0; h < spec_->s; ++h) msg[h] = Poly(spec_->F(), std::move(coeffs[h]));
        return msg;
    }

    /// RS spec over the extension with the same (embedded) evaluation points.
    CodeSpec subfieldSpec() const
    {
        return makeCodeSpec(Family::RS, spec_->n, spec_->k, *ext_, 1, std::nullopt, spec_->alphas);
    }

private:
    const CodeSpec* spec_;
    std::unique_ptr<Field> ext_;
    std::unique_ptr<PsiMap> psi_;
};

} // namespace semidec

#endif
