#ifndef SEMIDEC_SERIALIZE_HPP
#define SEMIDEC_SERIALIZE_HPP

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "channel.hpp"
#include "codes.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "poly.hpp"

namespace semidec {

// Text formats. Messages: one polynomial per line, coefficients low to high,
// comma separated. Words: one symbol per line, s components comma separated.
// Blank lines and # comments are skipped when reading.

namespace detail {

inline std::vector<std::string> splitCommas(const std::string& line)
{
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

inline std::vector<std::string> contentLines(std::istream& in)
{
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        lines.push_back(line.substr(a, b - a + 1));
    }
    return lines;
}

} // namespace detail

inline void writeMessage(std::ostream& out, const Field& F, const Message& msg)
{
    for (const Poly& f : msg) {
        if (f.deg() < 0) {
            out << F.elementToString(0);
        } else {
            for (int j = 0; j <= f.deg(); ++j) {
                if (j) out << ',';
                out << F.elementToString(f.coeff(static_cast<size_t>(j)));
            }
        }
        out << '\n';
    }
}

inline Message readMessage(std::istream& in, const Field& F)
{
    Message msg;
    for (const std::string& line : detail::contentLines(in)) {
        std::vector<Fe> coeffs;
        for (const std::string& tok : detail::splitCommas(line)) {
            if (tok.empty()) throw Error(Errc::ParseError, "empty coefficient in message line");
            coeffs.push_back(F.elementFromString(tok));
        }
        msg.emplace_back(F, std::move(coeffs));
    }
    if (msg.empty()) throw Error(Errc::ParseError, "message file has no polynomials");
    return msg;
}

inline void writeWord(std::ostream& out, const Field& F, const Word& w)
{
    for (size_t i = 0; i < w.n; ++i) {
        for (size_t h = 0; h < w.s; ++h) {
            if (h) out << ',';
            out << F.elementToString(w.at(i, h));
        }
        out << '\n';
    }
}

inline Word readWord(std::istream& in, const Field& F)
{
    std::vector<std::vector<Fe>> rows;
    for (const std::string& line : detail::contentLines(in)) {
        std::vector<Fe> symbol;
        for (const std::string& tok : detail::splitCommas(line)) {
            if (tok.empty()) throw Error(Errc::ParseError, "empty component in word line");
            symbol.push_back(F.elementFromString(tok));
        }
        if (!rows.empty() && symbol.size() != rows[0].size())
            throw Error(Errc::ParseError, "inconsistent symbol width in word file");
        rows.push_back(std::move(symbol));
    }
    if (rows.empty()) throw Error(Errc::ParseError, "word file has no symbols");
    Word w(rows.size(), rows[0].size());
    for (size_t i = 0; i < w.n; ++i)
        for (size_t h = 0; h < w.s; ++h) w.at(i, h) = rows[i][h];
    return w;
}

/// Human-readable corruption log; write-only, meant for inspection and diffing.
inline void writePattern(std::ostream& out, const Field& F, const ErrorPattern& pat)
{
    out << "# corruption provenance\n";
    out << "adversarial = " << pat.adversarialWrites.size() << '\n';
    out << "random = " << pat.randomPositions.size() << '\n';
    auto list = [&](const char* name, const std::vector<size_t>& v) {
        out << name << " =";
        for (size_t i : v) out << ' ' << i;
        out << '\n';
    };
    list("setI", pat.setI);
    list("setJ", pat.setJ);
    list("randomPositions", pat.randomPositions);
    for (const auto& [pos, tuple] : pat.adversarialWrites) {
        out << "write " << pos << " =";
        for (Fe v : tuple) out << ' ' << F.elementToString(v);
        out << '\n';
    }
}

inline std::string readFileText(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void writeFileText(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out) throw Error(Errc::ParseError, "cannot open file for writing: " + path);
    out << text;
}

} // namespace semidec

#endif
