#ifndef SEMIDEC_EXPERIMENT_HPP
#define SEMIDEC_EXPERIMENT_HPP

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "channel.hpp"
#include "codes.hpp"
#include "config.hpp"
#include "decode.hpp"
#include "errors.hpp"
#include "rng.hpp"

namespace semidec {

struct ExperimentSetup {
    Family family = Family::IRS;
    uint64_t p = 0;
    size_t m = 1;
    size_t n = 0;
    size_t k = 0;
    size_t s = 1;
    size_t L = 1; // ignored for RS/IRS
    Adversary adversary = Adversary::RandomReplace;
    size_t trials = 0;
    uint64_t seed = 0;
    std::vector<std::pair<size_t, size_t>> grid; // (e0, e) points
};

struct GridRow {
    size_t e0 = 0;
    size_t e = 0;
    size_t trials = 0;
    size_t successes = 0;     // decoder succeeded with the transmitted message
    size_t wrongMessage = 0;  // decoder claimed success but the message differs
    size_t failInexact = 0;
    size_t failOverflow = 0;
    size_t failDistance = 0;
    size_t failDegenerate = 0;
    long locDegSum = 0;
    int locDegMax = 0;
    bool inRegion = false;
    double theoryBound = 0.0;
    double wallMs = 0.0;
};

inline size_t threadCount()
{
    const char* env = std::getenv("SEMIDEC_THREADS");
    if (!env) return 1;
    long v = std::atol(env);
    return v > 0 ? static_cast<size_t>(v) : 1;
}

namespace detail {

inline Message randomMessage(const CodeSpec& spec, Rng& rng)
{
    Message msg;
    msg.reserve(spec.messagePolyCount());
    for (size_t h = 0; h < spec.messagePolyCount(); ++h) {
        std::vector<Fe> c(spec.k);
        for (Fe& x : c) x = spec.F().uniform(rng);
        msg.emplace_back(spec.F(), std::move(c));
    }
    return msg;
}

inline DecodeResult dispatchDecode(const CodeSpec& spec, const Word& y, size_t L, size_t e,
                                   MinimizePath path)
{
    switch (spec.family) {
    case Family::RS:
    case Family::IRS: return decodeIRS(spec, y, e, path);
    case Family::FRS: return decodeFRS(spec, y, L, e, path);
    case Family::MULT: return decodeMULT(spec, y, L, e, path);
    }
    throw Error(Errc::InvalidParameters, "unknown family");
}

} // namespace detail

/// One grid point: `trials` independent transmissions. Every trial is keyed by
/// (seed, e0, e, trial index) so any row reproduces in isolation; the thread
/// split only partitions the index range, so results are thread-count invariant.
inline GridRow runGridPoint(const CodeSpec& spec, size_t L, Adversary adv, size_t e0, size_t e,
                            size_t trials, uint64_t seed, MinimizePath path = MinimizePath::Auto)
{
    GridRow row;
    row.e0 = e0;
    row.e = e;
    row.trials = trials;
    row.inRegion = inRegion(spec.family, spec.n, spec.k, spec.s, L, e0, e);
    row.theoryBound = theoryFailureBound(spec.family, e, spec.F().order(), spec.s, L);
    auto t0 = std::chrono::steady_clock::now();

    auto runRange = [&](size_t lo, size_t hi, GridRow& acc) {
        for (size_t t = lo; t < hi; ++t) {
            Rng msgRng = Rng::derive(seed, e0, e, t);
            Message msg = detail::randomMessage(spec, msgRng);
            Word c = encode(spec, msg);
            ChannelSpec ch{e0, e, adv, Rng::derive(seed ^ 0xc4a77e1u, e0, e, t).next()};
            auto [y, pat] = applySemiAdversarial(spec.F(), c, ch);
            DecodeResult res = detail::dispatchDecode(spec, y, L, e, path);
            if (res.success) {
                if (res.message == msg)
                    ++acc.successes;
                else
                    ++acc.wrongMessage;
            } else {
                switch (res.reason) {
                case FailReason::InexactDivision: ++acc.failInexact; break;
                case FailReason::DegreeOverflow: ++acc.failOverflow; break;
                case FailReason::DistanceExceeded: ++acc.failDistance; break;
                case FailReason::DegenerateInterpolant: ++acc.failDegenerate; break;
                case FailReason::None: break;
                }
            }
            if (res.locatorDegree > kDegNegInf && res.locatorDegree > 0) {
                acc.locDegSum += res.locatorDegree;
                acc.locDegMax = std::max(acc.locDegMax, res.locatorDegree);
            }
        }
    };

    size_t threads = std::min(threadCount(), trials ? trials : size_t{1});
    if (threads <= 1) {
        runRange(0, trials, row);
    } else {
        std::vector<GridRow> partial(threads);
        std::vector<std::thread> pool;
        size_t chunk = (trials + threads - 1) / threads;
        for (size_t i = 0; i < threads; ++i) {
            size_t lo = i * chunk, hi = std::min(trials, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi, i] { runRange(lo, hi, partial[i]); });
        }
        for (auto& th : pool) th.join();
        for (const GridRow& p : partial) {
            row.successes += p.successes;
            row.wrongMessage += p.wrongMessage;
            row.failInexact += p.failInexact;
            row.failOverflow += p.failOverflow;
            row.failDistance += p.failDistance;
            row.failDegenerate += p.failDegenerate;
            row.locDegSum += p.locDegSum;
            row.locDegMax = std::max(row.locDegMax, p.locDegMax);
        }
    }
    row.wallMs = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return row;
}

inline std::vector<GridRow> runGrid(const CodeSpec& spec, size_t L, const ExperimentSetup& setup,
                                    MinimizePath path = MinimizePath::Auto)
{
    std::vector<GridRow> rows;
    rows.reserve(setup.grid.size());
    for (auto [e0, e] : setup.grid)
        rows.push_back(
            runGridPoint(spec, L, setup.adversary, e0, e, setup.trials, setup.seed, path));
    return rows;
}

// --- setup parsing ---

inline ExperimentSetup setupFromConfig(const Config& cfg)
{
    ExperimentSetup s;
    s.family = familyFromString(cfg.get("code", "family"));
    s.p = cfg.getUint("code", "p");
    s.m = cfg.getUintOr("code", "m", 1);
    s.n = cfg.getUint("code", "n");
    s.k = cfg.getUint("code", "k");
    s.s = cfg.getUintOr("code", "s", 1);
    s.L = cfg.getUintOr("code", "L", s.s);
    s.adversary = adversaryFromString(cfg.getOr("channel", "adversary", "randomReplace"));
    s.trials = cfg.getUint("run", "trials");
    s.seed = cfg.getUintOr("run", "seed", 1);
    if (cfg.has("run", "grid")) {
        // explicit list of e0:e pairs, whitespace separated
        std::istringstream in(cfg.get("run", "grid"));
        std::string tok;
        while (in >> tok) {
            size_t colon = tok.find(':');
            if (colon == std::string::npos)
                throw Error(Errc::ParseError, "grid entries must be e0:e, got " + tok);
            s.grid.emplace_back(std::stoull(tok.substr(0, colon)),
                                std::stoull(tok.substr(colon + 1)));
        }
    } else {
        size_t e0 = cfg.getUintOr("run", "e0", 0);
        size_t eMin = cfg.getUint("run", "e_min");
        size_t eMax = cfg.getUint("run", "e_max");
        size_t eStep = cfg.getUintOr("run", "e_step", 1);
        if (eStep == 0) throw Error(Errc::ParseError, "e_step must be positive");
        for (size_t e = eMin; e <= eMax; e += eStep) s.grid.emplace_back(std::min(e0, e), e);
    }
    if (s.grid.empty()) throw Error(Errc::ParseError, "experiment grid is empty");
    return s;
}

// --- output writers ---

namespace detail {

inline std::string fmt(double v, int prec)
{
    std::ostringstream out;
    out << std::fixed << std::setprecision(prec) << v;
    return out.str();
}

} // namespace detail

/// Deterministic CSV: same setup and seed give byte-identical output, so no
/// wall-clock column here (the JSON writer carries timing instead).
inline std::string gridCsv(const std::vector<GridRow>& rows)
{
    std::ostringstream out;
    out << "e0,e,trials,successes,success_fraction,success_rate,wrong_message,"
           "fail_inexact_division,fail_degree_overflow,fail_distance_exceeded,"
           "fail_degenerate_interpolant,mean_locator_degree,max_locator_degree,"
           "in_region,theory_failure_bound\n";
    for (const GridRow& r : rows) {
        double rate = r.trials ? static_cast<double>(r.successes) / static_cast<double>(r.trials) : 0;
        double meanLoc = r.trials ? static_cast<double>(r.locDegSum) / static_cast<double>(r.trials) : 0;
        out << r.e0 << ',' << r.e << ',' << r.trials << ',' << r.successes << ','
            << r.successes << '/' << r.trials << ',' << detail::fmt(rate, 6) << ','
            << r.wrongMessage << ',' << r.failInexact << ',' << r.failOverflow << ','
            << r.failDistance << ',' << r.failDegenerate << ',' << detail::fmt(meanLoc, 4) << ','
            << r.locDegMax << ',' << (r.inRegion ? 1 : 0) << ','
            << detail::fmt(r.theoryBound, 8) << '\n';
    }
    return out.str();
}

inline std::string gridJson(const ExperimentSetup& setup, const std::vector<GridRow>& rows)
{
    nlohmann::json doc;
    doc["code"] = {{"family", familyName(setup.family)}, {"p", setup.p}, {"m", setup.m},
                   {"n", setup.n},  {"k", setup.k},      {"s", setup.s}, {"L", setup.L}};
    doc["channel"] = {{"adversary", adversaryName(setup.adversary)}};
    doc["run"] = {{"trials", setup.trials}, {"seed", setup.seed}};
    doc["rows"] = nlohmann::json::array();
    for (const GridRow& r : rows) {
        double rate = r.trials ? static_cast<double>(r.successes) / static_cast<double>(r.trials) : 0;
        double meanLoc = r.trials ? static_cast<double>(r.locDegSum) / static_cast<double>(r.trials) : 0;
        doc["rows"].push_back({{"e0", r.e0},
                               {"e", r.e},
                               {"trials", r.trials},
                               {"successes", r.successes},
                               {"success_rate", rate},
                               {"wrong_message", r.wrongMessage},
                               {"fail_inexact_division", r.failInexact},
                               {"fail_degree_overflow", r.failOverflow},
                               {"fail_distance_exceeded", r.failDistance},
                               {"fail_degenerate_interpolant", r.failDegenerate},
                               {"mean_locator_degree", meanLoc},
                               {"max_locator_degree", r.locDegMax},
                               {"in_region", r.inRegion},
                               {"theory_failure_bound", r.theoryBound},
                               {"wall_ms", r.wallMs}});
    }
    return doc.dump(2) + "\n";
}

// --- scaling benchmark ---

struct BenchRow {
    size_t n = 0;
    double medianMs = 0.0;
    double ratio = 0.0; // vs previous row, 0 for the first
};

/// Interleaved decode timing at fixed rate 1/4, s = 4, over the 65537 field,
/// at half the decoding radius. `fast` selects the quasi-linear interpolation
/// path and fast polynomial arithmetic; otherwise everything runs quadratic.
inline std::vector<BenchRow> runScalingBench(const std::vector<size_t>& sizes, size_t reps,
                                             bool fast, uint64_t seed)
{
    if (reps == 0) throw Error(Errc::InvalidParameters, "need at least one rep");
    Field F = Field::make(65537, 1);
    bool saved = fastPolyOpsEnabled();
    fastPolyOpsEnabled() = fast;
    std::vector<BenchRow> rows;
    try {
        for (size_t n : sizes) {
            size_t k = n / 4;
            size_t s = 4;
            CodeSpec spec = makeCodeSpec(Family::IRS, n, k, F, s);
            size_t e = static_cast<size_t>(radiusBound(Family::IRS, n, k, s, s)) / 2;
            Rng rng = Rng::derive(seed, n, 0xbe7c);
            Message msg = detail::randomMessage(spec, rng);
            Word c = encode(spec, msg);
            ChannelSpec ch{0, e, Adversary::RandomReplace, rng.next()};
            auto [y, pat] = applySemiAdversarial(F, c, ch);
            MinimizePath path = fast ? MinimizePath::Fast : MinimizePath::Iterative;
            // untimed warm-up decode so allocator and cache effects do not land
            // on the first timed repetition; skipped for the slow control build
            if (fast) {
                DecodeResult res = decodeIRS(spec, y, e, path);
                if (!res.success || res.message != msg)
                    throw Error(Errc::PreconditionViolated, "bench decode failed");
            }
            std::vector<double> times;
            for (size_t r = 0; r < reps; ++r) {
                auto t0 = std::chrono::steady_clock::now();
                DecodeResult res = decodeIRS(spec, y, e, path);
                auto t1 = std::chrono::steady_clock::now();
                if (!res.success || res.message != msg)
                    throw Error(Errc::PreconditionViolated, "bench decode failed");
                times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
            }
            std::sort(times.begin(), times.end());
            BenchRow row;
            row.n = n;
            row.medianMs = times[times.size() / 2];
            row.ratio = rows.empty() ? 0.0 : row.medianMs / rows.back().medianMs;
            rows.push_back(row);
        }
    } catch (...) {
        fastPolyOpsEnabled() = saved;
        throw;
    }
    fastPolyOpsEnabled() = saved;
    return rows;
}

inline std::string benchCsv(const std::vector<BenchRow>& rows)
{
    std::ostringstream out;
    out << "n,median_ms,ratio\n";
    for (const BenchRow& r : rows)
        out << r.n << ',' << detail::fmt(r.medianMs, 3) << ',' << detail::fmt(r.ratio, 3) << '\n';
    return out.str();
}

} // namespace semidec

#endif
