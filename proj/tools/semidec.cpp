// Command line front end: encode / corrupt / decode pipeline stages plus the
// Monte Carlo experiment harness, scaling benchmark, and the combinatorial
// checkers (impossibility witnesses and exact ball enumeration).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <semidec/bounds.hpp>
#include <semidec/config.hpp>
#include <semidec/experiment.hpp>
#include <semidec/serialize.hpp>

using namespace semidec;

namespace {

struct CodeOpts {
    std::string family = "RS";
    uint64_t p = 0;
    size_t m = 1;
    size_t n = 0;
    size_t k = 0;
    size_t s = 1;
    size_t L = 0;
    std::string gamma;
};

void addCodeOpts(CLI::App* cmd, CodeOpts& o, bool needL = false)
{
    cmd->add_option("--family", o.family, "RS | IRS | FRS | MULT")->required();
    cmd->add_option("--p", o.p, "field characteristic")->required();
    cmd->add_option("--m", o.m, "extension degree (default 1)");
    cmd->add_option("--n", o.n, "code length")->required();
    cmd->add_option("--k", o.k, "message degree bound")->required();
    cmd->add_option("--s", o.s, "symbol width / folding / multiplicity order");
    cmd->add_option("--gamma", o.gamma, "folding generator (FRS, element string)");
    if (needL) cmd->add_option("--L", o.L, "list parameter (FRS/MULT, default s)");
}

struct Built {
    std::unique_ptr<Field> fieldPtr; // CodeSpec keeps a pointer, so the address must be stable
    CodeSpec spec;
    const Field& field() const { return *fieldPtr; }
};

Built buildSpec(const CodeOpts& o)
{
    Built b;
    b.fieldPtr = std::make_unique<Field>(Field::make(o.p, o.m));
    std::optional<Fe> gamma;
    if (!o.gamma.empty()) gamma = b.fieldPtr->elementFromString(o.gamma);
    b.spec = makeCodeSpec(familyFromString(o.family), o.n, o.k, *b.fieldPtr, o.s, gamma);
    return b;
}

std::string slurp(const std::string& path)
{
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    return readFileText(path);
}

void emit(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-")
        std::cout << text;
    else
        writeFileText(path, text);
}

MinimizePath pathFromString(const std::string& s)
{
    if (s == "auto") return MinimizePath::Auto;
    if (s == "iterative") return MinimizePath::Iterative;
    if (s == "fast") return MinimizePath::Fast;
    throw Error(Errc::ParseError, "unknown interpolation path: " + s);
}

int run(int argc, char** argv)
{
    CLI::App app{"semi-adversarial decoding toolkit"};
    app.require_subcommand(1);

    // encode
    CodeOpts encOpts;
    std::string encIn, encOut;
    bool encRandom = false;
    uint64_t encSeed = 1;
    auto* enc = app.add_subcommand("encode", "message file -> word file");
    addCodeOpts(enc, encOpts);
    enc->add_option("--message", encIn, "message file, '-' for stdin");
    enc->add_flag("--random", encRandom, "draw a random message instead");
    enc->add_option("--seed", encSeed, "seed for --random");
    enc->add_option("--out", encOut, "output word file, default stdout");

    // corrupt
    CodeOpts corOpts;
    std::string corIn, corOut, corPat, corAdv = "randomReplace";
    size_t corE0 = 0, corE = 0;
    uint64_t corSeed = 1;
    auto* cor = app.add_subcommand("corrupt", "word file -> corrupted word file");
    addCodeOpts(cor, corOpts);
    cor->add_option("--in", corIn, "word file, '-' for stdin")->required();
    cor->add_option("--e0", corE0, "adversarial budget")->required();
    cor->add_option("--e", corE, "total budget")->required();
    cor->add_option("--adversary", corAdv, "adversary strategy");
    cor->add_option("--seed", corSeed, "channel seed");
    cor->add_option("--out", corOut, "output word file, default stdout");
    cor->add_option("--pattern", corPat, "also write the corruption log here");

    // decode
    CodeOpts decOpts;
    std::string decIn, decOut, decPath = "auto";
    size_t decE = 0;
    auto* dec = app.add_subcommand("decode", "word file -> message file");
    addCodeOpts(dec, decOpts, true);
    dec->add_option("--in", decIn, "word file, '-' for stdin")->required();
    dec->add_option("--e", decE, "decoding radius")->required();
    dec->add_option("--path", decPath, "auto | iterative | fast");
    dec->add_option("--out", decOut, "output message file, default stdout");

    // experiment
    std::string expConfig, expOut, expFormat = "csv", expPath = "auto";
    uint64_t expSeed = 0;
    bool expSeedSet = false;
    auto* exp = app.add_subcommand("experiment", "run a Monte Carlo grid from a config file");
    exp->add_option("--config", expConfig, "config file")->required();
    exp->add_option("--seed", expSeed, "override the config seed")->each([&](const std::string&) {
        expSeedSet = true;
    });
    exp->add_option("--out", expOut, "override the config output path");
    exp->add_option("--format", expFormat, "csv | json");
    exp->add_option("--path", expPath, "auto | iterative | fast");

    // bench
    std::string benSizes = "1024,2048,4096,8192,16384", benOut;
    size_t benReps = 3;
    bool benBaseline = false;
    uint64_t benSeed = 1;
    auto* ben = app.add_subcommand("bench", "decode timing over doubling sizes");
    ben->add_option("--sizes", benSizes, "comma separated lengths");
    ben->add_option("--reps", benReps, "repetitions per size (median reported)");
    ben->add_flag("--baseline", benBaseline, "force quadratic arithmetic and iterative reduction");
    ben->add_option("--seed", benSeed, "instance seed");
    ben->add_option("--out", benOut, "output CSV, default stdout");

    // gssb
    uint64_t gsP = 17, gsSeed = 1;
    size_t gsN = 12, gsK = 4, gsE0 = 0, gsE = 0, gsL = 1, gsSamples = 10;
    auto* gs = app.add_subcommand("gssb", "construct and verify an impossibility witness");
    gs->add_option("--p", gsP, "prime field size");
    gs->add_option("--n", gsN, "code length");
    gs->add_option("--k", gsK, "message degree bound");
    gs->add_option("--e0", gsE0, "adversarial budget")->required();
    gs->add_option("--e", gsE, "total budget")->required();
    gs->add_option("--L", gsL, "witness list size minus one");
    gs->add_option("--seed", gsSeed, "witness seed");
    gs->add_option("--samples", gsSamples, "received words sampled per witness");

    // ballcheck
    CodeOpts ballOpts;
    std::string ballIn;
    size_t ballRadius = 0;
    auto* ball = app.add_subcommand("ballcheck", "count codewords within a Hamming ball");
    addCodeOpts(ball, ballOpts);
    ball->add_option("--in", ballIn, "center word file, '-' for stdin")->required();
    ball->add_option("--radius", ballRadius, "ball radius")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2; // usage errors exit 2, --help exits 0
    }

    if (*enc) {
        Built b = buildSpec(encOpts);
        Message msg;
        if (encRandom) {
            Rng rng(encSeed);
            msg = detail::randomMessage(b.spec, rng);
        } else {
            if (encIn.empty()) throw Error(Errc::ParseError, "need --message or --random");
            std::istringstream in(slurp(encIn));
            msg = readMessage(in, b.field());
        }
        Word w = encode(b.spec, msg);
        std::ostringstream out;
        writeWord(out, b.field(), w);
        emit(encOut, out.str());
        return 0;
    }
    if (*cor) {
        Built b = buildSpec(corOpts);
        std::istringstream in(slurp(corIn));
        Word w = readWord(in, b.field());
        if (w.n != b.spec.n || w.s != b.spec.s)
            throw Error(Errc::ShapeMismatch, "word shape does not match the code parameters");
        ChannelSpec ch{corE0, corE, adversaryFromString(corAdv), corSeed};
        auto [y, pat] = applySemiAdversarial(b.field(), w, ch);
        std::ostringstream out;
        writeWord(out, b.field(), y);
        emit(corOut, out.str());
        if (!corPat.empty()) {
            std::ostringstream pout;
            writePattern(pout, b.field(), pat);
            writeFileText(corPat, pout.str());
        }
        return 0;
    }
    if (*dec) {
        Built b = buildSpec(decOpts);
        std::istringstream in(slurp(decIn));
        Word y = readWord(in, b.field());
        if (y.n != b.spec.n || y.s != b.spec.s)
            throw Error(Errc::ShapeMismatch, "word shape does not match the code parameters");
        size_t L = decOpts.L ? decOpts.L : decOpts.s;
        DecodeResult res =
            detail::dispatchDecode(b.spec, y, L, decE, pathFromString(decPath));
        std::cerr << "status " << (res.success ? "success" : failReasonName(res.reason)) << '\n';
        if (res.success) {
            std::ostringstream out;
            writeMessage(out, b.field(), res.message);
            emit(decOut, out.str());
        }
        return 0;
    }
    if (*exp) {
        Config cfg = Config::parseFile(expConfig);
        ExperimentSetup setup = setupFromConfig(cfg);
        if (expSeedSet) setup.seed = expSeed;
        std::string outPath = !expOut.empty() ? expOut : cfg.getOr("run", "out", "");
        Field F = Field::make(setup.p, setup.m);
        CodeSpec spec = makeCodeSpec(setup.family, setup.n, setup.k, F, setup.s);
        std::vector<GridRow> rows = runGrid(spec, setup.L, setup, pathFromString(expPath));
        if (expFormat == "csv")
            emit(outPath, gridCsv(rows));
        else if (expFormat == "json")
            emit(outPath, gridJson(setup, rows));
        else
            throw Error(Errc::ParseError, "unknown format: " + expFormat);
        return 0;
    }
    if (*ben) {
        std::vector<size_t> sizes;
        std::istringstream in(benSizes);
        std::string tok;
        while (std::getline(in, tok, ',')) sizes.push_back(std::stoull(tok));
        std::vector<BenchRow> rows = runScalingBench(sizes, benReps, !benBaseline, benSeed);
        emit(benOut, benchCsv(rows));
        return 0;
    }
    if (*gs) {
        Field F = Field::make(gsP, 1);
        CodeSpec spec = makeCodeSpec(Family::RS, gsN, gsK, F, 1);
        GssbWitness w = gssbWitness(spec, gsE0, gsE, gsL, gsSeed);
        bool ok = gssbVerify(spec, w, gsE0, gsE);
        std::cout << "verified " << (ok ? 1 : 0) << '\n';
        Rng rng = Rng::derive(gsSeed, 0x5a3);
        size_t allHit = 0;
        for (size_t t = 0; t < gsSamples; ++t) {
            Word y = w.z;
            for (size_t i : w.kSet) y.at(i, 0) = F.uniform(rng);
            BallQuery q{y, gsE, &spec};
            if (ballIntersect(q).size() >= gsL + 1) ++allHit;
        }
        std::cout << "samples_with_large_ball " << allHit << '/' << gsSamples << '\n';
        return ok && allHit == gsSamples ? 0 : 1;
    }
    if (*ball) {
        Built b = buildSpec(ballOpts);
        std::istringstream in(slurp(ballIn));
        Word y = readWord(in, b.field());
        BallQuery q{y, ballRadius, &b.spec};
        std::vector<Message> hits = ballIntersect(q);
        std::cout << "hits " << hits.size() << '\n';
        for (const Message& msg : hits) writeMessage(std::cout, b.field(), msg);
        return 0;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error (" << errcName(e.code()) << "): " << e.what() << '\n';
        return e.code() == Errc::ParseError ? 3 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
