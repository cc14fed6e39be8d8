#include "lprog/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "lprog/bounds.hpp"
#include "lprog/calibration.hpp"
#include "lprog/constants.hpp"
#include "lprog/errors.hpp"
#include "lprog/progression.hpp"
#include "lprog/report.hpp"

namespace lprog::cli {

namespace {

using report::Json;

struct Context {
    FrozenConstants constants;
    std::string hash = "none"; // no constants file present
};

Context loadContext()
{
    Context ctx;
    const auto path = constantsPath();
    if (std::filesystem::exists(path)) {
        ctx.constants = loadConstants(path);
        ctx.hash = fileHash(path);
    }
    return ctx;
}

struct Common {
    std::string format = "json";
    std::string output;
};

void addCommon(CLI::App* sub, Common& c)
{
    sub->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    sub->add_option("--output", c.output, "Write the report to this file instead of stdout");
}

void emit(const Common& c, std::ostream& out, const std::string& text)
{
    if (c.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.output, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write --output " + c.output);
    f << text;
}

Json envelope(const std::string& command, Json config, const Context& ctx, Json result)
{
    Json j;
    j["command"] = command;
    j["config"] = std::move(config);
    j["constants_hash"] = ctx.hash;
    j["result"] = std::move(result);
    return j;
}

std::string dumpJson(const Json& j) { return j.dump(2) + "\n"; }

/// One-row CSV from the scalar fields of a flat record; [re, im] pairs become
/// two columns, other arrays and objects are skipped.
std::string flatCsv(const Json& record)
{
    std::vector<std::string> header;
    std::vector<std::string> row;
    auto cell = [](const Json& v) -> std::string {
        if (v.is_number_float()) return report::formatDouble(v.get<double>());
        if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
        if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
        if (v.is_string()) return v.get<std::string>();
        return "";
    };
    for (const auto& [key, v] : record.items()) {
        // Real coefficient lists share one cell, ';'-separated.
        if (v.is_array() && key.size() >= 4 && key.compare(key.size() - 4, 4, "poly") == 0) {
            std::string joined;
            for (const auto& c : v) joined += (joined.empty() ? "" : ";") + cell(c);
            header.push_back(key);
            row.push_back(joined);
        } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
            header.push_back(key + "_re");
            row.push_back(cell(v[0]));
            header.push_back(key + "_im");
            row.push_back(cell(v[1]));
        } else if (v.is_primitive() && !v.is_null()) {
            header.push_back(key);
            row.push_back(cell(v));
        }
    }
    return report::csv(header, {row});
}

DirichletCharacter characterOf(std::int64_t q, std::int64_t label)
{
    if (q < 1) throw std::invalid_argument("--modulus must be a positive integer");
    if (gcd64(label, q) != 1 || label < 1)
        throw std::invalid_argument("--conrey " + std::to_string(label) + " must be coprime to --modulus "
                                    + std::to_string(q));
    return DirichletCharacter::fromConrey(q, label);
}

void requireNonPrincipal(const DirichletCharacter& chi)
{
    if (chi.isPrincipal())
        throw std::invalid_argument("--conrey " + std::to_string(chi.label()) + " is the principal character mod "
                                    + std::to_string(chi.modulus()) + "; a non-principal character is required");
}

EvalMethod methodOf(const std::string& m) { return m == "oracle" ? EvalMethod::HurwitzOracle : EvalMethod::TruncatedSeries; }

struct CharOpts {
    std::int64_t modulus = 3;
    std::int64_t conrey = 2;
};

void addChar(CLI::App* sub, CharOpts& o, bool defaults)
{
    auto* m = sub->add_option("--modulus", o.modulus, "Modulus q");
    auto* c = sub->add_option("--conrey", o.conrey, "Conrey label of the character");
    if (defaults) {
        m->capture_default_str();
        c->capture_default_str();
    } else {
        m->required();
        c->required();
    }
}

struct PlanOpts {
    std::string method = "truncated";
    double C = 2.0;
    double constantFactor = 0.0;
    int retryCap = 6;
    CLI::Option* cfOption = nullptr;
};

void addPlan(CLI::App* sub, PlanOpts& o)
{
    sub->add_option("--method", o.method, "Evaluator")->check(CLI::IsMember({"oracle", "truncated"}))
        ->capture_default_str();
    sub->add_option("--bigc", o.C, "C in x > C|t|/2pi")->capture_default_str();
    o.cfOption = sub->add_option("--constant-factor", o.constantFactor,
                                 "Error-radius constant (default: the frozen value)");
    sub->add_option("--retry-cap", o.retryCap, "x-doublings before a point stays undetermined")->capture_default_str();
}

EvalPlan resolvePlan(const PlanOpts& o, const Context& ctx)
{
    EvalPlan p;
    p.method = methodOf(o.method);
    p.C = o.C;
    p.constantFactor = o.cfOption->count() ? o.constantFactor : ctx.constants.constantFactor;
    p.retryCap = o.retryCap;
    if (!(p.C > 1.0)) throw std::invalid_argument("--bigc must exceed 1");
    if (!(p.constantFactor > 0.0)) throw std::invalid_argument("--constant-factor must be positive");
    if (p.retryCap < 0) throw std::invalid_argument("--retry-cap must be nonnegative");
    return p;
}

Json planJson(const EvalPlan& p)
{
    return {{"method", toString(p.method)}, {"C", p.C}, {"constant_factor", p.constantFactor}, {"retry_cap", p.retryCap}};
}

struct ProgOpts {
    double alpha = 0.0;
    double beta = 1.0;
    double a = 0.0;
    double b = 0.0;
    CLI::Option* aOpt = nullptr;
    CLI::Option* bOpt = nullptr;
};

void addProgression(CLI::App* sub, ProgOpts& o)
{
    auto* al = sub->add_option("--alpha", o.alpha, "Progression offset alpha")->capture_default_str();
    auto* be = sub->add_option("--beta", o.beta, "Progression step beta")->capture_default_str();
    o.aOpt = sub->add_option("--a", o.a, "Offset a = 2 pi alpha")->excludes(al);
    o.bOpt = sub->add_option("--b", o.b, "Step b = 2 pi beta")->excludes(be);
}

ProgressionSpec resolveProgression(const ProgOpts& o)
{
    ProgressionSpec s{o.alpha, o.beta};
    if (o.aOpt->count()) s.alpha = ProgressionSpec::fromExternal(o.a, 1.0).alpha;
    if (o.bOpt->count()) s.beta = ProgressionSpec::fromExternal(0.0, o.b).beta;
    if (!std::isfinite(s.alpha) || !std::isfinite(s.beta) || s.beta == 0.0)
        throw std::invalid_argument("--beta (or --b) must be finite and nonzero");
    return s;
}

Polynomial parsePoly(const std::string& text)
{
    std::vector<double> coeffs;
    std::stringstream ss(text);
    ss.imbue(std::locale::classic());
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("--poly: cannot parse coefficient '" + item + "'");
        }
        if (used != item.size()) throw std::invalid_argument("--poly: cannot parse coefficient '" + item + "'");
        coeffs.push_back(v);
    }
    if (coeffs.empty()) throw std::invalid_argument("--poly needs at least one coefficient");
    return Polynomial(coeffs);
}

int runCalibrate(const std::string& path, bool quiet, std::ostream& out, std::ostream& err)
{
    const auto c = calibrateAll(quiet ? nullptr : &err);
    saveConstants(c, path);
    Json j;
    j["command"] = "calibrate";
    j["config"] = {{"output", path}};
    j["constants_hash"] = fileHash(path);
    j["result"] = report::constantsJson(c);
    out << dumpJson(j);
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Dirichlet L-functions along vertical progressions", "lprog"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    // chars
    Common charsCommon;
    std::int64_t charsModulus = 0;
    auto* chars = app.add_subcommand("chars", "Enumerate the characters mod q");
    chars->add_option("--modulus", charsModulus, "Modulus q")->required();
    addCommon(chars, charsCommon);

    // eval
    Common evalCommon;
    CharOpts evalChar;
    PlanOpts evalPlan;
    double evalSigma = 0.5;
    double evalT = 0.0;
    double evalX = 0.0;
    auto* eval = app.add_subcommand("eval", "Evaluate L(s, chi) once");
    addChar(eval, evalChar, false);
    eval->add_option("--sigma", evalSigma, "Real part of s")->capture_default_str();
    eval->add_option("--t", evalT, "Imaginary part of s")->capture_default_str();
    auto* evalXOpt = eval->add_option("--x", evalX, "Truncation parameter x (default C|t|/2pi + 100)");
    addPlan(eval, evalPlan);
    addCommon(eval, evalCommon);

    // moment
    Common momentCommon;
    CharOpts momentChar;
    ProgOpts momentProg;
    PlanOpts momentPlan;
    std::int64_t momentT = 0;
    std::string momentMoll = "P1";
    double momentTheta = reference::kMomentTheta;
    auto* moment = app.add_subcommand("moment", "First and second mollified moments along the progression");
    addChar(moment, momentChar, true);
    addProgression(moment, momentProg);
    moment->add_option("--T", momentT, "Number of progression points")->required();
    moment->add_option("--mollifier", momentMoll, "Mollifier polynomial")
        ->check(CLI::IsMember({"P1", "P2"}))
        ->capture_default_str();
    moment->add_option("--theta", momentTheta, "X = T^theta for P1")->capture_default_str();
    addPlan(moment, momentPlan);
    addCommon(moment, momentCommon);

    // nonvanish
    Common nvCommon;
    CharOpts nvChar;
    ProgOpts nvProg;
    PlanOpts nvPlan;
    std::int64_t nvT = 0;
    double nvTheta = reference::kMomentTheta;
    auto* nonvanish = app.add_subcommand("nonvanish", "Per-point nonvanishing scan with the moment count bound");
    addChar(nonvanish, nvChar, true);
    addProgression(nonvanish, nvProg);
    nonvanish->add_option("--T", nvT, "Number of progression points")->required();
    nonvanish->add_option("--theta", nvTheta, "P1 mollifier length X = T^theta for the count bound")
        ->capture_default_str();
    addPlan(nonvanish, nvPlan);
    addCommon(nonvanish, nvCommon);

    // first-nonzero
    Common fnCommon;
    CharOpts fnChar;
    PlanOpts fnPlan;
    double fnA = 0.0;
    double fnB = 0.0;
    double fnD = 6.0;
    double fnSafety = 0.0;
    std::int64_t fnMax = 100000;
    auto* firstNz = app.add_subcommand("first-nonzero", "Smallest k with L(1/2 + i(a + kb), chi) nonzero");
    addChar(firstNz, fnChar, false);
    firstNz->add_option("--a", fnA, "Offset a")->capture_default_str();
    firstNz->add_option("--b", fnB, "Step b")->required();
    firstNz->add_option("--D", fnD, "Exponent constant D > 8 log 2")->capture_default_str();
    auto* fnSafetyOpt = firstNz->add_option("--safety", fnSafety, "Safety factor on the bound (default: frozen)");
    firstNz->add_option("--max-index", fnMax, "Search cap")->capture_default_str();
    addPlan(firstNz, fnPlan);
    addCommon(firstNz, fnCommon);

    // minsum
    Common msCommon;
    std::string msVariant = "general";
    double msA = 1.0;
    double msB = 1000.0;
    double msBeta = 1.0;
    double msT = 10.0;
    std::int64_t msJ = 0;
    bool msGrid = false;
    auto* minsum = app.add_subcommand("minsum", "Nearest-integer sums against their bound shapes");
    minsum->add_option("--variant", msVariant, "Bound shape")
        ->check(CLI::IsMember({"general", "beta-ge-1", "interval"}))
        ->capture_default_str();
    minsum->add_option("--A", msA, "Lower end A")->capture_default_str();
    minsum->add_option("--B", msB, "Upper end B")->capture_default_str();
    minsum->add_option("--beta", msBeta, "beta")->capture_default_str();
    minsum->add_option("--T", msT, "Cap T")->capture_default_str();
    auto* msJOpt = minsum->add_option("--j", msJ, "Interval index (interval variant; sets A = E_j, B = E_{j+1})");
    minsum->add_flag("--grid", msGrid, "Run the declared grid for the variant");
    addCommon(minsum, msCommon);

    // wfunc
    Common wCommon;
    double wL = 1.0;
    std::vector<double> wX;
    double wAlpha = 1.0;
    auto* wfunc = app.add_subcommand("wfunc", "w_L(x) = exp(L log x / log log x)");
    wfunc->add_option("--L", wL, "L")->required();
    wfunc->add_option("--x", wX, "Arguments x > e")->required();
    auto* wAlphaOpt = wfunc->add_option("--alpha", wAlpha, "Also report w_L(x)^alpha and w_{alpha L}(x)");
    addCommon(wfunc, wCommon);

    // bauer-check
    Common bCommon;
    CharOpts bChar;
    PlanOpts bPlan;
    bPlan.method = "oracle";
    double bT = 500.0;
    double bTheta = reference::kBauerTheta;
    std::string bPoly = "0,1";
    double bRelTol = 1e-8;
    bool bMainOnly = false;
    auto* bauer = app.add_subcommand("bauer-check", "Mollified mean square against its main term");
    addChar(bauer, bChar, true);
    bauer->add_option("--T", bT, "Upper limit T")->capture_default_str();
    bauer->add_option("--theta", bTheta, "X = T^theta")->capture_default_str();
    bauer->add_option("--poly", bPoly, "Q1 coefficients, ascending, comma-separated")->capture_default_str();
    bauer->add_option("--rel-tol", bRelTol, "Per-panel quadrature tolerance")->capture_default_str();
    bauer->add_flag("--main-only", bMainOnly, "Only the closed-form main terms");
    addPlan(bauer, bPlan);
    addCommon(bauer, bCommon);

    // calibrate
    std::string calPath = constantsPath().string();
    bool calQuiet = false;
    auto* calibrate = app.add_subcommand("calibrate", "Recompute and write the frozen constants");
    calibrate->add_option("--output", calPath, "Constants file to write")->capture_default_str();
    calibrate->add_flag("--quiet", calQuiet, "No progress lines");

    std::vector<const char*> argv{"lprog"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (calibrate->parsed()) return runCalibrate(calPath, calQuiet, out, err);

        const Context ctx = loadContext();

        if (chars->parsed()) {
            if (charsModulus < 1) throw std::invalid_argument("--modulus must be a positive integer");
            const auto list = enumerateCharacters(charsModulus);
            if (charsCommon.format == "csv") {
                emit(charsCommon, out, report::charactersCsv(list));
            } else {
                Json arr = Json::array();
                for (const auto& chi : list) arr.push_back(report::characterJson(chi));
                emit(charsCommon, out,
                     dumpJson(envelope("chars", {{"modulus", charsModulus}}, ctx, {{"characters", std::move(arr)}})));
            }
            return kExitOk;
        }

        if (eval->parsed()) {
            const auto chi = characterOf(evalChar.modulus, evalChar.conrey);
            requireNonPrincipal(chi);
            const auto plan = resolvePlan(evalPlan, ctx);
            const ComplexPoint s{evalSigma, evalT};
            Json config = {{"modulus", evalChar.modulus}, {"conrey", evalChar.conrey}, {"sigma", evalSigma}, {"t", evalT}};
            config["plan"] = planJson(plan);
            EvaluatedValue v;
            if (plan.method == EvalMethod::HurwitzOracle) {
                v = lViaHurwitz(s, chi);
            } else {
                const double x =
                    evalXOpt->count() ? evalX : plan.C * std::fabs(evalT) / (2.0 * std::numbers::pi) + 100.0;
                config["x"] = x;
                v = lTruncated(s, chi, {plan.C, x, plan.constantFactor});
            }
            const auto rec = report::evaluationJson(v);
            emit(evalCommon, out, evalCommon.format == "csv" ? flatCsv(rec) : dumpJson(envelope("eval", config, ctx, rec)));
            return kExitOk;
        }

        if (moment->parsed()) {
            const auto chi = characterOf(momentChar.modulus, momentChar.conrey);
            requireNonPrincipal(chi);
            if (momentT < 1) throw std::invalid_argument("--T must be a positive integer");
            const auto spec = resolveProgression(momentProg);
            const auto plan = resolvePlan(momentPlan, ctx);
            const auto label = momentMoll == "P2" ? MollifierLabel::P2 : MollifierLabel::P1;
            if (label == MollifierLabel::P1 && !(momentTheta > 0.0 && momentTheta < 1.0))
                throw std::invalid_argument("--theta must lie in (0, 1)");
            const auto moll = standardMollifier(label, momentT, momentTheta, std::fabs(spec.beta), chi.modulus());
            const auto r = computeMoments(momentT, spec, chi, moll, plan);
            Json config = {{"modulus", momentChar.modulus}, {"conrey", momentChar.conrey}, {"alpha", spec.alpha},
                           {"beta", spec.beta},        {"T", momentT},              {"mollifier", momentMoll},
                           {"theta", momentTheta}};
            config["plan"] = planJson(plan);
            const auto rec = report::momentJson(r);
            emit(momentCommon, out,
                 momentCommon.format == "csv" ? flatCsv(rec) : dumpJson(envelope("moment", config, ctx, rec)));
            return kExitOk;
        }

        if (nonvanish->parsed()) {
            const auto chi = characterOf(nvChar.modulus, nvChar.conrey);
            requireNonPrincipal(chi);
            if (nvT < 1) throw std::invalid_argument("--T must be a positive integer");
            if (!(nvTheta > 0.0 && nvTheta < 1.0)) throw std::invalid_argument("--theta must lie in (0, 1)");
            const auto spec = resolveProgression(nvProg);
            const auto plan = resolvePlan(nvPlan, ctx);
            const auto moll = standardMollifier(MollifierLabel::P1, nvT, nvTheta, std::fabs(spec.beta), chi.modulus());
            const auto m = computeMoments(nvT, spec, chi, moll, plan);
            const auto scan = nonvanishingScan(nvT, spec, chi, plan);
            if (nvCommon.format == "csv") {
                emit(nvCommon, out, report::verdictsCsv(scan.verdicts));
            } else {
                Json config = {{"modulus", nvChar.modulus}, {"conrey", nvChar.conrey}, {"alpha", spec.alpha},
                               {"beta", spec.beta},      {"T", nvT},              {"theta", nvTheta}};
                config["plan"] = planJson(plan);
                auto rec = report::scanJson(scan, m.csLowerBound);
                rec["moment"] = report::momentJson(m);
                emit(nvCommon, out, dumpJson(envelope("nonvanish", config, ctx, rec)));
            }
            return kExitOk;
        }

        if (firstNz->parsed()) {
            const auto chi = characterOf(fnChar.modulus, fnChar.conrey);
            const auto plan = resolvePlan(fnPlan, ctx);
            const double safety = fnSafetyOpt->count() ? fnSafety : ctx.constants.firstNonzeroSafetyFactor;
            if (!(safety > 0.0)) throw std::invalid_argument("--safety must be positive");
            if (fnMax < 1) throw std::invalid_argument("--max-index must be positive");
            const auto r = firstNonzeroIndex(chi, fnA, fnB, fnD, plan, safety, fnMax);
            Json config = {{"modulus", fnChar.modulus}, {"conrey", fnChar.conrey}, {"a", fnA},           {"b", fnB},
                           {"D", fnD},                {"safety", safety},        {"max_index", fnMax}};
            config["plan"] = planJson(plan);
            const auto rec = report::firstNonzeroJson(r);
            emit(fnCommon, out,
                 fnCommon.format == "csv" ? flatCsv(rec) : dumpJson(envelope("first-nonzero", config, ctx, rec)));
            if (!r.withinBound) {
                err << "finding: k = " << r.k << " exceeds safety * bound = " << r.safetyFactor * r.theoremBound << '\n';
                return kExitFinding;
            }
            return kExitOk;
        }

        if (minsum->parsed()) {
            const auto variant = msVariant == "interval"    ? MinSumVariant::IntervalLemma
                                 : msVariant == "beta-ge-1" ? MinSumVariant::BetaGE1
                                                            : MinSumVariant::General;
            std::vector<MinSumResult> rows;
            Json config = {{"variant", msVariant}, {"grid", msGrid}};
            if (msGrid) {
                if (variant == MinSumVariant::IntervalLemma) {
                    for (double beta : reference::kIntervalBeta)
                        for (auto& r : intervalLemmaGrid(beta)) rows.push_back(r);
                } else {
                    rows = shapeGrid(variant);
                }
            } else if (variant == MinSumVariant::IntervalLemma) {
                if (!msJOpt->count()) throw std::invalid_argument("--j is required for the interval variant");
                if (msJ < 0) throw std::invalid_argument("--j must be nonnegative");
                const double a = ejBoundary(msBeta, msJ);
                const double b = ejBoundary(msBeta, msJ + 1);
                config.update({{"beta", msBeta}, {"T", msT}, {"j", msJ}});
                rows.push_back(minSumCompare(a, b, msBeta, msT, variant, msJ));
            } else {
                config.update({{"A", msA}, {"B", msB}, {"beta", msBeta}, {"T", msT}});
                rows.push_back(minSumCompare(msA, msB, msBeta, msT, variant));
            }
            if (msCommon.format == "csv") {
                emit(msCommon, out, report::minSumCsv(rows));
            } else {
                Json arr = Json::array();
                for (const auto& r : rows) arr.push_back(report::minSumJson(r));
                emit(msCommon, out, dumpJson(envelope("minsum", config, ctx, {{"rows", std::move(arr)}})));
            }
            return kExitOk;
        }

        if (wfunc->parsed()) {
            if (!(wL > 0.0)) throw std::invalid_argument("--L must be positive");
            std::vector<std::vector<std::string>> csvRows;
            Json arr = Json::array();
            for (double x : wX) {
                const double v = wFunction(wL, x);
                Json rec = {{"L", wL}, {"x", x}, {"value", v}};
                std::vector<std::string> row{report::formatDouble(wL), report::formatDouble(x), report::formatDouble(v)};
                if (wAlphaOpt->count()) {
                    const double pw = std::pow(v, wAlpha);
                    const double scaled = wFunction(wAlpha * wL, x);
                    rec["alpha"] = wAlpha;
                    rec["power"] = pw;
                    rec["scaled"] = scaled;
                    row.insert(row.end(), {report::formatDouble(wAlpha), report::formatDouble(pw),
                                           report::formatDouble(scaled)});
                }
                arr.push_back(std::move(rec));
                csvRows.push_back(std::move(row));
            }
            if (wCommon.format == "csv") {
                std::vector<std::string> header{"L", "x", "value"};
                if (wAlphaOpt->count()) header.insert(header.end(), {"alpha", "power", "scaled"});
                emit(wCommon, out, report::csv(header, csvRows));
            } else {
                Json config = {{"L", wL}, {"x", wX}};
                if (wAlphaOpt->count()) config["alpha"] = wAlpha;
                emit(wCommon, out, dumpJson(envelope("wfunc", config, ctx, {{"values", std::move(arr)}})));
            }
            return kExitOk;
        }

        if (bauer->parsed()) {
            const auto chi = characterOf(bChar.modulus, bChar.conrey);
            requireNonPrincipal(chi);
            const auto plan = resolvePlan(bPlan, ctx);
            const auto Q1 = parsePoly(bPoly);
            if (!(bT > 1.0)) throw std::invalid_argument("--T must exceed 1");
            if (!(bTheta > 0.0 && bTheta < 0.5)) throw std::invalid_argument("--theta must lie in (0, 1/2)");
            BauerInputs in;
            in.T = bT;
            in.X = std::pow(bT, bTheta);
            in.q = chi.modulus();
            in.Q1 = Q1;
            Json rec;
            rec["main_terms"] = report::bauerMainTermJson(bauerMainTerm(in));
            if (!bMainOnly) rec["quadrature"] = report::bauerQuadratureJson(bauerQuadratureCheck(bT, bTheta, chi, Q1, plan, bRelTol));
            Json config = {{"modulus", bChar.modulus}, {"conrey", bChar.conrey}, {"T", bT},
                           {"theta", bTheta},        {"poly", Q1.coeffs()},    {"rel_tol", bRelTol},
                           {"main_only", bMainOnly}};
            config["plan"] = planJson(plan);
            if (bCommon.format == "csv")
                emit(bCommon, out, flatCsv(bMainOnly ? rec["main_terms"] : rec["quadrature"]));
            else
                emit(bCommon, out, dumpJson(envelope("bauer-check", config, ctx, rec)));
            return kExitOk;
        }
    } catch (const NumericError& e) {
        err << "numeric finding: " << e.what() << '\n';
        return kExitFinding;
    } catch (const ExhaustionError& e) {
        err << "exhaustion finding: " << e.what() << '\n';
        return kExitFinding;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::range_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitValidation;
}

} // namespace lprog::cli
