#include "lprog/calibration.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

#include "lprog/numeric.hpp"

namespace lprog {

namespace reference {

DirichletCharacter character() { return DirichletCharacter::fromConrey(kModulus, kLabel); }

ProgressionSpec progression() { return {0.0, 1.0}; }

} // namespace reference

std::vector<ConformanceCase> conformanceGrid()
{
    std::vector<ConformanceCase> grid;
    for (std::int64_t q : reference::kConformanceModuli)
        for (const auto& chi : enumerateCharacters(q)) {
            if (chi.isPrincipal()) continue;
            for (double t : reference::kConformanceT)
                for (double C : reference::kConformanceC)
                    for (double off : reference::kConformanceOffset)
                        grid.push_back({q, chi.label(), t, C, C * std::fabs(t) / (2.0 * std::numbers::pi) + off});
        }
    return grid;
}

std::vector<ConformanceResult> runConformance(double constantFactor)
{
    const auto grid = conformanceGrid();
    std::vector<ConformanceResult> out(grid.size());
    parallelFor(grid.size(), [&](std::size_t i) {
        const auto& c = grid[i];
        const auto chi = DirichletCharacter::fromConrey(c.q, c.label);
        const ComplexPoint s{0.5, c.t};
        const TruncationPlan plan{c.C, c.x, constantFactor};
        const auto tr = lTruncated(s, chi, plan);
        const auto orc = lViaHurwitz(s, chi);
        auto& r = out[i];
        r.input = c;
        r.truncated = tr.value;
        r.oracle = orc.value;
        r.difference = std::abs(tr.value - orc.value);
        r.errorRadius = tr.errorRadius;
        r.unitRadius = truncationErrorRadius(s, c.q, {c.C, c.x, 1.0});
        r.within = r.difference <= r.errorRadius;
    });
    return out;
}

double conformanceMaxRatio(const std::vector<ConformanceResult>& results)
{
    double m = 0.0;
    for (const auto& r : results) m = std::max(m, r.difference / r.unitRadius);
    return m;
}

double roundUpSignificant(double v, int digits)
{
    if (!(v > 0.0)) return v;
    const double scale = std::pow(10.0, digits - 1 - static_cast<int>(std::floor(std::log10(v))));
    const double r = std::ceil(v * scale) / scale;
    return r < v ? std::nextafter(r, INFINITY) : r;
}

double fitConstantFactor(double maxRatio) { return roundUpSignificant(1.5 * maxRatio, 2); }

std::vector<MinSumResult> intervalLemmaGrid(double beta)
{
    std::vector<MinSumResult> out;
    for (std::int64_t j = 0; j <= reference::kIntervalMaxJ; ++j) {
        if ((j + 1) / beta > 700.0) break;
        const double a = ejBoundary(beta, j);
        const double b = ejBoundary(beta, j + 1);
        if (b > kMinSumMaxB) break;
        if (!(b > a)) continue;
        for (double T : reference::kShapeT) out.push_back(minSumCompare(a, b, beta, T, MinSumVariant::IntervalLemma, j));
    }
    return out;
}

std::vector<MinSumResult> shapeGrid(MinSumVariant variant)
{
    std::vector<MinSumResult> out;
    for (double beta : reference::kShapeBeta) {
        if (variant == MinSumVariant::BetaGE1 && beta < 1.0) continue;
        for (double T : reference::kShapeT)
            for (const auto& [A, B] : reference::kShapeRanges) out.push_back(minSumCompare(A, B, beta, T, variant));
    }
    return out;
}

std::vector<WInverseCase> wInverseGrid()
{
    std::vector<WInverseCase> out;
    for (double L : reference::kWInverseL)
        for (double eps : reference::kWInverseEps)
            for (double x : reference::kWInverseX)
                for (double stretch : reference::kWInverseStretch) {
                    const double y = stretch * x * wFunction(L, x);
                    out.push_back({L, eps, x, y, x * wFunction(L - eps, y) / y});
                }
    return out;
}

std::string betaKey(double beta)
{
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, beta);
    return {buf, res.ptr};
}

EvalPlan referencePlan(double constantFactor)
{
    EvalPlan plan;
    plan.constantFactor = constantFactor;
    return plan;
}

MomentReport referenceMoment(std::int64_t T, const EvalPlan& plan)
{
    const auto spec = reference::progression();
    const auto moll =
        standardMollifier(MollifierLabel::P1, T, reference::kMomentTheta, spec.beta, reference::kModulus);
    return computeMoments(T, spec, reference::character(), moll, plan);
}

ScanSummary referenceScan(std::int64_t T, const EvalPlan& plan)
{
    return nonvanishingScan(T, reference::progression(), reference::character(), plan);
}

BauerQuadratureReport referenceBauer(double T)
{
    EvalPlan plan;
    plan.method = EvalMethod::HurwitzOracle;
    return bauerQuadratureCheck(T, reference::kBauerTheta, reference::character(), Polynomial{0.0, 1.0}, plan);
}

GallagherReport referenceGallagher(const EvalPlan& plan)
{
    const double kappa = reference::kGallagherKappa;
    std::vector<double> grid;
    for (std::int64_t k = 1; k <= reference::kGallagherPoints; ++k) grid.push_back(kappa * static_cast<double>(k));
    const double T1 = kappa / 2.0;
    const double T2 = grid.back() + kappa / 2.0;
    const auto moll = standardMollifier(MollifierLabel::P1, static_cast<std::int64_t>(std::lround(T2)),
                                       reference::kMomentTheta, 1.0, reference::kModulus);
    return gallagherInequalityCheck(T1, T2, kappa, grid, reference::character(), moll, plan);
}

FrozenConstants calibrateAll(std::ostream* log)
{
    FrozenConstants c;
    auto note = [&](const std::string& s) {
        if (log) *log << s << '\n' << std::flush;
    };

    const auto conf = runConformance(1.0);
    c.conformanceMaxRatio = conformanceMaxRatio(conf);
    c.constantFactor = fitConstantFactor(c.conformanceMaxRatio);
    note("conformance: " + std::to_string(conf.size()) + " points, max ratio " + std::to_string(c.conformanceMaxRatio)
         + ", constant factor " + std::to_string(c.constantFactor));
    const auto plan = referencePlan(c.constantFactor);

    for (std::int64_t T : reference::kMomentT) {
        const auto r = referenceMoment(T, plan);
        const double Td = static_cast<double>(T);
        c.momentT.push_back(T);
        c.firstMomentDeviation.push_back(std::abs(r.s1 / Td - 1.0));
        c.secondMomentRatio.push_back(r.s2 / (Td * std::log(Td)));
        note("moments T=" + std::to_string(T) + ": |S1/T - 1| = " + std::to_string(c.firstMomentDeviation.back())
             + ", S2/(T log T) = " + std::to_string(c.secondMomentRatio.back()));
    }
    c.secondMomentMax = *std::max_element(c.secondMomentRatio.begin(), c.secondMomentRatio.end());

    double minRatio = INFINITY;
    for (std::int64_t T : reference::kScanT) {
        const auto s = referenceScan(T, plan);
        c.scanT.push_back(T);
        c.scanRatio.push_back(s.ratio);
        minRatio = std::min(minRatio, s.ratio);
        note("scan T=" + std::to_string(T) + ": nonzero " + std::to_string(s.nonzeroCount) + ", undetermined "
             + std::to_string(s.undeterminedCount) + ", ratio " + std::to_string(s.ratio));
    }
    c.nonvanishingC = std::floor(minRatio * 1000.0) / 1000.0;

    for (double beta : reference::kIntervalBeta) {
        double m = 0.0;
        for (const auto& r : intervalLemmaGrid(beta)) m = std::max(m, r.ratio);
        c.intervalLemmaConstant[betaKey(beta)] = roundUpSignificant(m, 3);
        note("interval sums beta=" + betaKey(beta) + ": max ratio " + std::to_string(m));
    }
    double g = 0.0;
    for (const auto& r : shapeGrid(MinSumVariant::General)) g = std::max(g, r.ratio);
    c.generalShapeConstant = roundUpSignificant(g, 3);
    double g1 = 0.0;
    for (const auto& r : shapeGrid(MinSumVariant::BetaGE1)) g1 = std::max(g1, r.ratio);
    c.betaGE1ShapeConstant = roundUpSignificant(g1, 3);
    note("shape grids: general " + std::to_string(g) + ", beta >= 1 " + std::to_string(g1));

    double w = 0.0;
    for (const auto& r : wInverseGrid()) w = std::max(w, r.ratio);
    c.wInverseConstant = roundUpSignificant(w, 3);
    note("w inverse: max ratio " + std::to_string(w));

    for (double T : reference::kBauerT) {
        const auto b = referenceBauer(T);
        c.bauerT.push_back(T);
        c.bauerDeviation.push_back(b.relativeDeviation);
        note("bauer T=" + std::to_string(T) + ": relative deviation " + std::to_string(b.relativeDeviation));
    }
    c.bauerThreshold = roundUpSignificant(c.bauerDeviation.front(), 3);

    const auto gal = referenceGallagher(plan);
    c.gallagherMargin = gal.rhs / gal.lhs;
    note("gallagher: lhs " + std::to_string(gal.lhs) + ", rhs " + std::to_string(gal.rhs));
    c.firstNonzeroSafetyFactor = 1.0;
    return c;
}

} // namespace lprog
