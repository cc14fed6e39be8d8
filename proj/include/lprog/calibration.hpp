#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "lprog/bounds.hpp"
#include "lprog/constants.hpp"
#include "lprog/progression.hpp"

namespace lprog {

/// Reference configurations shared by the calibration run, the CLI and the
/// acceptance suite, so every consumer measures exactly the same thing.
namespace reference {

inline constexpr std::int64_t kModulus = 3;
inline constexpr std::int64_t kLabel = 2; // the quadratic character mod 3
inline constexpr double kMomentTheta = 0.4;
inline constexpr std::array<std::int64_t, 5> kMomentT{250, 500, 1000, 2000, 4000};
inline constexpr std::array<std::int64_t, 4> kScanT{100, 200, 400, 800};
inline constexpr double kBauerTheta = 0.3;
inline constexpr std::array<double, 2> kBauerT{500.0, 1000.0};
inline constexpr double kGallagherKappa = 6.283185307179586;
inline constexpr std::int64_t kGallagherPoints = 8;

inline constexpr std::array<std::int64_t, 6> kConformanceModuli{3, 4, 5, 7, 8, 12};
inline constexpr std::array<double, 9> kConformanceT{0.0, 5.0, -5.0, 10.0, -10.0, 25.0, -25.0, 50.0, -50.0};
inline constexpr std::array<double, 3> kConformanceC{1.5, 2.0, 4.0};
inline constexpr std::array<double, 3> kConformanceOffset{5.0, 20.0, 100.0};

inline constexpr std::array<double, 3> kIntervalBeta{0.5, 1.0, 2.0};
inline constexpr std::int64_t kIntervalMaxJ = 20;
inline constexpr std::array<double, 4> kShapeBeta{0.5, 1.0, 2.0, 5.0};
inline constexpr std::array<double, 2> kShapeT{10.0, 1000.0};
inline constexpr std::array<std::array<double, 2>, 2> kShapeRanges{{{1.0, 1e3}, {1e2, 1e5}}};

inline constexpr std::array<double, 3> kWInverseL{0.5, 1.0, 2.0};
inline constexpr std::array<double, 2> kWInverseEps{0.1, 0.25};
inline constexpr std::array<double, 4> kWInverseX{1e3, 1e4, 1e5, 1e6};
inline constexpr std::array<double, 3> kWInverseStretch{1.01, 2.0, 10.0};

DirichletCharacter character();
ProgressionSpec progression(); // alpha = 0, beta = 1

} // namespace reference

struct ConformanceCase {
    std::int64_t q = 0;
    std::int64_t label = 0;
    double t = 0.0;
    double C = 2.0;
    double x = 1.0;
};

struct ConformanceResult {
    ConformanceCase input;
    std::complex<double> truncated;
    std::complex<double> oracle;
    double difference = 0.0;  // |truncated - oracle|
    double errorRadius = 0.0; // radius of the truncated value at the given factor
    double unitRadius = 0.0;  // the O-term shape with constantFactor = 1
    bool within = false;      // difference <= errorRadius
};

/// Every non-principal character of the conformance moduli, crossed with the
/// t, C and x-offset grids; x = C|t|/2pi + offset.
std::vector<ConformanceCase> conformanceGrid();

std::vector<ConformanceResult> runConformance(double constantFactor);

/// max difference / unitRadius over a run.
double conformanceMaxRatio(const std::vector<ConformanceResult>& results);

/// 1.5 times the observed ratio, rounded up to two significant digits.
double fitConstantFactor(double maxRatio);

/// Rounds v > 0 up to `digits` significant digits.
double roundUpSignificant(double v, int digits);

/// Unweighted interval sums on [E_j, E_{j+1}] for j <= 20 with
/// E_{j+1} <= 1e8, skipping empty intervals.
std::vector<MinSumResult> intervalLemmaGrid(double beta);

/// Weighted sums over the shape grid; BetaGE1 keeps only beta >= 1.
std::vector<MinSumResult> shapeGrid(MinSumVariant variant);

struct WInverseCase {
    double L = 0.0;
    double epsilon = 0.0;
    double x = 0.0;
    double y = 0.0;
    double ratio = 0.0; // x w_{L - eps}(y) / y
};

/// y = stretch * x w_L(x), so y > x w_L(x) holds throughout.
std::vector<WInverseCase> wInverseGrid();

/// Key used for per-beta constants, the shortest round-trip decimal.
std::string betaKey(double beta);

EvalPlan referencePlan(double constantFactor);

MomentReport referenceMoment(std::int64_t T, const EvalPlan& plan);
ScanSummary referenceScan(std::int64_t T, const EvalPlan& plan);
BauerQuadratureReport referenceBauer(double T);
GallagherReport referenceGallagher(const EvalPlan& plan);

/// The full constant-freezing run. Progress lines go to `log` when given.
FrozenConstants calibrateAll(std::ostream* log = nullptr);

} // namespace lprog
