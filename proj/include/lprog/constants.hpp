#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace lprog {

/// Empirical constants frozen by a calibration run and checked into the
/// repository. Every value here stands in for an implied constant that the
/// underlying estimates leave unspecified.
struct FrozenConstants {
    // Truncated-series error radius multiplier.
    double constantFactor = 8.0;
    double conformanceMaxRatio = 0.0; // max |trunc - oracle| / unit radius seen on the grid

    // Moments for q = 3, alpha = 0, beta = 1, P1 with theta = 0.4.
    std::vector<std::int64_t> momentT;
    std::vector<double> firstMomentDeviation;  // |S1/T - 1|
    std::vector<double> secondMomentRatio;     // S2 / (T log T)
    double secondMomentMax = 0.0;

    // Scan ratio nonzeroCount / (T / log T) lower bound over the scan T-grid.
    std::vector<std::int64_t> scanT;
    std::vector<double> scanRatio;
    double nonvanishingC = 0.0;

    // Nearest-integer sum shapes.
    std::map<std::string, double> intervalLemmaConstant; // keyed by beta
    double generalShapeConstant = 0.0;
    double betaGE1ShapeConstant = 0.0;

    // x <= K y / w_{L - eps}(y) whenever y > x w_L(x).
    double wInverseConstant = 0.0;

    // Mollified integral against its main term at q = 3, theta = 0.3.
    std::vector<double> bauerT;
    std::vector<double> bauerDeviation;
    double bauerThreshold = 0.0;

    double firstNonzeroSafetyFactor = 1.0;
    double gallagherMargin = 0.0; // rhs / lhs on the reference configuration
};

/// The constants path: $LPROG_CONSTANTS if set, else the build-time default.
std::filesystem::path constantsPath();

/// Loads and parses the constants file. Throws std::runtime_error when the
/// file is missing or malformed.
FrozenConstants loadConstants(const std::filesystem::path& path);
inline FrozenConstants loadConstants() { return loadConstants(constantsPath()); }

/// Serializes with 17 significant digits so values round-trip exactly.
std::string constantsToJson(const FrozenConstants& c);
void saveConstants(const FrozenConstants& c, const std::filesystem::path& path);

/// FNV-1a 64-bit hash of the file bytes, as 16 hex digits.
std::string fileHash(const std::filesystem::path& path);

} // namespace lprog
