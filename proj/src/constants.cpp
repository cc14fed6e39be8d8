#include "lprog/constants.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#ifndef LPROG_DEFAULT_CONSTANTS
#define LPROG_DEFAULT_CONSTANTS "data/constants.json"
#endif

namespace lprog {

using nlohmann::json;

std::filesystem::path constantsPath()
{
    if (const char* env = std::getenv("LPROG_CONSTANTS"); env && *env) return env;
    return LPROG_DEFAULT_CONSTANTS;
}

std::string constantsToJson(const FrozenConstants& c)
{
    json j;
    j["format"] = 1;
    j["truncation"] = {{"constant_factor", c.constantFactor}, {"conformance_max_ratio", c.conformanceMaxRatio}};
    j["moments"] = {{"q", 3},
                    {"alpha", 0.0},
                    {"beta", 1.0},
                    {"theta", 0.4},
                    {"T", c.momentT},
                    {"first_moment_deviation", c.firstMomentDeviation},
                    {"second_moment_ratio", c.secondMomentRatio},
                    {"second_moment_max", c.secondMomentMax}};
    j["nonvanishing"] = {{"T", c.scanT}, {"ratio", c.scanRatio}, {"c", c.nonvanishingC}};
    j["minsum"] = {{"interval_lemma", c.intervalLemmaConstant},
                   {"general", c.generalShapeConstant},
                   {"beta_ge_1", c.betaGE1ShapeConstant}};
    j["w_function"] = {{"inverse_constant", c.wInverseConstant}};
    j["bauer"] = {{"T", c.bauerT}, {"deviation", c.bauerDeviation}, {"threshold", c.bauerThreshold}};
    j["first_nonzero"] = {{"safety_factor", c.firstNonzeroSafetyFactor}};
    j["gallagher"] = {{"margin", c.gallagherMargin}};
    return j.dump(2) + "\n";
}

FrozenConstants loadConstants(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open constants file " + path.string());
    FrozenConstants c;
    try {
        const json j = json::parse(in);
        const auto& tr = j.at("truncation");
        c.constantFactor = tr.at("constant_factor").get<double>();
        c.conformanceMaxRatio = tr.at("conformance_max_ratio").get<double>();
        const auto& m = j.at("moments");
        c.momentT = m.at("T").get<std::vector<std::int64_t>>();
        c.firstMomentDeviation = m.at("first_moment_deviation").get<std::vector<double>>();
        c.secondMomentRatio = m.at("second_moment_ratio").get<std::vector<double>>();
        c.secondMomentMax = m.at("second_moment_max").get<double>();
        const auto& nv = j.at("nonvanishing");
        c.scanT = nv.at("T").get<std::vector<std::int64_t>>();
        c.scanRatio = nv.at("ratio").get<std::vector<double>>();
        c.nonvanishingC = nv.at("c").get<double>();
        const auto& ms = j.at("minsum");
        c.intervalLemmaConstant = ms.at("interval_lemma").get<std::map<std::string, double>>();
        c.generalShapeConstant = ms.at("general").get<double>();
        c.betaGE1ShapeConstant = ms.at("beta_ge_1").get<double>();
        c.wInverseConstant = j.at("w_function").at("inverse_constant").get<double>();
        const auto& b = j.at("bauer");
        c.bauerT = b.at("T").get<std::vector<double>>();
        c.bauerDeviation = b.at("deviation").get<std::vector<double>>();
        c.bauerThreshold = b.at("threshold").get<double>();
        c.firstNonzeroSafetyFactor = j.at("first_nonzero").at("safety_factor").get<double>();
        c.gallagherMargin = j.at("gallagher").at("margin").get<double>();
    } catch (const json::exception& e) {
        throw std::runtime_error("malformed constants file " + path.string() + ": " + e.what());
    }
    if (c.momentT.size() != c.firstMomentDeviation.size() || c.momentT.size() != c.secondMomentRatio.size())
        throw std::runtime_error("malformed constants file " + path.string() + ": moment series lengths differ");
    return c;
}

void saveConstants(const FrozenConstants& c, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write constants file " + path.string());
    out << constantsToJson(c);
}

std::string fileHash(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::uint64_t h = 14695981039346656037ULL;
    char buf[4096];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 1099511628211ULL;
        }
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
    return hex;
}

} // namespace lprog
