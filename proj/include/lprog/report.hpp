#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "lprog/bounds.hpp"
#include "lprog/calibration.hpp"
#include "lprog/characters.hpp"
#include "lprog/lfunction.hpp"
#include "lprog/progression.hpp"

namespace lprog::report {

using Json = nlohmann::ordered_json;

/// Shortest decimal that round-trips, '.' separator, independent of locale.
std::string formatDouble(double v);

Json complexJson(std::complex<double> z); // [re, im]

Json characterJson(const DirichletCharacter& chi);
Json evaluationJson(const EvaluatedValue& v);
Json momentJson(const MomentReport& r);
Json verdictJson(const NonvanishingVerdict& v);
Json scanJson(const ScanSummary& s, double csLowerBound);
Json firstNonzeroJson(const FirstNonzeroResult& r);
Json minSumJson(const MinSumResult& r);
Json bauerQuadratureJson(const BauerQuadratureReport& r);
Json bauerMainTermJson(const BauerMainTerm& m);
Json gallagherJson(const GallagherReport& r);
Json constantsJson(const FrozenConstants& c);

/// Header and rows: modulus,conrey_label,conductor,parity,n,re,im.
std::string charactersCsv(const std::vector<DirichletCharacter>& chars);
/// Header and rows: k,t,re,im,abs,error_radius,verdict.
std::string verdictsCsv(const std::vector<NonvanishingVerdict>& verdicts);
/// Header and rows: variant,A,B,beta,T,j,exact,bound,ratio.
std::string minSumCsv(const std::vector<MinSumResult>& rows);

/// Joins a header line and value rows into CSV text with '\n' endings.
std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

} // namespace lprog::report
