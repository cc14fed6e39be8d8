#include "lprog/report.hpp"

#include <charconv>
#include <cmath>

namespace lprog::report {

std::string formatDouble(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

Json complexJson(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

Json characterJson(const DirichletCharacter& chi)
{
    Json values = Json::array();
    for (const auto& v : chi.values()) values.push_back(complexJson(v));
    return {{"modulus", chi.modulus()},
            {"conrey_label", chi.label()},
            {"conductor", chi.conductor()},
            {"parity", toString(chi.parity())},
            {"order", chi.order()},
            {"primitive", chi.isPrimitive()},
            {"values", std::move(values)}};
}

Json evaluationJson(const EvaluatedValue& v)
{
    return {{"value", complexJson(v.value)},
            {"error_radius", v.errorRadius},
            {"terms_used", v.termsUsed},
            {"method", toString(v.method)}};
}

Json momentJson(const MomentReport& r)
{
    return {{"T", r.T},
            {"alpha", r.spec.alpha},
            {"beta", r.spec.beta},
            {"modulus", r.modulus},
            {"conrey_label", r.label},
            {"mollifier", toString(r.mollifier.label)},
            {"mollifier_poly", r.mollifier.poly.coeffs()},
            {"X", r.X},
            {"theta", r.theta},
            {"U", r.U},
            {"method", toString(r.method)},
            {"s1", complexJson(r.s1)},
            {"s2", r.s2},
            {"cs_lower_bound", r.csLowerBound},
            {"nonzero_count", r.nonzeroCount},
            {"undetermined_count", r.undeterminedCount},
            {"per_point_error_budget", r.perPointErrorBudget}};
}

Json verdictJson(const NonvanishingVerdict& v)
{
    return {{"k", v.k},
            {"t", v.t},
            {"value", complexJson(v.value)},
            {"abs", std::abs(v.value)},
            {"error_radius", v.errorRadius},
            {"verdict", toString(v.verdict)}};
}

Json scanJson(const ScanSummary& s, double csLowerBound)
{
    Json verdicts = Json::array();
    for (const auto& v : s.verdicts) verdicts.push_back(verdictJson(v));
    return {{"T", s.T},
            {"nonzero_count", s.nonzeroCount},
            {"undetermined_count", s.undeterminedCount},
            {"cs_lower_bound", csLowerBound},
            {"count_bound_holds", static_cast<double>(s.nonzeroCount + s.undeterminedCount) >= csLowerBound},
            {"ratio", s.ratio},
            {"verdicts", std::move(verdicts)}};
}

Json firstNonzeroJson(const FirstNonzeroResult& r)
{
    return {{"k", r.k},
            {"theorem_bound", r.theoremBound},
            {"safety_factor", r.safetyFactor},
            {"within_bound", r.withinBound},
            {"point", verdictJson(r.verdict)}};
}

Json minSumJson(const MinSumResult& r)
{
    Json out = {{"variant", toString(r.variant)}, {"A", r.A}, {"B", r.B}, {"beta", r.beta}, {"T", r.T}};
    out["j"] = r.j ? Json(*r.j) : Json(nullptr);
    out["exact"] = r.exactValue;
    out["bound"] = r.boundValue;
    out["ratio"] = r.ratio;
    return out;
}

Json bauerQuadratureJson(const BauerQuadratureReport& r)
{
    return {{"T", r.T},
            {"theta", r.theta},
            {"X", r.X},
            {"integral", r.integral},
            {"main_term", r.mainTerm},
            {"relative_deviation", r.relativeDeviation},
            {"quadrature_error", r.quadratureError},
            {"evaluations", r.evaluations},
            {"x_in_range", r.xInRange}};
}

Json bauerMainTermJson(const BauerMainTerm& m)
{
    return {{"T", m.T},
            {"X", m.X},
            {"q", m.q},
            {"L", m.L},
            {"E", complexJson(m.E)},
            {"E_tilde", m.Etilde},
            {"main_term", complexJson(m.mainTerm)},
            {"derivative_main_term", m.derivativeMainTerm},
            {"x_in_range", m.xInRange}};
}

Json gallagherJson(const GallagherReport& r)
{
    return {{"lhs", r.lhs},
            {"rhs", r.rhs},
            {"integral_fg", r.integralFG},
            {"integral_fg_prime", r.integralFGprime},
            {"integral_f_prime_g", r.integralFprimeG},
            {"quadrature_error", r.quadratureError},
            {"series_terms", r.seriesTerms},
            {"holds", r.holds}};
}

Json constantsJson(const FrozenConstants& c) { return Json::parse(constantsToJson(c)); }

std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows)
{
    std::string out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += cells[i];
        }
        out += '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return out;
}

std::string charactersCsv(const std::vector<DirichletCharacter>& chars)
{
    std::vector<std::vector<std::string>> rows;
    for (const auto& chi : chars)
        for (std::int64_t n = 0; n < chi.modulus(); ++n) {
            const auto v = chi(n);
            rows.push_back({std::to_string(chi.modulus()), std::to_string(chi.label()), std::to_string(chi.conductor()),
                            toString(chi.parity()), std::to_string(n), formatDouble(v.real()),
                            formatDouble(v.imag())});
        }
    return csv({"modulus", "conrey_label", "conductor", "parity", "n", "re", "im"}, rows);
}

std::string verdictsCsv(const std::vector<NonvanishingVerdict>& verdicts)
{
    std::vector<std::vector<std::string>> rows;
    rows.reserve(verdicts.size());
    for (const auto& v : verdicts)
        rows.push_back({std::to_string(v.k), formatDouble(v.t), formatDouble(v.value.real()),
                        formatDouble(v.value.imag()), formatDouble(std::abs(v.value)), formatDouble(v.errorRadius),
                        toString(v.verdict)});
    return csv({"k", "t", "re", "im", "abs", "error_radius", "verdict"}, rows);
}

std::string minSumCsv(const std::vector<MinSumResult>& results)
{
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : results) {
        const auto& j = r.j;
        rows.push_back({toString(r.variant), formatDouble(r.A), formatDouble(r.B), formatDouble(r.beta),
                        formatDouble(r.T), j ? std::to_string(*j) : "", formatDouble(r.exactValue),
                        formatDouble(r.boundValue), formatDouble(r.ratio)});
    }
    return csv({"variant", "A", "B", "beta", "T", "j", "exact", "bound", "ratio"}, rows);
}

} // namespace lprog::report
