#include <cmath>
#include <limits>
#include <sstream>

#include "nonreg/error.hpp"
#include "nonreg/oracle.hpp"

namespace nonreg::oracle {

std::string_view family_name(Family f) {
    switch (f) {
    case Family::Constant: return "constant";
    case Family::Log: return "log";
    case Family::Sqrt: return "sqrt";
    case Family::Linear: return "linear";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view name) {
    for (Family f : {Family::Constant, Family::Log, Family::Sqrt, Family::Linear}) {
        if (family_name(f) == name) return f;
    }
    return std::nullopt;
}

double family_value(Family f, double n) {
    switch (f) {
    case Family::Constant: return 1.0;
    case Family::Log: return std::log(n);
    case Family::Sqrt: return std::sqrt(n);
    case Family::Linear: return n;
    }
    return 0.0;
}

GrowthFit growth_fit(const Profile& p, Family f, FitOptions opt) {
    std::vector<std::pair<double, double>> all;  // (f(n), value)
    for (const auto& [n, v] : p.entries) {
        if (n >= opt.n0) all.emplace_back(family_value(f, static_cast<double>(n)), static_cast<double>(v));
    }
    if (all.size() < 3) {
        throw PreconditionError("growth_fit needs at least 3 lengths >= " + std::to_string(opt.n0));
    }

    GrowthFit fit;
    double num = 0, den = 0;
    bool any = false;
    for (auto [x, v] : all) {
        if (v == 0) continue;
        num += x * v;
        den += x * x;
        any = true;
    }
    fit.constant = any && den > 0 ? num / den : 0.0;

    fit.consistent = true;
    fit.lower_constant = any ? std::numeric_limits<double>::infinity() : 0.0;
    for (auto [x, v] : all) {
        if (v > fit.constant * x * (1 + opt.tol) + 1e-9) fit.consistent = false;
        if (v == 0) continue;
        fit.max_residual = std::max(fit.max_residual, std::abs(v - fit.constant * x));
        fit.lower_constant = std::min(fit.lower_constant, x > 0 ? v / x : 0.0);
    }

    std::ostringstream verdict;
    verdict << (fit.consistent ? "consistent" : "inconsistent") << " with O(" << family_name(f)
            << ") at measured scale";
    fit.verdict = verdict.str();
    return fit;
}

} // namespace nonreg::oracle
