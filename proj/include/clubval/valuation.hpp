#pragma once

/// \file valuation.hpp
///
/// Linear through-origin valuation formulae applied to club records, league
/// aggregates, and the premium of model values over actual change-of-control
/// prices.

#include <clubval/dataset.hpp>
#include <clubval/errors.hpp>
#include <clubval/regression.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace clubval {

struct ModelTerm {
    std::string variable;
    double coefficient = 0.0;  // m€ per predictor unit
};

/// A named linear formula without intercept.
class ValuationModel {
public:
    ValuationModel(std::string name, std::vector<ModelTerm> terms, std::string provenance = {})
        : name_(std::move(name)), terms_(std::move(terms)), provenance_(std::move(provenance)) {
        if (terms_.empty()) throw DomainError("valuation model '" + name_ + "' has no terms");
        for (const auto& t : terms_) {
            if (!std::isfinite(t.coefficient)) {
                throw DomainError("valuation model '" + name_ + "': non-finite coefficient");
            }
            if (t.variable == "intercept" || t.variable == "const") {
                throw DomainError("valuation model '" + name_ + "': intercept terms are not allowed");
            }
        }
    }

    /// Model from the coefficients of a fitted regression.
    static ValuationModel from_fit(std::string name, const RegressionFit& fit) {
        std::vector<ModelTerm> terms;
        for (const auto& c : fit.coefficients) terms.push_back({c.variable, c.estimate});
        return ValuationModel(std::move(name), std::move(terms), "fitted on '" + fit.response + "'");
    }

    const std::string& name() const noexcept { return name_; }
    const std::vector<ModelTerm>& terms() const noexcept { return terms_; }
    const std::string& provenance() const noexcept { return provenance_; }

private:
    std::string name_;
    std::vector<ModelTerm> terms_;
    std::string provenance_;
};

/// SNS followers (m) and revenue (m€), fitted on KPMG enterprise values.
inline ValuationModel formula_one() {
    return ValuationModel("Formula 1",
                          {{std::string(vars::sns_followers_m), 3.7233}, {std::string(vars::revenue), 2.9233}},
                          "SNS & revenue model, KPMG EV of 37 European clubs");
}

/// SNS followers (m) and player market value (m€).
inline ValuationModel formula_two() {
    return ValuationModel("Formula 2",
                          {{std::string(vars::sns_followers_m), 5.7754},
                           {std::string(vars::player_market_value), 1.2599}},
                          "SNS & player market value model, KPMG EV of 37 European clubs");
}

/// Sum of coefficient x predictor over the model terms, in m€.
inline double apply_model(const ValuationModel& model, const ClubRecord& record) {
    double value = 0.0;
    for (const auto& t : model.terms()) {
        const auto x = predictor_value(record, t.variable);
        if (!x) throw MissingPredictor(t.variable);
        value += t.coefficient * *x;
    }
    return value;
}

struct ValuationResult {
    std::string club;
    double fv1 = 0.0;        // m€
    double fv2 = 0.0;        // m€
    double ratio_pct = 0.0;  // 100 * fv1 / fv2
};

inline ValuationResult valuate(const ClubRecord& record, const ValuationModel& f1, const ValuationModel& f2) {
    ValuationResult r;
    r.club = record.name;
    r.fv1 = apply_model(f1, record);
    r.fv2 = apply_model(f2, record);
    if (!(r.fv2 > 0.0)) {
        throw DegenerateRatio("club '" + record.name + "': second model value is not positive");
    }
    r.ratio_pct = 100.0 * r.fv1 / r.fv2;
    return r;
}

inline std::vector<ValuationResult> valuate_all(const std::vector<ClubRecord>& records,
                                                const ValuationModel& f1, const ValuationModel& f2) {
    std::vector<ValuationResult> out;
    out.reserve(records.size());
    for (const auto& r : records) out.push_back(valuate(r, f1, f2));
    return out;
}

// ---------------------------------------------------------------------------
// Aggregates

inline double mean(std::span<const double> v) {
    if (v.empty()) throw EmptyInput("mean of empty sequence");
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

/// Middle element for odd sizes, midpoint of the two middle elements otherwise.
inline double median(std::span<const double> v) {
    if (v.empty()) throw EmptyInput("median of empty sequence");
    std::vector<double> s(v.begin(), v.end());
    std::sort(s.begin(), s.end());
    const std::size_t m = s.size() / 2;
    return s.size() % 2 == 1 ? s[m] : 0.5 * (s[m - 1] + s[m]);
}

struct SummaryStat {
    double mean = 0.0;
    double median = 0.0;
};

/// Average and median rows of a valuation table. The published "Average"
/// ratio is the mean of per-club ratios; the ratio of the mean values is kept
/// alongside for comparison.
struct AggregateRow {
    std::size_t count = 0;
    SummaryStat sns_followers;
    SummaryStat revenue;
    SummaryStat player_market_value;
    SummaryStat fv1;
    SummaryStat fv2;
    double mean_of_ratios_pct = 0.0;
    double ratio_of_means_pct = 0.0;
    double median_ratio_pct = 0.0;
};

inline AggregateRow aggregate(const std::vector<ValuationResult>& results,
                              const std::vector<ClubRecord>& records) {
    if (results.empty() || records.empty()) throw EmptyInput("aggregate: no clubs");
    if (results.size() != records.size()) {
        throw DimensionMismatch("aggregate: results and records differ in length");
    }

    auto summarize = [](const std::vector<double>& v) { return SummaryStat{mean(v), median(v)}; };
    std::vector<double> sns, rev, pmv, fv1, fv2, ratio;
    for (std::size_t i = 0; i < results.size(); ++i) {
        sns.push_back(static_cast<double>(records[i].sns_followers));
        rev.push_back(records[i].revenue);
        pmv.push_back(records[i].player_market_value);
        fv1.push_back(results[i].fv1);
        fv2.push_back(results[i].fv2);
        ratio.push_back(results[i].ratio_pct);
    }

    AggregateRow a;
    a.count = results.size();
    a.sns_followers = summarize(sns);
    a.revenue = summarize(rev);
    a.player_market_value = summarize(pmv);
    a.fv1 = summarize(fv1);
    a.fv2 = summarize(fv2);
    a.mean_of_ratios_pct = mean(ratio);
    a.median_ratio_pct = median(ratio);
    if (!(a.fv2.mean > 0.0)) throw DegenerateRatio("aggregate: mean second model value is not positive");
    a.ratio_of_means_pct = 100.0 * a.fv1.mean / a.fv2.mean;
    return a;
}

// ---------------------------------------------------------------------------
// Transaction premiums

inline constexpr double default_stake = 0.51;

struct PremiumResult {
    std::string club;
    std::string model_name;
    double firm_value = 0.0;           // m€
    double implied_stake_value = 0.0;  // m¥
    double price = 0.0;                // m¥ actually required for the stake
    double premium = 0.0;              // fraction: 6.03 means 603% higher
};

/// Model-implied value of `stake` of the club, in m¥, relative to the price
/// actually required for a 51% stake.
inline PremiumResult transaction_premium(const TransactionCase& c, double firm_value, FxRate fx = {},
                                         double stake = default_stake, std::string model_name = {}) {
    if (!c.price_for_51pct || !(*c.price_for_51pct > 0.0)) {
        throw MissingPrice("no transaction price for '" + c.club + "'");
    }
    if (!(firm_value > 0.0) || !std::isfinite(firm_value)) {
        throw DomainError("transaction_premium: firm value must be positive");
    }
    if (!(stake > 0.0 && stake <= 1.0)) throw DomainError("transaction_premium: stake must lie in (0, 1]");

    PremiumResult r;
    r.club = c.club;
    r.model_name = std::move(model_name);
    r.firm_value = firm_value;
    r.implied_stake_value = eur_to_yen(firm_value, fx) * stake;
    r.price = *c.price_for_51pct;
    r.premium = r.implied_stake_value / r.price - 1.0;
    return r;
}

struct PremiumRange {
    std::string model_name;
    double min = 0.0;
    double max = 0.0;
};

struct PremiumSummary {
    std::vector<PremiumResult> first;   // per priced case, first model
    std::vector<PremiumResult> second;  // per priced case, second model
    PremiumRange first_range;
    PremiumRange second_range;
    std::vector<std::string> skipped;  // cases without a disclosed price
};

/// Premium of both model values over each priced transaction, with the
/// per-model min/max. Cases lacking a price are listed in `skipped`.
inline PremiumSummary premium_ranges(const std::vector<TransactionCase>& cases,
                                     const std::vector<ValuationResult>& results, FxRate fx = {},
                                     double stake = default_stake,
                                     const std::string& first_name = "Formula 1",
                                     const std::string& second_name = "Formula 2") {
    PremiumSummary s;
    s.first_range.model_name = first_name;
    s.second_range.model_name = second_name;

    for (const auto& c : cases) {
        if (!c.price_for_51pct) {
            s.skipped.push_back(c.club);
            continue;
        }
        const auto it = std::find_if(results.begin(), results.end(),
                                     [&](const ValuationResult& r) { return r.club == c.club; });
        if (it == results.end()) throw DomainError("no valuation for transaction club '" + c.club + "'");
        s.first.push_back(transaction_premium(c, it->fv1, fx, stake, first_name));
        s.second.push_back(transaction_premium(c, it->fv2, fx, stake, second_name));
    }
    if (s.first.empty()) throw EmptyInput("premium_ranges: no transaction with a price");

    auto range = [](const std::vector<PremiumResult>& v, PremiumRange& out) {
        const auto [lo, hi] = std::minmax_element(
            v.begin(), v.end(), [](const auto& a, const auto& b) { return a.premium < b.premium; });
        out.min = lo->premium;
        out.max = hi->premium;
    };
    range(s.first, s.first_range);
    range(s.second, s.second_range);
    return s;
}

}  // namespace clubval
