#pragma once

/// \file selection.hpp
///
/// Explanatory-variable selection over a small candidate pool: exhaustive
/// enumeration of subsets up to a given size, and p-value driven stepwise
/// selection (forward add / backward drop until nothing changes). All fits
/// are through the origin.

#include <clubval/errors.hpp>
#include <clubval/regression.hpp>

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace clubval {

/// Upper bound on the candidate pool; keeps exhaustive search at <= 4095 fits.
inline constexpr std::size_t max_candidates = 12;

struct Candidate {
    std::string variable;
    std::vector<double> values;
};

struct CandidateSet {
    std::vector<Candidate> predictors;
    ResponseVector response;

    void validate() const {
        if (predictors.empty()) throw EmptyInput("candidate set is empty");
        if (predictors.size() > max_candidates) {
            throw TooManyCandidates(std::to_string(predictors.size()) + " candidates, at most " +
                                    std::to_string(max_candidates) + " supported");
        }
        std::set<std::string> seen;
        for (const auto& p : predictors) {
            if (p.values.size() != response.values.size()) {
                throw DimensionMismatch("candidate '" + p.variable + "' length differs from response");
            }
            if (!seen.insert(p.variable).second) throw DomainError("duplicate candidate '" + p.variable + "'");
        }
    }
};

struct RankedModel {
    std::vector<std::string> variables;  // candidate order
    RegressionFit fit;
    bool all_significant = false;
};

enum class SelectionStatus { Converged, EmptyModel, Cycle };

inline const char* to_string(SelectionStatus s) {
    switch (s) {
        case SelectionStatus::Converged: return "converged";
        case SelectionStatus::EmptyModel: return "empty-model";
        case SelectionStatus::Cycle: return "cycle";
    }
    return "?";
}

struct SelectionReport {
    std::string method;
    double alpha = 0.05;
    std::vector<RankedModel> ranked_models;
    std::vector<std::vector<std::string>> skipped;  // rank deficient / too few rows
    std::size_t attempted = 0;                      // fitted + skipped
    SelectionStatus status = SelectionStatus::Converged;
    std::vector<std::string> trace;  // stepwise moves
};

namespace detail {

inline RegressionFit fit_subset(const CandidateSet& c, const std::vector<std::size_t>& idx) {
    DesignMatrix x;
    for (auto i : idx) x.add_column(c.predictors[i].variable, c.predictors[i].values);
    return fit_through_origin(x, c.response);
}

inline std::vector<std::string> subset_names(const CandidateSet& c, const std::vector<std::size_t>& idx) {
    std::vector<std::string> out;
    for (auto i : idx) out.push_back(c.predictors[i].variable);
    return out;
}

inline bool all_significant(const RegressionFit& fit, double alpha) {
    return std::all_of(fit.coefficients.begin(), fit.coefficients.end(),
                       [&](const auto& c) { return c.p_value <= alpha; });
}

/// Adjusted R^2 descending, then fewer variables, then lexicographic ids.
inline bool ranks_before(const RankedModel& a, const RankedModel& b) {
    if (a.fit.adjusted_r_squared != b.fit.adjusted_r_squared) {
        return a.fit.adjusted_r_squared > b.fit.adjusted_r_squared;
    }
    if (a.variables.size() != b.variables.size()) return a.variables.size() < b.variables.size();
    return a.variables < b.variables;
}

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

/// Fits every non-empty subset of at most `max_size` candidates.
inline SelectionReport exhaustive_subsets(const CandidateSet& cands, std::size_t max_size, double alpha = 0.05) {
    cands.validate();
    const std::size_t n = cands.predictors.size();
    if (max_size == 0 || max_size > n) {
        throw DomainError("exhaustive_subsets: max_size must lie in [1, " + std::to_string(n) + "]");
    }

    SelectionReport report;
    report.method = "exhaustive";
    report.alpha = alpha;

    for (std::size_t k = 1; k <= max_size; ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        do {
            ++report.attempted;
            try {
                RankedModel m;
                m.fit = detail::fit_subset(cands, idx);
                m.variables = detail::subset_names(cands, idx);
                m.all_significant = detail::all_significant(m.fit, alpha);
                report.ranked_models.push_back(std::move(m));
            } catch (const RankDeficient&) {
                report.skipped.push_back(detail::subset_names(cands, idx));
            } catch (const InsufficientObservations&) {
                report.skipped.push_back(detail::subset_names(cands, idx));
            }
        } while (detail::next_combination(idx, n));
    }

    std::stable_sort(report.ranked_models.begin(), report.ranked_models.end(), detail::ranks_before);
    report.status = report.ranked_models.empty() ? SelectionStatus::EmptyModel : SelectionStatus::Converged;
    return report;
}

/// Stepwise selection starting from the empty model. Each round adds the
/// outside candidate with the smallest p-value below `alpha_in`, then drops
/// the worst included variable while its p-value exceeds `alpha_out`. Stops
/// when a round changes nothing, or when a previously visited model recurs
/// (status Cycle, current model returned).
inline SelectionReport stepwise(const CandidateSet& cands, double alpha_in = 0.05, double alpha_out = 0.10) {
    cands.validate();
    if (!(alpha_in > 0.0 && alpha_in < 1.0) || !(alpha_out > 0.0 && alpha_out < 1.0)) {
        throw DomainError("stepwise: thresholds must lie in (0, 1)");
    }
    const std::size_t n = cands.predictors.size();

    SelectionReport report;
    report.method = "stepwise";
    report.alpha = alpha_in;

    std::vector<std::size_t> current;  // sorted candidate indices
    std::set<std::vector<std::size_t>> visited{current};

    auto with = [](std::vector<std::size_t> v, std::size_t i) {
        v.insert(std::upper_bound(v.begin(), v.end(), i), i);
        return v;
    };
    auto p_of = [](const RegressionFit& fit, const std::string& name) {
        return fit.coefficient(name).p_value;
    };

    for (;;) {
        bool changed = false;

        // forward
        std::size_t best = n;
        double best_p = alpha_in;
        for (std::size_t i = 0; i < n; ++i) {
            if (std::binary_search(current.begin(), current.end(), i)) continue;
            const auto trial = with(current, i);
            ++report.attempted;
            try {
                const auto fit = detail::fit_subset(cands, trial);
                const double p = p_of(fit, cands.predictors[i].variable);
                if (p < best_p) {
                    best = i;
                    best_p = p;
                }
            } catch (const RankDeficient&) {
                report.skipped.push_back(detail::subset_names(cands, trial));
            } catch (const InsufficientObservations&) {
                report.skipped.push_back(detail::subset_names(cands, trial));
            }
        }
        if (best < n) {
            current = with(current, best);
            report.trace.push_back("+" + cands.predictors[best].variable + " (p=" + std::to_string(best_p) + ")");
            changed = true;
        }

        // backward
        while (!current.empty()) {
            ++report.attempted;
            const auto fit = detail::fit_subset(cands, current);
            std::size_t worst = current.size();
            double worst_p = alpha_out;
            for (std::size_t j = 0; j < current.size(); ++j) {
                const double p = fit.coefficients[j].p_value;
                if (p > worst_p) {
                    worst = j;
                    worst_p = p;
                }
            }
            if (worst == current.size()) break;
            report.trace.push_back("-" + cands.predictors[current[worst]].variable + " (p=" +
                                   std::to_string(worst_p) + ")");
            current.erase(current.begin() + static_cast<std::ptrdiff_t>(worst));
            changed = true;
        }

        if (!changed) break;
        if (!visited.insert(current).second) {
            report.status = SelectionStatus::Cycle;
            break;
        }
    }

    if (!current.empty()) {
        RankedModel m;
        m.fit = detail::fit_subset(cands, current);
        m.variables = detail::subset_names(cands, current);
        m.all_significant = detail::all_significant(m.fit, alpha_in);
        report.ranked_models.push_back(std::move(m));
    } else if (report.status != SelectionStatus::Cycle) {
        report.status = SelectionStatus::EmptyModel;
    }
    return report;
}

}  // namespace clubval
