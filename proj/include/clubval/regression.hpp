#pragma once

/// \file regression.hpp
///
/// Least squares through the origin (no intercept) with the inference block a
/// spreadsheet regression reports: coefficient standard errors, t statistics,
/// two-sided p-values, multiple R, R^2, adjusted R^2 and the standard error of
/// the regression.
///
/// R^2 uses the uncentered total sum of squares (sum of y^2), which is the only
/// definition that stays inside [0, 1] when the intercept is forced to zero.
/// The centered value is kept in `RegressionFit::centered_r_squared` for
/// diagnostics.

#include <clubval/errors.hpp>
#include <clubval/special_functions.hpp>

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace clubval {

/// Smallest-to-largest eigenvalue ratio of the column-equilibrated Gram matrix
/// below which a design is treated as rank deficient.
inline constexpr double rank_tolerance = 1e-12;

/// Named predictor columns of equal length.
class DesignMatrix {
public:
    DesignMatrix() = default;

    DesignMatrix(std::vector<std::pair<std::string, std::vector<double>>> columns) {
        for (auto& [id, values] : columns) add_column(std::move(id), std::move(values));
    }

    void add_column(std::string id, std::vector<double> values) {
        if (values.empty()) throw DimensionMismatch("design column '" + id + "' is empty");
        if (!columns_.empty() && values.size() != rows()) {
            throw DimensionMismatch("design column '" + id + "' has " +
                                    std::to_string(values.size()) + " rows, expected " +
                                    std::to_string(rows()));
        }
        for (const auto& c : columns_) {
            if (c.first == id) throw DomainError("duplicate design column '" + id + "'");
        }
        columns_.emplace_back(std::move(id), std::move(values));
    }

    std::size_t rows() const noexcept { return columns_.empty() ? 0 : columns_.front().second.size(); }
    std::size_t cols() const noexcept { return columns_.size(); }

    const std::string& id(std::size_t j) const { return columns_.at(j).first; }
    std::span<const double> column(std::size_t j) const { return columns_.at(j).second; }

    Eigen::MatrixXd to_matrix() const {
        Eigen::MatrixXd x(static_cast<Eigen::Index>(rows()), static_cast<Eigen::Index>(cols()));
        for (std::size_t j = 0; j < cols(); ++j) {
            const auto& v = columns_[j].second;
            for (std::size_t i = 0; i < v.size(); ++i) {
                x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v[i];
            }
        }
        return x;
    }

private:
    std::vector<std::pair<std::string, std::vector<double>>> columns_;
};

struct ResponseVector {
    std::string id;
    std::vector<double> values;
};

struct CoefficientEstimate {
    std::string variable;
    double estimate = 0.0;
    double standard_error = 0.0;
    double t_stat = 0.0;
    double p_value = 1.0;
};

struct RegressionFit {
    std::string response;
    std::vector<CoefficientEstimate> coefficients;  // design column order

    double r_squared = 0.0;  // uncentered
    double multiple_r = 0.0;
    double adjusted_r_squared = 0.0;
    double standard_error_of_regression = 0.0;
    double centered_r_squared = 0.0;  // diagnostic only
    double sum_squared_residuals = 0.0;

    std::size_t n = 0;
    std::size_t k = 0;
    long dof = 0;

    std::vector<double> residuals;
    std::vector<double> fitted;

    const CoefficientEstimate& coefficient(std::string_view variable) const {
        for (const auto& c : coefficients) {
            if (c.variable == variable) return c;
        }
        throw MissingPredictor(std::string(variable));
    }

    std::vector<std::string> variables() const {
        std::vector<std::string> out;
        out.reserve(coefficients.size());
        for (const auto& c : coefficients) out.push_back(c.variable);
        return out;
    }
};

/// Solves xtx * beta = xty for a symmetric positive definite xtx by Cholesky.
inline Eigen::VectorXd solve_normal_equations(const Eigen::MatrixXd& xtx, const Eigen::VectorXd& xty) {
    if (xtx.rows() != xtx.cols() || xtx.rows() != xty.size()) {
        throw DimensionMismatch("solve_normal_equations: expected a k x k matrix and a k vector");
    }
    if (xtx.rows() == 0) throw DimensionMismatch("solve_normal_equations: empty system");
    if (!xtx.allFinite() || !xty.allFinite()) {
        throw DomainError("solve_normal_equations: non-finite input");
    }
    const double scale = xtx.cwiseAbs().maxCoeff();
    if (!((xtx - xtx.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * scale)) {
        throw NotPositiveDefinite("solve_normal_equations: matrix is not symmetric");
    }

    Eigen::LLT<Eigen::MatrixXd> llt(xtx);
    if (llt.info() != Eigen::Success) {
        throw NotPositiveDefinite("solve_normal_equations: matrix is not positive definite");
    }
    const Eigen::MatrixXd l = llt.matrixL();
    if ((l.diagonal().array() <= 0.0).any()) {
        throw NotPositiveDefinite("solve_normal_equations: zero pivot in Cholesky factor");
    }
    return llt.solve(xty);
}

/// Ordinary least squares with the intercept fixed at zero.
inline RegressionFit fit_through_origin(const DesignMatrix& x, const ResponseVector& y) {
    const std::size_t n = x.rows();
    const std::size_t k = x.cols();

    if (k == 0) throw DimensionMismatch("fit_through_origin: design matrix has no columns");
    if (y.values.size() != n) {
        throw DimensionMismatch("fit_through_origin: response has " + std::to_string(y.values.size()) +
                                " rows, design has " + std::to_string(n));
    }
    if (n <= k) {
        throw InsufficientObservations("fit_through_origin: need more than " + std::to_string(k) +
                                       " observations, got " + std::to_string(n));
    }

    const Eigen::MatrixXd xm = x.to_matrix();
    const Eigen::Map<const Eigen::VectorXd> yv(y.values.data(), static_cast<Eigen::Index>(n));
    if (!xm.allFinite() || !yv.allFinite()) throw DomainError("fit_through_origin: non-finite data");

    const double yy = yv.squaredNorm();
    if (yy == 0.0) throw DomainError("fit_through_origin: response is identically zero");

    // Equilibrate columns to unit norm so the rank test and the solve do not
    // depend on predictor units.
    Eigen::VectorXd norms = xm.colwise().norm().transpose();
    for (std::size_t j = 0; j < k; ++j) {
        if (norms(static_cast<Eigen::Index>(j)) == 0.0) {
            throw RankDeficient("fit_through_origin: column '" + x.id(j) + "' is all zero");
        }
    }
    const Eigen::VectorXd inv_norms = norms.cwiseInverse();
    const Eigen::MatrixXd xs = xm * inv_norms.asDiagonal();
    const Eigen::MatrixXd gram = xs.transpose() * xs;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram, Eigen::EigenvaluesOnly);
    const double lo = eig.eigenvalues().minCoeff();
    const double hi = eig.eigenvalues().maxCoeff();
    if (!(lo / hi >= rank_tolerance)) {
        throw RankDeficient("fit_through_origin: design is collinear (eigenvalue ratio " +
                            std::to_string(lo / hi) + ")");
    }

    const Eigen::VectorXd gamma = solve_normal_equations(gram, xs.transpose() * yv);
    const Eigen::VectorXd beta = inv_norms.asDiagonal() * gamma;

    const Eigen::MatrixXd gram_inv =
        gram.llt().solve(Eigen::MatrixXd::Identity(gram.rows(), gram.cols()));
    const Eigen::MatrixXd xtx_inv = inv_norms.asDiagonal() * gram_inv * inv_norms.asDiagonal();

    const Eigen::VectorXd fitted = xm * beta;
    const Eigen::VectorXd resid = yv - fitted;
    const double ssr = resid.squaredNorm();

    RegressionFit fit;
    fit.response = y.id;
    fit.n = n;
    fit.k = k;
    fit.dof = static_cast<long>(n - k);
    fit.sum_squared_residuals = ssr;

    const double sigma2 = ssr / static_cast<double>(fit.dof);
    for (std::size_t j = 0; j < k; ++j) {
        const auto jj = static_cast<Eigen::Index>(j);
        CoefficientEstimate c;
        c.variable = x.id(j);
        c.estimate = beta(jj);
        c.standard_error = std::sqrt(std::max(0.0, sigma2 * xtx_inv(jj, jj)));
        if (c.standard_error > 0.0) {
            c.t_stat = c.estimate / c.standard_error;
            c.p_value = t_two_sided_p(c.t_stat, fit.dof);
        } else if (c.estimate != 0.0) {
            // exact fit: the estimate carries no sampling error
            c.t_stat = std::copysign(std::numeric_limits<double>::infinity(), c.estimate);
            c.p_value = 0.0;
        }
        fit.coefficients.push_back(std::move(c));
    }

    fit.r_squared = std::clamp(1.0 - ssr / yy, 0.0, 1.0);
    fit.multiple_r = std::sqrt(fit.r_squared);
    fit.adjusted_r_squared =
        1.0 - (1.0 - fit.r_squared) * static_cast<double>(n) / static_cast<double>(fit.dof);
    fit.standard_error_of_regression = std::sqrt(sigma2);

    const double mean = yv.mean();
    const double sst_centered = (yv.array() - mean).square().sum();
    fit.centered_r_squared = sst_centered > 0.0 ? 1.0 - ssr / sst_centered : 0.0;

    fit.residuals.assign(resid.data(), resid.data() + resid.size());
    fit.fitted.assign(fitted.data(), fitted.data() + fitted.size());
    return fit;
}

}  // namespace clubval
