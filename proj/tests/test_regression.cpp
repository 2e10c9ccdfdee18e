#include "oracles.hpp"

#include <clubval/regression.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace clubval;

namespace {

struct Synthetic {
    std::vector<std::vector<double>> cols;
    std::vector<double> y;

    DesignMatrix design() const {
        DesignMatrix x;
        for (std::size_t j = 0; j < cols.size(); ++j) x.add_column("x" + std::to_string(j + 1), cols[j]);
        return x;
    }
};

Synthetic make_dataset(std::mt19937_64& rng, std::size_t n, const std::vector<double>& beta, double noise) {
    std::uniform_real_distribution<double> u(0.1, 50.0);
    std::normal_distribution<double> e(0.0, noise);
    Synthetic s;
    s.cols.assign(beta.size(), std::vector<double>(n));
    s.y.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < beta.size(); ++j) {
            s.cols[j][i] = u(rng);
            s.y[i] += beta[j] * s.cols[j][i];
        }
        s.y[i] += e(rng);
    }
    return s;
}

void expect_matches_oracle(const RegressionFit& fit, const oracle::TextbookFit& ref, double rel) {
    ASSERT_EQ(fit.coefficients.size(), ref.beta.size());
    for (std::size_t j = 0; j < ref.beta.size(); ++j) {
        const auto& c = fit.coefficients[j];
        EXPECT_TRUE(oracle::close_rel(c.estimate, ref.beta[j], rel)) << c.estimate << " vs " << ref.beta[j];
        EXPECT_TRUE(oracle::close_rel(c.standard_error, ref.se[j], rel)) << c.standard_error << " vs " << ref.se[j];
        EXPECT_TRUE(oracle::close_rel(c.t_stat, ref.t[j], rel)) << c.t_stat << " vs " << ref.t[j];
        EXPECT_TRUE(oracle::close_rel(c.p_value, ref.p[j], rel, 1e-300)) << c.p_value << " vs " << ref.p[j];
    }
    EXPECT_TRUE(oracle::close_rel(fit.r_squared, ref.r_squared, rel));
    EXPECT_TRUE(oracle::close_rel(fit.adjusted_r_squared, ref.adjusted_r_squared, rel));
    EXPECT_TRUE(oracle::close_rel(fit.standard_error_of_regression, ref.ser, rel));
}

}  // namespace

TEST(SolveNormalEquations, IdentityAndDiagonal) {
    Eigen::MatrixXd id = Eigen::MatrixXd::Identity(2, 2);
    Eigen::VectorXd b(2);
    b << 5, 7;
    const auto x = solve_normal_equations(id, b);
    EXPECT_DOUBLE_EQ(x(0), 5.0);
    EXPECT_DOUBLE_EQ(x(1), 7.0);

    Eigen::MatrixXd d(2, 2);
    d << 4, 0, 0, 9;
    b << 8, 27;
    const auto y = solve_normal_equations(d, b);
    EXPECT_DOUBLE_EQ(y(0), 2.0);
    EXPECT_DOUBLE_EQ(y(1), 3.0);
}

TEST(SolveNormalEquations, RandomSpdMatchesGaussianElimination) {
    std::mt19937_64 rng(20240125);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        Eigen::MatrixXd a(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) a(i, j) = u(rng);
        Eigen::MatrixXd spd = a.transpose() * a + 0.5 * Eigen::MatrixXd::Identity(3, 3);
        spd = 0.5 * (spd + spd.transpose()).eval();
        Eigen::VectorXd b(3);
        for (int i = 0; i < 3; ++i) b(i) = u(rng);

        oracle::Matrix m(3, std::vector<long double>(3));
        std::vector<long double> rhs(3);
        for (int i = 0; i < 3; ++i) {
            rhs[i] = b(i);
            for (int j = 0; j < 3; ++j) m[i][j] = spd(i, j);
        }
        const auto ref = oracle::gauss_solve(m, rhs);
        const auto x = solve_normal_equations(spd, b);
        for (int i = 0; i < 3; ++i) EXPECT_NEAR(x(i), static_cast<double>(ref[i]), 1e-12);
    }
}

TEST(SolveNormalEquations, Errors) {
    Eigen::MatrixXd indefinite(2, 2);
    indefinite << 1, 2, 2, 1;
    Eigen::VectorXd b = Eigen::VectorXd::Ones(2);
    EXPECT_THROW(solve_normal_equations(indefinite, b), NotPositiveDefinite);

    Eigen::MatrixXd asym(2, 2);
    asym << 2, 1, 0, 2;
    EXPECT_THROW(solve_normal_equations(asym, b), NotPositiveDefinite);

    EXPECT_THROW(solve_normal_equations(Eigen::MatrixXd::Identity(3, 3), b), DimensionMismatch);
}

TEST(FitThroughOrigin, ExactFit) {
    DesignMatrix x({{"x", {1, 2, 3}}});
    const auto fit = fit_through_origin(x, {"y", {2, 4, 6}});
    EXPECT_NEAR(fit.coefficient("x").estimate, 2.0, 1e-14);
    EXPECT_NEAR(fit.r_squared, 1.0, 1e-14);
    for (double r : fit.residuals) EXPECT_NEAR(r, 0.0, 1e-14);
}

TEST(FitThroughOrigin, OrthogonalResponseIsUncenteredZero) {
    DesignMatrix x({{"x", {1, 0}}});
    const auto fit = fit_through_origin(x, {"y", {0, 1}});
    EXPECT_DOUBLE_EQ(fit.coefficient("x").estimate, 0.0);
    EXPECT_DOUBLE_EQ(fit.r_squared, 0.0);
    EXPECT_EQ(fit.dof, 1);
}

TEST(FitThroughOrigin, SeededTwelveByTwoMatchesOracle) {
    std::mt19937_64 rng(12);
    const auto data = make_dataset(rng, 12, {3.7, 2.9}, 0.8);
    const auto fit = fit_through_origin(data.design(), {"y", data.y});
    expect_matches_oracle(fit, oracle::textbook_fit(data.cols, data.y), 1e-9);
    EXPECT_NEAR(fit.coefficient("x1").estimate, 3.7, 0.1);
    EXPECT_NEAR(fit.coefficient("x2").estimate, 2.9, 0.1);
    EXPECT_EQ(fit.n, 12u);
    EXPECT_EQ(fit.k, 2u);
    EXPECT_EQ(fit.dof, 10);
}

TEST(FitThroughOrigin, InvariantsOnRandomData) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> nk(1, 3), nn(5, 20);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t k = static_cast<std::size_t>(nk(rng));
        const std::size_t n = k + static_cast<std::size_t>(nn(rng));
        std::vector<double> beta;
        for (std::size_t j = 0; j < k; ++j) beta.push_back(0.5 + static_cast<double>(j));
        const auto data = make_dataset(rng, n, beta, 5.0);
        const auto fit = fit_through_origin(data.design(), {"y", data.y});
        expect_matches_oracle(fit, oracle::textbook_fit(data.cols, data.y), 1e-9);

        EXPECT_NEAR(fit.multiple_r, std::sqrt(fit.r_squared), 1e-15);
        EXPECT_GE(fit.r_squared, 0.0);
        EXPECT_LE(fit.r_squared, 1.0);
        EXPECT_EQ(fit.dof, static_cast<long>(n - k));
        double ynorm = 0.0;
        for (double v : data.y) ynorm += v * v;
        ynorm = std::sqrt(ynorm);
        for (std::size_t j = 0; j < k; ++j) {
            const auto& c = fit.coefficients[j];
            EXPECT_NEAR(c.t_stat * c.standard_error, c.estimate, 1e-12 * std::fabs(c.estimate));
            double dot = 0.0, cnorm = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                dot += data.cols[j][i] * fit.residuals[i];
                cnorm += data.cols[j][i] * data.cols[j][i];
            }
            EXPECT_LE(std::fabs(dot), 1e-9 * std::sqrt(cnorm) * ynorm);
        }
    }
}

TEST(FitThroughOrigin, PredictorScaleEquivariance) {
    std::mt19937_64 rng(7);
    const auto data = make_dataset(rng, 30, {1.2, -0.7, 4.0}, 2.0);
    const auto base = fit_through_origin(data.design(), {"y", data.y});
    for (double c : {1e-3, -2.5, 1e4}) {
        auto scaled = data;
        for (double& v : scaled.cols[1]) v *= c;
        const auto fit = fit_through_origin(scaled.design(), {"y", data.y});
        EXPECT_TRUE(oracle::close_rel(fit.coefficients[1].estimate * c, base.coefficients[1].estimate, 1e-9));
        for (std::size_t j = 0; j < 3; ++j) {
            EXPECT_TRUE(oracle::close_rel(std::fabs(fit.coefficients[j].t_stat),
                                          std::fabs(base.coefficients[j].t_stat), 1e-9));
            EXPECT_TRUE(oracle::close_rel(fit.coefficients[j].p_value, base.coefficients[j].p_value, 1e-9));
        }
        EXPECT_TRUE(oracle::close_rel(fit.r_squared, base.r_squared, 1e-9));
        for (std::size_t i = 0; i < data.y.size(); ++i) {
            EXPECT_TRUE(oracle::close_rel(fit.fitted[i], base.fitted[i], 1e-9, 1.0));
            EXPECT_TRUE(oracle::close_rel(fit.residuals[i], base.residuals[i], 1e-9, 1.0));
        }
    }
}

TEST(FitThroughOrigin, ResponseScaleEquivariance) {
    std::mt19937_64 rng(8);
    const auto data = make_dataset(rng, 25, {2.0, 3.0}, 1.0);
    const auto base = fit_through_origin(data.design(), {"y", data.y});
    for (double c : {0.01, 7.5, -3.0}) {
        std::vector<double> y = data.y;
        for (double& v : y) v *= c;
        const auto fit = fit_through_origin(data.design(), {"y", y});
        for (std::size_t j = 0; j < 2; ++j) {
            EXPECT_TRUE(oracle::close_rel(fit.coefficients[j].estimate, c * base.coefficients[j].estimate, 1e-9));
            EXPECT_TRUE(oracle::close_rel(fit.coefficients[j].p_value, base.coefficients[j].p_value, 1e-9));
        }
        EXPECT_TRUE(oracle::close_rel(fit.standard_error_of_regression,
                                      std::fabs(c) * base.standard_error_of_regression, 1e-9));
        EXPECT_TRUE(oracle::close_rel(fit.r_squared, base.r_squared, 1e-9));
    }
}

TEST(FitThroughOrigin, Errors) {
    EXPECT_THROW(fit_through_origin(DesignMatrix({{"a", {1, 2, 3}}}), {"y", {1, 2}}), DimensionMismatch);
    EXPECT_THROW(fit_through_origin(DesignMatrix({{"a", {1, 2}}, {"b", {2, 1}}}), {"y", {1, 2}}),
                 InsufficientObservations);
    EXPECT_THROW(fit_through_origin(DesignMatrix({{"a", {0, 0, 0}}}), {"y", {1, 2, 3}}), RankDeficient);
    EXPECT_THROW(fit_through_origin(DesignMatrix({{"a", {1, 2, 3, 4}}, {"b", {2, 4, 6, 8}}}), {"y", {1, 2, 3, 5}}),
                 RankDeficient);
    EXPECT_THROW(fit_through_origin(DesignMatrix{}, {"y", {}}), DimensionMismatch);

    DesignMatrix x({{"a", {1, 2, 3}}});
    EXPECT_THROW(x.add_column("b", {1, 2}), DimensionMismatch);
    EXPECT_THROW(x.add_column("a", {1, 2, 3}), DomainError);
}
