#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "enermod/panel.hpp"

namespace enermod {

inline constexpr const char* kInterceptLabel = "(intercept)";

// Observations-by-regressors matrix; column 0 is the all-ones intercept.
struct DesignMatrix {
    Eigen::MatrixXd X;
    std::vector<std::string> labels; // labels[0] == kInterceptLabel

    // Intercept plus the named columns of a dataset.
    static DesignMatrix from_dataset(const PanelDataset& ds,
                                     const std::vector<std::string>& variables);
};

// OLS fit with full inference on one response vector.
struct RegressionFit {
    std::vector<std::string> labels;
    Eigen::VectorXd beta;
    Eigen::VectorXd se;
    Eigen::VectorXd t;
    Eigen::VectorXd p; // two-sided
    double sse = 0;
    double r2 = 0;
    double f = 0;   // overall F against the intercept-only model
    double f_p = 1; // upper-tail p of the overall F
    long df_resid = 0;
    long n = 0;

    std::vector<std::string> predictors() const; // labels minus intercept
};

enum class StepAction { enter, remove };

struct StepEvent {
    int step = 0;
    StepAction action = StepAction::enter;
    std::string variable;
    double partial_f = 0;
    double p = 0;
};

struct StepwiseResult {
    std::vector<StepEvent> trace;
    RegressionFit final;
    double alpha_enter = 0.050;
    double alpha_remove = 0.100;
};

// Minimize ||y - X beta||^2 by Householder QR; inference from
// sigma^2 (X^T X)^{-1} with sigma^2 = SSE / (n - p).
RegressionFit fit_ols(const DesignMatrix& X, const Eigen::VectorXd& y);

// Partial F test between nested fits on the same response:
// F = ((SSE_r - SSE_f) / q) / (SSE_f / df_f), p from F(q, df_f).
std::pair<double, double> partial_f(const RegressionFit& reduced,
                                    const RegressionFit& full);

// SPSS-style stepwise selection: enter the candidate with the smallest
// partial-F p value while it is <= alpha_enter, then remove the included
// variable with the largest p value while it is >= alpha_remove; stop
// when neither rule fires. Entry ties go to the earlier candidate in the
// declared order; removal ties to the earlier entrant.
StepwiseResult stepwise(const PanelDataset& ds, const std::string& target,
                        const std::vector<std::string>& candidates,
                        double alpha_enter = 0.050, double alpha_remove = 0.100);

// X beta on the fit's own scale; labels must match exactly.
Eigen::VectorXd predict(const RegressionFit& fit, const DesignMatrix& X);

// Slope coefficients of a log-log fit, labeled by underlying variable
// (a leading "ln_" prefix is stripped); the intercept is excluded.
std::vector<std::pair<std::string, double>> elasticities(const RegressionFit& fit);

std::string fit_to_json(const RegressionFit& fit);
std::string stepwise_to_json(const StepwiseResult& result);

} // namespace enermod
