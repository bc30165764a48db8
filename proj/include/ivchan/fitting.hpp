// SPDX-License-Identifier: Apache-2.0
//
// ivchan - statistical modeling of in vivo wireless channels at 915 MHz
// Copyright (C) 2026 the ivchan authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef IVCHAN_FITTING_HPP
#define IVCHAN_FITTING_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ivchan/body.hpp"
#include "ivchan/errors.hpp"

namespace ivchan
{

// One (depth, path loss) observation used for regression.
struct DepthSample
{
    double depth_mm;
    double path_loss_db;
};

enum class ModelKind
{
    Linear,      // PL = intercept + slope * (d / d0)
    LogDistance, // PL = intercept + 10 * slope * log10(d / d0)
};

constexpr std::string_view to_string(ModelKind kind)
{
    return kind == ModelKind::Linear ? "Linear" : "LogDistance";
}

// Regression output. For the linear model the slope is the decay rate m;
// for the log-distance model it is the path loss exponent n. sigma_db is
// the residual standard deviation with denominator (n - 2); mse_db2 the
// plain mean of squared residuals.
struct FitResult
{
    ModelKind model_kind;
    double intercept_db;
    double slope;
    double sigma_db;
    double mse_db2;
    std::size_t n_samples;
};

struct GdOptions
{
    double learning_rate = 0.01;
    std::size_t max_iters = 100000;
    double tol_db2 = 1e-10; // stop when the per-iteration MSE improvement drops below this
};

// Gradient-descent result; iterations counts the steps actually taken.
struct GdFitResult
{
    FitResult fit;
    std::size_t iterations;
};

namespace detail
{

inline void validate_samples(std::span<const DepthSample> samples)
{
    if (samples.size() < 3)
        throw InsufficientSamples("need at least 3 samples, got " +
                                  std::to_string(samples.size()));
    for (const DepthSample &s : samples) {
        if (!std::isfinite(s.path_loss_db))
            throw InvalidArgument("path loss values must be finite");
        if (s.depth_mm < kReferenceDepthMm)
            throw DepthBelowReference("sample depth " + std::to_string(s.depth_mm) +
                                      " mm is below the reference depth of 10 mm");
    }
}

inline double regressor(ModelKind kind, double depth_mm)
{
    const double ratio = depth_mm / kReferenceDepthMm;
    return kind == ModelKind::Linear ? ratio : 10.0 * std::log10(ratio);
}

// Ordinary least squares of path loss against the model's regressor,
// computed in centered form.
inline FitResult ols(ModelKind kind, std::span<const DepthSample> samples)
{
    validate_samples(samples);
    const double n = static_cast<double>(samples.size());

    double x_mean = 0.0;
    double y_mean = 0.0;
    for (const DepthSample &s : samples) {
        x_mean += regressor(kind, s.depth_mm);
        y_mean += s.path_loss_db;
    }
    x_mean /= n;
    y_mean /= n;

    double sxx = 0.0;
    double sxy = 0.0;
    for (const DepthSample &s : samples) {
        const double dx = regressor(kind, s.depth_mm) - x_mean;
        sxx += dx * dx;
        sxy += dx * (s.path_loss_db - y_mean);
    }
    if (sxx == 0.0)
        throw DegenerateDesign("all sample depths are equal; the slope is unidentifiable");

    const double slope = sxy / sxx;
    const double intercept = y_mean - slope * x_mean;

    double rss = 0.0;
    for (const DepthSample &s : samples) {
        const double r = s.path_loss_db - (intercept + slope * regressor(kind, s.depth_mm));
        rss += r * r;
    }

    FitResult result;
    result.model_kind = kind;
    result.intercept_db = intercept;
    result.slope = slope;
    result.mse_db2 = rss / n;
    result.sigma_db = std::sqrt(rss / (n - 2.0));
    result.n_samples = samples.size();
    return result;
}

} // namespace detail

// Closed-form least squares for the linear depth model PL = PL0 + m (d/d0).
inline FitResult fit_linear(std::span<const DepthSample> samples)
{
    return detail::ols(ModelKind::Linear, samples);
}

// Least squares for the log-distance model PL = PL0 + 10 n log10(d/d0);
// the slope field holds the exponent n.
inline FitResult fit_log_distance(std::span<const DepthSample> samples)
{
    return detail::ols(ModelKind::LogDistance, samples);
}

// Minimizes the same MSE objective as fit_linear by full-batch gradient
// descent on (intercept, slope). The regressor is centered to zero mean
// before iterating and the intercept de-normalized afterward, which keeps a
// single learning rate stable across depth ranges. Gradients are exact batch
// gradients evaluated from precomputed sufficient statistics.
inline GdFitResult fit_linear_gd(std::span<const DepthSample> samples,
                                 const GdOptions &options = {})
{
    detail::validate_samples(samples);
    if (!(options.learning_rate > 0.0))
        throw InvalidStep("learning rate must be positive, got " +
                          std::to_string(options.learning_rate));

    const double n = static_cast<double>(samples.size());
    double x_mean = 0.0;
    double y_mean = 0.0;
    for (const DepthSample &s : samples) {
        x_mean += detail::regressor(ModelKind::Linear, s.depth_mm);
        y_mean += s.path_loss_db;
    }
    x_mean /= n;
    y_mean /= n;

    // Centered moments: with u = x - x_mean, the objective is
    //   J(a, b) = avg(y^2) + a^2 - 2 a y_mean + suu b^2 - 2 suy b,
    // and its exact gradient is (2 (a - y_mean), 2 (suu b - suy)).
    double suu = 0.0;
    double suy = 0.0;
    double avg_y2 = 0.0;
    for (const DepthSample &s : samples) {
        const double u = detail::regressor(ModelKind::Linear, s.depth_mm) - x_mean;
        suu += u * u;
        suy += u * s.path_loss_db;
        avg_y2 += s.path_loss_db * s.path_loss_db;
    }
    suu /= n;
    suy /= n;
    avg_y2 /= n;
    if (suu == 0.0)
        throw DegenerateDesign("all sample depths are equal; the slope is unidentifiable");

    const auto objective = [&](double a, double b) {
        return avg_y2 + a * a - 2.0 * a * y_mean + suu * b * b - 2.0 * suy * b;
    };

    double a = 0.0;
    double b = 0.0;
    double mse_prev = objective(a, b);
    std::size_t iterations = 0;
    bool converged = false;

    while (iterations < options.max_iters) {
        const double grad_a = 2.0 * (a - y_mean);
        const double grad_b = 2.0 * (suu * b - suy);
        a -= options.learning_rate * grad_a;
        b -= options.learning_rate * grad_b;
        ++iterations;

        const double mse_now = objective(a, b);
        if (!std::isfinite(mse_now))
            throw NonConvergence("MSE diverged after " + std::to_string(iterations) +
                                 " iterations; reduce the learning rate");
        const double improvement = mse_prev - mse_now;
        if (improvement < -1e-9 * (std::fabs(mse_prev) + 1.0))
            throw NonConvergence("MSE increased at iteration " + std::to_string(iterations) +
                                 "; the learning rate exceeds the stability bound");
        if (improvement < options.tol_db2) {
            converged = true;
            mse_prev = mse_now;
            break;
        }
        mse_prev = mse_now;
    }
    if (!converged)
        throw NonConvergence("MSE still improving by more than tol after " +
                             std::to_string(options.max_iters) + " iterations");

    const double slope = b;
    const double intercept = a - slope * x_mean;

    // Report residual statistics from the actual samples, the same way the
    // closed form does.
    double rss = 0.0;
    for (const DepthSample &s : samples) {
        const double r =
            s.path_loss_db - (intercept + slope * detail::regressor(ModelKind::Linear, s.depth_mm));
        rss += r * r;
    }

    GdFitResult result;
    result.fit.model_kind = ModelKind::Linear;
    result.fit.intercept_db = intercept;
    result.fit.slope = slope;
    result.fit.mse_db2 = rss / n;
    result.fit.sigma_db = std::sqrt(rss / (n - 2.0));
    result.fit.n_samples = samples.size();
    result.iterations = iterations;
    return result;
}

// Fits both candidate models and returns them ordered by ascending MSE;
// the linear model wins exact ties.
inline std::pair<FitResult, FitResult> compare_models(std::span<const DepthSample> samples)
{
    FitResult linear = fit_linear(samples);
    FitResult logdist = fit_log_distance(samples);
    if (logdist.mse_db2 < linear.mse_db2)
        return {logdist, linear};
    return {linear, logdist};
}

} // namespace ivchan

#endif // IVCHAN_FITTING_HPP
