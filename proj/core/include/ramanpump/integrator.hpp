#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ramanpump {

/// Raised when the step size underflows or the step budget is exhausted;
/// carries the last time the integrator reached successfully.
class IntegrationError : public std::runtime_error {
  public:
    IntegrationError(const std::string& what, double t_last)
        : std::runtime_error(what + " (last good t = " + std::to_string(t_last) + ")"),
          t_last_(t_last) {}
    double t_last() const { return t_last_; }

  private:
    double t_last_;
};

struct StepControl {
    double rtol = 1.0e-8;
    double atol = 1.0e-10;
    double safety = 0.9;
    double min_factor = 0.2;
    double max_factor = 5.0;
    double h_init = 0.0;  ///< 0 selects automatically
    double h_max = std::numeric_limits<double>::infinity();
    std::int64_t max_steps = 500'000'000;
};

/// Explicit Dormand-Prince 5(4) with FSAL and a proportional step
/// controller, operating directly on complex Eigen matrices. The error is
/// measured in the componentwise (atol, rtol)-weighted RMS norm.
template <class Rhs>
class Dopri5 {
  public:
    using State = Eigen::MatrixXcd;

    Dopri5(Rhs rhs, StepControl control) : rhs_(std::move(rhs)), ctrl_(control) {}

    void start(double t0, State y0) {
        t_ = t0;
        y_ = std::move(y0);
        k1_ = rhs_(t_, y_);
        h_ = ctrl_.h_init > 0.0 ? ctrl_.h_init : initial_step();
        steps_ = 0;
    }

    double time() const { return t_; }
    const State& state() const { return y_; }
    std::int64_t steps_taken() const { return steps_; }

    /// Replace the current state (e.g. after an external projection); the
    /// cached slope is refreshed.
    void set_state(const State& y) {
        y_ = y;
        k1_ = rhs_(t_, y_);
    }

    /// Advance to exactly t_target, adapting the step size on the way.
    /// post_accept(t, y) runs after every accepted step.
    template <class PostAccept>
    void advance_to(double t_target, PostAccept&& post_accept) {
        while (t_ < t_target) {
            const double remaining = t_target - t_;
            if (remaining <= std::abs(t_target) * 1e-14) {
                t_ = t_target;
                break;
            }
            const bool capped = remaining < std::min(h_, ctrl_.h_max);
            const double h = std::min({h_, ctrl_.h_max, remaining});
            step_once(h, capped);
            post_accept(t_, y_);
        }
    }

    void advance_to(double t_target) {
        advance_to(t_target, [](double, const State&) {});
    }

  private:
    double initial_step() const {
        const double d0 = weighted_norm(y_, y_, y_);
        const double d1 = weighted_norm(k1_, y_, y_);
        double h = (d0 > 1e-10 && d1 > 1e-10) ? 0.01 * d0 / d1 : 1e-6;
        return std::min(h, ctrl_.h_max);
    }

    double weighted_norm(const State& err, const State& y0,
                         const State& y1) const {
        const auto scale = (ctrl_.atol +
                            ctrl_.rtol * y0.array().abs().max(y1.array().abs()))
                               .eval();
        const double sq = (err.array().abs() / scale).square().sum();
        return std::sqrt(sq / double(err.size()));
    }

    void step_once(double h, bool capped) {
        // Butcher tableau of the Dormand-Prince 5(4) pair.
        static constexpr double a21 = 1.0 / 5.0;
        static constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
        static constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0,
                                a43 = 32.0 / 9.0;
        static constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                                a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
        static constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0,
                                a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                                a65 = -5103.0 / 18656.0;
        static constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0,
                                b4 = 125.0 / 192.0, b5 = -2187.0 / 6784.0,
                                b6 = 11.0 / 84.0;
        static constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0,
                                e4 = 71.0 / 1920.0, e5 = -17253.0 / 339200.0,
                                e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
        static constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0,
                                c5 = 8.0 / 9.0;

        while (true) {
            if (++steps_ > ctrl_.max_steps)
                throw IntegrationError("integrator: step budget exhausted", t_);
            if (!(h > std::abs(t_) * 1e-15 + 1e-300))
                throw IntegrationError("integrator: step size underflow", t_);

            const State k2 = rhs_(t_ + c2 * h, y_ + h * (a21 * k1_));
            const State k3 = rhs_(t_ + c3 * h, y_ + h * (a31 * k1_ + a32 * k2));
            const State k4 =
                rhs_(t_ + c4 * h, y_ + h * (a41 * k1_ + a42 * k2 + a43 * k3));
            const State k5 = rhs_(
                t_ + c5 * h,
                y_ + h * (a51 * k1_ + a52 * k2 + a53 * k3 + a54 * k4));
            const State k6 = rhs_(
                t_ + h,
                y_ + h * (a61 * k1_ + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
            const State y_new =
                y_ + h * (b1 * k1_ + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
            const State k7 = rhs_(t_ + h, y_new);
            const State err = h * (e1 * k1_ + e3 * k3 + e4 * k4 + e5 * k5 +
                                   e6 * k6 + e7 * k7);

            const double err_norm = weighted_norm(err, y_, y_new);
            if (err_norm <= 1.0) {
                t_ += h;
                y_ = y_new;
                k1_ = k7;  // first-same-as-last
                const double grow =
                    err_norm == 0.0
                        ? ctrl_.max_factor
                        : std::clamp(ctrl_.safety * std::pow(err_norm, -0.2),
                                     ctrl_.min_factor, ctrl_.max_factor);
                // a step shortened only to hit a sample time must not drag
                // the adaptive step size down with it
                const double candidate = std::min(h * grow, ctrl_.h_max);
                h_ = capped ? std::max(h_, candidate) : candidate;
                return;
            }
            capped = false;
            h *= std::clamp(ctrl_.safety * std::pow(err_norm, -0.2),
                            ctrl_.min_factor, 1.0);
        }
    }

    Rhs rhs_;
    StepControl ctrl_;
    double t_ = 0.0;
    double h_ = 0.0;
    std::int64_t steps_ = 0;
    State y_;
    State k1_;
};

}  // namespace ramanpump
