#pragma once

#include <atomic>
#include <functional>
#include <memory>
#include <string>
#include <utility>

namespace lipopt {

/// A scalar objective f: R -> R with an evaluation counter and an optional
/// analytic derivative.
///
/// eval() must be pure: equal inputs give equal outputs, and it must be safe
/// to call from several threads at once. The counter is atomic; copies of an
/// Objective share it, so per-run accounting should diff eval_count() around
/// the run (all solvers in this library do exactly that).
class Objective {
public:
  using Fn = std::function<double(double)>;

  Objective(std::string name, Fn eval)
      : name_(std::move(name)),
        eval_(std::move(eval)),
        count_(std::make_shared<std::atomic<long long>>(0)) {}

  Objective(std::string name, Fn eval, Fn derivative)
      : name_(std::move(name)),
        eval_(std::move(eval)),
        deriv_(std::move(derivative)),
        count_(std::make_shared<std::atomic<long long>>(0)) {}

  double operator()(double x) const {
    count_->fetch_add(1, std::memory_order_relaxed);
    return eval_(x);
  }

  long long eval_count() const noexcept { return count_->load(std::memory_order_relaxed); }
  void reset_count() const noexcept { count_->store(0, std::memory_order_relaxed); }

  bool has_derivative() const noexcept { return static_cast<bool>(deriv_); }
  // Derivative calls are not counted as objective evaluations.
  double derivative(double x) const { return deriv_(x); }

  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
  Fn eval_;
  Fn deriv_;
  std::shared_ptr<std::atomic<long long>> count_;
};

}  // namespace lipopt
