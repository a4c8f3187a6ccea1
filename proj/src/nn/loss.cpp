#include "ogan/nn/loss.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ogan::nn {

namespace {

constexpr double kLambda = 0.001;

double clamp_unit(double x) { return std::clamp(x, 1e-7, 1.0 - 1e-7); }

}  // namespace

double squash_logit(double x) {
  const double u = 0.98 * x + 0.01;
  return std::log(u / (1.0 - u));
}

double squash_logit_deriv(double x) {
  const double u = 0.98 * x + 0.01;
  return 0.98 / (u * (1.0 - u));
}

double ogan_loss(double pred, double target) {
  const double y = clamp_unit(pred);
  const double d = squash_logit(y) - squash_logit(target);
  const double mid = 0.5 - (y - target) / 2.0;
  const double s = squash_logit(mid);  // F(1/2) = 0
  return d * d + kLambda * s * s;
}

double ogan_loss_grad(double pred, double target) {
  const double y = clamp_unit(pred);
  const double d = squash_logit(y) - squash_logit(target);
  const double mid = 0.5 - (y - target) / 2.0;
  const double s = squash_logit(mid);
  return 2.0 * d * squash_logit_deriv(y) -
         kLambda * s * squash_logit_deriv(mid);
}

double batch_ogan_loss(std::span<const double> pred,
                       std::span<const double> target) {
  if (pred.size() != target.size() || pred.empty()) {
    throw std::invalid_argument("loss needs matching nonempty batches");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    acc += ogan_loss(pred[i], target[i]);
  }
  return acc / static_cast<double>(pred.size());
}

void batch_ogan_loss_grad(std::span<const double> pred,
                          std::span<const double> target,
                          std::span<double> grad_out) {
  if (pred.size() != target.size() || pred.empty() ||
      grad_out.size() != pred.size()) {
    throw std::invalid_argument("loss needs matching nonempty batches");
  }
  const double inv = 1.0 / static_cast<double>(pred.size());
  for (std::size_t i = 0; i < pred.size(); ++i) {
    grad_out[i] = inv * ogan_loss_grad(pred[i], target[i]);
  }
}

}  // namespace ogan::nn
