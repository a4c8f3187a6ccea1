#pragma once

#include <cstddef>
#include <span>

namespace ogan::nn {

// F(x) = logit(0.98 x + 0.01). The squash keeps the logit argument inside
// (0, 1) for any x in [0, 1].
double squash_logit(double x);
double squash_logit_deriv(double x);

// L(pred, target) = (F(pred) - F(target))^2
//                 + lambda * (F(1/2 - (pred - target)/2) - F(1/2))^2
// with lambda = 0.001. Predictions are clamped into [1e-7, 1 - 1e-7] first.
double ogan_loss(double pred, double target);
double ogan_loss_grad(double pred, double target);

// Mean loss over a batch and its gradient with respect to the predictions.
double batch_ogan_loss(std::span<const double> pred,
                       std::span<const double> target);
void batch_ogan_loss_grad(std::span<const double> pred,
                          std::span<const double> target,
                          std::span<double> grad_out);

}  // namespace ogan::nn
