#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "ogan/nn/tensor.hpp"

namespace ogan::nn {

struct Param {
  Tensor value;
  Tensor grad;
};

enum class Activation { LeakyRelu, Tanh, Sigmoid };

// Weight distribution chosen by the activation the layer feeds into.
enum class Init { Glorot, He };

// Layers own their output and gradient buffers and reuse them across calls;
// forward results stay valid until the layer's next forward. The cached
// input pointer is only dereferenced during backward, so the input tensor
// must outlive the forward/backward pair (the network driver guarantees
// this).
class Layer {
 public:
  virtual ~Layer() = default;
  virtual const Tensor& forward(const Tensor& x) = 0;
  // grad_out has the shape of the layer output; returns the gradient with
  // respect to the layer input. Parameter gradients accumulate only when
  // `accumulate` is set; input gradients always propagate.
  virtual const Tensor& backward(const Tensor& grad_out, bool accumulate) = 0;
  virtual std::vector<Param*> params() { return {}; }
  virtual void init(std::mt19937_64&) {}
  virtual std::string name() const = 0;
};

class DenseLayer : public Layer {
 public:
  DenseLayer(std::size_t in, std::size_t out, Init init_kind);
  const Tensor& forward(const Tensor& x) override;
  const Tensor& backward(const Tensor& grad_out, bool accumulate) override;
  std::vector<Param*> params() override { return {&weight_, &bias_}; }
  void init(std::mt19937_64& rng) override;
  std::string name() const override { return "dense"; }

  Param& weight() { return weight_; }
  Param& bias() { return bias_; }

 private:
  std::size_t in_;
  std::size_t out_;
  Init init_kind_;
  Param weight_;  // (in, out)
  Param bias_;    // (out)
  const Tensor* cached_input_ = nullptr;
  Tensor output_;
  Tensor grad_in_;
};

class ActivationLayer : public Layer {
 public:
  explicit ActivationLayer(Activation kind, double slope = 0.01)
      : kind_(kind), slope_(slope) {}
  const Tensor& forward(const Tensor& x) override;
  const Tensor& backward(const Tensor& grad_out, bool accumulate) override;
  std::string name() const override { return "activation"; }
  Activation kind() const { return kind_; }

 private:
  Activation kind_;
  double slope_;
  const Tensor* cached_input_ = nullptr;
  Tensor output_;
  Tensor grad_in_;
};

// 1-D convolution, kernel 2, stride 1, zero padding 1 on both ends.
class Conv1dLayer : public Layer {
 public:
  Conv1dLayer(std::size_t in_channels, std::size_t out_channels,
              Init init_kind, std::size_t kernel = 2, std::size_t padding = 1);
  const Tensor& forward(const Tensor& x) override;
  const Tensor& backward(const Tensor& grad_out, bool accumulate) override;
  std::vector<Param*> params() override { return {&weight_, &bias_}; }
  void init(std::mt19937_64& rng) override;
  std::string name() const override { return "conv1d"; }

 private:
  std::size_t in_channels_;
  std::size_t out_channels_;
  std::size_t kernel_;
  std::size_t padding_;
  Init init_kind_;
  Param weight_;  // (out_channels, in_channels, kernel)
  Param bias_;    // (out_channels)
  const Tensor* cached_input_ = nullptr;
  Tensor output_;
  Tensor grad_in_;
};

// Max pooling, window 2, stride 2, floor division on odd lengths.
class MaxPool1dLayer : public Layer {
 public:
  const Tensor& forward(const Tensor& x) override;
  const Tensor& backward(const Tensor& grad_out, bool accumulate) override;
  std::string name() const override { return "maxpool1d"; }

 private:
  std::vector<std::size_t> argmax_;
  std::vector<std::size_t> input_shape_;
  Tensor output_;
  Tensor grad_in_;
};

// (batch, features) -> (batch, 1, features)
class AsChannelsLayer : public Layer {
 public:
  const Tensor& forward(const Tensor& x) override;
  const Tensor& backward(const Tensor& grad_out, bool accumulate) override;
  std::string name() const override { return "as_channels"; }

 private:
  Tensor output_;
  Tensor grad_in_;
};

// (batch, channels, length) -> (batch, channels * length)
class FlattenLayer : public Layer {
 public:
  const Tensor& forward(const Tensor& x) override;
  const Tensor& backward(const Tensor& grad_out, bool accumulate) override;
  std::string name() const override { return "flatten"; }

 private:
  std::vector<std::size_t> input_shape_;
  Tensor output_;
  Tensor grad_in_;
};

class Network {
 public:
  Network() = default;
  Network(Network&&) = default;
  Network& operator=(Network&&) = default;

  void add(std::unique_ptr<Layer> layer);

  // The input must stay alive until the matching backward completes.
  const Tensor& forward(const Tensor& x);
  // Returns the gradient with respect to the network input so a frozen
  // network can pass gradients upstream.
  const Tensor& backward(const Tensor& grad_out);

  std::vector<Param*> parameters();
  void zero_grad();

  // Frozen parameters receive no gradient accumulation but the backward pass
  // still produces input gradients.
  void set_trainable(bool trainable) { trainable_ = trainable; }
  bool trainable() const { return trainable_; }

  void init_weights(std::uint64_t seed);

  std::size_t layer_count() const { return layers_.size(); }
  Layer& layer(std::size_t i) { return *layers_[i]; }

 private:
  std::vector<std::unique_ptr<Layer>> layers_;
  bool trainable_ = true;
  bool forward_done_ = false;
};

// Adam with bias correction; clears the gradients it consumes.
class Adam {
 public:
  explicit Adam(double lr, double beta1 = 0.9, double beta2 = 0.999,
                double eps = 1e-8)
      : lr_(lr), beta1_(beta1), beta2_(beta2), eps_(eps) {}

  void step(const std::vector<Param*>& params);

  long steps_taken() const { return t_; }

 private:
  double lr_;
  double beta1_;
  double beta2_;
  double eps_;
  long t_ = 0;
  std::vector<std::vector<double>> m_;
  std::vector<std::vector<double>> v_;
};

}  // namespace ogan::nn
