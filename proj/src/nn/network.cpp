#include "ogan/nn/network.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace ogan::nn {

namespace {

using MatrixRM =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MapRM = Eigen::Map<MatrixRM>;
using ConstMapRM = Eigen::Map<const MatrixRM>;
using ArrayMap = Eigen::Map<Eigen::ArrayXd>;
using ConstArrayMap = Eigen::Map<const Eigen::ArrayXd>;

void fill_glorot(AlignedBuffer& w, std::size_t fan_in,
                 std::size_t fan_out, std::mt19937_64& rng) {
  const double limit = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
  std::uniform_real_distribution<double> dist(-limit, limit);
  for (auto& x : w) x = dist(rng);
}

void fill_he(AlignedBuffer& w, std::size_t fan_in,
             std::mt19937_64& rng) {
  const double stddev = std::sqrt(2.0 / static_cast<double>(fan_in));
  std::normal_distribution<double> dist(0.0, stddev);
  for (auto& x : w) x = dist(rng);
}

void ensure_shape(Tensor& t, std::vector<std::size_t> shape) {
  if (t.shape != shape) {
    t.shape = std::move(shape);
    t.data.assign(shape_size(t.shape), 0.0);
  }
}

}  // namespace

// --- DenseLayer -------------------------------------------------------------

DenseLayer::DenseLayer(std::size_t in, std::size_t out, Init init_kind)
    : in_(in), out_(out), init_kind_(init_kind) {
  weight_.value = Tensor({in, out});
  weight_.grad = Tensor({in, out});
  bias_.value = Tensor({out});
  bias_.grad = Tensor({out});
}

const Tensor& DenseLayer::forward(const Tensor& x) {
  if (x.rank() != 2 || x.dim(1) != in_) {
    throw std::invalid_argument("dense layer shape mismatch: expected (*, " +
                                std::to_string(in_) + ")");
  }
  cached_input_ = &x;
  const std::size_t batch = x.dim(0);
  ensure_shape(output_, {batch, out_});
  ConstMapRM X(x.data.data(), static_cast<Eigen::Index>(batch),
               static_cast<Eigen::Index>(in_));
  ConstMapRM W(weight_.value.data.data(), static_cast<Eigen::Index>(in_),
               static_cast<Eigen::Index>(out_));
  Eigen::Map<const Eigen::RowVectorXd> b(bias_.value.data.data(),
                                         static_cast<Eigen::Index>(out_));
  MapRM Y(output_.data.data(), static_cast<Eigen::Index>(batch),
          static_cast<Eigen::Index>(out_));
  Y.noalias() = X * W;
  Y.rowwise() += b;
  return output_;
}

const Tensor& DenseLayer::backward(const Tensor& grad_out, bool accumulate) {
  const std::size_t batch = cached_input_->dim(0);
  ensure_shape(grad_in_, {batch, in_});
  ConstMapRM dY(grad_out.data.data(), static_cast<Eigen::Index>(batch),
                static_cast<Eigen::Index>(out_));
  ConstMapRM X(cached_input_->data.data(), static_cast<Eigen::Index>(batch),
               static_cast<Eigen::Index>(in_));
  ConstMapRM W(weight_.value.data.data(), static_cast<Eigen::Index>(in_),
               static_cast<Eigen::Index>(out_));
  MapRM dX(grad_in_.data.data(), static_cast<Eigen::Index>(batch),
           static_cast<Eigen::Index>(in_));
  dX.noalias() = dY * W.transpose();
  if (accumulate) {
    MapRM dW(weight_.grad.data.data(), static_cast<Eigen::Index>(in_),
             static_cast<Eigen::Index>(out_));
    dW.noalias() += X.transpose() * dY;
    Eigen::Map<Eigen::RowVectorXd> db(bias_.grad.data.data(),
                                      static_cast<Eigen::Index>(out_));
    db.noalias() += dY.colwise().sum();
  }
  return grad_in_;
}

void DenseLayer::init(std::mt19937_64& rng) {
  if (init_kind_ == Init::Glorot) {
    fill_glorot(weight_.value.data, in_, out_, rng);
  } else {
    fill_he(weight_.value.data, in_, rng);
  }
  bias_.value.fill(0.0);
}

// --- ActivationLayer ----------------------------------------------------------

const Tensor& ActivationLayer::forward(const Tensor& x) {
  cached_input_ = &x;
  ensure_shape(output_, x.shape);
  const std::size_t n = x.size();
  switch (kind_) {
    case Activation::LeakyRelu:
      for (std::size_t i = 0; i < n; ++i) {
        const double v = x.data[i];
        output_.data[i] = v > 0.0 ? v : slope_ * v;
      }
      break;
    case Activation::Tanh:
      for (std::size_t i = 0; i < n; ++i) {
        output_.data[i] = std::tanh(x.data[i]);
      }
      break;
    case Activation::Sigmoid:
      for (std::size_t i = 0; i < n; ++i) {
        output_.data[i] = 1.0 / (1.0 + std::exp(-x.data[i]));
      }
      break;
  }
  return output_;
}

const Tensor& ActivationLayer::backward(const Tensor& grad_out, bool) {
  ensure_shape(grad_in_, grad_out.shape);
  const std::size_t n = grad_out.size();
  switch (kind_) {
    case Activation::LeakyRelu:
      for (std::size_t i = 0; i < n; ++i) {
        grad_in_.data[i] =
            grad_out.data[i] * (cached_input_->data[i] > 0.0 ? 1.0 : slope_);
      }
      break;
    case Activation::Tanh:
      for (std::size_t i = 0; i < n; ++i) {
        const double y = output_.data[i];
        grad_in_.data[i] = grad_out.data[i] * (1.0 - y * y);
      }
      break;
    case Activation::Sigmoid:
      for (std::size_t i = 0; i < n; ++i) {
        const double y = output_.data[i];
        grad_in_.data[i] = grad_out.data[i] * y * (1.0 - y);
      }
      break;
  }
  return grad_in_;
}

// --- Conv1dLayer ----------------------------------------------------------------

Conv1dLayer::Conv1dLayer(std::size_t in_channels, std::size_t out_channels,
                         Init init_kind, std::size_t kernel,
                         std::size_t padding)
    : in_channels_(in_channels),
      out_channels_(out_channels),
      kernel_(kernel),
      padding_(padding),
      init_kind_(init_kind) {
  weight_.value = Tensor({out_channels, in_channels, kernel});
  weight_.grad = Tensor({out_channels, in_channels, kernel});
  bias_.value = Tensor({out_channels});
  bias_.grad = Tensor({out_channels});
}

const Tensor& Conv1dLayer::forward(const Tensor& x) {
  if (x.rank() != 3 || x.dim(1) != in_channels_) {
    throw std::invalid_argument("conv1d shape mismatch");
  }
  cached_input_ = &x;
  const std::size_t batch = x.dim(0);
  const std::size_t len = x.dim(2);
  const std::size_t out_len = len + 2 * padding_ - kernel_ + 1;
  ensure_shape(output_, {batch, out_channels_, out_len});

  for (std::size_t b = 0; b < batch; ++b) {
    for (std::size_t f = 0; f < out_channels_; ++f) {
      double* out_row = output_.data.data() +
                        (b * out_channels_ + f) * out_len;
      const double bias = bias_.value.data[f];
      for (std::size_t o = 0; o < out_len; ++o) out_row[o] = bias;
      for (std::size_t c = 0; c < in_channels_; ++c) {
        const double* in_row = x.data.data() + (b * in_channels_ + c) * len;
        const double* w =
            weight_.value.data.data() + (f * in_channels_ + c) * kernel_;
        for (std::size_t k = 0; k < kernel_; ++k) {
          const double wk = w[k];
          // Output o reads input index o + k - padding.
          const long lo =
              std::max<long>(0, static_cast<long>(padding_) -
                                    static_cast<long>(k));
          const long hi = std::min<long>(
              static_cast<long>(out_len) - 1,
              static_cast<long>(len) - 1 + static_cast<long>(padding_) -
                  static_cast<long>(k));
          for (long o = lo; o <= hi; ++o) {
            out_row[o] +=
                wk * in_row[o + static_cast<long>(k) -
                            static_cast<long>(padding_)];
          }
        }
      }
    }
  }
  return output_;
}

const Tensor& Conv1dLayer::backward(const Tensor& grad_out, bool accumulate) {
  const std::size_t batch = cached_input_->dim(0);
  const std::size_t len = cached_input_->dim(2);
  const std::size_t out_len = grad_out.dim(2);
  ensure_shape(grad_in_, cached_input_->shape);
  std::fill(grad_in_.data.begin(), grad_in_.data.end(), 0.0);

  for (std::size_t b = 0; b < batch; ++b) {
    for (std::size_t f = 0; f < out_channels_; ++f) {
      const double* g_row =
          grad_out.data.data() + (b * out_channels_ + f) * out_len;
      if (accumulate) {
        double acc = 0.0;
        for (std::size_t o = 0; o < out_len; ++o) acc += g_row[o];
        bias_.grad.data[f] += acc;
      }
      for (std::size_t c = 0; c < in_channels_; ++c) {
        const double* in_row =
            cached_input_->data.data() + (b * in_channels_ + c) * len;
        double* gin_row = grad_in_.data.data() + (b * in_channels_ + c) * len;
        const double* w =
            weight_.value.data.data() + (f * in_channels_ + c) * kernel_;
        double* gw =
            weight_.grad.data.data() + (f * in_channels_ + c) * kernel_;
        for (std::size_t k = 0; k < kernel_; ++k) {
          const long lo = std::max<long>(
              0, static_cast<long>(padding_) - static_cast<long>(k));
          const long hi = std::min<long>(
              static_cast<long>(out_len) - 1,
              static_cast<long>(len) - 1 + static_cast<long>(padding_) -
                  static_cast<long>(k));
          const double wk = w[k];
          double gwk = 0.0;
          for (long o = lo; o <= hi; ++o) {
            const long xi =
                o + static_cast<long>(k) - static_cast<long>(padding_);
            gin_row[xi] += g_row[o] * wk;
            gwk += g_row[o] * in_row[xi];
          }
          if (accumulate) gw[k] += gwk;
        }
      }
    }
  }
  return grad_in_;
}

void Conv1dLayer::init(std::mt19937_64& rng) {
  const std::size_t fan_in = in_channels_ * kernel_;
  const std::size_t fan_out = out_channels_ * kernel_;
  if (init_kind_ == Init::Glorot) {
    fill_glorot(weight_.value.data, fan_in, fan_out, rng);
  } else {
    fill_he(weight_.value.data, fan_in, rng);
  }
  bias_.value.fill(0.0);
}

// --- MaxPool1dLayer --------------------------------------------------------------

const Tensor& MaxPool1dLayer::forward(const Tensor& x) {
  const std::size_t batch = x.dim(0);
  const std::size_t channels = x.dim(1);
  const std::size_t len = x.dim(2);
  const std::size_t out_len = len / 2;
  input_shape_ = x.shape;
  ensure_shape(output_, {batch, channels, out_len});
  argmax_.resize(output_.size());

  for (std::size_t bc = 0; bc < batch * channels; ++bc) {
    for (std::size_t o = 0; o < out_len; ++o) {
      const std::size_t i0 = bc * len + 2 * o;
      const std::size_t pick = x.data[i0] >= x.data[i0 + 1] ? i0 : i0 + 1;
      output_.data[bc * out_len + o] = x.data[pick];
      argmax_[bc * out_len + o] = pick;
    }
  }
  return output_;
}

const Tensor& MaxPool1dLayer::backward(const Tensor& grad_out, bool) {
  ensure_shape(grad_in_, input_shape_);
  std::fill(grad_in_.data.begin(), grad_in_.data.end(), 0.0);
  for (std::size_t i = 0; i < grad_out.size(); ++i) {
    grad_in_.data[argmax_[i]] += grad_out.data[i];
  }
  return grad_in_;
}

// --- shape adapters ---------------------------------------------------------------

const Tensor& AsChannelsLayer::forward(const Tensor& x) {
  ensure_shape(output_, {x.dim(0), 1, x.dim(1)});
  output_.data = x.data;
  return output_;
}

const Tensor& AsChannelsLayer::backward(const Tensor& grad_out, bool) {
  ensure_shape(grad_in_, {grad_out.dim(0), grad_out.dim(2)});
  grad_in_.data = grad_out.data;
  return grad_in_;
}

const Tensor& FlattenLayer::forward(const Tensor& x) {
  input_shape_ = x.shape;
  ensure_shape(output_, {x.dim(0), x.dim(1) * x.dim(2)});
  output_.data = x.data;
  return output_;
}

const Tensor& FlattenLayer::backward(const Tensor& grad_out, bool) {
  ensure_shape(grad_in_, input_shape_);
  grad_in_.data = grad_out.data;
  return grad_in_;
}

// --- Network ------------------------------------------------------------------------

void Network::add(std::unique_ptr<Layer> layer) {
  layers_.push_back(std::move(layer));
}

const Tensor& Network::forward(const Tensor& x) {
  const Tensor* cur = &x;
  for (auto& layer : layers_) cur = &layer->forward(*cur);
  forward_done_ = true;
  return *cur;
}

const Tensor& Network::backward(const Tensor& grad_out) {
  if (!forward_done_) {
    throw std::logic_error("backward called before forward");
  }
  const Tensor* cur = &grad_out;
  for (auto it = layers_.rbegin(); it != layers_.rend(); ++it) {
    cur = &(*it)->backward(*cur, trainable_);
  }
  return *cur;
}

std::vector<Param*> Network::parameters() {
  std::vector<Param*> out;
  for (auto& layer : layers_) {
    for (Param* p : layer->params()) out.push_back(p);
  }
  return out;
}

void Network::zero_grad() {
  for (Param* p : parameters()) p->grad.fill(0.0);
}

void Network::init_weights(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (auto& layer : layers_) layer->init(rng);
}

// --- Adam -----------------------------------------------------------------------------

void Adam::step(const std::vector<Param*>& params) {
  if (m_.empty()) {
    for (const Param* p : params) {
      m_.emplace_back(p->value.size(), 0.0);
      v_.emplace_back(p->value.size(), 0.0);
    }
  }
  if (m_.size() != params.size()) {
    throw std::logic_error("adam state does not match the parameter list");
  }
  ++t_;
  const double bc1 = 1.0 - std::pow(beta1_, static_cast<double>(t_));
  const double bc2 = 1.0 - std::pow(beta2_, static_cast<double>(t_));
  for (std::size_t i = 0; i < params.size(); ++i) {
    Param& p = *params[i];
    const auto n = static_cast<Eigen::Index>(p.value.size());
    ArrayMap m(m_[i].data(), n);
    ArrayMap v(v_[i].data(), n);
    ArrayMap value(p.value.data.data(), n);
    ArrayMap grad(p.grad.data.data(), n);
    m = beta1_ * m + (1.0 - beta1_) * grad;
    v = beta2_ * v + (1.0 - beta2_) * grad.square();
    value -= lr_ * (m / bc1) / ((v / bc2).sqrt() + eps_);
    grad.setZero();
  }
}

}  // namespace ogan::nn
