#include "ogan/nn/architectures.hpp"

#include <memory>
#include <stdexcept>

namespace ogan::nn {

Network make_generator(std::size_t latent_dim, std::size_t out_dim) {
  Network net;
  net.add(std::make_unique<DenseLayer>(latent_dim, 128, Init::He));
  net.add(std::make_unique<ActivationLayer>(Activation::LeakyRelu));
  net.add(std::make_unique<DenseLayer>(128, 128, Init::He));
  net.add(std::make_unique<ActivationLayer>(Activation::LeakyRelu));
  net.add(std::make_unique<DenseLayer>(128, 128, Init::He));
  net.add(std::make_unique<ActivationLayer>(Activation::LeakyRelu));
  net.add(std::make_unique<DenseLayer>(128, out_dim, Init::Glorot));
  net.add(std::make_unique<ActivationLayer>(Activation::Tanh));
  return net;
}

Network make_conv_discriminator(std::size_t input_dim) {
  if (input_dim < 2) {
    throw std::invalid_argument("conv discriminator needs input_dim >= 2");
  }
  Network net;
  net.add(std::make_unique<AsChannelsLayer>());
  net.add(std::make_unique<Conv1dLayer>(1, 16, Init::He));
  net.add(std::make_unique<ActivationLayer>(Activation::LeakyRelu));
  net.add(std::make_unique<MaxPool1dLayer>());
  net.add(std::make_unique<Conv1dLayer>(16, 16, Init::He));
  net.add(std::make_unique<ActivationLayer>(Activation::LeakyRelu));
  net.add(std::make_unique<MaxPool1dLayer>());
  net.add(std::make_unique<FlattenLayer>());

  // conv (kernel 2, padding 1) grows the length by one; maxpool halves it.
  const std::size_t l1 = (input_dim + 1) / 2;
  const std::size_t l2 = (l1 + 1) / 2;
  const std::size_t flat = 16 * l2;

  net.add(std::make_unique<DenseLayer>(flat, 128, Init::Glorot));
  net.add(std::make_unique<DenseLayer>(128, 1, Init::Glorot));
  net.add(std::make_unique<ActivationLayer>(Activation::Sigmoid));
  return net;
}

Network make_dense_discriminator(std::size_t input_dim) {
  Network net;
  net.add(std::make_unique<DenseLayer>(input_dim, 128, Init::He));
  net.add(std::make_unique<ActivationLayer>(Activation::LeakyRelu));
  net.add(std::make_unique<DenseLayer>(128, 128, Init::He));
  net.add(std::make_unique<ActivationLayer>(Activation::LeakyRelu));
  net.add(std::make_unique<DenseLayer>(128, 128, Init::He));
  net.add(std::make_unique<ActivationLayer>(Activation::LeakyRelu));
  net.add(std::make_unique<DenseLayer>(128, 1, Init::Glorot));
  net.add(std::make_unique<ActivationLayer>(Activation::Sigmoid));
  return net;
}

}  // namespace ogan::nn
