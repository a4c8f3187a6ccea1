#pragma once

#include "ogan/nn/network.hpp"

namespace ogan::nn {

// Generator: three fully connected hidden layers of 128 neurons with leaky
// ReLU (slope 0.01), tanh output into [-1, 1]^out_dim.
Network make_generator(std::size_t latent_dim, std::size_t out_dim);

// Discriminator for signal-shaped inputs: the test vector is treated as a
// one-channel sequence; two conv(16, kernel 2, stride 1, padding 1) +
// leaky ReLU + maxpool(2) blocks, flattened into a 128-neuron hidden layer
// with no activation, then a sigmoid scalar.
Network make_conv_discriminator(std::size_t input_dim);

// Discriminator for plain vector inputs: the generator body with a sigmoid
// scalar output.
Network make_dense_discriminator(std::size_t input_dim);

}  // namespace ogan::nn
