// Copyright 2026 The neurofault Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "neurofault/nn/activation.hpp"
#include "neurofault/nn/network.hpp"
#include "neurofault/random.hpp"
#include "neurofault/train/topology.hpp"

namespace neurofault::train {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Trainable parameters. weights[l] is out x in; batches are column-major
/// (features x samples).
template <typename Scalar>
struct Parameters {
  std::vector<Matrix<Scalar>> weights;
  std::vector<Vector<Scalar>> biases;
  std::vector<nn::ActivationKind> activations;

  std::size_t layer_count() const { return weights.size(); }

  Parameters zeros_like() const {
    Parameters out;
    out.activations = activations;
    for (std::size_t l = 0; l < weights.size(); ++l) {
      out.weights.push_back(Matrix<Scalar>::Zero(weights[l].rows(), weights[l].cols()));
      out.biases.push_back(Vector<Scalar>::Zero(biases[l].size()));
    }
    return out;
  }

  template <typename Other>
  Parameters<Other> cast() const {
    Parameters<Other> out;
    out.activations = activations;
    for (std::size_t l = 0; l < weights.size(); ++l) {
      out.weights.push_back(weights[l].template cast<Other>());
      out.biases.push_back(biases[l].template cast<Other>());
    }
    return out;
  }
};

/// He-uniform (limit sqrt(6/fan_in)) for relu layers, Glorot-uniform
/// (limit sqrt(6/(fan_in+fan_out))) otherwise; zero biases.
template <typename Scalar>
Parameters<Scalar> initialize_parameters(const TopologySpec& spec, Rng& rng) {
  spec.validate();
  Parameters<Scalar> p;
  std::size_t fan_in = spec.input_dim;
  auto add_layer = [&](std::size_t width, nn::ActivationKind act) {
    const double limit = act == nn::ActivationKind::Relu
                             ? std::sqrt(6.0 / static_cast<double>(fan_in))
                             : std::sqrt(6.0 / static_cast<double>(fan_in + width));
    Matrix<Scalar> w(width, fan_in);
    // Row-major draw order so the initial network is layout independent.
    for (Eigen::Index i = 0; i < w.rows(); ++i) {
      for (Eigen::Index j = 0; j < w.cols(); ++j) w(i, j) = static_cast<Scalar>(rng.uniform(-limit, limit));
    }
    p.weights.push_back(std::move(w));
    p.biases.push_back(Vector<Scalar>::Zero(static_cast<Eigen::Index>(width)));
    p.activations.push_back(act);
    fan_in = width;
  };
  for (const HiddenLayerSpec& h : spec.hidden) add_layer(h.width, h.activation);
  add_layer(spec.classes, nn::ActivationKind::Softmax);
  return p;
}

/// Reusable activations for one batch.
template <typename Scalar>
struct BatchWorkspace {
  std::vector<Matrix<Scalar>> post;   // post[l] = output of layer l
  std::vector<Matrix<Scalar>> delta;  // dLoss/dAccum of layer l
};

/// Mean categorical cross-entropy of the batch. When `grads` is non-null it
/// receives the gradient of that mean with respect to every parameter.
/// The last layer must be softmax.
template <typename Scalar>
Scalar loss_and_gradients(const Parameters<Scalar>& p, const Matrix<Scalar>& inputs,
                          std::span<const std::uint8_t> labels, Parameters<Scalar>* grads,
                          BatchWorkspace<Scalar>& ws) {
  using nn::ActivationKind;
  const std::size_t layers = p.layer_count();
  const Eigen::Index batch = inputs.cols();
  ws.post.resize(layers);
  ws.delta.resize(layers);

  for (std::size_t l = 0; l < layers; ++l) {
    const Matrix<Scalar>& in = l == 0 ? inputs : ws.post[l - 1];
    Matrix<Scalar>& z = ws.post[l];
    z.noalias() = p.weights[l] * in;
    z.colwise() += p.biases[l];
    switch (p.activations[l]) {
      case ActivationKind::Relu:
        z = z.cwiseMax(Scalar(0));
        break;
      case ActivationKind::Sigmoid:
        z = (Scalar(1) + (-z.array()).exp()).inverse().matrix();
        break;
      case ActivationKind::Tanh:
        z = z.array().tanh().matrix();
        break;
      case ActivationKind::Softmax: {
        const Eigen::Matrix<Scalar, 1, Eigen::Dynamic> peak = z.colwise().maxCoeff();
        z.rowwise() -= peak;
        z = z.array().exp().matrix();
        const Eigen::Matrix<Scalar, 1, Eigen::Dynamic> total = z.colwise().sum();
        for (Eigen::Index c = 0; c < batch; ++c) z.col(c) /= total(c);
        break;
      }
    }
  }

  const Matrix<Scalar>& probs = ws.post.back();
  Scalar loss = 0;
  const Scalar tiny = std::numeric_limits<Scalar>::min();
  for (Eigen::Index c = 0; c < batch; ++c) {
    loss -= std::log(std::max(probs(labels[static_cast<std::size_t>(c)], c), tiny));
  }
  loss /= static_cast<Scalar>(batch);
  if (grads == nullptr) return loss;

  // Softmax + cross-entropy: dLoss/dz = (p - onehot) / batch.
  Matrix<Scalar>& top = ws.delta[layers - 1];
  top = probs;
  for (Eigen::Index c = 0; c < batch; ++c) top(labels[static_cast<std::size_t>(c)], c) -= Scalar(1);
  top /= static_cast<Scalar>(batch);

  for (std::size_t l = layers; l-- > 0;) {
    const Matrix<Scalar>& in = l == 0 ? inputs : ws.post[l - 1];
    grads->weights[l].noalias() = ws.delta[l] * in.transpose();
    grads->biases[l] = ws.delta[l].rowwise().sum();
    if (l == 0) break;
    Matrix<Scalar>& below = ws.delta[l - 1];
    below.noalias() = p.weights[l].transpose() * ws.delta[l];
    const Matrix<Scalar>& a = ws.post[l - 1];
    switch (p.activations[l - 1]) {
      case ActivationKind::Relu:
        below = (a.array() > Scalar(0)).select(below, Scalar(0));
        break;
      case ActivationKind::Sigmoid:
        below.array() *= a.array() * (Scalar(1) - a.array());
        break;
      case ActivationKind::Tanh:
        below.array() *= Scalar(1) - a.array().square();
        break;
      case ActivationKind::Softmax:
        break;  // rejected by TopologySpec::validate
    }
  }
  return loss;
}

template <typename Scalar>
Scalar loss_and_gradients(const Parameters<Scalar>& p, const Matrix<Scalar>& inputs,
                          std::span<const std::uint8_t> labels, Parameters<Scalar>* grads) {
  BatchWorkspace<Scalar> ws;
  return loss_and_gradients(p, inputs, labels, grads, ws);
}

/// Rounds parameters to binary32 and packs them as an inference network.
template <typename Scalar>
nn::Network to_network(const Parameters<Scalar>& p, std::size_t input_dim) {
  std::vector<nn::Layer> layers;
  for (std::size_t l = 0; l < p.layer_count(); ++l) {
    const auto& w = p.weights[l];
    nn::Layer layer;
    layer.out_count = static_cast<std::size_t>(w.rows());
    layer.in_count = static_cast<std::size_t>(w.cols());
    layer.activation = p.activations[l];
    layer.weights.resize(layer.out_count * layer.in_count);
    for (Eigen::Index i = 0; i < w.rows(); ++i) {
      for (Eigen::Index j = 0; j < w.cols(); ++j) {
        layer.weights[static_cast<std::size_t>(i) * layer.in_count + static_cast<std::size_t>(j)] =
            static_cast<float>(w(i, j));
      }
    }
    layer.biases.resize(layer.out_count);
    for (Eigen::Index i = 0; i < w.rows(); ++i) {
      layer.biases[static_cast<std::size_t>(i)] = static_cast<float>(p.biases[l](i));
    }
    layers.push_back(std::move(layer));
  }
  return nn::Network(input_dim, std::move(layers));
}

}  // namespace neurofault::train
