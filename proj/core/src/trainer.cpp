// Copyright 2026 The neurofault Authors
// SPDX-License-Identifier: Apache-2.0

#include "neurofault/train/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "neurofault/error.hpp"
#include "neurofault/nn/forward.hpp"
#include "neurofault/random.hpp"
#include "neurofault/train/backprop.hpp"

namespace neurofault::train {

TopologySpec TopologySpec::standard(nn::ActivationKind target, std::size_t n) {
  TopologySpec spec;
  spec.input_dim = io::kMnistPixels;
  spec.hidden = {{500, nn::ActivationKind::Relu},
                 {500, nn::ActivationKind::Relu},
                 {500, nn::ActivationKind::Relu},
                 {n, target}};
  spec.classes = 10;
  spec.validate();
  return spec;
}

void TopologySpec::validate() const {
  if (input_dim == 0) raise(ErrorKind::InvalidInput, "topology input_dim must be positive");
  if (classes < 2) raise(ErrorKind::InvalidInput, "topology needs at least two classes");
  if (classes > io::kMaxClasses) raise(ErrorKind::InvalidInput, "topology supports at most 10 classes");
  for (std::size_t i = 0; i < hidden.size(); ++i) {
    if (hidden[i].width == 0) {
      raise(ErrorKind::InvalidInput, "hidden layer " + std::to_string(i) + " has zero width");
    }
    if (hidden[i].activation == nn::ActivationKind::Softmax) {
      raise(ErrorKind::InvalidInput, "softmax is only allowed on the output layer");
    }
  }
}

std::string TopologySpec::describe() const {
  std::ostringstream out;
  out << input_dim;
  for (const auto& h : hidden) out << " -> " << h.width << "(" << nn::to_string(h.activation) << ")";
  out << " -> " << classes << "(softmax)";
  return out.str();
}

void TrainConfig::validate() const {
  if (!(learning_rate >= 0.0f) || !std::isfinite(learning_rate)) {
    raise(ErrorKind::InvalidInput, "learning rate must be a non-negative finite number");
  }
  if (!(momentum >= 0.0f && momentum < 1.0f)) {
    raise(ErrorKind::InvalidInput, "momentum must lie in [0,1)");
  }
  if (batch_size == 0) raise(ErrorKind::InvalidInput, "batch size must be at least 1");
  if (epochs == 0) raise(ErrorKind::InvalidInput, "epochs must be at least 1");
}

TrainResult train(const TopologySpec& spec, const io::Dataset& data, const TrainConfig& cfg,
                  const EpochCallback& on_epoch) {
  spec.validate();
  cfg.validate();
  if (data.empty()) raise(ErrorKind::InvalidInput, "training dataset is empty");
  if (data.feature_dim() != spec.input_dim) {
    raise(ErrorKind::Shape, "dataset width " + std::to_string(data.feature_dim()) +
                                " != topology input " + std::to_string(spec.input_dim));
  }
  for (std::uint8_t label : data.labels()) {
    if (label >= spec.classes) {
      raise(ErrorKind::InvalidInput, "label " + std::to_string(label) + " exceeds class count");
    }
  }

  Rng rng(cfg.seed);
  Parameters<float> params = initialize_parameters<float>(spec, rng);
  Parameters<float> velocity = params.zeros_like();
  Parameters<float> grads = params.zeros_like();
  BatchWorkspace<float> ws;

  const std::size_t count = data.size();
  const std::size_t dim = data.feature_dim();
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});

  Matrix<float> batch_inputs;
  std::vector<std::uint8_t> batch_labels;
  std::vector<double> epoch_loss;

  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    rng.shuffle(order);
    double loss_sum = 0.0;
    for (std::size_t start = 0; start < count; start += cfg.batch_size) {
      const std::size_t size = std::min(cfg.batch_size, count - start);
      batch_inputs.resize(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(size));
      batch_labels.resize(size);
      for (std::size_t b = 0; b < size; ++b) {
        const std::size_t item = order[start + b];
        const auto image = data.image(item);
        std::copy(image.begin(), image.end(), batch_inputs.col(static_cast<Eigen::Index>(b)).data());
        batch_labels[b] = static_cast<std::uint8_t>(data.label(item));
      }
      const float loss = loss_and_gradients(params, batch_inputs, batch_labels, &grads, ws);
      if (!std::isfinite(loss)) {
        raise(ErrorKind::TrainingFailure,
              "loss became non-finite during epoch " + std::to_string(epoch + 1));
      }
      loss_sum += static_cast<double>(loss) * static_cast<double>(size);
      for (std::size_t l = 0; l < params.layer_count(); ++l) {
        velocity.weights[l] = cfg.momentum * velocity.weights[l] - cfg.learning_rate * grads.weights[l];
        velocity.biases[l] = cfg.momentum * velocity.biases[l] - cfg.learning_rate * grads.biases[l];
        params.weights[l] += velocity.weights[l];
        params.biases[l] += velocity.biases[l];
      }
    }
    const double mean = loss_sum / static_cast<double>(count);
    for (std::size_t l = 0; l < params.layer_count(); ++l) {
      if (!params.weights[l].allFinite() || !params.biases[l].allFinite()) {
        raise(ErrorKind::TrainingFailure,
              "parameters became non-finite during epoch " + std::to_string(epoch + 1));
      }
    }
    epoch_loss.push_back(mean);
    if (on_epoch) on_epoch(epoch + 1, mean);
  }

  return TrainResult{to_network(params, spec.input_dim), std::move(epoch_loss)};
}

double evaluate(const nn::Network& net, const io::Dataset& data) {
  if (data.empty()) raise(ErrorKind::InvalidInput, "evaluation dataset is empty");
  if (data.feature_dim() != net.input_dim()) {
    raise(ErrorKind::Shape, "dataset width " + std::to_string(data.feature_dim()) +
                                " != network input_dim " + std::to_string(net.input_dim()));
  }
  std::size_t correct = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (nn::predict(net, data.image(i)) == data.label(i)) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(data.size());
}

double gradient_check(const TopologySpec& spec, const io::Dataset& batch, std::uint64_t seed) {
  spec.validate();
  if (batch.empty()) raise(ErrorKind::InvalidInput, "gradient check needs a non-empty batch");
  if (batch.feature_dim() != spec.input_dim) {
    raise(ErrorKind::Shape, "batch width does not match topology input");
  }
  Rng rng(seed);
  Parameters<double> params = initialize_parameters<double>(spec, rng);
  // Small random biases so relu units are not all sitting on the kink.
  for (auto& b : params.biases) {
    for (Eigen::Index i = 0; i < b.size(); ++i) b(i) = rng.uniform(-0.1, 0.1);
  }

  Matrix<double> inputs(static_cast<Eigen::Index>(batch.feature_dim()),
                        static_cast<Eigen::Index>(batch.size()));
  for (std::size_t c = 0; c < batch.size(); ++c) {
    const auto image = batch.image(c);
    for (std::size_t r = 0; r < image.size(); ++r) {
      inputs(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = image[r];
    }
  }
  const auto labels = batch.labels();

  Parameters<double> analytic = params.zeros_like();
  loss_and_gradients(params, inputs, labels, &analytic);

  constexpr double kStep = 1e-3;
  double worst = 0.0;
  auto probe = [&](double& slot, double grad) {
    const double saved = slot;
    slot = saved + kStep;
    const double up = loss_and_gradients<double>(params, inputs, labels, nullptr);
    slot = saved - kStep;
    const double down = loss_and_gradients<double>(params, inputs, labels, nullptr);
    slot = saved;
    const double numeric = (up - down) / (2.0 * kStep);
    const double denom = std::max(std::abs(grad) + std::abs(numeric), 1e-8);
    worst = std::max(worst, std::abs(grad - numeric) / denom);
  };
  for (std::size_t l = 0; l < params.layer_count(); ++l) {
    for (Eigen::Index i = 0; i < params.weights[l].size(); ++i) {
      probe(params.weights[l].data()[i], analytic.weights[l].data()[i]);
    }
    for (Eigen::Index i = 0; i < params.biases[l].size(); ++i) {
      probe(params.biases[l].data()[i], analytic.biases[l].data()[i]);
    }
  }
  return worst;
}

}  // namespace neurofault::train
