// Copyright 2026 The neurofault Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <vector>

#include "neurofault/attack/flip_search.hpp"
#include "neurofault/campaign/campaign.hpp"
#include "neurofault/nn/forward.hpp"
#include "neurofault/random.hpp"

namespace {

using namespace neurofault;

nn::Network standard_shaped(std::size_t n, nn::ActivationKind target) {
  Rng rng(1);
  const std::vector<std::pair<std::size_t, nn::ActivationKind>> shape{
      {500, nn::ActivationKind::Relu}, {500, nn::ActivationKind::Relu}, {500, nn::ActivationKind::Relu},
      {n, target}, {10, nn::ActivationKind::Softmax}};
  std::vector<nn::Layer> layers;
  std::size_t in = 784;
  for (const auto& [width, act] : shape) {
    nn::Layer l{in, width, std::vector<float>(in * width), std::vector<float>(width, 0.0f), act};
    for (float& w : l.weights) w = static_cast<float>(rng.uniform(-0.05, 0.05));
    layers.push_back(std::move(l));
    in = width;
  }
  return nn::Network(784, std::move(layers));
}

std::vector<float> random_image(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<float> x(784);
  for (float& v : x) v = static_cast<float>(rng.uniform01());
  return x;
}

void BM_Forward(benchmark::State& state) {
  const nn::Network net = standard_shaped(static_cast<std::size_t>(state.range(0)), nn::ActivationKind::Sigmoid);
  const std::vector<float> x = random_image(2);
  for (auto _ : state) benchmark::DoNotOptimize(nn::forward(net, x).predicted);
}
BENCHMARK(BM_Forward)->Arg(15)->Arg(80);

// One campaign trial re-runs only the layers after the faulted one.
void BM_InjectSuffix(benchmark::State& state) {
  const nn::Network net = standard_shaped(static_cast<std::size_t>(state.range(0)), nn::ActivationKind::Sigmoid);
  const nn::ForwardTrace clean = nn::forward(net, random_image(3));
  Rng rng(4);
  const auto model = fault::FaultModel::sigmoid_neg_skip();
  for (auto _ : state) {
    const auto neurons = rng.sample_without_replacement(net.layer(3).out_count, 5);
    benchmark::DoNotOptimize(campaign::inject_faults(net, clean, 3, neurons, model).predicted);
  }
}
BENCHMARK(BM_InjectSuffix)->Arg(15)->Arg(80);

void BM_FlipSearch(benchmark::State& state) {
  Rng rng(5);
  std::vector<float> logits(10);
  for (float& v : logits) v = static_cast<float>(rng.uniform(-5.0, 5.0));
  logits[0] = 2.43f;
  attack::FlipSearchOptions opt;
  opt.all_neurons = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(attack::find_targeted_flip(logits, 0, opt).found);
}
BENCHMARK(BM_FlipSearch)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
