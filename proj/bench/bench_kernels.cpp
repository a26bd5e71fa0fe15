// Reference loops vs blocked OpenMP kernels on the shapes of the default
// MNIST model (28×28 images, 5×5 kernels).
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "eqv/kernels.hpp"

namespace {

using eqv::kernels::ConvDims;

struct ConvCase {
  ConvDims dims;
  std::vector<float> in, weights, bias, out, grad_in, grad_w, grad_b;

  explicit ConvCase(std::size_t cin, std::size_t cout) : dims{28, 28, cin, cout, 5} {
    std::mt19937 rng(42);
    std::normal_distribution<float> n(0.f, 1.f);
    auto fill = [&](std::vector<float>& v, std::size_t size) {
      v.resize(size);
      for (auto& x : v) x = n(rng);
    };
    fill(in, dims.input_size());
    fill(weights, dims.weight_size());
    fill(bias, cout);
    fill(out, dims.output_size());
    grad_in.assign(dims.input_size(), 0.f);
    grad_w.assign(dims.weight_size(), 0.f);
    grad_b.assign(cout, 0.f);
  }
};

void set_macs(benchmark::State& state, const ConvDims& d) {
  const double macs = static_cast<double>(d.height * d.width * d.weight_size());
  state.counters["GMAC/s"] = benchmark::Counter(macs * static_cast<double>(state.iterations()) / 1e9,
                                                benchmark::Counter::kIsRate);
}

void BM_ConvForwardReference(benchmark::State& state) {
  ConvCase c(state.range(0), state.range(1));
  for (auto _ : state) {
    eqv::kernels::reference::conv2d_forward<float>(c.dims, c.in, c.weights, c.bias, c.out);
    benchmark::DoNotOptimize(c.out.data());
  }
  set_macs(state, c.dims);
}

void BM_ConvForward(benchmark::State& state) {
  ConvCase c(state.range(0), state.range(1));
  for (auto _ : state) {
    eqv::kernels::conv2d_forward<float>(c.dims, c.in, c.weights, c.bias, c.out);
    benchmark::DoNotOptimize(c.out.data());
  }
  set_macs(state, c.dims);
}

void BM_ConvBackwardInputReference(benchmark::State& state) {
  ConvCase c(state.range(0), state.range(1));
  for (auto _ : state) {
    eqv::kernels::reference::conv2d_backward_input<float>(c.dims, c.out, c.weights, c.grad_in);
    benchmark::DoNotOptimize(c.grad_in.data());
  }
  set_macs(state, c.dims);
}

void BM_ConvBackwardInput(benchmark::State& state) {
  ConvCase c(state.range(0), state.range(1));
  for (auto _ : state) {
    eqv::kernels::conv2d_backward_input<float>(c.dims, c.out, c.weights, c.grad_in);
    benchmark::DoNotOptimize(c.grad_in.data());
  }
  set_macs(state, c.dims);
}

void BM_ConvBackwardWeightsReference(benchmark::State& state) {
  ConvCase c(state.range(0), state.range(1));
  for (auto _ : state) {
    eqv::kernels::reference::conv2d_backward_weights<float>(c.dims, c.in, c.out, c.grad_w, c.grad_b);
    benchmark::DoNotOptimize(c.grad_w.data());
  }
  set_macs(state, c.dims);
}

void BM_ConvBackwardWeights(benchmark::State& state) {
  ConvCase c(state.range(0), state.range(1));
  for (auto _ : state) {
    eqv::kernels::conv2d_backward_weights<float>(c.dims, c.in, c.out, c.grad_w, c.grad_b);
    benchmark::DoNotOptimize(c.grad_w.data());
  }
  set_macs(state, c.dims);
}

// conv1 1→8, conv2 32→8, conv3 32→16
#define CONV_SHAPES ->Args({1, 8})->Args({32, 8})->Args({32, 16})

BENCHMARK(BM_ConvForwardReference) CONV_SHAPES;
BENCHMARK(BM_ConvForward) CONV_SHAPES;
BENCHMARK(BM_ConvBackwardInputReference) CONV_SHAPES;
BENCHMARK(BM_ConvBackwardInput) CONV_SHAPES;
BENCHMARK(BM_ConvBackwardWeightsReference) CONV_SHAPES;
BENCHMARK(BM_ConvBackwardWeights) CONV_SHAPES;

}  // namespace

BENCHMARK_MAIN();
