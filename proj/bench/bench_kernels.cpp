// Serial reference kernels vs OpenMP fast kernels on the default MNIST
// network: batched deterministic forward, 80-pass MC inference, SGD steps.
//
//   bench_kernels [--precision f32|f64] [--samples N] [--passes K]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pl/nn/network.hpp"
#include "pl/nn/random.hpp"

using namespace pl::nn;

namespace {

template <typename F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <typename T>
void run(std::size_t samples, std::size_t passes) {
  const Network<T> net(Architecture::mnist(), 1);
  Tensor<T> batch({samples, 1, 28, 28});
  std::mt19937_64 gen(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (auto& v : batch.values()) v = static_cast<T>(u(gen));
  std::vector<int> labels(samples);
  for (std::size_t i = 0; i < samples; ++i) labels[i] = static_cast<int>(i % 10);

  std::printf("%-28s %12s %12s %8s\n", "case", "reference s", "parallel s", "speedup");
  auto report = [](const char* name, double ref, double par) {
    std::printf("%-28s %12.4f %12.4f %8.2f\n", name, ref, par, ref / par);
  };

  {
    const double ref = seconds([&] { forward(net, batch, ForwardMode::deterministic(), Backend::reference); });
    const double par = seconds([&] { forward(net, batch, ForwardMode::deterministic(), Backend::parallel); });
    report("forward (batch)", ref, par);
  }
  {
    const std::size_t n = std::min<std::size_t>(samples, 20);
    auto mc = [&](Backend backend) {
      return seconds([&] {
        for (std::size_t i = 0; i < n; ++i) mc_predict<T>(net, batch.row(i), passes, i, backend);
      });
    };
    const double ref = mc(Backend::reference);
    const double par = mc(Backend::parallel);
    report("mc_predict (20 samples)", ref, par);
    std::printf("  parallel: %.1f us per MC pass\n", par / (n * passes) * 1e6);
  }
  {
    const std::size_t bs = 32;
    Tensor<T> mini({bs, 1, 28, 28});
    std::copy(batch.values().begin(), batch.values().begin() + bs * 784, mini.values().begin());
    std::vector<int> y(labels.begin(), labels.begin() + bs);
    auto steps = [&](Backend backend) {
      Network<T> copy = net;
      return seconds([&] {
        for (int s = 0; s < 5; ++s) backward_and_step(copy, mini, y, LossConfig{0.5}, 0.01, s, backend);
      });
    };
    report("sgd step x5 (batch 32)", steps(Backend::reference), steps(Backend::parallel));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kernel benchmark"};
  std::string precision = "f32";
  std::size_t samples = 512, passes = 80;
  app.add_option("--precision", precision)->check(CLI::IsMember({"f32", "f64"}));
  app.add_option("--samples", samples);
  app.add_option("--passes", passes);
  CLI11_PARSE(app, argc, argv);
  std::printf("threads: %d, precision: %s\n", omp_get_max_threads(), precision.c_str());
  if (precision == "f32") run<float>(samples, passes);
  else run<double>(samples, passes);
  return 0;
}
