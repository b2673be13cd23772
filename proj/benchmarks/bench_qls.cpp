#include <benchmark/benchmark.h>

#include <cstdint>
#include <string>
#include <vector>

#include "qls/circuit.hpp"
#include "qls/circuit_text.hpp"
#include "qls/loader.hpp"
#include "qls/state.hpp"
#include "qls/verify.hpp"

namespace {

qls::VectorSpec canonical_spec(int k) {
  const std::size_t count = std::size_t{1} << k;
  std::vector<std::uint64_t> values(count);
  for (std::size_t i = 0; i < count; ++i) values[i] = i % 15 + 1;
  return qls::pad_to_pow2(values, 4);
}

void build_loader(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const qls::VectorSpec spec = canonical_spec(k);
  for (auto _ : state) {
    qls::PathCircuit circuit = qls::build_loader(spec);
    benchmark::DoNotOptimize(circuit.stages.data());
  }
  state.SetComplexityN(std::int64_t{1} << k);  // stage count is linear in N
}
BENCHMARK(build_loader)->Arg(4)->Arg(8)->Arg(12)->Arg(16)->Complexity(benchmark::oN);

void simulate_loader(benchmark::State& state) {
  const qls::VectorSpec spec = canonical_spec(static_cast<int>(state.range(0)));
  const qls::PathCircuit circuit = qls::build_loader(spec);
  const qls::SparseState input = qls::initial_state(circuit.layout);
  for (auto _ : state) {
    qls::SparseState out = qls::simulate(circuit, input);
    benchmark::DoNotOptimize(out.entries().size());
  }
}
BENCHMARK(simulate_loader)->Arg(4)->Arg(6)->Arg(8)->Arg(10);

void depth_report(benchmark::State& state) {
  const qls::VectorSpec spec = canonical_spec(static_cast<int>(state.range(0)));
  const qls::PathCircuit circuit = qls::build_loader(spec);
  for (auto _ : state) {
    qls::DepthReport report = qls::depth_report(circuit);
    benchmark::DoNotOptimize(report.gate_count);
  }
}
BENCHMARK(depth_report)->Arg(8)->Arg(16);

void sample_histogram(benchmark::State& state) {
  const qls::VectorSpec spec = canonical_spec(8);
  const qls::PathCircuit circuit = qls::build_loader(spec);
  const qls::SparseState loaded =
      qls::simulate(circuit, qls::initial_state(circuit.layout));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    qls::SampleHistogram histogram = qls::sample(loaded, seed++, 10000);
    benchmark::DoNotOptimize(histogram.counts.size());
  }
}
BENCHMARK(sample_histogram);

void serialize_parse(benchmark::State& state) {
  const qls::VectorSpec spec = canonical_spec(static_cast<int>(state.range(0)));
  const qls::PathCircuit circuit = qls::build_loader(spec);
  for (auto _ : state) {
    const std::string text = qls::serialize(circuit);
    qls::PathCircuit parsed = qls::parse_circuit(text);
    benchmark::DoNotOptimize(parsed.stages.data());
  }
}
BENCHMARK(serialize_parse)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
