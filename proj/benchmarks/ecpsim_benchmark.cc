// Copyright 2026 The ecpsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <random>

#include "benchmark/benchmark.h"
#include "ecpsim/ecpsim.hpp"

using namespace ecpsim;

namespace {

const double kA = std::sqrt(0.8);
const double kB = std::sqrt(0.2);

PureState random_state(int n) {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g;
    std::vector<Complex> amps(std::size_t{1} << n);
    for (Complex &c : amps) c = Complex(g(rng), g(rng));
    return PureState::normalized(n, std::move(amps));
}

}  // namespace

static void apply_1q_gate(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    PureState s = random_state(n);
    Unitary h = pauli(Pauli::H);
    int q = 1;
    for (auto _ : state) {
        s = apply_1q(s, h, q);
        q = q % n + 1;
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(apply_1q_gate)->DenseRange(4, 16, 4);

static void apply_cnot_gate(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    PureState s = random_state(n);
    for (auto _ : state) {
        s = apply_cnot(s, 1, n);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(apply_cnot_gate)->DenseRange(4, 16, 4);

static void bell_measurement(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    PureState s = random_state(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(measure_bell(s, 1, n));
    }
}
BENCHMARK(bell_measurement)->DenseRange(4, 16, 4);

static void protocol_cat(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ecp_cat(kA, kB, n));
    }
}
BENCHMARK(protocol_cat)->DenseRange(2, 8, 2);

static void protocol_ghz_like(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(ecp_ghz_like(kA, kB));
    }
}
BENCHMARK(protocol_ghz_like);

static void protocol_ecp1_family(benchmark::State &state) {
    ChannelState c = family_representative(FamilyId::L07p1).channel.with_weights(kA, kB);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ecp1(c));
    }
}
BENCHMARK(protocol_ecp1_family);

static void protocol_ecp2_ghz_like(benchmark::State &state) {
    ChannelState c = ghz_like(kA, kB);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ecp2(c));
    }
}
BENCHMARK(protocol_ecp2_ghz_like);

static void geometric_negativity(benchmark::State &state) {
    PureState s = random_state(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(multipartite_geometric(s, BaseMeasure::Negativity));
    }
}
BENCHMARK(geometric_negativity)->DenseRange(3, 7, 2);

static void monte_carlo_cat(benchmark::State &state) {
    ProtocolReport r = ecp_cat(kA, kB, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample(r, 100000, 7));
    }
}
BENCHMARK(monte_carlo_cat);

BENCHMARK_MAIN();
