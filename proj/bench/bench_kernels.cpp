// Copyright 2026 The dwmtj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference against the OpenMP kernels: wall time and a check that
// both paths agree bit for bit.
//
//   bench_kernels [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>

#include "dwmtj/protocol.hpp"
#include "dwmtj/snn.hpp"
#include "dwmtj/stochastic_fit.hpp"

using namespace dwmtj;

namespace {

double best_of(int repeats, const std::function<void()>& f) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        best = std::min(best, s);
    }
    return best;
}

void report(const char* name, double serial, double parallel, bool same) {
    std::printf("%-22s serial %9.4f s  parallel %9.4f s  speedup %5.2fx  %s\n", name, serial,
                parallel, serial / parallel, same ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
    std::printf("threads: %d\n", max_threads());
    bool all_same = true;

    DeviceConfig dev;
    dev.stochastic.sigma = 0.3;
    dev.kappa = calibrate_kappa(dev, 2.4, 12);
    const PulseTrain ramp = make_amplitude_ramp(1.4, 2.7, 0.1, PulseSpec{}, 2);
    {
        std::vector<CycleTrace> a, b;
        const double s = best_of(repeats, [&] { a = run_cycles(dev, ramp, 200, 1, Execution::Serial); });
        const double p = best_of(repeats, [&] { b = run_cycles(dev, ramp, 200, 1, Execution::Parallel); });
        bool same = a.size() == b.size();
        for (std::size_t i = 0; same && i < a.size(); ++i) {
            same = a[i].records.size() == b[i].records.size() &&
                   a[i].records.back().domain == b[i].records.back().domain;
        }
        all_same = all_same && same;
        report("run_cycles (200)", s, p, same);
    }

    DeviceConfig pn;
    pn.geometry.mtj_b = {2525e-9, 2975e-9};
    pn.geometry.track_end = 2975e-9;
    pn.pinning = {1.0, 0.5, 2.0};
    pn.stochastic = {0.3, 40e-9};
    pn.kappa = calibrate_kappa(pn, 2.4, 35);
    {
        SwitchHistogram a, b;
        const double s = best_of(repeats, [&] { a = simulate_switch_counts(pn, 2.4, 200, 20000, 0.3, 1, Execution::Serial); });
        const double p = best_of(repeats, [&] { b = simulate_switch_counts(pn, 2.4, 200, 20000, 0.3, 1, Execution::Parallel); });
        all_same = all_same && a == b;
        report("switch counts (2e4)", s, p, a == b);
    }

    {
        snn::NeuronModel m;
        m.dwmtj.sigma = 0.3;
        const snn::SpikingNetwork net = snn::make_network({784, 256, 10}, m, 1);
        std::vector<std::vector<std::uint8_t>> images(100, std::vector<std::uint8_t>(784));
        Rng rng(5);
        for (auto& img : images) {
            for (auto& px : img) px = static_cast<std::uint8_t>(rng() % 4 == 0 ? rng() % 256 : 0);
        }
        snn::SampleSource src;
        src.size = images.size();
        src.pixels = [&](std::size_t i) { return std::span<const std::uint8_t>(images[i]); };
        src.label = [](std::size_t i) { return static_cast<int>(i % 10); };
        std::vector<std::size_t> batch(100);
        std::iota(batch.begin(), batch.end(), std::size_t{0});
        const auto enc = snn::EncoderConfig{}.with_steps(50);
        snn::BatchResult a, b;
        const double s = best_of(repeats, [&] { a = snn::batch_gradient(net, src, batch, enc, 1, 1, Execution::Serial); });
        const double p = best_of(repeats, [&] { b = snn::batch_gradient(net, src, batch, enc, 1, 1, Execution::Parallel); });
        const bool same = a.loss == b.loss && a.grad.layers == b.grad.layers;
        all_same = all_same && same;
        report("batch gradient (100)", s, p, same);
    }
    return all_same ? 0 : 1;
}
