// Copyright 2026 The dircode Authors
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

// Distance kernel and scan throughput, each against its serial reference.

#include <benchmark/benchmark.h>

#include "dircode/distance.h"
#include "dircode/search.h"
#include "dircode/torus.h"

using namespace dircode;

namespace {

LogicalSearch case_search(int64_t m) {
    CheckerboardTorus t(12 * m, 6 * m);
    CodeInstance c = build_code(parse_word("NE2NE2N"), t, row_alternating_layout(t));
    return LogicalSearch(c.hz, c.hx);
}

// d_X screen of the case word: m=2 has a weight-4 logical, m=3 has none of
// weight <= 3, so the w_max=3 search there is exhaustive.
const LogicalSearch &search_for(int64_t m) {
    static const LogicalSearch m2 = case_search(2);
    static const LogicalSearch m3 = case_search(3);
    return m == 2 ? m2 : m3;
}

void BM_distance_reference(benchmark::State &state) {
    const LogicalSearch &s = search_for(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_min_logical_reference(s, static_cast<size_t>(state.range(1))));
    }
}
BENCHMARK(BM_distance_reference)->Args({2, 4})->Args({3, 3})->Unit(benchmark::kMillisecond);

void BM_distance_fast(benchmark::State &state) {
    const LogicalSearch &s = search_for(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_min_logical(s, static_cast<size_t>(state.range(1)),
                                                  static_cast<int>(state.range(2))));
    }
}
BENCHMARK(BM_distance_fast)
    ->Args({2, 4, 1})
    ->Args({2, 4, 4})
    ->Args({3, 3, 1})
    ->Args({3, 3, 4})
    ->Unit(benchmark::kMillisecond);

ScanConfig scan_config() {
    ScanConfig cfg;
    cfg.min_len = 4;
    cfg.max_len = 7;
    return cfg;
}

void BM_scan_serial(benchmark::State &state) {
    ScanConfig cfg = scan_config();
    for (auto _ : state) {
        benchmark::DoNotOptimize(scan_serial(cfg));
    }
}
BENCHMARK(BM_scan_serial)->Unit(benchmark::kMillisecond);

void BM_scan_parallel(benchmark::State &state) {
    ScanConfig cfg = scan_config();
    cfg.threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(scan(cfg));
    }
}
BENCHMARK(BM_scan_parallel)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
