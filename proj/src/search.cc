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

#include "dircode/search.h"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <set>

#include "dircode/pattern.h"

namespace dircode {

namespace {

bool passes_filters(const std::vector<Dir> &letters, const ScanConfig &cfg) {
    if (cfg.distinct_offsets) {
        auto offsets = support_pattern(DirectionWord(letters)).offsets;
        std::sort(offsets.begin(), offsets.end());
        if (std::adjacent_find(offsets.begin(), offsets.end()) != offsets.end()) {
            return false;
        }
    }
    return true;
}

void extend(std::vector<Dir> &prefix, size_t len, const ScanConfig &cfg, std::set<DirectionWord> &out) {
    if (prefix.size() == len) {
        if (passes_filters(prefix, cfg)) {
            out.insert(canonical_word(DirectionWord(prefix), cfg.include_cyclic));
        }
        return;
    }
    for (Dir d : {Dir::N, Dir::E, Dir::S, Dir::W}) {
        if (prefix.empty() && cfg.fix_first_n && d != Dir::N) {
            continue;
        }
        if (!prefix.empty() && cfg.no_backtrack && d == inverse(prefix.back())) {
            continue;
        }
        prefix.push_back(d);
        extend(prefix, len, cfg, out);
        prefix.pop_back();
    }
}

int distance_rank(const DistanceResult &d) {
    switch (d.kind) {
        case DistanceResult::Kind::Exact:
            return 2 * static_cast<int>(d.value);
        case DistanceResult::Kind::GreaterThan:
            return 2 * static_cast<int>(d.value) + 1;
        case DistanceResult::Kind::NotDefined:
            break;
    }
    return -1;
}

DistanceResult min_distance(const ScanRecord &r) {
    CodeParameters p;
    p.dx = r.dx;
    p.dz = r.dz;
    return p.d();
}

}  // namespace

std::vector<DirectionWord> enumerate_words(const ScanConfig &cfg) {
    std::vector<DirectionWord> out;
    for (size_t len = std::max<size_t>(cfg.min_len, 1); len <= cfg.max_len; len++) {
        std::set<DirectionWord> classes;
        std::vector<Dir> prefix;
        extend(prefix, len, cfg, classes);
        out.insert(out.end(), classes.begin(), classes.end());
    }
    return out;
}

Evaluation evaluate_word(const DirectionWord &w, const ScanConfig &cfg, const Layout &layout, int threads) {
    const std::string text = format_word(w);
    try {
        CodeInstance c = build_code(w, cfg.torus, layout, BuildOptions{cfg.strict_wrap});
        if (!verify_commutation(c)) {
            return Rejected{text, layout.descriptor(), "non-commuting"};
        }
        CodeParameters p = code_parameters(c, cfg.w_max, threads);
        return ScanRecord{text,
                          w.size(),
                          p.n,
                          p.k,
                          p.dx,
                          p.dz,
                          support_pattern(w).effective_support().size(),
                          layout.descriptor()};
    } catch (const WrapCollision &e) {
        return Rejected{text, layout.descriptor(), e.what()};
    }
}

std::vector<Evaluation> evaluate_word(const DirectionWord &w, const ScanConfig &cfg, int threads) {
    if (cfg.layout_rule == LayoutRule::RowAlternating) {
        return {evaluate_word(w, cfg, row_alternating_layout(cfg.torus), threads)};
    }
    const std::string text = format_word(w);
    IntegerLattice l = torus_lattice(cfg.torus, lattice_from_generators(odd_difference_set(
                                                    difference_multiset(support_pattern(w)))));
    CosetStructure cosets(cfg.torus, l);
    if (cosets.coset_count() > cfg.max_cosets) {
        return {Rejected{text, "", std::to_string(cosets.coset_count()) + " ancilla cosets exceed the limit of " +
                                       std::to_string(cfg.max_cosets)}};
    }
    std::set<std::vector<uint8_t>> seen;
    std::vector<Evaluation> out;
    for (const Layout &lay : enumerate_coset_layouts(cfg.torus, l)) {
        Layout canon = canonical_layout(cfg.torus, cosets, lay);
        if (seen.insert(canon.coset_bits).second) {
            out.push_back(evaluate_word(w, cfg, canon, threads));
        }
    }
    return out;
}

bool scan_order(const ScanRecord &a, const ScanRecord &b) {
    int da = distance_rank(min_distance(a)), db = distance_rank(min_distance(b));
    if (da != db) {
        return da > db;
    }
    if (a.k != b.k) {
        return a.k > b.k;
    }
    if (a.w != b.w) {
        return a.w < b.w;
    }
    if (a.word != b.word) {
        return a.word < b.word;
    }
    return a.layout < b.layout;
}

namespace {

std::vector<ScanRecord> collect(std::vector<std::vector<Evaluation>> &results) {
    std::vector<ScanRecord> out;
    for (auto &evals : results) {
        for (auto &e : evals) {
            if (auto *r = std::get_if<ScanRecord>(&e)) {
                out.push_back(std::move(*r));
            }
        }
    }
    std::sort(out.begin(), out.end(), scan_order);
    return out;
}

}  // namespace

std::vector<ScanRecord> scan_serial(const ScanConfig &cfg) {
    auto words = enumerate_words(cfg);
    std::vector<std::vector<Evaluation>> results;
    results.reserve(words.size());
    for (const auto &w : words) {
        results.push_back(evaluate_word(w, cfg, 1));
    }
    return collect(results);
}

std::vector<ScanRecord> scan(const ScanConfig &cfg) {
    auto words = enumerate_words(cfg);
    std::vector<std::vector<Evaluation>> results(words.size());
    const int nt = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
    const long long count = static_cast<long long>(words.size());
    std::vector<std::exception_ptr> errors(words.size());
#pragma omp parallel for num_threads(nt) schedule(dynamic, 1)
    for (long long i = 0; i < count; i++) {
        size_t at = static_cast<size_t>(i);
        try {
            results[at] = evaluate_word(words[at], cfg, 1);
        } catch (...) {
            errors[at] = std::current_exception();
        }
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return collect(results);
}

}  // namespace dircode
