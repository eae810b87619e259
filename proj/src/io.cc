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

#include "dircode/io.h"

#include <algorithm>
#include <map>
#include <regex>
#include <sstream>

#include "dircode/pattern.h"

namespace dircode {

using nlohmann::json;

json to_json(const DistanceResult &d) {
    switch (d.kind) {
        case DistanceResult::Kind::Exact:
            return {{"kind", "exact"}, {"value", d.value}};
        case DistanceResult::Kind::GreaterThan:
            return {{"kind", "greater_than"}, {"value", d.value}};
        case DistanceResult::Kind::NotDefined:
            break;
    }
    return {{"kind", "not_defined"}, {"value", nullptr}};
}

json to_json(Vec2 v) {
    return json::array({v.x, v.y});
}

json to_json(const ScanRecord &r) {
    return {{"word", r.word},     {"w", r.w},           {"n", r.n},           {"k", r.k}, {"dX", to_json(r.dx)},
            {"dZ", to_json(r.dz)}, {"support", r.support}, {"layout", r.layout}};
}

namespace {

json vec_list(const std::vector<Vec2> &vs) {
    json out = json::array();
    for (const Vec2 &v : vs) {
        out.push_back(to_json(v));
    }
    return out;
}

json lattice_json(const IntegerLattice &l) {
    json out{{"rank", l.rank()}, {"basis", vec_list(l.basis())}};
    if (auto idx = l.index()) {
        out["index"] = *idx;
        out["ancilla_cosets"] = *idx / 2;
    } else {
        out["index"] = nullptr;
        out["ancilla_cosets"] = nullptr;
    }
    return out;
}

json torus_json(const CheckerboardTorus &t) {
    return {{"lx", t.lx()}, {"ly", t.ly()}, {"n", t.n()}};
}

}  // namespace

json analyze_report(const DirectionWord &w, const std::optional<CheckerboardTorus> &t) {
    SupportPattern p = support_pattern(w);
    DifferenceMultiset diffs = difference_multiset(p);
    std::vector<Vec2> odd = odd_difference_set(diffs);
    IntegerLattice l = lattice_from_generators(odd);
    RectangleBound bound = admissible_rectangle_bound(p);
    json out{{"word", format_word(w)},
             {"w", w.size()},
             {"offsets", vec_list(p.offsets)},
             {"effective_support", p.effective_support().size()},
             {"odd_differences", vec_list(odd)},
             {"lattice", lattice_json(l)},
             {"degenerate", l.rank() < 2},
             {"admissible_bound", {{"lx", bound.min_lx}, {"ly", bound.min_ly}}}};
    if (t) {
        IntegerLattice tl = torus_lattice(*t, l);
        CosetStructure cosets(*t, tl);
        std::vector<size_t> sizes(cosets.coset_count(), 0);
        for (size_t a = 0; a < t->n(); a++) {
            sizes[cosets.coset_of_ancilla(a)]++;
        }
        json labels = json::array();
        for (size_t i = 0; i < cosets.coset_count(); i++) {
            labels.push_back({{"label", to_json(cosets.labels()[i])}, {"ancillas", sizes[i]}});
        }
        out["torus"] = torus_json(*t);
        out["torus"]["lattice"] = lattice_json(tl);
        out["torus"]["cosets"] = labels;
        out["torus"]["admissible"] = t->lx() >= bound.min_lx && t->ly() >= bound.min_ly;
    }
    return out;
}

json build_report(const CodeInstance &c) {
    auto rows = [](const BitMatrix &h, const std::vector<Vec2> &anchors) {
        json out = json::array();
        for (size_t r = 0; r < h.rows(); r++) {
            out.push_back({{"anchor", to_json(anchors[r])}, {"support", h.row_support(r)}});
        }
        return out;
    };
    return {{"word", format_word(c.word)},
            {"torus", torus_json(c.torus)},
            {"layout", c.layout.descriptor()},
            {"x_checks", rows(c.hx, c.x_anchors)},
            {"z_checks", rows(c.hz, c.z_anchors)},
            {"commuting", verify_commutation(c)}};
}

json params_report(const CodeInstance &c, const CodeParameters &p, size_t w_max) {
    return {{"word", format_word(c.word)},
            {"torus", torus_json(c.torus)},
            {"layout", c.layout.descriptor()},
            {"commuting", true},
            {"n", p.n},
            {"k", p.k},
            {"k_from_dependencies", p.k_from_dependencies},
            {"rank_x", p.rank_x},
            {"rank_z", p.rank_z},
            {"w_max", w_max},
            {"dX", to_json(p.dx)},
            {"dZ", to_json(p.dz)},
            {"d", to_json(p.d())}};
}

json qc_report(const DirectionWord &w, const CheckerboardTorus &t) {
    RingSpec r = RingSpec::for_torus(t);
    QcCheckVectors qv = qc_check_vectors(w, r);
    SuReport su = su_reduction_check(w, r);
    QcCrossCheck cc = qc_cross_check(w, t);
    return {{"word", format_word(w)},
            {"torus", torus_json(t)},
            {"ring", {{"a", r.a}, {"b", r.b}}},
            {"h0", qv.x_vector.h0.str()},
            {"h1", qv.x_vector.h1.str()},
            {"g0", qv.z_vector.h0.str()},
            {"g1", qv.z_vector.h1.str()},
            {"ann_x", cc.ann_x},
            {"ann_z", cc.ann_z},
            {"predicted_k", cc.ann_x + cc.ann_z},
            {"su",
             {{"su_h0", su.su_h0.str()},
              {"su_h1", su.su_h1.str()},
              {"su_reference", su.su_reference.str()},
              {"h0_annihilated", su.h0_annihilated},
              {"h1_matches_reference", su.h1_matches_reference}}},
            {"cross_check",
             {{"left_kernel_x", cc.left_kernel_x},
              {"left_kernel_z", cc.left_kernel_z},
              {"commuting", cc.commuting},
              {"pass", cc.agrees()}}}};
}

std::string scan_csv_header(bool with_layout) {
    return with_layout ? "word,w,n,k,dX,dZ,support,layout" : "word,w,n,k,dX,dZ,support";
}

std::string scan_csv_row(const ScanRecord &r, bool with_layout) {
    std::ostringstream out;
    out << r.word << ',' << r.w << ',' << r.n << ',' << r.k << ',' << r.dx.str() << ',' << r.dz.str() << ','
        << r.support;
    if (with_layout) {
        out << ',' << r.layout;
    }
    return out.str();
}

std::vector<Vec2> parse_offsets(const std::string &text) {
    static const std::regex pair_re(R"(\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\))");
    std::vector<Vec2> out;
    size_t consumed = 0;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), pair_re); it != std::sregex_iterator(); ++it) {
        std::string gap = text.substr(consumed, static_cast<size_t>(it->position()) - consumed);
        if (gap.find_first_not_of(" \t\n,") != std::string::npos) {
            throw std::invalid_argument("unexpected text '" + gap + "' in offset list");
        }
        out.push_back({std::stoll((*it)[1]), std::stoll((*it)[2])});
        consumed = static_cast<size_t>(it->position() + it->length());
    }
    if (text.substr(consumed).find_first_not_of(" \t\n,") != std::string::npos) {
        throw std::invalid_argument("unexpected text '" + text.substr(consumed) + "' in offset list");
    }
    if (out.empty()) {
        throw std::invalid_argument("empty offset list");
    }
    return out;
}

ConfigError::ConfigError(const std::string &message, size_t line)
    : std::runtime_error("config line " + std::to_string(line) + ": " + message), line_(line) {
}

namespace {

std::string strip(const std::string &s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

size_t parse_count(const std::string &v, size_t line) {
    if (v.empty() || !std::all_of(v.begin(), v.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw ConfigError("expected a non-negative integer, got '" + v + "'", line);
    }
    try {
        return std::stoull(v);
    } catch (const std::out_of_range &) {
        throw ConfigError("integer '" + v + "' out of range", line);
    }
}

bool parse_bool(const std::string &v, size_t line) {
    if (v == "true" || v == "1" || v == "yes") {
        return true;
    }
    if (v == "false" || v == "0" || v == "no") {
        return false;
    }
    throw ConfigError("expected true or false, got '" + v + "'", line);
}

}  // namespace

ScanConfig parse_scan_config(std::istream &in, ScanConfig base) {
    ScanConfig cfg = base;
    int64_t lx = cfg.torus.lx(), ly = cfg.torus.ly();
    std::string raw;
    size_t line = 0;
    std::map<std::string, size_t> seen;
    while (std::getline(in, raw)) {
        line++;
        std::string text = strip(raw.substr(0, raw.find('#')));
        if (text.empty()) {
            continue;
        }
        size_t eq = text.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("expected key=value", line);
        }
        std::string key = strip(text.substr(0, eq));
        std::string value = strip(text.substr(eq + 1));
        if (auto prev = seen.find(key); prev != seen.end()) {
            throw ConfigError("duplicate key '" + key + "' (first set on line " + std::to_string(prev->second) + ")",
                              line);
        }
        seen[key] = line;
        if (key == "min_len") {
            cfg.min_len = parse_count(value, line);
            if (cfg.min_len == 0) {
                throw ConfigError("min_len must be at least 1", line);
            }
        } else if (key == "max_len") {
            cfg.max_len = parse_count(value, line);
        } else if (key == "lx") {
            lx = static_cast<int64_t>(parse_count(value, line));
        } else if (key == "ly") {
            ly = static_cast<int64_t>(parse_count(value, line));
        } else if (key == "layout") {
            if (value == "row-alt") {
                cfg.layout_rule = LayoutRule::RowAlternating;
            } else if (value == "all-coset") {
                cfg.layout_rule = LayoutRule::AllCosetConstant;
            } else {
                throw ConfigError("layout must be row-alt or all-coset, got '" + value + "'", line);
            }
        } else if (key == "wmax") {
            cfg.w_max = parse_count(value, line);
        } else if (key == "fix_first_n") {
            cfg.fix_first_n = parse_bool(value, line);
        } else if (key == "no_backtrack") {
            cfg.no_backtrack = parse_bool(value, line);
        } else if (key == "distinct_offsets") {
            cfg.distinct_offsets = parse_bool(value, line);
        } else if (key == "include_cyclic") {
            cfg.include_cyclic = parse_bool(value, line);
        } else if (key == "strict_wrap") {
            cfg.strict_wrap = parse_bool(value, line);
        } else if (key == "max_cosets") {
            cfg.max_cosets = parse_count(value, line);
        } else if (key == "threads") {
            cfg.threads = static_cast<int>(parse_count(value, line));
        } else {
            throw ConfigError("unknown key '" + key + "'", line);
        }
    }
    try {
        cfg.torus = CheckerboardTorus(lx, ly);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what(), seen.count("ly") ? seen["ly"] : seen.count("lx") ? seen["lx"] : line);
    }
    return cfg;
}

}  // namespace dircode
