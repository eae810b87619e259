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

// dircode: command-line front end.
//
// Exit status: 0 success, 1 domain failure (non-realizable offsets,
// non-commuting layout, inapplicable certificate, failed cross-check),
// 2 usage or parse error.

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dircode/io.h"
#include "dircode/pattern.h"
#include "dircode/qc.h"
#include "dircode/search.h"
#include "dircode/torus.h"
#include "dircode/word.h"

using namespace dircode;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kUsageError = 2;

// Thrown for bad flag values discovered after CLI parsing.
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class DomainFailure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string word;
    std::optional<int64_t> lx, ly;
    std::string layout = "row-alt";
    size_t w_max = 4;
    std::string format = "text";
    std::string out_path;
    std::string config_path;
    bool no_cyclic = false;
    bool strict_wrap = false;
    std::string offsets;
    std::string d_range = "6..18";
    size_t m = 1;
    std::optional<size_t> min_len, max_len;
    std::optional<int> threads;
};

std::string vec_list(const std::vector<Vec2> &vs) {
    std::string out;
    for (size_t i = 0; i < vs.size(); i++) {
        out += (i ? " " : "") + vs[i].str();
    }
    return out;
}

std::string basis_str(const IntegerLattice &l) {
    std::string out = "{";
    for (size_t i = 0; i < l.basis().size(); i++) {
        out += (i ? "," : "") + l.basis()[i].str();
    }
    return out + "}";
}

IntegerLattice lattice_of(const DirectionWord &w) {
    return lattice_from_generators(odd_difference_set(difference_multiset(support_pattern(w))));
}

CheckerboardTorus require_torus(const Options &o) {
    if (!o.lx || !o.ly) {
        throw UsageError("--lx and --ly are required");
    }
    try {
        return CheckerboardTorus(*o.lx, *o.ly);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
}

DirectionWord require_word(const Options &o) {
    if (o.word.empty()) {
        throw UsageError("--word is required");
    }
    return parse_word(o.word);
}

Layout make_layout(const Options &o, const DirectionWord &w, const CheckerboardTorus &t) {
    if (o.layout == "row-alt") {
        return row_alternating_layout(t);
    }
    if (o.layout.rfind("coset:", 0) != 0) {
        throw UsageError("--layout must be row-alt or coset:<bits>, got '" + o.layout + "'");
    }
    CosetStructure cosets(t, torus_lattice(t, lattice_of(w)));
    try {
        return parse_coset_layout(t, cosets, o.layout);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
}

int cmd_analyze(const Options &o, std::ostream &out) {
    DirectionWord w = require_word(o);
    std::optional<CheckerboardTorus> t;
    if (o.lx || o.ly) {
        t = require_torus(o);
    }
    json r = analyze_report(w, t);
    if (o.format == "json") {
        out << r.dump(2) << '\n';
        return kOk;
    }
    SupportPattern p = support_pattern(w);
    std::vector<Vec2> odd = odd_difference_set(difference_multiset(p));
    IntegerLattice l = lattice_from_generators(odd);
    out << "word              " << format_word(w) << " (w=" << w.size() << ")\n";
    out << "offsets           " << vec_list(p.offsets) << '\n';
    out << "effective support " << p.effective_support().size() << '\n';
    out << "odd differences   " << (odd.empty() ? "none" : vec_list(odd)) << '\n';
    if (l.rank() < 2) {
        out << "lattice           rank " << l.rank() << " " << basis_str(l)
            << ": degenerate, ancilla cosets are not finite\n";
    } else {
        out << "lattice basis     " << basis_str(l) << '\n';
        out << "index             " << *l.index() << '\n';
        out << "ancilla cosets    " << ancilla_coset_count(l) << '\n';
    }
    out << "admissible torus  Lx >= " << r["admissible_bound"]["lx"] << ", Ly >= " << r["admissible_bound"]["ly"]
        << '\n';
    if (t) {
        const json &tj = r["torus"];
        out << "torus             " << t->lx() << "x" << t->ly() << " (n=" << t->n() << ", "
            << (tj["admissible"].get<bool>() ? "admissible" : "below the admissible bound") << ")\n";
        IntegerLattice tl = torus_lattice(*t, l);
        out << "layout lattice    " << basis_str(tl) << ", " << tj["cosets"].size() << " ancilla cosets\n";
        for (const auto &c : tj["cosets"]) {
            out << "  coset " << Vec2{c["label"][0].get<int64_t>(), c["label"][1].get<int64_t>()}.str() << "  "
                << c["ancillas"] << " ancillas\n";
        }
    }
    return kOk;
}

int cmd_canon(const Options &o, std::ostream &out) {
    DirectionWord w = require_word(o);
    bool cyclic = !o.no_cyclic;
    DirectionWord c = canonical_word(w, cyclic);
    size_t orbit = word_orbit(w, cyclic).size();
    if (o.format == "json") {
        out << json{{"word", format_word(w)},
                    {"canonical", format_word(c)},
                    {"include_cyclic", cyclic},
                    {"closed", w.is_closed()},
                    {"orbit_size", orbit}}
                   .dump(2)
            << '\n';
    } else {
        out << format_word(c) << '\n';
    }
    if (cyclic && !w.is_closed()) {
        std::cerr << "note: " << format_word(w) << " is not a closed route (ends at " << w.endpoint().str()
                  << "); cyclic shifts are applied as letter rotations only\n";
    }
    return kOk;
}

int cmd_realize(const Options &o, std::ostream &out) {
    std::vector<Vec2> offsets;
    try {
        offsets = parse_offsets(o.offsets);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    Realization r = is_realizable(offsets);
    if (o.format == "json") {
        out << json{{"realizable", r.realizable()},
                    {"word", r.realizable() ? json(format_word(*r.word)) : json(nullptr)},
                    {"reason", r.reason}}
                   .dump(2)
            << '\n';
    } else if (r.realizable()) {
        out << format_word(*r.word) << '\n';
    } else {
        out << "NOT REALIZABLE: " << r.reason << '\n';
    }
    return r.realizable() ? kOk : kDomainFailure;
}

int cmd_build(const Options &o, std::ostream &out) {
    DirectionWord w = require_word(o);
    CheckerboardTorus t = require_torus(o);
    CodeInstance c = build_code(w, t, make_layout(o, w, t), {o.strict_wrap});
    json r = build_report(c);
    if (o.format == "json") {
        out << r.dump(2) << '\n';
    } else {
        auto rows = [&out](char type, const BitMatrix &h, const std::vector<Vec2> &anchors) {
            for (size_t i = 0; i < h.rows(); i++) {
                out << type << ' ' << std::setw(9) << std::left << anchors[i].str() << std::right;
                for (size_t q : h.row_support(i)) {
                    out << ' ' << q;
                }
                out << '\n';
            }
        };
        out << "# " << format_word(w) << " on " << t.lx() << "x" << t.ly() << ", layout " << c.layout.descriptor()
            << ", n=" << t.n() << "\n# type anchor data-indices\n";
        rows('X', c.hx, c.x_anchors);
        rows('Z', c.hz, c.z_anchors);
        out << "commuting " << (r["commuting"].get<bool>() ? "yes" : "no") << '\n';
    }
    return r["commuting"].get<bool>() ? kOk : kDomainFailure;
}

int cmd_params(const Options &o, std::ostream &out) {
    DirectionWord w = require_word(o);
    CheckerboardTorus t = require_torus(o);
    CodeInstance c = build_code(w, t, make_layout(o, w, t), {o.strict_wrap});
    if (!verify_commutation(c)) {
        if (o.format == "json") {
            out << json{{"word", format_word(w)},
                        {"torus", {{"lx", t.lx()}, {"ly", t.ly()}, {"n", t.n()}}},
                        {"layout", c.layout.descriptor()},
                        {"commuting", false}}
                       .dump(2)
                << '\n';
        } else {
            out << "non-commuting: " << format_word(w) << " under " << c.layout.descriptor() << " on " << t.lx()
                << "x" << t.ly() << " has anticommuting X and Z checks\n";
        }
        return kDomainFailure;
    }
    CodeParameters p = code_parameters(c, o.w_max, o.threads.value_or(0));
    if (o.format == "json") {
        out << params_report(c, p, o.w_max).dump(2) << '\n';
        return kOk;
    }
    out << "word       " << format_word(w) << " on " << t.lx() << "x" << t.ly() << ", layout "
        << c.layout.descriptor() << '\n';
    out << "commuting  yes\n";
    out << "n          " << p.n << '\n';
    out << "k          " << p.k << " (n - rank HX - rank HZ = " << p.n << " - " << p.rank_x << " - " << p.rank_z
        << ")\n";
    out << "k          " << p.k_from_dependencies << " (dim ker HX^T + dim ker HZ^T)\n";
    out << "dX         " << p.dx.str() << '\n';
    out << "dZ         " << p.dz.str() << '\n';
    out << "d          " << p.d().str() << " (w_max " << o.w_max << ")\n";
    return kOk;
}

ScanConfig scan_config(const Options &o) {
    ScanConfig cfg;
    if (!o.config_path.empty()) {
        std::ifstream in(o.config_path);
        if (!in) {
            throw UsageError("cannot open config file '" + o.config_path + "'");
        }
        cfg = parse_scan_config(in, cfg);
    }
    if (o.lx || o.ly) {
        Options merged = o;
        merged.lx = o.lx.value_or(cfg.torus.lx());
        merged.ly = o.ly.value_or(cfg.torus.ly());
        cfg.torus = require_torus(merged);
    }
    return cfg;
}

int cmd_scan(const Options &o, ScanConfig cfg, std::ostream &out) {
    bool with_layout = cfg.layout_rule == LayoutRule::AllCosetConstant;
    auto records = scan(cfg);
    if (o.format == "json") {
        for (const auto &r : records) {
            out << to_json(r).dump() << '\n';
        }
    } else if (o.format == "csv") {
        out << scan_csv_header(with_layout) << '\n';
        for (const auto &r : records) {
            out << scan_csv_row(r, with_layout) << '\n';
        }
    } else {
        out << std::left << std::setw(12) << "word" << std::right << std::setw(4) << "w" << std::setw(6) << "n"
            << std::setw(5) << "k" << std::setw(5) << "dX" << std::setw(5) << "dZ" << std::setw(9) << "support";
        out << (with_layout ? "  layout" : "") << '\n';
        for (const auto &r : records) {
            out << std::left << std::setw(12) << r.word << std::right << std::setw(4) << r.w << std::setw(6) << r.n
                << std::setw(5) << r.k << std::setw(5) << r.dx.str() << std::setw(5) << r.dz.str() << std::setw(9)
                << r.support;
            out << (with_layout ? "  " + r.layout : "") << '\n';
        }
    }
    return kOk;
}

int cmd_qc(const Options &o, std::ostream &out) {
    DirectionWord w = require_word(o);
    CheckerboardTorus t = require_torus(o);
    json r = qc_report(w, t);
    bool pass = r["cross_check"]["pass"].get<bool>();
    if (o.format == "json") {
        out << r.dump(2) << '\n';
        return pass ? kOk : kDomainFailure;
    }
    auto s = [](const json &j) { return j.get<std::string>(); };
    auto yes = [](const json &j) { return j.get<bool>() ? "yes" : "no"; };
    out << "word         " << format_word(w) << " on " << t.lx() << "x" << t.ly() << '\n';
    out << "ring         u^" << r["ring"]["a"] << " = v^" << r["ring"]["b"] << " = 1\n";
    out << "h0           " << s(r["h0"]) << '\n';
    out << "h1           " << s(r["h1"]) << '\n';
    out << "g0           " << s(r["g0"]) << '\n';
    out << "g1           " << s(r["g1"]) << '\n';
    out << "ann X        " << r["ann_x"] << '\n';
    out << "ann Z        " << r["ann_z"] << '\n';
    out << "predicted k  " << r["predicted_k"] << '\n';
    out << "S_u h0       " << s(r["su"]["su_h0"]) << " (zero: " << yes(r["su"]["h0_annihilated"]) << ")\n";
    out << "S_u h1       " << s(r["su"]["su_h1"]) << " (equals S_u(1 + v + v^2): "
        << yes(r["su"]["h1_matches_reference"]) << ")\n";
    out << "left kernels X " << r["cross_check"]["left_kernel_x"] << ", Z " << r["cross_check"]["left_kernel_z"]
        << " (row-alt " << (r["cross_check"]["commuting"].get<bool>() ? "commuting" : "non-commuting") << ")\n";
    out << "cross-check  " << (pass ? "PASS" : "FAIL") << '\n';
    return pass ? kOk : kDomainFailure;
}

std::vector<size_t> parse_d_range(const std::string &text) {
    std::vector<size_t> out;
    auto number = [&text](const std::string &part) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 6) {
            throw UsageError("bad --d-range '" + text + "': expected D, D1..D2 or a comma list");
        }
        return static_cast<size_t>(std::stoul(part));
    };
    if (auto dots = text.find(".."); dots != std::string::npos) {
        size_t lo = number(text.substr(0, dots)), hi = number(text.substr(dots + 2));
        if (lo % 2 || hi % 2) {
            throw UsageError("--d-range bounds must be even");
        }
        for (size_t d = lo; d <= hi; d += 2) {
            out.push_back(d);
        }
    } else {
        std::stringstream ss(text);
        std::string part;
        while (std::getline(ss, part, ',')) {
            out.push_back(number(part));
        }
    }
    for (size_t d : out) {
        if (d < 2 || d % 2) {
            throw UsageError("d must be even and at least 2, got " + std::to_string(d));
        }
    }
    if (out.empty()) {
        throw UsageError("--d-range is empty");
    }
    return out;
}

int cmd_collapse(const Options &o, std::ostream &out) {
    const DirectionWord w = parse_word("NE2NE2N");
    std::vector<size_t> ds = parse_d_range(o.d_range);
    json rows = json::array();
    bool all_agree = true;
    for (size_t d : ds) {
        CheckerboardTorus t(2 * static_cast<int64_t>(d), static_cast<int64_t>(d));
        size_t closed = collapse_k(d);
        size_t qc = predicted_k(w, RingSpec::for_torus(t));
        size_t direct = code_parameters(build_code(w, t, row_alternating_layout(t)), 0).k;
        bool agree = closed == qc && qc == direct;
        all_agree = all_agree && agree;
        rows.push_back({{"d", d}, {"closed_form_k", closed}, {"qc_k", qc}, {"direct_k", direct}, {"agree", agree}});
    }
    if (o.format == "json") {
        out << rows.dump(2) << '\n';
    } else if (o.format == "csv") {
        out << "d,closed_form_k,qc_k,direct_k,agree\n";
        for (const auto &r : rows) {
            out << r["d"] << ',' << r["closed_form_k"] << ',' << r["qc_k"] << ',' << r["direct_k"] << ','
                << (r["agree"].get<bool>() ? "yes" : "no") << '\n';
        }
    } else {
        out << "torus (2d, d), word NE2NE2N, row-alt\n";
        out << std::setw(4) << "d" << std::setw(15) << "closed_form_k" << std::setw(6) << "qc_k" << std::setw(10)
            << "direct_k" << std::setw(7) << "agree" << '\n';
        for (const auto &r : rows) {
            out << std::setw(4) << r["d"].get<size_t>() << std::setw(15) << r["closed_form_k"].get<size_t>()
                << std::setw(6) << r["qc_k"].get<size_t>() << std::setw(10) << r["direct_k"].get<size_t>()
                << std::setw(7) << (r["agree"].get<bool>() ? "yes" : "no") << '\n';
        }
    }
    return all_agree ? kOk : kDomainFailure;
}

int cmd_certify(const Options &o, std::ostream &out) {
    DirectionWord w = require_word(o);
    if (o.m == 0) {
        throw UsageError("--m must be at least 1");
    }
    int64_t m = static_cast<int64_t>(o.m);
    CheckerboardTorus t(12 * m, 6 * m);
    DependencyCertificate cert;
    try {
        cert = dependency_certificate(w, t);
    } catch (const CertificateNotApplicable &e) {
        throw DomainFailure(std::string("certificate not applicable: ") + e.what());
    }
    CodeInstance c = build_code(w, t, row_alternating_layout(t));
    if (!verify_commutation(c)) {
        throw DomainFailure("certificate not applicable: the row-alternating code does not commute");
    }
    std::vector<MotifSite> sites;
    for (const MotifSite &s : find_motif_sites(c, o.m)) {
        if (s.nontrivial) {
            sites.push_back(s);
        }
    }
    bool has_x = std::any_of(sites.begin(), sites.end(), [](const MotifSite &s) { return s.pauli == CheckType::X; });
    bool has_z = std::any_of(sites.begin(), sites.end(), [](const MotifSite &s) { return s.pauli == CheckType::Z; });
    bool certified = cert.verified && has_x && has_z;
    std::string verdict = "k >= 4 and d <= " + std::to_string(2 * m) + " certified";

    if (o.format == "json") {
        json motif = json::array();
        for (const auto &s : sites) {
            motif.push_back({{"p", to_json(s.p)},
                             {"pauli", std::string(1, check_letter(s.pauli))},
                             {"support", motif_operator(t, s.p, {4, 2}, {12, 6}, o.m)}});
        }
        out << json{{"word", format_word(w)},
                    {"m", o.m},
                    {"torus", {{"lx", t.lx()}, {"ly", t.ly()}, {"n", t.n()}}},
                    {"x_relations", cert.x_relations},
                    {"z_relations", cert.z_relations},
                    {"x_classes", cert.x_classes},
                    {"z_classes", cert.z_classes},
                    {"dependencies_verified", cert.verified},
                    {"motif_sites", motif},
                    {"certified", certified}}
                   .dump(2)
            << '\n';
        return certified ? kOk : kDomainFailure;
    }
    out << format_word(w) << " on " << t.lx() << "x" << t.ly() << " (m=" << m << ", n=" << t.n() << ")\n";
    auto relations = [&](char type, const std::vector<std::vector<int>> &classes,
                         const std::vector<std::vector<size_t>> &rels, const std::vector<Vec2> &anchors) {
        for (size_t i = 0; i < rels.size(); i++) {
            out << type << " relation: anchor rows y mod 6 in {";
            for (size_t j = 0; j < classes[i].size(); j++) {
                out << (j ? "," : "") << classes[i][j];
            }
            out << "}, " << rels[i].size() << " checks, first anchors";
            for (size_t j = 0; j < std::min<size_t>(3, rels[i].size()); j++) {
                out << ' ' << anchors[rels[i][j]].str();
            }
            out << '\n';
        }
    };
    relations('X', cert.x_classes, cert.x_relations, c.x_anchors);
    relations('Z', cert.z_classes, cert.z_relations, c.z_anchors);
    out << "dependencies " << (cert.verified ? "verified" : "NOT verified") << '\n';
    out << "motif sites (weight " << 2 * m << ", commuting, outside the stabilizer space): " << sites.size() << '\n';
    for (size_t i = 0; i < std::min<size_t>(sites.size(), 4); i++) {
        out << "  " << check_letter(sites[i].pauli) << " at " << sites[i].p.str() << '\n';
    }
    out << (certified ? verdict : "not certified") << '\n';
    return certified ? kOk : kDomainFailure;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Directional CSS codes on checkerboard tori"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&o](CLI::App *sub, std::vector<std::string> allowed, std::string fallback) {
        o.format = fallback;
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(allowed));
        sub->add_option("--out", o.out_path, "Write output to this file");
    };
    auto add_torus = [&o](CLI::App *sub, bool required) {
        auto *x = sub->add_option("--lx", o.lx, "Torus width (even)");
        auto *y = sub->add_option("--ly", o.ly, "Torus height (even)");
        if (required) {
            x->required();
            y->required();
        }
    };

    auto *analyze = app.add_subcommand("analyze", "Support pattern, odd differences and layout lattice");
    analyze->add_option("--word", o.word, "Direction word, e.g. NE2N")->required();
    add_torus(analyze, false);

    auto *canon = app.add_subcommand("canon", "Canonical representative of a word");
    canon->add_option("--word", o.word)->required();
    canon->add_flag("--no-cyclic", o.no_cyclic, "Quotient by dihedral and reversal symmetries only");

    auto *realize = app.add_subcommand("realize", "Find a word whose support is the given offsets");
    realize->add_option("--offsets", o.offsets, "Offsets, e.g. \"(0,1) (1,2)\"")->required();

    auto *build = app.add_subcommand("build", "Check matrices of a word on a torus");
    auto *params = app.add_subcommand("params", "n, k and distance screen");
    auto *qc = app.add_subcommand("qc", "Quasi-cyclic check vectors and annihilators");
    for (auto *sub : {build, params, qc}) {
        sub->add_option("--word", o.word)->required();
        add_torus(sub, true);
    }
    for (auto *sub : {build, params}) {
        sub->add_option("--layout", o.layout, "row-alt or coset:<bits>");
        sub->add_flag("--strict-wrap", o.strict_wrap, "Reject offsets that coincide on the torus");
    }
    params->add_option("--wmax", o.w_max, "Distance screen cutoff");
    params->add_option("--threads", o.threads, "Worker threads");

    auto *scan_cmd = app.add_subcommand("scan", "Symmetry-quotiented word scan");
    scan_cmd->add_option("--config", o.config_path, "key=value config file");
    add_torus(scan_cmd, false);
    std::string scan_layout;
    scan_cmd->add_option("--layout", scan_layout, "row-alt or all-coset")->check(CLI::IsMember({"row-alt", "all-coset"}));
    std::optional<size_t> scan_wmax;
    scan_cmd->add_option("--wmax", scan_wmax, "Distance screen cutoff");
    scan_cmd->add_option("--min-len", o.min_len);
    scan_cmd->add_option("--max-len", o.max_len);
    scan_cmd->add_option("--threads", o.threads);
    bool scan_cyclic = false;
    scan_cmd->add_flag("--cyclic", scan_cyclic, "Also quotient by cyclic shifts");
    scan_cmd->add_flag("--strict-wrap", o.strict_wrap);

    auto *collapse = app.add_subcommand("collapse", "k of NE2NE2N on (2d, d) tori three ways");
    collapse->add_option("--d-range", o.d_range, "D, D1..D2 (even steps) or a comma list");

    auto *certify = app.add_subcommand("certify", "Dependency and motif certificates on 12m x 6m");
    certify->add_option("--word", o.word)->required();
    certify->add_option("--m", o.m, "Torus multiple");

    add_format(analyze, {"text", "json"}, "text");
    add_format(canon, {"text", "json"}, "text");
    add_format(realize, {"text", "json"}, "text");
    add_format(build, {"text", "json"}, "text");
    add_format(params, {"text", "json"}, "text");
    add_format(qc, {"text", "json"}, "text");
    add_format(scan_cmd, {"text", "json", "csv"}, "csv");
    add_format(collapse, {"text", "json", "csv"}, "text");
    add_format(certify, {"text", "json"}, "text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsageError;
    }
    // Each subcommand registered its own --format default; the one parsed wins.
    CLI::App *sub = app.get_subcommands().front();
    if (sub->get_option("--format")->count() == 0) {
        o.format = sub == scan_cmd ? "csv" : "text";
    }

    std::ofstream file;
    std::ostringstream buffer;
    try {
        ScanConfig cfg;
        if (sub == scan_cmd) {
            cfg = scan_config(o);
            if (!scan_layout.empty()) {
                cfg.layout_rule = scan_layout == "all-coset" ? LayoutRule::AllCosetConstant : LayoutRule::RowAlternating;
            }
            cfg.w_max = scan_wmax.value_or(cfg.w_max);
            cfg.min_len = o.min_len.value_or(cfg.min_len);
            cfg.max_len = o.max_len.value_or(cfg.max_len);
            cfg.threads = o.threads.value_or(cfg.threads);
            cfg.include_cyclic = cfg.include_cyclic || scan_cyclic;
            cfg.strict_wrap = cfg.strict_wrap || o.strict_wrap;
            if (cfg.min_len == 0) {
                throw UsageError("--min-len must be at least 1");
            }
        }
        int status = kOk;
        if (sub == analyze) {
            status = cmd_analyze(o, buffer);
        } else if (sub == canon) {
            status = cmd_canon(o, buffer);
        } else if (sub == realize) {
            status = cmd_realize(o, buffer);
        } else if (sub == build) {
            status = cmd_build(o, buffer);
        } else if (sub == params) {
            status = cmd_params(o, buffer);
        } else if (sub == scan_cmd) {
            status = cmd_scan(o, cfg, buffer);
        } else if (sub == qc) {
            status = cmd_qc(o, buffer);
        } else if (sub == collapse) {
            status = cmd_collapse(o, buffer);
        } else if (sub == certify) {
            status = cmd_certify(o, buffer);
        }
        if (o.out_path.empty()) {
            std::cout << buffer.str();
        } else {
            file.open(o.out_path);
            if (!file) {
                std::cerr << "error: cannot write '" << o.out_path << "'\n";
                return kUsageError;
            }
            file << buffer.str();
        }
        return status;
    } catch (const ParseError &e) {
        std::cerr << "error: cannot parse word '" << o.word << "': " << e.what() << '\n';
        return kUsageError;
    } catch (const ConfigError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const DomainFailure &e) {
        std::cout << buffer.str() << e.what() << '\n';
        return kDomainFailure;
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomainFailure;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
}
