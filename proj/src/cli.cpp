/*
   Copyright 2026 The z4ucyclic authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "z4u/cli.hpp"

#include <fstream>

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "z4u/duality.hpp"
#include "z4u/errors.hpp"
#include "z4u/graymap.hpp"
#include "z4u/specformat.hpp"

namespace z4u {

namespace {

struct CommonOpts {
    std::string out_path;
    std::string format = "json";
    std::uint64_t budget = 1ull << 22;
    int threads = 0;
    bool paper_order = false;  // factor labels already follow the reference
                               // table order; accepted for compatibility
    bool count_only = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--out", opts.out_path, "write results to this path");
    cmd->add_option("--format", opts.format, "output format (json|csv)")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--budget", opts.budget, "enumeration budget (elements)");
    cmd->add_option("--threads", opts.threads, "worker threads (0 = library default)");
    cmd->add_flag("--paper-order", opts.paper_order, "label factors in reference-table order");
}

void apply_threads(const CommonOpts& opts) {
#ifdef _OPENMP
    if (opts.threads > 0) omp_set_num_threads(opts.threads);
#else
    (void)opts;
#endif
}

void write_artifact(const CommonOpts& opts, const nlohmann::json& as_json,
                    const std::string& as_csv) {
    if (opts.out_path.empty()) return;
    std::ofstream f(opts.out_path);
    if (!f) throw bad_input("cannot open output path " + opts.out_path);
    if (opts.format == "json")
        f << as_json.dump(2) << "\n";
    else
        f << as_csv;
}

std::string csv_escape(const std::string& s) {
    std::string out = s;
    for (auto& c : out)
        if (c == ',') c = ';';
    return out;
}

int checked_odd_n(int n) {
    if (n < 1 || n % 2 == 0) throw bad_input("length n must be a positive odd integer");
    return n;
}

int checked_k(int k) {
    if (k < 2) throw bad_input("chain length k must be at least 2");
    return k;
}

void cmd_factor(int n, const CommonOpts& opts, std::ostream& out) {
    auto sys = FactorSystem::build(checked_odd_n(n));
    out << "x^" << n << "-1 factors into r=" << sys->r() << " basic irreducibles, lambda="
        << sys->lambda() << ", epsilon=" << sys->epsilon() << "\n";
    for (int j = 0; j < sys->r(); ++j) {
        const auto& fi = sys->factor(j);
        out << "f_" << j + 1 << " = " << fi.f.to_string() << "  (mod 2: " << fi.fbar.to_string()
            << ", d=" << fi.d << ", sigma=" << sys->sigma(j) + 1 << ", delta=" << fi.delta << ")\n";
        out << "e_" << j + 1 << " = " << fi.e.to_string() << "\n";
    }
    std::string csv = "j,f,f_mod2,d,sigma,delta,e\n";
    for (int j = 0; j < sys->r(); ++j) {
        const auto& fi = sys->factor(j);
        csv += std::to_string(j + 1) + "," + csv_escape(fi.f.to_string()) + "," +
               csv_escape(fi.fbar.to_string()) + "," + std::to_string(fi.d) + "," +
               std::to_string(sys->sigma(j) + 1) + "," + std::to_string(fi.delta) + "," +
               csv_escape(fi.e.to_string()) + "\n";
    }
    write_artifact(opts, factor_system_to_json(*sys), csv);
}

void cmd_count(int n, int k, const CommonOpts& opts, std::ostream& out) {
    auto sys = FactorSystem::build(checked_odd_n(n));
    checked_k(k);
    nlohmann::json per = nlohmann::json::array();
    std::string csv = "j,d,ideals\n";
    for (int j = 0; j < sys->r(); ++j) {
        const auto& fi = sys->factor(j);
        auto c = count_formulas(fi.d, k);
        out << "factor " << j + 1 << " (d=" << fi.d << "): " << c.total << " ideals\n";
        per.push_back({{"j", j + 1}, {"d", fi.d}, {"ideals", c.total}});
        csv += std::to_string(j + 1) + "," + std::to_string(fi.d) + "," + std::to_string(c.total) + "\n";
    }
    BigUint total = count_cyclic_codes(*sys, k);
    out << total.to_string() << "\n";
    write_artifact(opts, {{"n", n}, {"k", k}, {"per_factor", per}, {"codes", total.to_string()}},
                   csv + "total," + total.to_string() + "\n");
}

void cmd_ideals(int d, int k, const CommonOpts& opts, std::ostream& out) {
    if (d < 1) throw bad_input("field degree d must be positive");
    checked_k(k);
    FieldPtr field = canonical_field(d);
    nlohmann::json arr = nlohmann::json::array();
    std::string csv = "case,i,s,t,ideal,log2_size\n";
    std::uint64_t count = 0;
    for_each_ideal_spec(field, k, [&](const IdealSpec& spec) {
        ++count;
        out << "case " << to_string(spec.kase()) << "  " << spec.to_string() << "  |C|=2^"
            << spec.log2_cardinality() << "\n";
        if (!opts.out_path.empty()) {
            arr.push_back(spec_to_json(spec));
            csv += to_string(spec.kase()) + "," + std::to_string(spec.i()) + "," +
                   std::to_string(spec.s()) + "," + std::to_string(spec.t()) + "," +
                   csv_escape(spec.to_string()) + "," + std::to_string(spec.log2_cardinality()) + "\n";
        }
    });
    auto formulas = count_formulas(d, k);
    if (count != formulas.total) throw internal_error("enumeration disagrees with count formula");
    out << count << " ideals\n";
    write_artifact(opts, arr, csv);
}

void cmd_dual(int n, int k, const std::string& specs_text, const CommonOpts& opts,
              std::ostream& out) {
    auto sys = FactorSystem::build(checked_odd_n(n));
    checked_k(k);
    CyclicCode code = assemble_code(sys, k, parse_spec_list(specs_text, *sys, k));
    CyclicCode dual = dual_code(code);
    std::string csv = "j,ideal\n";
    for (int j = 0; j < sys->r(); ++j) {
        if (j) out << ";";
        out << dual.specs[j].to_string();
        csv += std::to_string(j + 1) + "," + csv_escape(dual.specs[j].to_string()) + "\n";
    }
    out << "\n";
    write_artifact(opts, code_to_json(dual), csv);
}

void cmd_selfdual(int n, int k, const CommonOpts& opts, std::ostream& out) {
    auto sys = FactorSystem::build(checked_odd_n(n));
    checked_k(k);
    SelfDualStream stream(sys, k);
    if (opts.count_only) {
        out << stream.total().to_string() << "\n";
        write_artifact(opts, {{"n", n}, {"k", k}, {"self_dual_codes", stream.total().to_string()}},
                       "self_dual_codes," + stream.total().to_string() + "\n");
        return;
    }
    nlohmann::json arr = nlohmann::json::array();
    std::string csv = "index,ideals\n";
    std::uint64_t count = 0;
    while (auto code = stream.next()) {
        ++count;
        out << count << ": ";
        std::string joined;
        for (int j = 0; j < sys->r(); ++j) {
            if (j) joined += ";";
            joined += code->specs[j].to_string();
        }
        out << joined << "\n";
        if (!opts.out_path.empty()) {
            arr.push_back(code_to_json(*code));
            csv += std::to_string(count) + "," + csv_escape(joined) + "\n";
        }
    }
    out << count << " self-dual codes\n";
    write_artifact(opts, arr, csv);
}

void report_parameters(const CyclicCode& code, const QCParameters& p, std::ostream& out) {
    out << "[" << p.length << ", " << p.log2_size << ", ";
    if (p.min_distance)
        out << *p.min_distance;
    else
        out << "empty";
    out << "]\n";
    (void)code;
}

void cmd_gray(int n, const std::string& specs_text, const CommonOpts& opts, std::ostream& out) {
    auto sys = FactorSystem::build(checked_odd_n(n));
    CyclicCode code = assemble_code(sys, 4, parse_spec_list(specs_text, *sys, 4));
    SpanningMatrix sm = code_spanning_matrix(code);
    Z4Matrix G = qc_generator_matrix(sm.g0, sm.g1, sm.g2, sm.g3);
    QCParameters p = qc_parameters(code, opts.budget);
    report_parameters(code, p, out);
    nlohmann::json meta = {{"length", p.length},
                           {"log2_size", p.log2_size},
                           {"min_lee_distance", p.min_distance ? nlohmann::json(*p.min_distance)
                                                               : nlohmann::json(nullptr)},
                           {"generator_matrix", matrix_to_json(G)}};
    write_artifact(opts, meta, matrix_to_csv(G));
}

void cmd_distance(int n, const std::string& specs_text, const CommonOpts& opts, std::ostream& out) {
    auto sys = FactorSystem::build(checked_odd_n(n));
    CyclicCode code = assemble_code(sys, 4, parse_spec_list(specs_text, *sys, 4));
    QCParameters p = qc_parameters(code, opts.budget);
    report_parameters(code, p, out);
    nlohmann::json meta = {{"length", p.length},
                           {"log2_size", p.log2_size},
                           {"min_lee_distance", p.min_distance ? nlohmann::json(*p.min_distance)
                                                               : nlohmann::json(nullptr)}};
    std::string csv = "length,log2_size,min_lee_distance\n" + std::to_string(p.length) + "," +
                      std::to_string(p.log2_size) + "," +
                      (p.min_distance ? std::to_string(*p.min_distance) : "empty") + "\n";
    write_artifact(opts, meta, csv);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"cyclic codes over Z4[u]/<u^k> of odd length"};
    app.require_subcommand(1);

    CommonOpts opts;
    int n = 0, k = 0, d = 0;
    std::string specs_text;

    auto* factor = app.add_subcommand("factor", "factor x^n-1 and print the CRT data");
    factor->add_option("n", n, "odd length")->required();
    add_common(factor, opts);

    auto* count = app.add_subcommand("count", "count cyclic codes of length n");
    count->add_option("n", n, "odd length")->required();
    count->add_option("k", k, "chain length")->required();
    add_common(count, opts);

    auto* ideals = app.add_subcommand("ideals", "list the ideals of K[u]/<u^k> for degree d");
    ideals->add_option("d", d, "residue field degree")->required();
    ideals->add_option("k", k, "chain length")->required();
    add_common(ideals, opts);

    auto* dual = app.add_subcommand("dual", "dual code of the given ideal tuple");
    dual->add_option("n", n, "odd length")->required();
    dual->add_option("k", k, "chain length")->required();
    dual->add_option("--specs", specs_text, "semicolon-separated ideal terms")->required();
    add_common(dual, opts);

    auto* selfdual = app.add_subcommand("selfdual", "census of self-dual codes");
    selfdual->add_option("n", n, "odd length")->required();
    selfdual->add_option("k", k, "chain length")->required();
    selfdual->add_flag("--count-only", opts.count_only, "print the count only");
    add_common(selfdual, opts);

    auto* gray = app.add_subcommand("gray", "generator matrix and parameters of the mapped code (k=4)");
    gray->add_option("n", n, "odd length")->required();
    gray->add_option("--specs", specs_text, "semicolon-separated ideal terms")->required();
    add_common(gray, opts);

    auto* distance = app.add_subcommand("distance", "parameters [4n, log2|C|, d] of the mapped code (k=4)");
    distance->add_option("n", n, "odd length")->required();
    distance->add_option("--specs", specs_text, "semicolon-separated ideal terms")->required();
    add_common(distance, opts);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        apply_threads(opts);
        if (factor->parsed()) cmd_factor(n, opts, out);
        if (count->parsed()) cmd_count(n, k, opts, out);
        if (ideals->parsed()) cmd_ideals(d, k, opts, out);
        if (dual->parsed()) cmd_dual(n, k, specs_text, opts, out);
        if (selfdual->parsed()) cmd_selfdual(n, k, opts, out);
        if (gray->parsed()) cmd_gray(n, specs_text, opts, out);
        if (distance->parsed()) cmd_distance(n, specs_text, opts, out);
        return 0;
    } catch (const bad_input& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const budget_exceeded& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace z4u
