// Copyright 2026 The gsc Authors
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
#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <sstream>
#include <stdexcept>

#include "gsc/circuit_io.hpp"
#include "gsc/classify.hpp"
#include "gsc/clifford.hpp"
#include "gsc/dense_engine.hpp"
#include "gsc/expansion.hpp"
#include "gsc/normal_form.hpp"
#include "gsc/pipeline.hpp"
#include "gsc/random_circuits.hpp"

namespace gsc::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    bool json_output = false;
    uint64_t seed = 1;
    int kmax = 3;
    std::string input;
    size_t random_qubits = 0;
};

json vectors_json(const std::vector<BitVector> &vs) {
    json out = json::array();
    for (const auto &v : vs) {
        out.push_back(v.to_string());
    }
    return out;
}

json matrix_json(const BitMatrix &m) {
    json out = json::array();
    for (size_t r = 0; r < m.rows(); r++) {
        out.push_back(m.row(r).to_string());
    }
    return out;
}

json rep_json(const CliffordRep &rep) {
    json rows = json::array();
    for (size_t r = 0; r < rep.c().rows(); r++) {
        rows.push_back(to_hex(rep.c().row(r).to_string()));
    }
    return {{"C", rows}, {"h", to_hex(rep.h().to_string())}};
}

json complex_json(complex z) {
    return json::array({snap(z.real()), snap(z.imag())});
}

/// Pauli letters for tau_a: 10 -> Z, 01 -> X, 11 -> Y.
std::string pauli_letters(const BitVector &a) {
    size_t n = a.size() / 2;
    std::string s;
    for (size_t k = 0; k < n; k++) {
        static const char letters[] = {'I', 'X', 'Z', 'Y'};
        s += letters[a.get(k) * 2 + a.get(n + k)];
    }
    return s;
}

DenseMatrix load_gate(const Options &opt, Rng &rng, bool clifford_only, std::string &label) {
    CircuitDescription circuit;
    if (opt.random_qubits > 0) {
        circuit = clifford_only ? random_clifford_circuit(opt.random_qubits, 20, rng)
                                : random_c3_circuit(opt.random_qubits, rng);
        label = "random(seed=" + std::to_string(opt.seed) + ")";
    } else if (!opt.input.empty()) {
        circuit = parse_circuit(read_text_file(opt.input));
        label = opt.input;
    } else {
        throw std::invalid_argument("an input file or --random N is required");
    }
    return circuit_unitary(circuit);
}

json classify_command(const Options &opt, std::ostream &text) {
    Rng rng(opt.seed);
    std::string label;
    DenseMatrix u = load_gate(opt, rng, false, label);
    ClassificationReport r = classify(u, opt.kmax);
    json out = {{"command", "classify"}, {"input", label}, {"qubits", r.num_qubits}, {"kmax", r.kmax}};
    out["hierarchy_level"] = r.hierarchy_level ? json(*r.hierarchy_level) : json(nullptr);
    if (r.semi_clifford) {
        json sc = {{"value", r.semi_clifford->value}, {"candidates_checked", r.semi_clifford->candidates_checked}};
        if (r.semi_clifford->witness) {
            sc["witness"] = {{"source", vectors_json(r.semi_clifford->witness->source.basis())},
                             {"image", vectors_json(r.semi_clifford->witness->image.basis())}};
        }
        out["semi_clifford"] = sc;
    } else {
        out["semi_clifford"] = nullptr;
    }
    if (r.generalized_semi_clifford) {
        const auto &g = *r.generalized_semi_clifford;
        json gj = {{"value", g.value}, {"pairs_checked", g.pairs_checked}};
        if (g.witness) {
            gj["witness"] = {{"source", vectors_json(g.witness->source.basis())},
                             {"image", vectors_json(g.witness->image.basis())},
                             {"permutation", g.witness->monomial.permutation}};
        }
        out["generalized_semi_clifford"] = gj;
    } else {
        out["generalized_semi_clifford"] = nullptr;
    }

    text << "input: " << label << "\n";
    text << "qubits: " << r.num_qubits << "\n";
    text << "hierarchy level: "
         << (r.hierarchy_level ? "C_" + std::to_string(*r.hierarchy_level) : "above C_" + std::to_string(r.kmax))
         << "\n";
    if (r.semi_clifford) {
        text << "semi-Clifford: " << (r.semi_clifford->value ? "yes" : "no") << "\n";
        text << "generalized semi-Clifford: " << (r.generalized_semi_clifford->value ? "yes" : "no") << "\n";
    } else {
        text << "span tests skipped (more than " << kMaxClassifyQubits << " qubits)\n";
    }
    return out;
}

json normalform_command(const Options &opt, std::ostream &text) {
    if (opt.input.empty()) {
        throw std::invalid_argument("normalform needs a bit-matrix file");
    }
    std::vector<BitMatrix> cs = parse_bit_matrices(read_text_file(opt.input));
    json out = {{"command", "normalform"}, {"input", opt.input}, {"count", cs.size()}};
    if (cs.size() == 1) {
        NormalFormResult r = involution_normal_form(cs[0]);
        out["mode"] = "involution";
        out["m"] = matrix_json(r.m);
        out["normalized"] = matrix_json(r.normalized);
        text << "M =\n" << r.m.to_string() << "M C M^-1 =\n" << r.normalized.to_string();
        return out;
    }
    CommutingNormalFormResult r = commuting_set_normal_form(cs);
    out["mode"] = "commuting_set";
    out["m"] = matrix_json(r.m);
    json normalized = json::array();
    for (const auto &d : r.normalized) {
        normalized.push_back(matrix_json(d));
    }
    out["normalized"] = normalized;
    json pairs = json::array();
    bool any = false;
    for (size_t i = 0; i < cs.size(); i++) {
        for (size_t j = i + 1; j < cs.size(); j++) {
            bool ob = simultaneous_nice_form_obstruction(cs[i], cs[j]);
            any = any || ob;
            pairs.push_back({{"pair", {i, j}}, {"obstruction", ob}});
        }
    }
    out["pairwise_obstruction"] = pairs;
    out["obstruction"] = any;
    text << "shared M =\n" << r.m.to_string();
    for (size_t i = 0; i < r.normalized.size(); i++) {
        text << "M C_" << i + 1 << " M^-1 =\n" << r.normalized[i].to_string();
    }
    text << "obstruction to a common (I E; 0 I) form: " << (any ? "yes" : "no") << "\n";
    return out;
}

json expand_command(const Options &opt, std::ostream &text) {
    Rng rng(opt.seed);
    std::string label;
    DenseMatrix u = load_gate(opt, rng, true, label);
    auto rep = extract_rep(u);
    if (!rep) {
        throw std::invalid_argument("expand needs a Clifford gate");
    }
    ExpansionResult ex = expand(*rep);
    json coeffs = json::array();
    for (const auto &[a, phase] : ex.phases) {
        coeffs.push_back({{"a", a.to_string()},
                          {"pauli", pauli_letters(a)},
                          {"log_i", phase},
                          {"value", complex_json(ex.coefficient(a))}});
    }
    json out = {{"command", "expand"},
                {"input", label},
                {"qubits", rep->num_qubits()},
                {"rep", rep_json(*rep)},
                {"alpha", alpha_vector(*rep).to_string()},
                {"a0", ex.a0.to_string()},
                {"s", ex.s},
                {"support_size", ex.support_size()},
                {"magnitude", snap(ex.magnitude)},
                {"image_basis", vectors_json(ex.image_basis)},
                {"coefficients", coeffs}};
    text << "input: " << label << "\n";
    text << "s = dim Ker(I + C): " << ex.s << "\n";
    text << "support size: " << ex.support_size() << ", |r_a| = " << snap(ex.magnitude) << "\n";
    for (const auto &[a, phase] : ex.phases) {
        complex z = ex.coefficient(a);
        text << "  " << pauli_letters(a) << "  " << snap(z.real()) << (z.imag() < 0 ? " - " : " + ")
             << std::abs(snap(z.imag())) << "i\n";
    }
    return out;
}

json certificate_json(const GscCertificate &cert) {
    json spectra = json::array();
    for (const auto &d : cert.diagonal_generators) {
        json row = json::array();
        for (size_t k = 0; k < d.dim(); k++) {
            row.push_back(complex_json(d(k, k)));
        }
        spectra.push_back(row);
    }
    return {{"conjugator", rep_json(cert.conjugator)},
            {"kernel_basis", vectors_json(cert.kernel_basis)},
            {"kernel_dim", cert.kernel_dim},
            {"a_identity_on_kernel", cert.a_identity_on_kernel},
            {"generators_diagonal", cert.generators_diagonal},
            {"pattern_rank", cert.pattern_rank},
            {"complete", cert.complete()},
            {"diagonal_spectra", spectra}};
}

json pipeline_command(const Options &opt, std::ostream &text) {
    Rng rng(opt.seed);
    std::string label;
    DenseMatrix u = load_gate(opt, rng, false, label);
    PipelineResult r = run_pipeline(u);
    const GscCertificate &cert = r.certificate;
    text << "input: " << label << "\n";
    text << "dim Ker T: " << cert.kernel_dim << "\n";
    text << "kernel basis:";
    for (const auto &k : cert.kernel_basis) {
        text << " " << k.to_string();
    }
    text << "\nA_x = I on the kernel: " << (cert.a_identity_on_kernel ? "yes" : "no") << "\n";
    text << "diagonal generators: " << cert.diagonal_generators.size() << ", independent patterns: "
         << cert.pattern_rank << "\n";
    text << "certificate: " << (cert.complete() ? "complete" : "incomplete") << "\n";
    json out = {{"command", "pipeline"}, {"input", label}, {"qubits", r.family.n}};
    out["certificate"] = certificate_json(cert);
    if (!cert.complete()) {
        throw invariant_error("certificate is incomplete");
    }
    return out;
}

json counterexample_command(std::ostream &text) {
    CounterexampleVerdict v = verify_counterexample();
    json out = {{"command", "verify-counterexample"},
                {"qubit_order", "A1 A2 A3 B1 B2 B3 R"},
                {"uv_level", v.uv_level ? json(*v.uv_level) : json(nullptr)},
                {"uv_in_c3", v.uv_in_c3},
                {"vu_in_c3", v.vu_in_c3},
                {"vu_witness", {{"pauli", "X"}, {"qubit", kGottesmanMochonControl}, {"clifford", !v.vu_witness_on_control}}}};
    if (v.uv_pipeline) {
        out["uv_certificate"] = certificate_json(v.uv_pipeline->certificate);
    }
    out["passed"] = v.passed();
    text << "UV in C_3: " << (v.uv_in_c3 ? "yes" : "no") << "\n";
    text << "VU in C_3: " << (v.vu_in_c3 ? "yes" : "no") << "\n";
    text << "VU X_R VU^dagger is Clifford: " << (v.vu_witness_on_control ? "no" : "yes") << "\n";
    if (v.uv_pipeline) {
        const auto &c = v.uv_pipeline->certificate;
        text << "UV certificate: dim Ker T = " << c.kernel_dim << ", pattern rank = " << c.pattern_rank << ", "
             << (c.complete() ? "complete" : "incomplete") << "\n";
    }
    text << "verdict: " << (v.passed() ? "PASS" : "FAIL") << "\n";
    if (!v.passed()) {
        throw invariant_error("counterexample verification failed");
    }
    return out;
}

}  // namespace

std::string to_hex(const std::string &bits) {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    for (size_t i = 0; i < bits.size(); i += 4) {
        int v = 0;
        for (size_t k = 0; k < 4; k++) {
            v = v * 2 + (i + k < bits.size() && bits[i + k] == '1');
        }
        out += digits[v];
    }
    return out;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Clifford hierarchy and generalized semi-Clifford toolkit", "gsc"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json_output, "Emit a JSON report");
    app.add_option("--seed", opt.seed, "Seed for --random inputs");
    app.add_option("--kmax", opt.kmax, "Highest hierarchy level tested")->check(CLI::Range(1, 4));

    auto add_input = [&](CLI::App *sub, const char *what) {
        sub->fallthrough();
        sub->add_option("input", opt.input, what);
    };
    auto add_random = [&](CLI::App *sub) {
        sub->add_option("--random", opt.random_qubits, "Use a random gate on N qubits instead of a file")
            ->check(CLI::Range(1, 7));
    };
    CLI::App *cls = app.add_subcommand("classify", "Hierarchy level and semi-Clifford tests for a circuit");
    add_input(cls, "Circuit file");
    add_random(cls);
    CLI::App *nf = app.add_subcommand("normalform", "Symplectic normal forms for matrices in a bit-matrix file");
    add_input(nf, "Bit-matrix file");
    CLI::App *ex = app.add_subcommand("expand", "Pauli expansion of a Clifford circuit");
    add_input(ex, "Circuit file");
    add_random(ex);
    CLI::App *pl = app.add_subcommand("pipeline", "Generalized semi-Clifford certificate for a C_3 circuit");
    add_input(pl, "Circuit file");
    add_random(pl);
    CLI::App *cx = app.add_subcommand("verify-counterexample", "Check the seven-qubit UV / VU pair");
    cx->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        std::ostringstream o;
        std::ostringstream e2;
        int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? 0 : 2;
    }

    std::ostringstream text;
    json report;
    try {
        if (cls->parsed()) {
            report = classify_command(opt, text);
        } else if (nf->parsed()) {
            report = normalform_command(opt, text);
        } else if (ex->parsed()) {
            report = expand_command(opt, text);
        } else if (pl->parsed()) {
            report = pipeline_command(opt, text);
        } else {
            report = counterexample_command(text);
        }
    } catch (const std::exception &e) {
        if (opt.json_output) {
            json fail = {{"ok", false}, {"error", e.what()}};
            if (!report.is_null()) {
                fail["report"] = report;
            }
            out << fail.dump(2) << "\n";
        } else {
            out << text.str();
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }
    if (opt.json_output) {
        report["ok"] = true;
        out << report.dump(2) << "\n";
    } else {
        out << text.str();
    }
    return 0;
}

}  // namespace gsc::cli
