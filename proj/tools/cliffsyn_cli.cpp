// Copyright 2021 Google LLC
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


#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "cliffsyn/codiag.hpp"
#include "cliffsyn/error.hpp"
#include "cliffsyn/io.hpp"
#include "cliffsyn/synth.hpp"

using namespace cliffsyn;
using nlohmann::json;

namespace {

std::string read_input(const std::string &path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw CliffError(ErrorCode::ParseError, "cannot read " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw CliffError(ErrorCode::BadConfig, "cannot write " + path);
    out << text;
}

/// Appends one JSON line to `path`, or to stderr when it is empty.
void write_report(const std::string &path, const json &line) {
    if (path.empty()) {
        std::cerr << line.dump() << "\n";
        return;
    }
    std::ofstream out(path, std::ios::app);
    if (!out) throw CliffError(ErrorCode::BadConfig, "cannot write " + path);
    out << line.dump() << "\n";
}

std::string emit(const Circuit &c, const std::string &format) {
    return format == "native" ? emit_native(c) : emit_qasm(c);
}

Circuit parse_circuit(const std::string &text, const std::string &format, size_t k) {
    return format == "native" ? parse_native(text) : parse_qasm(text, k);
}

void check_layout(Algorithm algo, const std::string &layout) {
    if (layout == "lnn" && algo != Algorithm::Lnn) {
        throw CliffError(ErrorCode::BadConfig, "layout lnn needs --algo lnn");
    }
}

struct Common {
    uint64_t seed = 0;
    size_t restarts = 1;
    size_t isd_iters = 100;
    std::string format = "qasm";
    std::string output;
    std::string report;
};

void add_common(CLI::App *app, Common &c) {
    app->add_option("--seed", c.seed, "Seed for every randomized step")->envname("CLIFFSYN_SEED");
    app->add_option("--restarts", c.restarts, "Independent trials; the best is kept");
    app->add_option("--isd-iters", c.isd_iters, "Information-set restarts per decoding");
    app->add_option("--format", c.format, "Circuit format")->check(CLI::IsMember({"qasm", "native"}));
    app->add_option("-o,--output", c.output, "Output file (default stdout)");
    app->add_option("--report", c.report, "JSON-lines report file to append to (default stderr)");
}

SynthOptions options_of(const Common &c) { return {c.isd_iters, c.seed, c.restarts}; }

int run_synth(const std::string &input, const std::string &algo_name, const std::string &layout, const Common &c) {
    Algorithm algo = parse_algorithm(algo_name);
    check_layout(algo, layout);
    IsometryTableau t = IsometryTableau::from_text(read_input(input));
    Circuit circ = synthesize(t, algo, options_of(c));
    bool verified = equivalent(replay_tableau(circ), t);
    if (!verified) throw CliffError(ErrorCode::VerificationFailed, "replay differs from the input tableau");
    write_output(c.output, emit(circ, c.format));
    CircuitMetrics m = circ.metrics();
    write_report(c.report, {{"algo", algorithm_name(algo)},
                            {"n", circ.n},
                            {"k", circ.k},
                            {"two_qubit_count", m.two_qubit_count},
                            {"two_qubit_depth", m.two_qubit_depth},
                            {"lnn_valid", m.lnn_valid},
                            {"verified", verified},
                            {"seed", c.seed},
                            {"restarts", c.restarts}});
    return 0;
}

int run_verify(const std::string &tableau, const std::string &circuit, const Common &c) {
    IsometryTableau t = IsometryTableau::from_text(read_input(tableau));
    Circuit circ = parse_circuit(read_input(circuit), c.format, t.k());
    circ.k = t.k();
    if (circ.n != t.n()) throw CliffError(ErrorCode::DimMismatch, "circuit and tableau widths differ");
    bool exact = equivalent(replay_tableau(circ), t);
    CircuitMetrics m = circ.metrics();
    write_report(c.report, {{"n", circ.n},
                            {"k", circ.k},
                            {"two_qubit_count", m.two_qubit_count},
                            {"two_qubit_depth", m.two_qubit_depth},
                            {"lnn_valid", m.lnn_valid},
                            {"verified", exact}});
    if (!exact) throw CliffError(ErrorCode::VerificationFailed, "circuit does not implement the tableau");
    return 0;
}

int run_codiag(const std::string &input, const std::string &variant_s, const std::string &table, const Common &c) {
    CodiagVariant variant = parse_variant(variant_s);
    std::vector<PauliOp> ps = parse_pauli_list(read_input(input));
    if (ps.empty()) throw CliffError(ErrorCode::ParseError, "no Pauli operators in " + input);
    CodiagResult r = codiagonalize(PauliTableau::from_paulis(ps), variant, c.restarts, c.isd_iters, c.seed);
    write_output(c.output, emit(r.circuit, c.format));
    json words = json::array();
    std::ostringstream sidecar;
    for (size_t j = 0; j < ps.size(); j++) {
        words.push_back(r.z_words[j].to_string());
        sidecar << ps[j].to_string() << " -> " << r.z_words[j].to_string() << "\n";
    }
    if (!table.empty()) write_output(table, sidecar.str());
    CircuitMetrics m = r.circuit.metrics();
    write_report(c.report, {{"algo", r.report.algorithm},
                            {"n", r.circuit.n},
                            {"k", ps.size()},
                            {"two_qubit_count", m.two_qubit_count},
                            {"two_qubit_depth", m.two_qubit_depth},
                            {"lnn_valid", m.lnn_valid},
                            {"verified", true},
                            {"z_words", words}});
    return 0;
}

std::vector<size_t> parse_sizes(const std::string &s) {
    std::vector<size_t> parts;
    std::stringstream ss(s);
    std::string item;
    try {
        while (std::getline(ss, item, ':')) parts.push_back(std::stoul(item));
    } catch (const std::exception &) {
        throw CliffError(ErrorCode::BadConfig, "bad --sizes '" + s + "'");
    }
    if (parts.size() == 1) parts = {parts[0], parts[0], 1};
    if (parts.size() == 2) parts.push_back(1);
    if (parts.size() != 3 || parts[2] == 0 || parts[0] > parts[1]) {
        throw CliffError(ErrorCode::BadConfig, "--sizes wants start:stop:step");
    }
    std::vector<size_t> out;
    for (size_t n = parts[0]; n <= parts[1]; n += parts[2]) out.push_back(n);
    return out;
}

size_t bench_k(const std::string &arg, size_t n) {
    if (arg == "n") return n;
    if (arg == "n/2") return n / 2;
    try {
        size_t k = std::stoul(arg);
        return std::min(k, n);
    } catch (const std::exception &) {
        throw CliffError(ErrorCode::BadConfig, "bad --k '" + arg + "'");
    }
}

int run_bench(const std::string &sizes, const std::string &algos_s, const std::string &k_spec, size_t count,
              size_t jobs, const Common &c) {
    std::vector<Algorithm> algos;
    std::stringstream ss(algos_s);
    std::string item;
    while (std::getline(ss, item, ',')) algos.push_back(parse_algorithm(item));
    if (algos.empty()) throw CliffError(ErrorCode::BadConfig, "no algorithms");

    struct Job {
        Algorithm algo;
        size_t n, k;
        uint64_t seed;
        CircuitMetrics m;
        bool ok = false;
        std::string error;
    };
    std::vector<Job> work;
    for (size_t n : parse_sizes(sizes)) {
        size_t k = bench_k(k_spec, n);
        for (Algorithm a : algos) {
            for (size_t i = 0; i < count; i++) work.push_back({a, n, k, c.seed + i, {}, false, {}});
        }
    }
    // Each worker takes every jobs-th instance; results land in their own slots.
    jobs = std::max<size_t>(1, std::min(jobs, work.size()));
    std::vector<std::thread> pool;
    for (size_t w = 0; w < jobs; w++) {
        pool.emplace_back([&, w] {
            for (size_t i = w; i < work.size(); i += jobs) {
                Job &j = work[i];
                try {
                    IsometryTableau t = random_clifford(j.n, j.k, j.seed);
                    SynthOptions opt{c.isd_iters, j.seed, c.restarts};
                    j.m = synthesize(t, j.algo, opt).metrics();
                    j.ok = true;
                } catch (const CliffError &e) {
                    j.error = e.what();
                }
            }
        });
    }
    for (auto &t : pool) t.join();

    std::ostringstream csv;
    csv << "algo,n,k,samples,mean_two_qubit_count,mean_two_qubit_depth,all_lnn_valid\n";
    for (size_t i = 0; i < work.size(); i += count) {
        double cnt = 0, dep = 0;
        bool lnn = true;
        for (size_t j = i; j < i + count; j++) {
            if (!work[j].ok) throw CliffError(ErrorCode::BadConfig, work[j].error);
            cnt += static_cast<double>(work[j].m.two_qubit_count);
            dep += static_cast<double>(work[j].m.two_qubit_depth);
            lnn = lnn && work[j].m.lnn_valid;
        }
        csv << algorithm_name(work[i].algo) << "," << work[i].n << "," << work[i].k << "," << count << ","
            << cnt / static_cast<double>(count) << "," << dep / static_cast<double>(count) << ","
            << (lnn ? "true" : "false") << "\n";
    }
    write_output(c.output, csv.str());
    return 0;
}

int exit_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return 2;
        case ErrorCode::BadConfig: return 3;
        case ErrorCode::VerificationFailed: return 4;
        default: return 1;
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Clifford isometry and Pauli codiagonalization compiler"};
    app.require_subcommand(1);

    Common synth_c, verify_c, codiag_c, bench_c;
    std::string synth_in, algo = "nf-cz", layout = "all";
    CLI::App *synth = app.add_subcommand("synth", "Compile a tableau file into a circuit");
    synth->add_option("input", synth_in, "Tableau file ('-' for stdin)")->required();
    synth->add_option("--algo", algo, "nf-cz, nf-cnot, nf-alt1, nf-alt2, syndrome, greedy-depth or lnn");
    synth->add_option("--layout", layout, "Connectivity")->check(CLI::IsMember({"all", "lnn"}));
    add_common(synth, synth_c);

    std::string verify_tab, verify_circ;
    CLI::App *verify = app.add_subcommand("verify", "Check a circuit against a tableau");
    verify->add_option("tableau", verify_tab, "Tableau file")->required();
    verify->add_option("circuit", verify_circ, "Circuit file")->required();
    add_common(verify, verify_c);

    std::string codiag_in, variant = "syndrome", table;
    CLI::App *codiag = app.add_subcommand("codiag", "Map a commuting Pauli list to Z-words");
    codiag->add_option("input", codiag_in, "Pauli-list file ('-' for stdin)")->required();
    codiag->add_option("--variant", variant, "syndrome or matching");
    codiag->add_option("--table", table, "Write 'pauli -> z_word' lines here");
    add_common(codiag, codiag_c);
    codiag_c.restarts = 10;

    std::string sizes = "4:20:4", algos = "syndrome,greedy-depth", k_spec = "0";
    size_t count = 40, jobs = std::max(1u, std::thread::hardware_concurrency());
    CLI::App *bench = app.add_subcommand("bench", "Metrics of seeded random tableaus as CSV");
    bench->add_option("--sizes", sizes, "start:stop:step qubit counts");
    bench->add_option("--algos", algos, "Comma-separated algorithms");
    bench->add_option("--k", k_spec, "Input count: a number, 'n' or 'n/2'");
    bench->add_option("--count", count, "Instances per size and algorithm")->check(CLI::PositiveNumber);
    bench->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    add_common(bench, bench_c);

    CLI11_PARSE(app, argc, argv);
    try {
        if (*synth) return run_synth(synth_in, algo, layout, synth_c);
        if (*verify) return run_verify(verify_tab, verify_circ, verify_c);
        if (*codiag) return run_codiag(codiag_in, variant, table, codiag_c);
        return run_bench(sizes, algos, k_spec, count, jobs, bench_c);
    } catch (const CliffError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.code());
    }
}
