// Copyright 2026 The qlogic Authors
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

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qlogic/bounds.hpp"
#include "qlogic/boxes.hpp"
#include "qlogic/errors.hpp"
#include "qlogic/format.hpp"
#include "qlogic/hilbert.hpp"
#include "qlogic/logic.hpp"
#include "qlogic/rational.hpp"

namespace {

using namespace qlogic;

constexpr double kPi = 3.14159265358979323846;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<Rational> parse_weights(const std::string& text) {
    std::vector<Rational> out;
    for (const auto& tok : split_csv(text)) {
        out.push_back(parse_rational(tok));
    }
    return out;
}

// Reports go to stdout (and --out) and must be byte-stable for fixed inputs
// and seed; anything timing-related goes to stderr only.
void emit_report(const std::vector<std::string>& lines, const std::string& out_path) {
    std::string text;
    for (const auto& l : lines) {
        text += l;
        text += '\n';
    }
    std::fwrite(text.data(), 1, text.size(), stdout);
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            throw InputError("cannot write '" + out_path + "'");
        }
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
    }
}

struct BoundsArgs {
    std::string logic = "pentagon";
    std::string events_csv;
    std::string weights_csv;
    std::string out;
};

void run_bounds(const BoundsArgs& args) {
    GreechieLogic logic;
    std::string content;
    std::string label;
    if (args.logic == "pentagon") {
        logic = pentagon_logic();
        content = serialize_logic(logic);
        label = "builtin:pentagon";
    } else {
        content = read_file(args.logic);
        logic = parse_logic(content);
        label = "file:" + args.logic;
    }

    std::vector<std::string> events;
    if (!args.events_csv.empty()) {
        events = split_csv(args.events_csv);
    } else if (args.logic == "pentagon") {
        events = {"e1", "e2", "e3", "e4", "e5"};
    } else {
        events = logic.atoms;
    }
    std::vector<Rational> weights;
    if (!args.weights_csv.empty()) {
        weights = parse_weights(args.weights_csv);
    }
    WeightedEventFamily family = make_family(logic, events, weights);
    BoundReport report = make_bound_report(family);

    std::string events_txt;
    for (size_t i = 0; i < events.size(); ++i) {
        events_txt += (i ? "," : "") + events[i];
    }
    std::vector<std::string> lines;
    lines.push_back("report: bounds");
    lines.push_back("command: bounds " + args.logic + " --events " + events_txt + " --weights " +
                    to_string(family.weights));
    lines.push_back("input: " + label);
    lines.push_back("input_digest: " + content_digest(content));
    lines.push_back("seed: none");
    lines.push_back("classical_max: " + to_string(report.classical_max));
    lines.push_back("logic_max: " + to_string(report.logic_max));
    lines.push_back("maximizer_count: " + std::to_string(report.logic_maximizers.size()));
    lines.push_back(std::string("unique_maximizer: ") +
                    (report.logic_maximizers.size() == 1 ? "true" : "false"));
    for (size_t k = 0; k < report.logic_maximizers.size(); ++k) {
        std::string row;
        for (size_t a = 0; a < logic.atoms.size(); ++a) {
            if (a) {
                row += ' ';
            }
            row += logic.atoms[a] + "=" + to_string(report.logic_maximizers[k].assignment[a]);
        }
        lines.push_back("maximizer_" + std::to_string(k + 1) + ": " + row);
    }
    if (events.size() == 5) {
        lines.push_back("kcbs_logic_min: " + to_string(kcbs_from_sum(report.logic_max)));
        lines.push_back("kcbs_classical_min: " + to_string(kcbs_from_sum(report.classical_max)));
    }
    emit_report(lines, args.out);
}

struct QuantumArgs {
    int dim = 3;
    int trials = 2000;
    std::uint64_t seed = 7;
    std::string out;
};

void run_quantum(const QuantumArgs& args) {
    double best = search_pentagon_projectors(args.dim, args.trials, args.seed);
    double umbrella =
        quantum_value(kcbs_umbrella_projectors(), cycle_adjacency(5), std::vector<double>(5, 1.0));
    WeightedEventFamily family =
        make_family(pentagon_logic(), {"e1", "e2", "e3", "e4", "e5"}, {});
    Rational lmax = logic_max(family).value;

    std::string cmd = "quantum --dim " + std::to_string(args.dim) + " --trials " +
                      std::to_string(args.trials) + " --seed " + std::to_string(args.seed);
    std::vector<std::string> lines;
    lines.push_back("report: quantum");
    lines.push_back("command: " + cmd);
    lines.push_back("input_digest: " + content_digest(cmd));
    lines.push_back("seed: " + std::to_string(args.seed));
    lines.push_back("dim: " + std::to_string(args.dim));
    lines.push_back("trials: " + std::to_string(args.trials));
    lines.push_back("best_value: " + format_float(best));
    lines.push_back("umbrella_value: " + format_float(umbrella));
    lines.push_back("logic_max: " + to_string(lmax));
    lines.push_back(std::string("below_logic_max: ") +
                    (best <= static_cast<double>(lmax) + 1e-9 ? "true" : "false"));
    lines.push_back("kcbs_best: " + format_float(kcbs_from_sum(best)));
    emit_report(lines, args.out);
}

struct InterferenceArgs {
    int dim = 3;
    int samples = 1000;
    std::uint64_t seed = 1;
    std::string out;
};

void run_interference(const InterferenceArgs& args) {
    if (args.dim < 3 || args.dim > 8) {
        throw InputError("interference dimension must lie in [3, 8]");
    }
    if (args.samples < 1) {
        throw InputError("need at least one sample");
    }
    double max_i3 = 0.0, max_t = 0.0;
    for (int k = 0; k < args.samples; ++k) {
        Rng rng(Rng::child_seed(args.seed, static_cast<std::uint64_t>(k)));
        DensityState rho = random_density(args.dim, rng);
        EventTriple triple = random_orthogonal_triple(args.dim, rng);
        Projector f = random_projector(args.dim, rng);
        max_i3 = std::max(max_i3, std::abs(sorkin_i3(rho, triple, f)));
        HermitianMatrix x = random_hermitian(args.dim, rng);
        max_t = std::max(max_t, check_t_additivity(triple.e1, triple.e2, x));
        max_t = std::max(max_t, check_t_additivity(triple.e1, triple.e3, x));
        max_t = std::max(max_t, check_t_additivity(triple.e2, triple.e3, x));
    }

    // Property reports over a seeded auxiliary corpus.
    double u_resid = 0.0, t_resid = 0.0;
    for (int j = 0; j < 3; ++j) {
        Rng rng(Rng::child_seed(args.seed, static_cast<std::uint64_t>(args.samples + j)));
        Projector e = random_projector(args.dim, rng);
        std::vector<HermitianMatrix> samples;
        std::vector<DensityState> states;
        for (int i = 0; i < 5; ++i) {
            samples.push_back(random_hermitian(args.dim, rng));
        }
        for (int i = 0; i < 3; ++i) {
            states.push_back(random_density(args.dim, rng));
        }
        u_resid = std::max(u_resid, check_u_properties(e, samples, states).max_residual());
        t_resid = std::max(t_resid, check_t_properties(e, samples, states).max_residual());
    }

    I2Witness witness = i2_witness();
    double i2 = sorkin_i2(witness.rho, witness.e1, witness.e2, witness.f);

    std::string cmd = "interference --dim " + std::to_string(args.dim) + " --samples " +
                      std::to_string(args.samples) + " --seed " + std::to_string(args.seed);
    std::vector<std::string> lines;
    lines.push_back("report: interference");
    lines.push_back("command: " + cmd);
    lines.push_back("input_digest: " + content_digest(cmd));
    lines.push_back("seed: " + std::to_string(args.seed));
    lines.push_back("dim: " + std::to_string(args.dim));
    lines.push_back("samples: " + std::to_string(args.samples));
    lines.push_back("max_abs_i3: " + format_float(max_i3));
    lines.push_back("max_t_additivity_residual: " + format_float(max_t));
    lines.push_back("u_properties_max_residual: " + format_float(u_resid));
    lines.push_back("t_properties_max_residual: " + format_float(t_resid));
    lines.push_back("i2_witness: " + witness.description);
    lines.push_back("i2_witness_value: " + format_float(i2));
    emit_report(lines, args.out);
}

struct BoxArgs {
    std::string box = "pr1";
    bool pentagon = false;
    std::string out;
};

void run_box(const BoxArgs& args) {
    NoSignalingBox box;
    std::string content;
    std::string label;
    if (args.box == "uniform") {
        box = uniform_box();
        content = serialize_box(box);
        label = "builtin:uniform";
    } else if (args.box.size() == 3 && args.box.compare(0, 2, "pr") == 0 && args.box[2] >= '1' &&
               args.box[2] <= '8') {
        box = pr_boxes()[static_cast<size_t>(args.box[2] - '1')];
        content = serialize_box(box);
        label = "builtin:" + args.box;
    } else {
        content = read_file(args.box);
        box = parse_box(content);
        label = "file:" + args.box;
    }

    NoSignalingReport ns = no_signaling_check(box);
    auto c = correlators(box);

    std::vector<std::string> lines;
    lines.push_back("report: box");
    lines.push_back("command: box " + args.box + (args.pentagon ? " --pentagon" : ""));
    lines.push_back("input: " + label);
    lines.push_back("input_digest: " + content_digest(content));
    lines.push_back("seed: none");
    lines.push_back(std::string("no_signaling: ") + (ns.ok ? "ok" : "violated"));
    for (size_t i = 0; i < ns.violations.size(); ++i) {
        lines.push_back("no_signaling_violation_" + std::to_string(i + 1) + ": " +
                        ns.violations[i]);
    }
    lines.push_back("correlators: c11=" + to_string(c[0][0]) + " c12=" + to_string(c[0][1]) +
                    " c21=" + to_string(c[1][0]) + " c22=" + to_string(c[1][1]));
    lines.push_back("chsh: " + to_string(chsh(box)));
    lines.push_back("chsh_symmetrized: " + to_string(chsh_max_over_sign_placements(box)));
    if (args.pentagon) {
        PentagonEmbedding emb = box_to_pentagon(box);
        std::string probs;
        for (size_t k = 0; k < 5; ++k) {
            if (k) {
                probs += ' ';
            }
            probs += "e" + std::to_string(k + 1) + "=" + to_string(emb.probs[k]);
        }
        lines.push_back("pentagon_probs: " + probs);
        lines.push_back("pentagon_sum: " + to_string(emb.sum));
        std::string cert;
        for (size_t k = 0; k < emb.certificate.size(); ++k) {
            const auto& w = emb.certificate[k];
            if (k) {
                cert += ' ';
            }
            cert += "e" + std::to_string(w.event_a + 1) + "-e" + std::to_string(w.event_b + 1) +
                    ":" + w.party + std::to_string(w.setting);
        }
        lines.push_back(std::string("pentagon_certificate: ") +
                        (emb.certificate_ok ? "ok " + cert : "invalid"));
    }
    emit_report(lines, args.out);
}

void run_chsh(const std::string& out) {
    Rational classical = classical_chsh_max();
    double singlet = quantum_chsh(0.0, kPi / 2.0, kPi / 4.0, -kPi / 4.0);
    Rational algebraic = chsh(pr_box());

    std::vector<std::string> lines;
    lines.push_back("report: chsh");
    lines.push_back("command: chsh");
    lines.push_back("input_digest: " + content_digest("chsh"));
    lines.push_back("seed: none");
    lines.push_back("classical_max: " + to_string(classical));
    lines.push_back("quantum_singlet: " + format_float(singlet));
    lines.push_back("quantum_angles: a1=0 a2=pi/2 b1=pi/4 b2=-pi/4");
    lines.push_back("algebraic_max: " + to_string(algebraic));
    emit_report(lines, out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite quantum logics: contextuality bounds, interference residuals, "
                 "no-signaling boxes"};
    app.require_subcommand(1);

    BoundsArgs bounds_args;
    auto* cmd_bounds = app.add_subcommand(
        "bounds", "classical and logic-level maxima of an event family over a logic");
    cmd_bounds->add_option("logic", bounds_args.logic, "logic file, or the builtin 'pentagon'");
    cmd_bounds->add_option("--events", bounds_args.events_csv,
                           "comma-separated event atoms (default: e1..e5 for the pentagon, "
                           "all atoms otherwise)");
    cmd_bounds->add_option("--weights", bounds_args.weights_csv,
                           "comma-separated rational weights (default: all 1)");
    cmd_bounds->add_option("--out", bounds_args.out, "also write the report to this file");

    QuantumArgs quantum_args;
    auto* cmd_quantum = app.add_subcommand(
        "quantum", "random search over pentagon projector realizations");
    cmd_quantum->add_option("--dim", quantum_args.dim, "Hilbert space dimension (3..6)");
    cmd_quantum->add_option("--trials", quantum_args.trials, "number of random realizations");
    cmd_quantum->add_option("--seed", quantum_args.seed, "master seed");
    cmd_quantum->add_option("--out", quantum_args.out, "also write the report to this file");

    InterferenceArgs interference_args;
    auto* cmd_interference = app.add_subcommand(
        "interference", "third-order interference and T-additivity residuals");
    cmd_interference->add_option("--dim", interference_args.dim, "Hilbert space dimension");
    cmd_interference->add_option("--samples", interference_args.samples, "corpus size");
    cmd_interference->add_option("--seed", interference_args.seed, "master seed");
    cmd_interference->add_option("--out", interference_args.out,
                                 "also write the report to this file");

    BoxArgs box_args;
    auto* cmd_box = app.add_subcommand(
        "box", "no-signaling check, CHSH score, and pentagon embedding of a box");
    cmd_box->add_option("box", box_args.box,
                        "box file, or a builtin: pr1..pr8, uniform");
    cmd_box->add_flag("--pentagon", box_args.pentagon,
                      "read the five pentagon event probabilities off the box");
    cmd_box->add_option("--out", box_args.out, "also write the report to this file");

    std::string chsh_out;
    auto* cmd_chsh = app.add_subcommand(
        "chsh", "the three CHSH tiers: deterministic, singlet, algebraic");
    cmd_chsh->add_option("--out", chsh_out, "also write the report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto start = std::chrono::steady_clock::now();
    try {
        if (app.got_subcommand(cmd_bounds)) {
            run_bounds(bounds_args);
        } else if (app.got_subcommand(cmd_quantum)) {
            run_quantum(quantum_args);
        } else if (app.got_subcommand(cmd_interference)) {
            run_interference(interference_args);
        } else if (app.got_subcommand(cmd_box)) {
            run_box(box_args);
        } else if (app.got_subcommand(cmd_chsh)) {
            run_chsh(chsh_out);
        }
    } catch (const InvariantBreach& e) {
        std::cerr << "invariant breach: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                             start);
    std::fprintf(stderr, "elapsed_ms: %.3f\n", elapsed.count());
    return 0;
}
