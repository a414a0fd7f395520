// Command-line front end: run the catalog demos, synthesize circuits from
// JSON specs, verify circuits against target matrices, and print gate-cost
// reports. Exit codes: 0 success, 1 synthesis/verification failure,
// 2 usage or parse errors.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qlcu/catalog.hpp"
#include "qlcu/circulant.hpp"
#include "qlcu/group.hpp"
#include "qlcu/simulator.hpp"
#include "qlcu/synthesizer.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::uint64_t env_seed() {
    if (const char* env = std::getenv("QLCU_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 0;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

void print_bundle(const qlcu::DemoBundle& bundle, bool as_json) {
    if (as_json) {
        std::cout << qlcu::bundle_report(bundle).dump(2) << "\n";
        return;
    }
    for (const auto& c : bundle.checks) {
        std::printf("  [%s] %-26s residual %-24s tol %s\n", c.pass ? "PASS" : "FAIL",
                    c.name.c_str(), num(c.residual).c_str(), num(c.tol).c_str());
    }
    std::printf("%s: %s\n", bundle.name.c_str(), bundle.all_pass() ? "PASS" : "FAIL");
}

qlcu::ComplexMatrix random_prep_unitary(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const double theta = uni(rng) * std::numbers::pi / 2.0;
    const double p1 = uni(rng) * 2.0 * std::numbers::pi;
    const double p2 = uni(rng) * 2.0 * std::numbers::pi;
    const qlcu::cplx a = std::cos(theta) * qlcu::cplx{std::cos(p1), std::sin(p1)};
    const qlcu::cplx b = std::sin(theta) * qlcu::cplx{std::cos(p2), std::sin(p2)};
    return qlcu::ComplexMatrix(2, 2, {a, std::conj(b), b, -std::conj(a)});
}

int run_demo(const std::string& name, std::size_t qubits, double theta, double tol,
             bool as_json, const std::string& out_path) {
    using namespace qlcu;
    if (name == "hartley" || name == "fractional") {
        if (qubits < 2 || qubits > 5) {
            std::cerr << "demo " << name << ": --qubits " << qubits
                      << " exceeds the supported size (2..5 data qubits; the simulator caps at "
                      << kMaxSimQubits << " qubits total)\n";
            return kExitUsage;
        }
        const DemoBundle bundle =
            name == "hartley" ? hartley_demo(qubits) : fractional_demo(qubits, theta);
        print_bundle(bundle, as_json);
        if (!out_path.empty()) write_file(out_path, serialize(bundle.circuit));
        return bundle.all_pass() ? kExitPass : kExitFailure;
    }
    if (name == "teleport") {
        std::mt19937_64 rng(env_seed() + 1);
        std::vector<ComplexMatrix> inputs{ComplexMatrix::identity(2), mat_hadamard2()};
        for (int i = 0; i < 3; ++i) inputs.push_back(random_prep_unitary(rng));
        DemoBundle worst;
        bool first = true;
        for (const auto& u : inputs) {
            DemoBundle bundle = teleportation_demo(u);
            if (first) {
                worst = bundle;
                first = false;
                continue;
            }
            for (std::size_t i = 0; i < bundle.checks.size(); ++i) {
                if (bundle.checks[i].residual > worst.checks[i].residual) {
                    worst.checks[i] = bundle.checks[i];
                }
            }
        }
        worst.name = "teleport";
        print_bundle(worst, as_json);
        if (!out_path.empty()) write_file(out_path, serialize(worst.circuit));
        return worst.all_pass() ? kExitPass : kExitFailure;
    }
    if (name == "kitaev") {
        const std::size_t k = qubits;
        if (k == 0 || k > 8) {
            std::cerr << "demo kitaev: --qubits " << k << " exceeds the supported size (k in 1..8)\n";
            return kExitUsage;
        }
        std::mt19937_64 rng(env_seed() + 2);
        std::uniform_real_distribution<double> uni(0.0, 2.0 * std::numbers::pi);
        double worst = 0.0;
        for (int trial = 0; trial < 50; ++trial) {
            ComplexVector phases(std::size_t{1} << k);
            for (auto& p : phases) {
                const double t = uni(rng);
                p = cplx{std::cos(t), std::sin(t)};
            }
            const auto [lhs, rhs] = kitaev_circulant_identity(k, phases);
            worst = std::max(worst, max_abs_diff(lhs, rhs));
        }
        const bool pass = worst <= tol;
        if (as_json) {
            std::cout << nlohmann::json{{"name", "kitaev"},
                                        {"k", k},
                                        {"trials", 50},
                                        {"max_deviation", worst},
                                        {"tol", tol},
                                        {"pass", pass}}
                             .dump(2)
                      << "\n";
        } else {
            std::printf("  [%s] diagonalization_identity  max deviation %-14s tol %s\n",
                        pass ? "PASS" : "FAIL", num(worst).c_str(), num(tol).c_str());
            std::printf("kitaev (k=%zu, 50 trials): %s\n", k, pass ? "PASS" : "FAIL");
        }
        if (!out_path.empty()) {
            std::cerr << "demo kitaev: no circuit output\n";
            return kExitUsage;
        }
        return pass ? kExitPass : kExitFailure;
    }
    std::cerr << "unknown demo '" << name << "' (choose hartley|fractional|teleport|kitaev)\n";
    return kExitUsage;
}

int run_synth(const std::string& spec_path, const std::string& out_path, double tol,
              bool as_json) {
    using namespace qlcu;
    nlohmann::json spec;
    Representation rep;
    std::string mode;
    try {
        spec = nlohmann::json::parse(read_file(spec_path));
        mode = spec.value("mode", std::string("ordinary"));
        if (mode != "ordinary" && mode != "projective") {
            throw std::invalid_argument("mode must be \"ordinary\" or \"projective\"");
        }
        rep = representation_from_json(spec.at("representation"));
    } catch (const std::exception& e) {
        std::cerr << "synth: cannot read spec: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        ComplexVector alpha;
        if (spec.contains("coefficients")) {
            alpha = coefficients_from_json(spec.at("coefficients"));
            if (alpha.size() != rep.group.order()) {
                std::cerr << "synth: spec lists " << alpha.size() << " coefficients for a group of order "
                          << rep.group.order() << "\n";
                return kExitUsage;
            }
        } else if (spec.contains("target")) {
            const ComplexMatrix target = matrix_from_json(spec.at("target"));
            alpha = solve_coefficients(target, rep, tol).alpha;
        } else {
            std::cerr << "synth: spec needs \"coefficients\" or \"target\"\n";
            return kExitUsage;
        }

        Circuit circuit =
            mode == "ordinary"
                ? lcu_circuit(rep, CoefficientVector{rep.group, alpha}, tol)
                : projective_lcu_circuit(rep.group, rep.images, alpha, tol, rep.labels);

        if (spec.contains("prefix")) {
            Circuit prefix;
            prefix.num_data_qubits = circuit.num_data_qubits;
            prefix.num_ancilla_qubits = circuit.num_ancilla_qubits;
            for (const auto& jb : spec.at("prefix")) {
                prefix.append(Gate::block(0, matrix_from_json(jb.at("matrix")),
                                          jb.at("label").get<std::string>()));
            }
            circuit = compose(prefix, circuit);
        }

        const std::string text = serialize(circuit);
        if (!out_path.empty()) {
            write_file(out_path, text);
            if (as_json) {
                std::cout << nlohmann::json{{"out", out_path},
                                            {"gates", circuit.gates.size()},
                                            {"data_qubits", circuit.num_data_qubits},
                                            {"ancilla_qubits", circuit.num_ancilla_qubits}}
                                 .dump(2)
                          << "\n";
            } else {
                std::printf("wrote %s (%zu gates, %zu data + %zu ancilla qubits)\n",
                            out_path.c_str(), circuit.gates.size(), circuit.num_data_qubits,
                            circuit.num_ancilla_qubits);
            }
        } else {
            std::cout << text << "\n";
        }
        return kExitPass;
    } catch (const NotInSpanError& e) {
        std::cerr << "synth: NotInSpanError: " << e.what() << "\n";
        return kExitFailure;
    } catch (const NonUnitaryCirculantError& e) {
        std::cerr << "synth: NonUnitaryCirculantError: " << e.what() << "\n";
        return kExitFailure;
    } catch (const NonUnitaryTargetError& e) {
        std::cerr << "synth: NonUnitaryTargetError: " << e.what() << "\n";
        return kExitFailure;
    } catch (const PhaseRecoveryError& e) {
        std::cerr << "synth: PhaseRecoveryError: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "synth: " << e.what() << "\n";
        return kExitFailure;
    }
}

int run_verify(const std::string& circuit_path, const std::string& target_path, double tol,
               bool as_json) {
    using namespace qlcu;
    Circuit circuit;
    ComplexMatrix target;
    try {
        circuit = parse_circuit(read_file(circuit_path));
        target = matrix_from_json(nlohmann::json::parse(read_file(target_path)));
    } catch (const std::exception& e) {
        std::cerr << "verify: cannot read inputs: " << e.what() << "\n";
        return kExitUsage;
    }
    try {
        const VerificationReport report = verify_realizes(circuit, target, tol);
        if (as_json) {
            std::cout << verification_to_json(report).dump(2) << "\n";
        } else {
            std::printf("max deviation %s\nmax leakage   %s\ntol           %s\nresult        %s\n",
                        num(report.max_deviation).c_str(), num(report.max_leakage).c_str(),
                        num(report.tol).c_str(), report.pass ? "PASS" : "FAIL");
        }
        return report.pass ? kExitPass : kExitFailure;
    } catch (const std::exception& e) {
        // dimension mismatch or size cap
        std::cerr << "verify: " << e.what() << "\n";
        return kExitUsage;
    }
}

int run_report(const std::string& circuit_path, const std::string& costs_path, bool as_json) {
    using namespace qlcu;
    Circuit circuit;
    std::map<std::string, long long> costs;
    try {
        circuit = parse_circuit(read_file(circuit_path));
        if (!costs_path.empty()) {
            const nlohmann::json jc = nlohmann::json::parse(read_file(costs_path));
            for (auto it = jc.begin(); it != jc.end(); ++it) {
                costs[it.key()] = it.value().get<long long>();
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "report: cannot read inputs: " << e.what() << "\n";
        return kExitUsage;
    }
    try {
        const CostReport report = cost_report(circuit, costs);
        if (as_json) {
            nlohmann::json per_gate = nlohmann::json::array();
            for (const auto& item : report.per_gate) {
                per_gate.push_back({{"gate", item.description}, {"bound", item.bound}});
            }
            std::cout << nlohmann::json{{"elementary_count_upper_bound",
                                         report.elementary_count_upper_bound},
                                        {"per_gate", per_gate},
                                        {"assumptions", report.assumptions}}
                             .dump(2)
                      << "\n";
        } else {
            for (const auto& item : report.per_gate) {
                std::printf("  %-44s <= %lld\n", item.description.c_str(), item.bound);
            }
            std::printf("elementary gate bound: %lld\n", report.elementary_count_upper_bound);
            for (const auto& a : report.assumptions) std::printf("note: %s\n", a.c_str());
        }
        return kExitPass;
    } catch (const MissingCostError& e) {
        std::cerr << "report: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"group-circulant linear-combination circuit toolkit"};
    app.require_subcommand(1);

    std::string demo_name;
    std::size_t qubits = 3;
    double theta = 0.3;
    double tol = 1e-9;
    bool as_json = false;
    std::string out_path;

    auto* demo = app.add_subcommand("demo", "run a catalog demo and report its checks");
    demo->add_option("name", demo_name, "hartley|fractional|teleport|kitaev")->required();
    demo->add_option("--qubits", qubits, "data qubits (or k for the kitaev demo)");
    demo->add_option("--theta", theta, "fractional Fourier parameter");
    demo->add_option("--tol", tol, "check tolerance");
    demo->add_flag("--json", as_json, "machine-readable output");
    demo->add_option("--out", out_path, "write the demo circuit JSON here");

    std::string spec_path;
    auto* synth = app.add_subcommand("synth", "synthesize a circuit from a JSON spec");
    synth->add_option("spec", spec_path, "synthesis spec JSON")->required();
    synth->add_option("--out", out_path, "output circuit path (stdout when omitted)");
    synth->add_option("--tol", tol, "solver/precondition tolerance");
    synth->add_flag("--json", as_json, "machine-readable output");

    std::string circuit_path, target_path, costs_path;
    auto* verify = app.add_subcommand("verify", "check a circuit realizes a target matrix");
    verify->add_option("circuit", circuit_path, "circuit JSON")->required();
    verify->add_option("target", target_path, "target matrix JSON")->required();
    verify->add_option("--tol", tol, "acceptance tolerance");
    verify->add_flag("--json", as_json, "machine-readable output");

    auto* report = app.add_subcommand("report", "print the elementary-gate cost bound");
    report->add_option("circuit", circuit_path, "circuit JSON")->required();
    report->add_option("--costs", costs_path, "JSON map from block label to gate cost");
    report->add_flag("--json", as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (demo->parsed()) return run_demo(demo_name, qubits, theta, tol, as_json, out_path);
        if (synth->parsed()) return run_synth(spec_path, out_path, tol, as_json);
        if (verify->parsed()) return run_verify(circuit_path, target_path, tol, as_json);
        if (report->parsed()) return run_report(circuit_path, costs_path, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
