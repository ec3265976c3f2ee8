// Copyright 2026 The Fraqtal Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front door: generate a dataset, analyze or validate it, and
// inspect circuits. Exit codes: 0 success, 1 findings/failures, 2 usage
// error.

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <string>

#include "fraqtal/fraqtal.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFindings = 1;
constexpr int kExitUsage = 2;

bool parse_size(const std::string& text, int& width, int& height) {
    const auto x = text.find('x');
    if (x == std::string::npos) return false;
    try {
        width = std::stoi(text.substr(0, x));
        height = std::stoi(text.substr(x + 1));
    } catch (const std::exception&) {
        return false;
    }
    return width >= 16 && height >= 16;
}

int run_generate(const fraqtal::GenerationConfig& cfg) {
    const fraqtal::GenerationResult result = fraqtal::generate_dataset(cfg);
    std::printf("wrote %zu images + %s (csv sha1 %s)\n", result.records.size(),
                result.csv_path.string().c_str(), result.csv_sha1.c_str());
    return kExitOk;
}

int run_analyze(const fraqtal::AnalyzeOptions& options) {
    const fraqtal::AnalyzeResult result = fraqtal::analyze_dataset(options);
    std::printf("analyzed %zu/%zu rows (%zu excluded)\n", result.analyzed_rows,
                result.input_rows, result.excluded_rows);
    for (const auto& cluster : result.clusters.clusters)
        std::printf("cluster %d: %zu images, fd=%.4f lacunarity=%.4f energy=%.4g\n",
                    cluster.id, cluster.count, cluster.means[0],
                    cluster.means[1], cluster.means[2]);
    for (const std::string& warning : result.warnings)
        std::printf("warning: %s\n", warning.c_str());
    std::printf("outputs in %s\n", options.output_dir.string().c_str());
    return kExitOk;
}

int run_validate(const std::string& csv, const std::string& images) {
    const fraqtal::ValidationReport report =
        fraqtal::validate_dataset(csv, images);
    if (report.ok()) {
        std::printf("ok: %s\n", csv.c_str());
        return kExitOk;
    }
    for (const std::string& finding : report.findings)
        std::printf("%s\n", finding.c_str());
    std::printf("%zu finding(s)\n", report.findings.size());
    return kExitFindings;
}

int run_circuit(std::uint64_t seed, int qubits, int depth,
                const std::string& preset, int iterations,
                std::uint64_t marked) {
    fraqtal::Circuit circuit;
    if (preset.empty()) {
        circuit = fraqtal::build_random_circuit(seed, qubits, depth);
    } else if (preset == "ghz") {
        circuit = fraqtal::preset_circuit(fraqtal::PresetFamily::GHZ, qubits);
    } else if (preset == "grover") {
        circuit = fraqtal::preset_circuit(fraqtal::PresetFamily::GroverLike,
                                          qubits, iterations, marked);
    } else if (preset == "qft") {
        circuit = fraqtal::preset_circuit(fraqtal::PresetFamily::Qft, qubits);
    } else {
        std::fprintf(stderr, "unknown preset '%s' (expected ghz|grover|qft)\n",
                     preset.c_str());
        return kExitUsage;
    }

    std::fputs(fraqtal::circuit_to_string(circuit).c_str(), stdout);

    const fraqtal::Statevector sv = fraqtal::simulate(circuit);
    std::printf("\nprobabilities:\n");
    const std::vector<double> probs = fraqtal::probabilities(sv);
    for (std::size_t i = 0; i < probs.size(); ++i)
        if (probs[i] > 1e-12)
            std::printf("  %s  %.6f\n",
                        fraqtal::basis_bitstring(i, sv.num_qubits).c_str(),
                        probs[i]);

    std::printf("\nbloch vectors:\n");
    for (int q = 0; q < sv.num_qubits; ++q) {
        const fraqtal::BlochVector b = fraqtal::bloch_vector(sv, q);
        std::printf("  q%d  (%.6f, %.6f, %.6f)\n", q, b.x, b.y, b.z);
    }

    const fraqtal::ShotHistogram hist = fraqtal::sample_shots(
        sv, fraqtal::kDefaultShots, seed ^ fraqtal::stream::kShots);
    std::printf("\nprobs_sha1 (%llu shots): %s\n",
                static_cast<unsigned long long>(fraqtal::kDefaultShots),
                fraqtal::probs_digest(hist).c_str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum-circuit-driven Julia set dataset generator and analyzer"};
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "render a seeded image dataset");
    fraqtal::GenerationConfig cfg;
    std::string size_text = "512x512";
    generate->add_option("--seed", cfg.master_seed, "master seed")->required();
    generate->add_option("--count", cfg.count, "number of images")->required();
    generate->add_option("--size", size_text, "image size WxH (default 512x512)");
    generate->add_option("--shots", cfg.shots, "measurement shots per circuit (default 2048)");
    generate->add_option("--out", cfg.output_dir, "output directory (default ./dataset)");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "extract features and cluster a dataset");
    fraqtal::AnalyzeOptions analyze_options;
    std::string analyze_out;
    analyze->add_option("--csv", analyze_options.csv_path, "metadata CSV path")->required();
    analyze->add_option("--images", analyze_options.images_dir, "image directory")->required();
    analyze->add_option("--k", analyze_options.k, "cluster count (default 3)");
    analyze->add_option("--out", analyze_out, "output directory (default: alongside CSV)");
    analyze->add_flag("--cluster-on-pca", analyze_options.cluster_on_pca,
                      "cluster on the 2 PCA scores instead of standardized features");

    // validate
    auto* validate = app.add_subcommand("validate", "check dataset integrity");
    std::string validate_csv, validate_images;
    validate->add_option("--csv", validate_csv, "metadata CSV path")->required();
    validate->add_option("--images", validate_images, "image directory")->required();

    // circuit
    auto* circuit = app.add_subcommand("circuit", "print a circuit and its statistics");
    std::uint64_t circuit_seed = 0;
    int circuit_qubits = 3;
    int circuit_depth = 2;
    std::string circuit_preset;
    int circuit_iterations = 1;
    std::uint64_t circuit_marked = 0;
    circuit->add_option("--seed", circuit_seed, "seed for the random circuit");
    circuit->add_option("--qubits", circuit_qubits, "qubit count")->required();
    circuit->add_option("--depth", circuit_depth, "layer count for random circuits");
    circuit->add_option("--preset", circuit_preset, "ghz|grover|qft instead of a random circuit");
    circuit->add_option("--iterations", circuit_iterations, "grover iterations (default 1)");
    circuit->add_option("--marked", circuit_marked, "grover marked basis state (default 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // --help exits 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (generate->parsed()) {
            if (!parse_size(size_text, cfg.width, cfg.height)) {
                std::fprintf(stderr, "bad --size '%s' (expected WxH, min 16x16)\n",
                             size_text.c_str());
                return kExitUsage;
            }
            return run_generate(cfg);
        }
        if (analyze->parsed()) {
            analyze_options.output_dir =
                analyze_out.empty() ? analyze_options.csv_path.parent_path()
                                    : std::filesystem::path(analyze_out);
            return run_analyze(analyze_options);
        }
        if (validate->parsed()) return run_validate(validate_csv, validate_images);
        if (circuit->parsed())
            return run_circuit(circuit_seed, circuit_qubits, circuit_depth,
                               circuit_preset, circuit_iterations,
                               circuit_marked);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitFindings;
    }
    return kExitUsage;
}
