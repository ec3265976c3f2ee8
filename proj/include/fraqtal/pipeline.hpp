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

/**
 * @file
 * End-to-end dataset orchestration.
 *
 * Generation: seed -> circuit -> statevector -> shots -> Julia parameters
 * -> smooth field -> PNG, one metadata row per image. Per-image work is
 * pure and runs on any number of workers; rows are aggregated in index
 * order so the CSV is byte-identical across re-runs and thread counts.
 *
 * Analysis: feature extraction per image, then correlations, PCA and
 * k-means over the corpus, an enriched CSV, a summary JSON and SVG plots.
 */
#pragma once

#include <json.hpp>

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fraqtal/analytics.hpp"
#include "fraqtal/circuit.hpp"
#include "fraqtal/features.hpp"
#include "fraqtal/julia.hpp"
#include "fraqtal/metadata.hpp"
#include "fraqtal/parallel.hpp"
#include "fraqtal/param_map.hpp"
#include "fraqtal/png.hpp"
#include "fraqtal/sampling.hpp"
#include "fraqtal/sha1.hpp"
#include "fraqtal/statevector.hpp"
#include "fraqtal/svg.hpp"
#include "fraqtal/version.hpp"

namespace fraqtal {

struct GenerationConfig {
    std::uint64_t master_seed = 0;
    int count = 1;
    int width = 512;
    int height = 512;
    std::uint64_t shots = kDefaultShots;
    std::vector<int> qubit_choices = {3, 4, 5};
    std::vector<int> depth_choices = {2, 3, 4};
    std::filesystem::path output_dir = "dataset";
    int workers = 0;  // 0 = auto (FRAQTAL_THREADS, then hardware)
};

struct GenerationResult {
    std::filesystem::path csv_path;
    std::filesystem::path manifest_path;
    std::string csv_sha1;
    std::vector<MetadataRecord> records;
};

inline std::string image_filename(int index_1_based) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "quantum_julia_%04d.png", index_1_based);
    return buf;
}

/// Everything derived from one per-image seed, before rendering.
struct ImagePlan {
    std::uint64_t seed = 0;
    int num_qubits = 0;
    int depth = 0;
    JuliaParams params;
    std::string probs_sha1;
};

/// Deterministic per-image derivation: seed_i = splitmix64(master_seed + i)
/// (1-based i), structure choices from the shape stream, shot sampling from
/// the shots stream, palette from the cmap stream.
inline ImagePlan plan_image(const GenerationConfig& cfg, int index_1_based) {
    ImagePlan plan;
    plan.seed = splitmix64_mix(cfg.master_seed +
                               static_cast<std::uint64_t>(index_1_based));
    SplitMix64 shape(plan.seed ^ stream::kShape);
    plan.num_qubits = cfg.qubit_choices[shape.next_below(cfg.qubit_choices.size())];
    plan.depth = cfg.depth_choices[shape.next_below(cfg.depth_choices.size())];

    const Circuit circuit =
        build_random_circuit(plan.seed, plan.num_qubits, plan.depth);
    const Statevector sv = simulate(circuit);
    const ShotHistogram hist =
        sample_shots(sv, cfg.shots, plan.seed ^ stream::kShots);
    plan.params = derive_julia_params(hist, plan.seed);
    plan.probs_sha1 = probs_digest(hist);
    return plan;
}

namespace detail {

inline void write_text_file(const std::filesystem::path& path,
                            const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

inline nlohmann::json config_to_json(const GenerationConfig& cfg) {
    return nlohmann::json{{"master_seed", cfg.master_seed},
                          {"count", cfg.count},
                          {"width", cfg.width},
                          {"height", cfg.height},
                          {"shots", cfg.shots},
                          {"qubit_choices", cfg.qubit_choices},
                          {"depth_choices", cfg.depth_choices},
                          {"output_dir", cfg.output_dir.string()}};
}

}  // namespace detail

/**
 * Generates `cfg.count` PNGs plus metadata.csv and manifest.json under
 * cfg.output_dir. Throws after flagging partial output in the manifest if
 * any image fails.
 */
inline GenerationResult generate_dataset(const GenerationConfig& cfg) {
    if (cfg.count < 1)
        throw std::invalid_argument("generate_dataset: count must be >= 1");
    if (cfg.qubit_choices.empty() || cfg.depth_choices.empty())
        throw std::invalid_argument("generate_dataset: empty choice set");
    for (int q : cfg.qubit_choices)
        if (q < 3 || q > kMaxQubits)
            throw std::invalid_argument("generate_dataset: qubit choices must be in [3, 16]");
    for (int d : cfg.depth_choices)
        if (d < 0 || d > kMaxDepth)
            throw std::invalid_argument("generate_dataset: depth choices must be in [0, 64]");

    std::filesystem::create_directories(cfg.output_dir);

    std::vector<MetadataRecord> records(cfg.count);
    const auto failures = parallel_for_indexed(
        static_cast<std::size_t>(cfg.count), worker_count(cfg.workers),
        [&](std::size_t slot) {
            const int index = static_cast<int>(slot) + 1;
            const ImagePlan plan = plan_image(cfg, index);

            RenderSpec spec;
            spec.width = cfg.width;
            spec.height = cfg.height;
            spec.c = {plan.params.c_real, plan.params.c_imag};
            spec.power = plan.params.power;
            const SmoothField field = render_field(spec);
            const Rgb8Image image =
                colorize(field, colormap(plan.params.cmap));

            MetadataRecord& rec = records[slot];
            rec.filename = image_filename(index);
            rec.seed = plan.seed;
            rec.num_qubits = plan.num_qubits;
            rec.depth = plan.depth;
            rec.c_real = plan.params.c_real;
            rec.c_imag = plan.params.c_imag;
            rec.power = plan.params.power;
            rec.cmap = cmap_name_string(plan.params.cmap);
            rec.probs_sha1 = plan.probs_sha1;
            write_png(image, cfg.output_dir / rec.filename);
        });

    std::string csv(kGenerationCsvHeader);
    csv += '\n';
    for (const MetadataRecord& rec : records) {
        csv += rec.to_generation_row();
        csv += '\n';
    }

    GenerationResult result;
    result.csv_path = cfg.output_dir / "metadata.csv";
    result.manifest_path = cfg.output_dir / "manifest.json";
    result.csv_sha1 = sha1_hex(csv);
    result.records = std::move(records);

    nlohmann::json manifest{{"config", detail::config_to_json(cfg)},
                            {"counts", {{"images", cfg.count}}},
                            {"csv_sha1", result.csv_sha1},
                            {"version", kVersion},
                            {"partial", !failures.empty()}};
    if (!failures.empty()) {
        nlohmann::json failed = nlohmann::json::array();
        for (const IndexedFailure& f : failures)
            failed.push_back({{"index", f.index + 1}, {"error", f.message}});
        manifest["failures"] = failed;
        detail::write_text_file(result.manifest_path, manifest.dump(2) + "\n");
        throw std::runtime_error("generate_dataset: image " +
                                 std::to_string(failures.front().index + 1) +
                                 " failed: " + failures.front().message);
    }

    detail::write_text_file(result.csv_path, csv);
    detail::write_text_file(result.manifest_path, manifest.dump(2) + "\n");
    return result;
}

struct AnalyzeOptions {
    std::filesystem::path csv_path;
    std::filesystem::path images_dir;
    std::filesystem::path output_dir;
    int k = 3;
    bool cluster_on_pca = false;  // cluster on PCA scores instead of features
    int workers = 0;
};

struct AnalyzeResult {
    std::filesystem::path enriched_csv_path;
    std::filesystem::path summary_path;
    std::size_t input_rows = 0;
    std::size_t analyzed_rows = 0;
    std::size_t excluded_rows = 0;
    bool clustered = false;
    std::vector<std::string> warnings;
    ClusterReport clusters;            // means over (fd, lacunarity, energy)
    CorrelationMatrix correlation;     // params + fractal features
    std::vector<double> explained_variance_ratio;
};

namespace detail {

struct AnalyzedRow {
    std::vector<std::string> raw_fields;  // original first 9 columns
    double c_real = 0.0, c_imag = 0.0;
    int power = 2, depth = 0;
    std::optional<FeatureVector> features;
    std::string error;
};

inline const std::array<const char*, 5> kScatterColors = {
    "#3b6fb5", "#d9822b", "#3f9b4f", "#b54a4a", "#7b5ab5"};

}  // namespace detail

/**
 * Runs the analytics pass: validates image presence (aborting when more
 * than 10% of referenced files are missing), extracts features, fits
 * correlations + PCA + k-means, and writes the enriched CSV, summary.json
 * and the three SVG plots into options.output_dir.
 */
inline AnalyzeResult analyze_dataset(const AnalyzeOptions& options) {
    const CsvTable table = read_csv(options.csv_path.string());
    if (table.header.size() < 9)
        throw std::runtime_error("analyze_dataset: unexpected CSV header");

    AnalyzeResult result;
    result.input_rows = table.rows.size();
    std::filesystem::create_directories(options.output_dir);

    // Parse rows and check image presence first.
    std::vector<detail::AnalyzedRow> rows(table.rows.size());
    std::size_t missing = 0;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        detail::AnalyzedRow& row = rows[i];
        row.raw_fields.assign(table.rows[i].begin(), table.rows[i].begin() + 9);
        try {
            row.c_real = parse_double(row.raw_fields[4]);
            row.c_imag = parse_double(row.raw_fields[5]);
            row.power = static_cast<int>(parse_u64(row.raw_fields[6]));
            row.depth = static_cast<int>(parse_u64(row.raw_fields[3]));
        } catch (const std::exception& e) {
            row.error = std::string("malformed row: ") + e.what();
            continue;
        }
        if (!std::filesystem::exists(options.images_dir / row.raw_fields[0])) {
            row.error = "missing image file";
            ++missing;
        }
    }
    if (result.input_rows > 0 &&
        10 * missing > result.input_rows) {
        std::string msg = "analyze_dataset: " + std::to_string(missing) + "/" +
                          std::to_string(result.input_rows) +
                          " referenced images missing:";
        for (const auto& row : rows)
            if (row.error == "missing image file") msg += " " + row.raw_fields[0];
        throw std::runtime_error(msg);
    }

    // Feature extraction, parallel across images.
    parallel_for_indexed(rows.size(), worker_count(options.workers),
                         [&](std::size_t i) {
                             detail::AnalyzedRow& row = rows[i];
                             if (!row.error.empty()) return;
                             try {
                                 const Rgb8Image image = read_png(
                                     options.images_dir / row.raw_fields[0]);
                                 row.features = extract_features(image);
                             } catch (const std::exception& e) {
                                 row.error = e.what();
                             }
                         });

    std::vector<std::size_t> included;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].features)
            included.push_back(i);
        else
            result.warnings.push_back("excluded " + rows[i].raw_fields[0] +
                                      ": " + rows[i].error);
    }
    result.analyzed_rows = included.size();
    result.excluded_rows = rows.size() - included.size();
    if (included.size() < 3)
        throw std::runtime_error("analyze_dataset: need at least 3 analyzable rows, have " +
                                 std::to_string(included.size()));

    // Feature matrix for PCA / k-means.
    FeatureMatrix features({"fractal_dimension", "lacunarity", "energy"},
                           included.size());
    for (std::size_t r = 0; r < included.size(); ++r) {
        const FeatureVector& fv = *rows[included[r]].features;
        features.at(r, 0) = fv.fractal_dimension;
        features.at(r, 1) = fv.lacunarity;
        features.at(r, 2) = fv.energy;
    }

    // Correlation over generation parameters + fractal features.
    FeatureMatrix corr_input({"c_real", "c_imag", "power", "depth",
                              "fractal_dimension", "lacunarity"},
                             included.size());
    for (std::size_t r = 0; r < included.size(); ++r) {
        const detail::AnalyzedRow& row = rows[included[r]];
        corr_input.at(r, 0) = row.c_real;
        corr_input.at(r, 1) = row.c_imag;
        corr_input.at(r, 2) = row.power;
        corr_input.at(r, 3) = row.depth;
        corr_input.at(r, 4) = row.features->fractal_dimension;
        corr_input.at(r, 5) = row.features->lacunarity;
    }
    result.correlation = correlation_matrix(corr_input);
    for (std::size_t c = 0; c < result.correlation.dim; ++c)
        if (result.correlation.degenerate_columns[c])
            result.warnings.push_back("zero-variance column in correlation: " +
                                      result.correlation.column_names[c]);

    const PcaResult pca = pca_fit_transform(features);
    result.explained_variance_ratio = pca.model.explained_variance_ratio;

    // Cluster on standardized features (or on PCA scores when requested).
    const Standardized standardized = standardize(features);
    bool degenerate = true;
    for (bool flag : standardized.constant_columns) degenerate = degenerate && flag;
    std::vector<int> stable_labels(included.size(), 0);
    if (degenerate) {
        result.warnings.push_back(
            "degenerate feature space: all features constant, clustering skipped");
        KMeansModel trivial;
        trivial.k = 1;
        trivial.labels.assign(included.size(), 0);
        trivial.n_cols = features.n_cols;
        result.clusters = cluster_summary(features, trivial);
    } else {
        std::vector<double> cluster_data;
        std::size_t cluster_cols = 0;
        if (options.cluster_on_pca) {
            cluster_cols = 2;
            cluster_data.reserve(included.size() * 2);
            for (const auto& score : pca.scores) {
                cluster_data.push_back(score[0]);
                cluster_data.push_back(score[1]);
            }
        } else {
            cluster_cols = features.n_cols;
            cluster_data = standardized.matrix.data;
        }
        const KMeansModel model =
            kmeans_fit(cluster_data, included.size(), cluster_cols, options.k,
                       /*seed=*/0x6B6D65616E73ULL);
        result.clustered = true;
        result.clusters = cluster_summary(features, model);
        for (std::size_t r = 0; r < included.size(); ++r)
            stable_labels[r] = result.clusters.relabel[model.labels[r]];
    }

    // Enriched CSV (analyzed rows only; exclusions are in the warnings).
    std::string csv(kEnrichedCsvHeader);
    csv += '\n';
    for (std::size_t r = 0; r < included.size(); ++r) {
        const detail::AnalyzedRow& row = rows[included[r]];
        for (const std::string& field : row.raw_fields) {
            csv += field;
            csv += ',';
        }
        csv += format_double(row.features->fractal_dimension);
        csv += ',';
        csv += format_double(row.features->lacunarity);
        csv += ',';
        csv += format_double(row.features->energy);
        csv += ',';
        csv += std::to_string(stable_labels[r]);
        csv += ',';
        csv += format_double(pca.scores[r][0]);
        csv += ',';
        csv += format_double(pca.scores[r][1]);
        csv += '\n';
    }
    result.enriched_csv_path = options.output_dir / "metadata_enriched.csv";
    detail::write_text_file(result.enriched_csv_path, csv);

    // Summary JSON.
    nlohmann::json summary;
    summary["counts"] = {{"input_rows", result.input_rows},
                         {"analyzed", result.analyzed_rows},
                         {"excluded", result.excluded_rows}};
    summary["csv_sha1"] = sha1_hex(csv);
    {
        nlohmann::json means = nlohmann::json::array();
        nlohmann::json counts = nlohmann::json::array();
        for (const ClusterSummary& cluster : result.clusters.clusters) {
            means.push_back({{"cluster", cluster.id},
                             {"fractal_dimension", cluster.means[0]},
                             {"lacunarity", cluster.means[1]},
                             {"energy", cluster.means[2]}});
            counts.push_back(cluster.count);
        }
        summary["cluster_means"] = means;
        summary["cluster_counts"] = counts;
    }
    {
        nlohmann::json corr;
        corr["columns"] = result.correlation.column_names;
        nlohmann::json values = nlohmann::json::array();
        for (std::size_t r = 0; r < result.correlation.dim; ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t c = 0; c < result.correlation.dim; ++c)
                row.push_back(result.correlation.at(r, c));
            values.push_back(row);
        }
        corr["values"] = values;
        summary["correlation_matrix"] = corr;
    }
    summary["explained_variance_ratio"] = result.explained_variance_ratio;
    summary["warnings"] = result.warnings;
    result.summary_path = options.output_dir / "summary.json";
    detail::write_text_file(result.summary_path, summary.dump(2) + "\n");

    // Plots: FD vs lacunarity scatter colored by power, correlation
    // heatmap, cluster-count bars.
    {
        std::map<int, ScatterSeries> by_power;
        for (std::size_t r = 0; r < included.size(); ++r) {
            const detail::AnalyzedRow& row = rows[included[r]];
            ScatterSeries& series = by_power[row.power];
            if (series.name.empty())
                series.name = "power=" + std::to_string(row.power);
            series.points.emplace_back(row.features->fractal_dimension,
                                       row.features->lacunarity);
        }
        SvgPlot scatter;
        scatter.kind = PlotKind::Scatter;
        scatter.title = "Fractal dimension vs lacunarity";
        scatter.x_label = "fractal_dimension";
        scatter.y_label = "lacunarity";
        for (auto& [power, series] : by_power) {
            series.color = detail::kScatterColors[scatter.series.size() %
                                                  detail::kScatterColors.size()];
            scatter.series.push_back(std::move(series));
        }
        emit_svg(scatter, options.output_dir / "fd_vs_lacunarity.svg");

        SvgPlot heatmap;
        heatmap.kind = PlotKind::Heatmap;
        heatmap.title = "Correlation matrix";
        heatmap.cell_labels = result.correlation.column_names;
        heatmap.matrix = result.correlation.values;
        emit_svg(heatmap, options.output_dir / "correlation.svg");

        SvgPlot bars;
        bars.kind = PlotKind::Bars;
        bars.title = "Images per cluster";
        bars.x_label = "cluster";
        bars.y_label = "images";
        for (const ClusterSummary& cluster : result.clusters.clusters) {
            bars.bar_labels.push_back("cluster " + std::to_string(cluster.id));
            bars.bar_values.push_back(static_cast<double>(cluster.count));
        }
        emit_svg(bars, options.output_dir / "clusters.svg");
    }

    return result;
}

struct ValidationReport {
    std::vector<std::string> findings;

    bool ok() const { return findings.empty(); }
};

/**
 * Structural validation of a dataset: header, per-row shape, filename
 * pattern (padded or unpadded index), duplicates, file presence, parameter
 * ranges and digest format. Returns all findings; empty means valid.
 */
inline ValidationReport validate_dataset(const std::filesystem::path& csv_path,
                                         const std::filesystem::path& images_dir) {
    ValidationReport report;
    std::ifstream in(csv_path, std::ios::binary);
    if (!in)
        throw std::runtime_error("validate_dataset: cannot open " +
                                 csv_path.string());

    static const std::regex kFilenamePattern("quantum_julia_[0-9]+\\.png");
    static const std::regex kSha1Pattern("[0-9a-f]{40}");

    std::string line;
    std::size_t line_no = 0;
    std::size_t expected_cols = 0;
    std::set<std::string> seen_filenames;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        if (line_no == 1) {
            if (line == kGenerationCsvHeader)
                expected_cols = 9;
            else if (line == kEnrichedCsvHeader)
                expected_cols = 15;
            else {
                report.findings.push_back("line 1: unrecognized header");
                expected_cols = split_csv_line(line).size();
            }
            continue;
        }

        const std::vector<std::string> fields = split_csv_line(line);
        const std::string where = "line " + std::to_string(line_no);
        if (fields.size() != expected_cols) {
            report.findings.push_back(where + ": expected " +
                                      std::to_string(expected_cols) +
                                      " columns, got " +
                                      std::to_string(fields.size()));
            continue;
        }
        if (fields.size() < 9) continue;

        const std::string& filename = fields[0];
        if (!std::regex_match(filename, kFilenamePattern))
            report.findings.push_back(where + ": bad filename '" + filename + "'");
        if (!seen_filenames.insert(filename).second)
            report.findings.push_back(where + ": duplicate filename '" +
                                      filename + "'");
        if (!std::filesystem::exists(images_dir / filename))
            report.findings.push_back(where + ": missing file '" + filename + "'");

        auto check_number = [&](int col, const char* name,
                                auto parser) -> std::optional<double> {
            try {
                return static_cast<double>(parser(fields[col]));
            } catch (const std::exception&) {
                report.findings.push_back(where + ": column " + name +
                                          " is not numeric: '" + fields[col] +
                                          "'");
                return std::nullopt;
            }
        };
        check_number(1, "seed", parse_u64);
        const auto qubits = check_number(2, "num_qubits", parse_u64);
        if (qubits && *qubits < 3)
            report.findings.push_back(where + ": num_qubits below 3");
        check_number(3, "depth", parse_u64);

        const auto c_real = check_number(4, "c_real", parse_double);
        if (c_real && (*c_real < kCRealMin - 1e-12 || *c_real > kCRealMax + 1e-12))
            report.findings.push_back(where + ": c_real out of range");
        const auto c_imag = check_number(5, "c_imag", parse_double);
        if (c_imag && (*c_imag < kCImagMin - 1e-12 || *c_imag > kCImagMax + 1e-12))
            report.findings.push_back(where + ": c_imag out of range");
        const auto power = check_number(6, "power", parse_u64);
        if (power && *power != 2 && *power != 3 && *power != 4)
            report.findings.push_back(where + ": power not in {2, 3, 4}");
        if (!parse_cmap_name(fields[7]))
            report.findings.push_back(where + ": unknown cmap '" + fields[7] + "'");
        if (!std::regex_match(fields[8], kSha1Pattern))
            report.findings.push_back(where + ": probs_sha1 is not 40 lowercase hex chars");
    }
    if (line_no == 0)
        report.findings.push_back("empty CSV: no header row");
    return report;
}

}  // namespace fraqtal
