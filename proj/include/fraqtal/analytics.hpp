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
 * Corpus-level statistics: z-score standardization, Pearson correlation,
 * PCA via cyclic Jacobi eigendecomposition, and k-means with k-means++
 * seeding. Everything is deterministic for fixed inputs and seed; no
 * linear-algebra dependency (the feature space is tiny, M <= 8).
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "fraqtal/rng.hpp"

namespace fraqtal {

struct FeatureMatrix {
    std::vector<std::string> column_names;
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    std::vector<double> data;  // row-major

    FeatureMatrix() = default;
    FeatureMatrix(std::vector<std::string> names, std::size_t rows)
        : column_names(std::move(names)),
          n_rows(rows),
          n_cols(column_names.size()),
          data(rows * column_names.size(), 0.0) {}

    double at(std::size_t row, std::size_t col) const {
        return data[row * n_cols + col];
    }
    double& at(std::size_t row, std::size_t col) {
        return data[row * n_cols + col];
    }
};

struct Standardized {
    FeatureMatrix matrix;
    std::vector<double> means;
    std::vector<double> scales;          // population std per column
    std::vector<bool> constant_columns;  // flagged; mapped to all-zeros
};

/// Column-wise z-score with population std. Constant columns map to zeros
/// and are flagged instead of dividing by zero.
inline Standardized standardize(const FeatureMatrix& X) {
    if (X.n_rows < 2)
        throw std::invalid_argument("standardize: need at least 2 rows");

    Standardized out;
    out.matrix = X;
    out.means.assign(X.n_cols, 0.0);
    out.scales.assign(X.n_cols, 0.0);
    out.constant_columns.assign(X.n_cols, false);

    for (std::size_t c = 0; c < X.n_cols; ++c) {
        double mean = 0.0;
        for (std::size_t r = 0; r < X.n_rows; ++r) mean += X.at(r, c);
        mean /= static_cast<double>(X.n_rows);
        double var = 0.0;
        for (std::size_t r = 0; r < X.n_rows; ++r) {
            const double d = X.at(r, c) - mean;
            var += d * d;
        }
        var /= static_cast<double>(X.n_rows);
        const double std_dev = std::sqrt(var);

        out.means[c] = mean;
        out.scales[c] = std_dev;
        if (std_dev == 0.0) {
            out.constant_columns[c] = true;
            for (std::size_t r = 0; r < X.n_rows; ++r) out.matrix.at(r, c) = 0.0;
        } else {
            for (std::size_t r = 0; r < X.n_rows; ++r)
                out.matrix.at(r, c) = (X.at(r, c) - mean) / std_dev;
        }
    }
    return out;
}

struct CorrelationMatrix {
    std::vector<std::string> column_names;
    std::size_t dim = 0;
    std::vector<double> values;          // row-major dim x dim
    std::vector<bool> degenerate_columns;  // zero variance; pairs forced to 0

    double at(std::size_t i, std::size_t j) const { return values[i * dim + j]; }
};

/// Pearson correlations computed from centered dot products, so exactly
/// anti-correlated columns give exactly -1. Pairs involving a
/// zero-variance column (its own diagonal included) are reported as 0 and
/// the column is flagged.
inline CorrelationMatrix correlation_matrix(const FeatureMatrix& X) {
    if (X.n_rows < 2)
        throw std::invalid_argument("correlation_matrix: need at least 2 rows");

    const std::size_t n = X.n_rows, m = X.n_cols;
    std::vector<double> centered(n * m);
    for (std::size_t c = 0; c < m; ++c) {
        double mean = 0.0;
        for (std::size_t r = 0; r < n; ++r) mean += X.at(r, c);
        mean /= static_cast<double>(n);
        for (std::size_t r = 0; r < n; ++r)
            centered[r * m + c] = X.at(r, c) - mean;
    }

    auto dot = [&](std::size_t i, std::size_t j) {
        double s = 0.0;
        for (std::size_t r = 0; r < n; ++r)
            s += centered[r * m + i] * centered[r * m + j];
        return s;
    };

    CorrelationMatrix corr;
    corr.column_names = X.column_names;
    corr.dim = m;
    corr.values.assign(m * m, 0.0);
    corr.degenerate_columns.assign(m, false);

    std::vector<double> self(m);
    for (std::size_t i = 0; i < m; ++i) {
        self[i] = dot(i, i);
        corr.degenerate_columns[i] = self[i] == 0.0;
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (corr.degenerate_columns[i]) continue;
        corr.values[i * m + i] = 1.0;
        for (std::size_t j = i + 1; j < m; ++j) {
            if (corr.degenerate_columns[j]) continue;
            const double rho =
                std::clamp(dot(i, j) / std::sqrt(self[i] * self[j]), -1.0, 1.0);
            corr.values[i * m + j] = rho;
            corr.values[j * m + i] = rho;
        }
    }
    return corr;
}

namespace detail {

/// Cyclic Jacobi eigendecomposition of a symmetric matrix. Returns
/// eigenvalues and matching unit eigenvectors (rows of `vectors`),
/// unsorted. Converges to off-diagonal Frobenius norm < 1e-12.
struct EigenDecomposition {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;
};

inline EigenDecomposition jacobi_eigen(std::vector<double> a, std::size_t m) {
    std::vector<double> v(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i) v[i * m + i] = 1.0;

    auto off_norm = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (i != j) s += a[i * m + j] * a[i * m + j];
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < 100 && off_norm() >= 1e-12; ++sweep) {
        for (std::size_t p = 0; p + 1 < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) {
                const double apq = a[p * m + q];
                if (apq == 0.0) continue;
                const double app = a[p * m + p];
                const double aqq = a[q * m + q];
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) +
                                  std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < m; ++k) {
                    const double akp = a[k * m + p];
                    const double akq = a[k * m + q];
                    a[k * m + p] = c * akp - s * akq;
                    a[k * m + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < m; ++k) {
                    const double apk = a[p * m + k];
                    const double aqk = a[q * m + k];
                    a[p * m + k] = c * apk - s * aqk;
                    a[q * m + k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < m; ++k) {
                    const double vkp = v[k * m + p];
                    const double vkq = v[k * m + q];
                    v[k * m + p] = c * vkp - s * vkq;
                    v[k * m + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    EigenDecomposition eig;
    eig.values.resize(m);
    eig.vectors.assign(m, std::vector<double>(m));
    for (std::size_t i = 0; i < m; ++i) {
        eig.values[i] = a[i * m + i];
        for (std::size_t k = 0; k < m; ++k) eig.vectors[i][k] = v[k * m + i];
    }
    return eig;
}

}  // namespace detail

struct PcaModel {
    std::vector<double> means;
    std::vector<double> scales;
    std::vector<std::vector<double>> components;  // 2 x M, orthonormal rows
    std::vector<double> explained_variance_ratio;  // 2 entries
};

struct PcaResult {
    PcaModel model;
    std::vector<std::array<double, 2>> scores;  // N x 2
};

/**
 * Standardizes, eigendecomposes the covariance of the standardized data
 * (population normalization), and keeps the top two components sorted by
 * descending eigenvalue. Sign convention: each component's
 * largest-magnitude entry is positive. Scores are the standardized
 * (hence centered) rows projected onto the components.
 */
inline PcaResult pca_fit_transform(const FeatureMatrix& X) {
    if (X.n_rows < 3)
        throw std::invalid_argument("pca_fit_transform: need at least 3 rows");
    if (X.n_cols < 2)
        throw std::invalid_argument("pca_fit_transform: need at least 2 columns");

    const Standardized z = standardize(X);
    const std::size_t m = X.n_cols;
    std::vector<double> cov(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            double dot = 0.0;
            for (std::size_t r = 0; r < X.n_rows; ++r)
                dot += z.matrix.at(r, i) * z.matrix.at(r, j);
            cov[i * m + j] = cov[j * m + i] = dot / static_cast<double>(X.n_rows);
        }

    detail::EigenDecomposition eig = detail::jacobi_eigen(cov, m);
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return eig.values[a] > eig.values[b];
    });

    double trace = 0.0;
    for (double lambda : eig.values) trace += std::max(lambda, 0.0);

    PcaResult result;
    result.model.means = z.means;
    result.model.scales = z.scales;
    for (int comp = 0; comp < 2; ++comp) {
        std::vector<double> row = eig.vectors[order[comp]];
        // Largest-magnitude entry positive (first such index on ties).
        std::size_t arg_max = 0;
        for (std::size_t k = 1; k < m; ++k)
            if (std::fabs(row[k]) > std::fabs(row[arg_max])) arg_max = k;
        if (row[arg_max] < 0.0)
            for (double& e : row) e = -e;
        result.model.components.push_back(std::move(row));
        const double lambda = std::max(eig.values[order[comp]], 0.0);
        result.model.explained_variance_ratio.push_back(
            trace > 0.0 ? lambda / trace : 0.0);
    }

    result.scores.assign(X.n_rows, {0.0, 0.0});
    for (std::size_t r = 0; r < X.n_rows; ++r)
        for (int comp = 0; comp < 2; ++comp) {
            double dot = 0.0;
            for (std::size_t k = 0; k < m; ++k)
                dot += z.matrix.at(r, k) * result.model.components[comp][k];
            result.scores[r][comp] = dot;
        }
    return result;
}

struct KMeansModel {
    int k = 3;
    std::size_t n_cols = 0;
    std::vector<double> centroids;  // k x n_cols, row-major
    std::vector<int> labels;        // one per input row
    double inertia = 0.0;
    std::vector<double> inertia_history;  // per Lloyd iteration, winning restart

    double centroid_at(int cluster, std::size_t col) const {
        return centroids[std::size_t(cluster) * n_cols + col];
    }
};

namespace detail {

inline double sq_distance(const double* a, const double* b, std::size_t m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

struct LloydOutcome {
    std::vector<double> centroids;
    std::vector<int> labels;
    double inertia = 0.0;
    std::vector<double> inertia_history;
};

inline LloydOutcome run_lloyd(const std::vector<double>& data, std::size_t n,
                              std::size_t m, int k, SplitMix64& rng) {
    const auto row = [&](std::size_t r) { return &data[r * m]; };

    // k-means++ seeding: first centroid uniform, later ones proportional
    // to squared distance from the nearest chosen centroid.
    std::vector<double> centroids;
    centroids.reserve(std::size_t(k) * m);
    std::vector<double> min_sq_dist(n, std::numeric_limits<double>::infinity());
    {
        const std::size_t first = rng.next_below(n);
        centroids.insert(centroids.end(), row(first), row(first) + m);
    }
    for (int c = 1; c < k; ++c) {
        double total = 0.0;
        const double* last = &centroids[(std::size_t(c) - 1) * m];
        for (std::size_t r = 0; r < n; ++r) {
            min_sq_dist[r] = std::min(min_sq_dist[r], sq_distance(row(r), last, m));
            total += min_sq_dist[r];
        }
        std::size_t pick = 0;
        if (total > 0.0) {
            const double u = rng.next_double() * total;
            double acc = 0.0;
            pick = n - 1;
            for (std::size_t r = 0; r < n; ++r) {
                acc += min_sq_dist[r];
                if (acc > u) {
                    pick = r;
                    break;
                }
            }
        } else {
            pick = rng.next_below(n);
        }
        centroids.insert(centroids.end(), row(pick), row(pick) + m);
    }

    std::vector<int> labels(n, 0);
    std::vector<double> new_centroids(std::size_t(k) * m);
    std::vector<std::size_t> counts(k);
    LloydOutcome out;

    for (int iter = 0; iter < 300; ++iter) {
        // Assignment; ties go to the lowest centroid index.
        double inertia = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            int best = 0;
            double best_dist = sq_distance(row(r), &centroids[0], m);
            for (int c = 1; c < k; ++c) {
                const double d =
                    sq_distance(row(r), &centroids[std::size_t(c) * m], m);
                if (d < best_dist) {
                    best_dist = d;
                    best = c;
                }
            }
            labels[r] = best;
            inertia += best_dist;
        }

        // Empty cluster: reseed at the point farthest from its assigned
        // centroid (first such point on ties), then reassign.
        bool reseeded = false;
        for (int c = 0; c < k; ++c) {
            if (std::find(labels.begin(), labels.end(), c) != labels.end())
                continue;
            std::size_t farthest = 0;
            double far_dist = -1.0;
            for (std::size_t r = 0; r < n; ++r) {
                const double d = sq_distance(
                    row(r), &centroids[std::size_t(labels[r]) * m], m);
                if (d > far_dist) {
                    far_dist = d;
                    farthest = r;
                }
            }
            std::copy_n(row(farthest), m, &centroids[std::size_t(c) * m]);
            labels[farthest] = c;
            reseeded = true;
        }
        if (reseeded) continue;  // recompute assignment before updating

        out.inertia_history.push_back(inertia);

        // Update step.
        std::fill(new_centroids.begin(), new_centroids.end(), 0.0);
        std::fill(counts.begin(), counts.end(), std::size_t{0});
        for (std::size_t r = 0; r < n; ++r) {
            double* target = &new_centroids[std::size_t(labels[r]) * m];
            for (std::size_t i = 0; i < m; ++i) target[i] += row(r)[i];
            ++counts[labels[r]];
        }
        double movement = 0.0;
        for (int c = 0; c < k; ++c) {
            double* target = &new_centroids[std::size_t(c) * m];
            for (std::size_t i = 0; i < m; ++i) target[i] /= counts[c];
            movement = std::max(
                movement, std::sqrt(sq_distance(
                              target, &centroids[std::size_t(c) * m], m)));
        }
        centroids.swap(new_centroids);
        if (movement < 1e-6) break;
    }

    // Final assignment against the settled centroids.
    double inertia = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        int best = 0;
        double best_dist = sq_distance(row(r), &centroids[0], m);
        for (int c = 1; c < k; ++c) {
            const double d = sq_distance(row(r), &centroids[std::size_t(c) * m], m);
            if (d < best_dist) {
                best_dist = d;
                best = c;
            }
        }
        labels[r] = best;
        inertia += best_dist;
    }
    out.inertia_history.push_back(inertia);
    out.centroids = std::move(centroids);
    out.labels = std::move(labels);
    out.inertia = inertia;
    return out;
}

}  // namespace detail

/**
 * k-means with k-means++ initialization, Lloyd iterations to centroid
 * movement < 1e-6 (or 300 iterations), and 10 restarts keeping the lowest
 * inertia (earliest restart on ties). Restart r draws from a stream seeded
 * splitmix64_mix(seed + r), so the selection is order-independent.
 */
inline KMeansModel kmeans_fit(const std::vector<double>& data, std::size_t n_rows,
                              std::size_t n_cols, int k, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("kmeans_fit: k must be >= 1");
    if (n_rows < std::size_t(k))
        throw std::invalid_argument("kmeans_fit: fewer rows than clusters");
    if (data.size() != n_rows * n_cols)
        throw std::invalid_argument("kmeans_fit: data size mismatch");

    constexpr int kRestarts = 10;
    detail::LloydOutcome best;
    bool have_best = false;
    for (int restart = 0; restart < kRestarts; ++restart) {
        SplitMix64 rng(splitmix64_mix(seed + static_cast<std::uint64_t>(restart)));
        detail::LloydOutcome outcome = detail::run_lloyd(data, n_rows, n_cols, k, rng);
        if (!have_best || outcome.inertia < best.inertia) {
            best = std::move(outcome);
            have_best = true;
        }
    }

    KMeansModel model;
    model.k = k;
    model.n_cols = n_cols;
    model.centroids = std::move(best.centroids);
    model.labels = std::move(best.labels);
    model.inertia = best.inertia;
    model.inertia_history = std::move(best.inertia_history);
    return model;
}

struct ClusterSummary {
    int id = 0;  // stable id: 0 is the largest cluster
    std::size_t count = 0;
    std::vector<double> means;  // raw (un-standardized) feature means
};

struct ClusterReport {
    std::vector<ClusterSummary> clusters;  // descending count order
    std::vector<int> relabel;  // original k-means label -> stable id
};

/// Per-cluster counts and raw feature means, reported in descending count
/// order with stable ids (ties broken by original label).
inline ClusterReport cluster_summary(const FeatureMatrix& X,
                                     const KMeansModel& model) {
    if (model.labels.size() != X.n_rows)
        throw std::invalid_argument("cluster_summary: labels do not align with rows");

    std::vector<std::size_t> counts(model.k, 0);
    std::vector<std::vector<double>> sums(model.k,
                                          std::vector<double>(X.n_cols, 0.0));
    for (std::size_t r = 0; r < X.n_rows; ++r) {
        const int label = model.labels[r];
        ++counts[label];
        for (std::size_t c = 0; c < X.n_cols; ++c) sums[label][c] += X.at(r, c);
    }

    std::vector<int> order(model.k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return counts[a] > counts[b]; });

    ClusterReport report;
    report.relabel.assign(model.k, 0);
    for (int rank = 0; rank < model.k; ++rank) {
        const int original = order[rank];
        report.relabel[original] = rank;
        ClusterSummary summary;
        summary.id = rank;
        summary.count = counts[original];
        summary.means.resize(X.n_cols);
        for (std::size_t c = 0; c < X.n_cols; ++c)
            summary.means[c] =
                counts[original] > 0
                    ? sums[original][c] / static_cast<double>(counts[original])
                    : 0.0;
        report.clusters.push_back(std::move(summary));
    }
    return report;
}

}  // namespace fraqtal
