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
 * The per-image metadata record and its CSV serialization (UTF-8, comma
 * separated, LF line endings). Floats are written in shortest round-trip
 * form so identical runs produce identical bytes.
 */
#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace fraqtal {

inline constexpr std::string_view kGenerationCsvHeader =
    "filename,seed,num_qubits,depth,c_real,c_imag,power,cmap,probs_sha1";
inline constexpr std::string_view kEnrichedCsvHeader =
    "filename,seed,num_qubits,depth,c_real,c_imag,power,cmap,probs_sha1,"
    "fractal_dimension,lacunarity,energy,cluster,pc1,pc2";

/// Shortest decimal representation that round-trips to the same double.
inline std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw std::invalid_argument("not a number: '" + std::string(s) + "'");
    return v;
}

inline std::uint64_t parse_u64(std::string_view s) {
    std::uint64_t v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    return v;
}

struct MetadataRecord {
    std::string filename;
    std::uint64_t seed = 0;
    int num_qubits = 0;
    int depth = 0;
    double c_real = 0.0;
    double c_imag = 0.0;
    int power = 2;
    std::string cmap;
    std::string probs_sha1;

    // Appended by analysis.
    double fractal_dimension = 0.0;
    double lacunarity = 0.0;
    double energy = 0.0;
    int cluster = 0;
    double pc1 = 0.0;
    double pc2 = 0.0;

    std::string to_generation_row() const {
        std::string row = filename;
        row += ',';
        row += std::to_string(seed);
        row += ',';
        row += std::to_string(num_qubits);
        row += ',';
        row += std::to_string(depth);
        row += ',';
        row += format_double(c_real);
        row += ',';
        row += format_double(c_imag);
        row += ',';
        row += std::to_string(power);
        row += ',';
        row += cmap;
        row += ',';
        row += probs_sha1;
        return row;
    }

    std::string to_enriched_row() const {
        std::string row = to_generation_row();
        row += ',';
        row += format_double(fractal_dimension);
        row += ',';
        row += format_double(lacunarity);
        row += ',';
        row += format_double(energy);
        row += ',';
        row += std::to_string(cluster);
        row += ',';
        row += format_double(pc1);
        row += ',';
        row += format_double(pc2);
        return row;
    }
};

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else {
            field += c;
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Reads a whole CSV file; throws with a 1-based line number on structural
/// problems (missing header, inconsistent column counts).
inline CsvTable read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_csv: cannot open " + path);

    CsvTable table;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields = split_csv_line(line);
        if (line_no == 1) {
            table.header = std::move(fields);
            continue;
        }
        if (fields.size() != table.header.size())
            throw std::runtime_error("read_csv: line " + std::to_string(line_no) +
                                     ": expected " +
                                     std::to_string(table.header.size()) +
                                     " columns, got " +
                                     std::to_string(fields.size()));
        table.rows.push_back(std::move(fields));
    }
    if (table.header.empty())
        throw std::runtime_error("read_csv: " + path + " has no header row");
    return table;
}

}  // namespace fraqtal
