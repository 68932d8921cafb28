#pragma once

#include <Eigen/Dense>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cvtda/errors.hpp"
#include "cvtda/simplex.hpp"

namespace cvtda {

enum class PointFormat { csv, json };

inline PointFormat point_format_from_string(const std::string& name) {
    if (name == "csv") return PointFormat::csv;
    if (name == "json") return PointFormat::json;
    throw input_error("unknown point-cloud format '" + name + "' (expected csv or json)");
}

// n points in d-dimensional space, one position vector per row.
struct PointCloud {
    Eigen::MatrixXd coords;  // n x d, row i = v_i

    int n() const { return static_cast<int>(coords.rows()); }
    int d() const { return static_cast<int>(coords.cols()); }
};

// Squared Euclidean distances |v_i - v_j|^2. Squares are kept throughout;
// unsquared distances appear only at the simplex_diameter boundary, where the
// scale comparison happens against epsilon.
struct DistanceMatrix {
    Eigen::MatrixXd sq;  // n x n, symmetric, zero diagonal

    int n() const { return static_cast<int>(sq.rows()); }
};

namespace detail {

inline double parse_number(const std::string& token, int row, int col) {
    const char* begin = token.data();
    const char* end = begin + token.size();
    while (begin != end && (*begin == ' ' || *begin == '\t')) ++begin;
    while (end != begin && (*(end - 1) == ' ' || *(end - 1) == '\t' || *(end - 1) == '\r')) --end;
    double value = 0.0;
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc{} || res.ptr != end || begin == end)
        throw input_error("point-cloud parse failure at row " + std::to_string(row) +
                          ", column " + std::to_string(col) + ": '" + token + "' is not a number");
    if (!std::isfinite(value))
        throw input_error("point-cloud value at row " + std::to_string(row) + ", column " +
                          std::to_string(col) + " is not finite");
    return value;
}

inline PointCloud from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw input_error("point cloud is empty");
    const std::size_t d = rows.front().size();
    if (d == 0) throw input_error("point cloud row 1 has no coordinates");
    Eigen::MatrixXd coords(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != d)
            throw input_error("dimension mismatch: row " + std::to_string(i + 1) + " has " +
                              std::to_string(rows[i].size()) + " coordinates, expected " +
                              std::to_string(d));
        for (std::size_t j = 0; j < d; ++j) coords(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
    return PointCloud{std::move(coords)};
}

}  // namespace detail

// CSV: one point per line, comma-separated decimals. Blank lines are skipped.
inline PointCloud point_cloud_from_csv(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::vector<double> row;
        std::size_t start = 0;
        int col = 0;
        while (true) {
            ++col;
            const std::size_t comma = line.find(',', start);
            const std::string token = line.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            row.push_back(detail::parse_number(token, lineno, col));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        rows.push_back(std::move(row));
    }
    return detail::from_rows(rows);
}

// JSON: array of arrays of numbers.
inline PointCloud point_cloud_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw input_error("point-cloud JSON must be an array of arrays");
    std::vector<std::vector<double>> rows;
    int rowno = 0;
    for (const auto& jr : j) {
        ++rowno;
        if (!jr.is_array())
            throw input_error("point-cloud JSON row " + std::to_string(rowno) + " is not an array");
        std::vector<double> row;
        int col = 0;
        for (const auto& v : jr) {
            ++col;
            if (!v.is_number())
                throw input_error("point-cloud JSON value at row " + std::to_string(rowno) +
                                  ", column " + std::to_string(col) + " is not a number");
            row.push_back(v.get<double>());
        }
        rows.push_back(std::move(row));
    }
    return detail::from_rows(rows);
}

inline PointCloud load_point_cloud(const std::string& path, PointFormat format) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open point-cloud file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    if (format == PointFormat::csv) return point_cloud_from_csv(buffer.str());
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("point-cloud JSON parse failure: ") + e.what());
    }
    return point_cloud_from_json(j);
}

// Scales every row to unit Euclidean norm. Directions are preserved.
inline PointCloud normalize_to_unit_sphere(const PointCloud& pc) {
    Eigen::MatrixXd coords = pc.coords;
    for (Eigen::Index i = 0; i < coords.rows(); ++i) {
        const double norm = coords.row(i).norm();
        if (norm == 0.0)
            throw input_error("degenerate point: row " + std::to_string(i + 1) +
                              " is the zero vector and cannot be normalized");
        coords.row(i) /= norm;
    }
    return PointCloud{std::move(coords)};
}

inline DistanceMatrix pairwise_sq_distances(const PointCloud& pc) {
    const int n = pc.n();
    Eigen::MatrixXd sq = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double dij = (pc.coords.row(i) - pc.coords.row(j)).squaredNorm();
            sq(i, j) = dij;
            sq(j, i) = dij;
        }
    return DistanceMatrix{std::move(sq)};
}

// Maximum pairwise distance among the simplex vertices (unsquared).
// A 0-simplex has diameter 0.
inline double simplex_diameter(const DistanceMatrix& dist, SimplexBits s) {
    if (s.word == 0) throw input_error("invalid simplex: empty vertex set");
    const auto verts = simplex_vertices(s);
    if (verts.back() >= dist.n())
        throw input_error("invalid simplex: vertex " + std::to_string(verts.back()) +
                          " out of range for " + std::to_string(dist.n()) + " points");
    double max_sq = 0.0;
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            max_sq = std::max(max_sq, dist.sq(verts[a], verts[b]));
    return std::sqrt(max_sq);
}

}  // namespace cvtda
