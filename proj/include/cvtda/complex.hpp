#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cvtda/errors.hpp"
#include "cvtda/geometry.hpp"
#include "cvtda/simplex.hpp"

namespace cvtda {

// Classical realization of the m-qubit scale register: index x encodes
// epsilon = x / 2^(m-1), which is exact in binary floating point.
struct FiltrationScale {
    int m = 1;
    std::uint64_t x = 0;
    double epsilon = 0.0;
};

inline FiltrationScale scale_from_index(std::uint64_t x, int m) {
    if (m < 1 || m > 62) throw input_error("scale register width m must be in [1, 62]");
    if (x >= (std::uint64_t{1} << m))
        throw input_error("scale index x=" + std::to_string(x) + " out of range for m=" + std::to_string(m));
    const double eps = static_cast<double>(x) / static_cast<double>(std::uint64_t{1} << (m - 1));
    return FiltrationScale{m, x, eps};
}

// All simplices of diameter <= epsilon, one sorted list per dimension k.
// Lists are ascending by word value and closed under taking faces.
struct VietorisRipsComplex {
    double epsilon = 0.0;
    int n = 0;
    std::vector<std::vector<SimplexBits>> sets;  // sets[k] = S_k

    int kmax() const { return static_cast<int>(sets.size()) - 1; }

    int count(int k) const {
        if (k < 0 || k > kmax()) return 0;
        return static_cast<int>(sets[static_cast<std::size_t>(k)].size());
    }

    long total_size() const {
        long total = 0;
        for (const auto& level : sets) total += static_cast<long>(level.size());
        return total;
    }

    // Position of s within S_k, or -1 if absent.
    int index_of(int k, SimplexBits s) const {
        if (k < 0 || k > kmax()) return -1;
        const auto& level = sets[static_cast<std::size_t>(k)];
        const auto it = std::lower_bound(level.begin(), level.end(), s,
                                         [](SimplexBits a, SimplexBits b) { return a.word < b.word; });
        if (it == level.end() || it->word != s.word) return -1;
        return static_cast<int>(it - level.begin());
    }

    bool contains(int k, SimplexBits s) const { return index_of(k, s) >= 0; }
};

// True iff every pairwise squared distance among the vertices is <= eps^2.
// Equivalent to simplex_diameter(dist, s) <= eps; the squared comparison is
// the form the scale threshold takes against the distance operator.
inline bool membership(SimplexBits s, double eps, const DistanceMatrix& dist) {
    if (s.word == 0) throw input_error("invalid simplex: empty vertex set");
    const auto verts = simplex_vertices(s);
    if (verts.back() >= dist.n())
        throw input_error("invalid simplex: vertex " + std::to_string(verts.back()) +
                          " out of range for " + std::to_string(dist.n()) + " points");
    if (eps < 0.0) return false;
    const double eps_sq = eps * eps;
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            if (dist.sq(verts[a], verts[b]) > eps_sq) return false;
    return true;
}

// Builds S_0 .. S_kmax by clique growth on the eps-neighborhood graph: a
// (k+1)-clique is grown from each k-clique by adjoining a vertex above its
// highest one that neighbors every member. Face closure holds by
// construction, and each simplex is produced exactly once.
inline VietorisRipsComplex enumerate_vr(const DistanceMatrix& dist, double eps, int kmax) {
    const int n = dist.n();
    if (n > max_vertices)
        throw input_error("point count " + std::to_string(n) + " exceeds the supported maximum of " +
                          std::to_string(max_vertices));
    if (kmax < 0 || kmax > n - 1)
        throw input_error("kmax=" + std::to_string(kmax) + " out of range [0, " + std::to_string(n - 1) + "]");

    VietorisRipsComplex vr;
    vr.epsilon = eps;
    vr.n = n;
    vr.sets.resize(static_cast<std::size_t>(kmax) + 1);
    if (eps < 0.0) return vr;

    const double eps_sq = eps * eps;
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (j != i && dist.sq(i, j) <= eps_sq) adj[static_cast<std::size_t>(i)] |= (1u << j);

    auto& vertices = vr.sets[0];
    vertices.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) vertices.push_back(SimplexBits{1u << i});

    for (int k = 1; k <= kmax; ++k) {
        const auto& prev = vr.sets[static_cast<std::size_t>(k - 1)];
        auto& cur = vr.sets[static_cast<std::size_t>(k)];
        for (const SimplexBits s : prev) {
            std::uint32_t cand = ~0u;
            for (int v : simplex_vertices(s)) cand &= adj[static_cast<std::size_t>(v)];
            const int high = 31 - std::countl_zero(s.word);
            cand &= ~((high < 31) ? ((2u << high) - 1u) : ~0u);  // keep bits strictly above high
            for (std::uint32_t w = cand; w != 0; w &= w - 1) {
                const int j = std::countr_zero(w);
                if (j >= n) break;
                cur.push_back(SimplexBits{s.word | (1u << j)});
            }
        }
        std::sort(cur.begin(), cur.end(), [](SimplexBits a, SimplexBits b) { return a.word < b.word; });
    }
    return vr;
}

inline nlohmann::json to_json(const VietorisRipsComplex& vr) {
    nlohmann::json sets = nlohmann::json::object();
    for (int k = 0; k <= vr.kmax(); ++k) {
        std::vector<std::uint32_t> words;
        words.reserve(vr.sets[static_cast<std::size_t>(k)].size());
        for (const SimplexBits s : vr.sets[static_cast<std::size_t>(k)]) words.push_back(s.word);
        sets[std::to_string(k)] = words;
    }
    return nlohmann::json{{"epsilon", vr.epsilon}, {"n", vr.n}, {"sets", sets}};
}

inline VietorisRipsComplex vr_from_json(const nlohmann::json& j) {
    VietorisRipsComplex vr;
    vr.epsilon = j.at("epsilon").get<double>();
    vr.n = j.at("n").get<int>();
    const auto& sets = j.at("sets");
    int kmax = -1;
    for (auto it = sets.begin(); it != sets.end(); ++it) kmax = std::max(kmax, std::stoi(it.key()));
    vr.sets.resize(static_cast<std::size_t>(kmax) + 1);
    for (auto it = sets.begin(); it != sets.end(); ++it) {
        auto& level = vr.sets[static_cast<std::size_t>(std::stoi(it.key()))];
        for (const auto& w : it.value()) level.push_back(SimplexBits{w.get<std::uint32_t>()});
        std::sort(level.begin(), level.end(), [](SimplexBits a, SimplexBits b) { return a.word < b.word; });
    }
    return vr;
}

}  // namespace cvtda
