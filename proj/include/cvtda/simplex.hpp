#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "cvtda/errors.hpp"

namespace cvtda {

// Largest supported vertex count. Full statevectors over n qubits are part of
// the pipeline, so n is capped where 2^n amplitudes stay desk-sized.
inline constexpr int max_vertices = 20;

// A k-simplex on at most max_vertices vertices, encoded as a bit word:
// bit i set <=> vertex i belongs to the simplex. Vertex order is ascending
// bit position (i_0 < i_1 < ... < i_k); every boundary sign downstream is
// derived from that order.
struct SimplexBits {
    std::uint32_t word = 0;

    int vertex_count() const { return std::popcount(word); }
    int dim() const { return vertex_count() - 1; }  // k
    bool contains(int v) const { return (word >> v) & 1u; }

    friend bool operator==(const SimplexBits&, const SimplexBits&) = default;
    friend auto operator<=>(const SimplexBits& a, const SimplexBits& b) { return a.word <=> b.word; }
};

// Set bit positions in ascending order.
inline std::vector<int> simplex_vertices(SimplexBits s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(s.vertex_count()));
    for (std::uint32_t w = s.word; w != 0; w &= w - 1)
        out.push_back(std::countr_zero(w));
    return out;
}

// Clears the l-th smallest set bit (vertex i_l). The survivors keep their
// positions, so the result is the l-th oriented face.
inline SimplexBits remove_vertex(SimplexBits s, int l) {
    if (s.vertex_count() <= 1)
        throw input_error("remove_vertex: simplex " + std::to_string(s.word) +
                          " has a single vertex; removing it would empty the simplex");
    if (l < 0 || l > s.dim())
        throw input_error("remove_vertex: vertex rank " + std::to_string(l) +
                          " out of range for a " + std::to_string(s.dim()) + "-simplex");
    std::uint32_t w = s.word;
    for (int i = 0; i < l; ++i) w &= w - 1;  // discard the l lowest set bits
    const std::uint32_t bit = w & (~w + 1u); // lowest remaining = i_l
    return SimplexBits{s.word & ~bit};
}

}  // namespace cvtda
