#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wl {

using color_t = std::uint32_t;

// Thrown when an operation requiring a stable (coherent) coloring finds out
// that the input is not stable.
struct not_stable_error : std::runtime_error {
    explicit not_stable_error(const std::string& what) : std::runtime_error(what) {}
};

// Adjacency matrix of a colored complete directed graph. colors[u*n+v] is the
// color of arc (u,v); diagonal entries are vertex colors. Invariants: color
// ids are dense in 0..r-1, and no id occurs both on and off the diagonal.
struct ColorMatrix {
    int n = 0;
    std::vector<color_t> colors;  // row-major, n*n
    color_t r = 0;

    color_t at(int u, int v) const { return colors[static_cast<std::size_t>(u) * n + v]; }
    color_t& at(int u, int v) { return colors[static_cast<std::size_t>(u) * n + v]; }

    // Builds a matrix from arbitrary non-negative labels. Distinct values are
    // renumbered densely preserving numeric order (so already-dense inputs
    // come through unchanged). Throws std::invalid_argument if a value occurs
    // both on and off the diagonal, on negative values, or on a size mismatch.
    static ColorMatrix from_colors(int n, const std::vector<long long>& row_major);

    // Checks the struct invariants; throws std::invalid_argument on violation.
    void validate() const;

    bool operator==(const ColorMatrix&) const = default;
};

// One color class of a Coloring: its positions in row-major order.
struct ColorClass {
    std::vector<std::pair<int, int>> arcs;
    bool diagonal = false;
};

// Inverse view of a ColorMatrix: for each color, the list of positions
// carrying it and whether it is a vertex (diagonal) color.
struct Coloring {
    std::vector<ColorClass> classes;

    static Coloring from(const ColorMatrix& m);
};

// Triangle counts over one basis arc: triples (i, j, p) meaning p triangles
// whose nonbasis arcs have colors i and j. Triples are sorted strictly
// increasing by (i, j); the p sum to n.
struct Fingerprint {
    struct Entry {
        color_t i, j;
        std::uint32_t p;
        bool operator==(const Entry&) const = default;
        auto operator<=>(const Entry&) const = default;
    };
    std::vector<Entry> triples;

    bool operator==(const Fingerprint&) const = default;
    auto operator<=>(const Fingerprint&) const = default;
};

// Sparse multiplication table of a stable coloring: p_ij^k stored as entries
// sorted by (i, j, k), zeros omitted.
struct StructureConstants {
    struct Entry {
        color_t i, j, k;
        std::uint32_t p;
        bool operator==(const Entry&) const = default;
    };
    std::vector<Entry> entries;
    color_t rank = 0;

    std::uint32_t get(color_t i, color_t j, color_t k) const;
};

struct StableResult {
    ColorMatrix stable;
    color_t rank = 0;
    int cells = 0;
    int iterations = 0;
    std::optional<StructureConstants> constants;
};

using VertexPartition = std::vector<std::vector<int>>;

// Turns an arbitrary square matrix of non-negative integers into a valid
// ColorMatrix: classes of equal entries are refined by the on/off-diagonal
// split and renumbered densely by row-major first occurrence.
ColorMatrix normalize(const std::vector<std::vector<long long>>& raw);

// Renumbers colors into the canonical order: diagonal colors first, then
// off-diagonal colors, each group by row-major first occurrence. Idempotent
// and partition-preserving.
ColorMatrix canonical_form(const ColorMatrix& m);

// The color renaming used by canonical_form, as a map old id -> canonical id.
std::vector<color_t> canonical_renumbering(const ColorMatrix& m);

// True iff a and b induce the same partition of positions (numbering aside).
bool same_partition(const ColorMatrix& a, const ColorMatrix& b);

// True iff colors(u,v) == colors(perm[u],perm[v]) for all u,v. Throws
// std::invalid_argument if perm is not a bijection on 0..n-1.
bool is_automorphism(const std::vector<int>& perm, const ColorMatrix& m);

// Vertices grouped by diagonal color, cells in canonical (first-occurrence)
// order, members ascending.
VertexPartition cells(const ColorMatrix& m);

}  // namespace wl
