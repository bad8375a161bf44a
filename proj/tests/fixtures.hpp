#pragma once

#include <vector>

#include "wl/core.hpp"
#include "wl/generators.hpp"
#include "wl/oracle.hpp"

// Frozen worked examples and published result tables. Matrices printed with
// 1-based labels are stored as printed and run through normalize().
namespace fx {

// ethylene molecule, 6 vertices: 2 C, 4 H, single/double/no bond
wl::ColorMatrix ethylene_input();
wl::ColorMatrix ethylene_stable();  // its closure, canonical numbering
std::vector<wl::Expression> ethylene_expressions();  // x0..x8 over the input colors
wl::MolecularSpec ethylene_spec();

// cuneane skeleton, 8 vertices: refinement trace input -> B -> C (= closure)
wl::ColorMatrix cuneane_input();
wl::ColorMatrix cuneane_round1();
wl::ColorMatrix cuneane_stable();

// 4-star (one center, three leaves), already stable, and its basis matrices
wl::ColorMatrix star4_input();
wl::ColorMatrix star4_stable();
std::vector<std::vector<std::vector<int>>> star4_basis();

// 5-point example: stable coloring of rank 6 whose automorphism group has 6
// elements
wl::ColorMatrix five_point_stable();
std::vector<std::vector<int>> five_point_group();

// 4-vertex colored graph with a nonobvious automorphism
wl::ColorMatrix four_point_input();
std::vector<int> four_point_automorphism();

// 19-atom molecule (3 nitro groups, hydroxyl, ring). The drawn structure
// fixes an alternating single/double assignment around the ring, which breaks
// the mirror symmetry; trinitrophenol_aromatic unifies the six ring bonds to one kind,
// and the frozen automorphism and orbit partition belong to that variant.
wl::MolecularSpec trinitrophenol_spec();
wl::ColorMatrix trinitrophenol_input();
wl::ColorMatrix trinitrophenol_aromatic();
std::vector<int> trinitrophenol_automorphism();
wl::VertexPartition trinitrophenol_orbits();

// published closure sizes per generator family
struct TableRow {
    int param;        // family parameter (k, or n for the tree family)
    int n;            // vertex count
    int cells;        // vertex classes of the closure
    long long colors; // rank of the closure
};
std::vector<TableRow> benzene_table();
std::vector<TableRow> moebius_table();
std::vector<TableRow> dynkin_table();

}  // namespace fx
