#pragma once

#include "wl/core.hpp"

namespace wl {

// A molecule as labels: atom category per vertex, explicit bonds with kind
// ids, and the kind id used for absent bonds.
struct MolecularSpec {
    struct Bond {
        int u, v;
        int kind;
    };
    std::vector<int> atoms;
    std::vector<Bond> bonds;
    int default_kind = 0;
};

// Stack of k hexagons: stage 6-cycles R_1..R_k plus inter-stage matchings
// Q_1..Q_{k-1} alternating between letters {a,c,e} (odd j) and {b,d,f}
// (even j). n = 6k; vertex (stage i, letter l) has index (i-1)*6 + l.
// 3-color matrix: vertex, edge, non-edge. Throws for k < 1.
ColorMatrix benzene_stack(int k);

// Circulant on 2k vertices with differences {1, k, 2k-1}: the cycle plus
// diameter rungs. Throws for k < 3.
ColorMatrix moebius_ladder(int k);

// Tree on n vertices: a path 0..n-3 with two extra leaves n-2, n-1 attached
// to vertex n-3. Throws for n < 4.
ColorMatrix dynkin(int n);

// Colored complete graph of a molecule: diagonal = atom category, off-diagonal
// = s + bond kind with s = max atom category + 1 (absent bonds get the default
// kind). Throws on duplicate or degenerate bonds.
ColorMatrix molecular(const MolecularSpec& spec);

}  // namespace wl
