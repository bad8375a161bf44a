#include "fixtures.hpp"

namespace fx {

namespace {

wl::ColorMatrix dense(int n, std::vector<long long> raw) {
    return wl::ColorMatrix::from_colors(n, raw);
}

std::vector<std::vector<long long>> rows(int n, const std::vector<long long>& raw) {
    std::vector<std::vector<long long>> out(n);
    for (int u = 0; u < n; ++u)
        out[u] = std::vector<long long>(raw.begin() + u * n, raw.begin() + (u + 1) * n);
    return out;
}

}  // namespace

wl::ColorMatrix ethylene_input() {
    // 0 = C, 1 = H, 2 = single bond, 3 = double bond, 4 = no bond
    return dense(6, {0, 3, 2, 2, 4, 4,  //
                     3, 0, 4, 4, 2, 2,  //
                     2, 4, 1, 4, 4, 4,  //
                     2, 4, 4, 1, 4, 4,  //
                     4, 2, 4, 4, 1, 4,  //
                     4, 2, 4, 4, 4, 1});
}

wl::ColorMatrix ethylene_stable() {
    return dense(6, {0, 2, 3, 3, 4, 4,  //
                     2, 0, 4, 4, 3, 3,  //
                     5, 6, 1, 7, 8, 8,  //
                     5, 6, 7, 1, 8, 8,  //
                     6, 5, 8, 8, 1, 7,  //
                     6, 5, 8, 8, 7, 1});
}

std::vector<wl::Expression> ethylene_expressions() {
    // formal squares of the 9 closure classes over the 5 input colors
    return {
        {{{0, 0}, 1}, {{2, 2}, 2}, {{3, 3}, 1}, {{4, 4}, 2}},              // x0
        {{{1, 1}, 1}, {{2, 2}, 1}, {{4, 4}, 4}},                           // x1
        {{{0, 3}, 1}, {{2, 4}, 2}, {{3, 0}, 1}, {{4, 2}, 2}},              // x2
        {{{0, 2}, 1}, {{2, 1}, 1}, {{2, 4}, 1}, {{3, 4}, 1}, {{4, 4}, 2}}, // x3
        {{{0, 4}, 1}, {{2, 4}, 2}, {{3, 2}, 1}, {{4, 1}, 1}, {{4, 4}, 1}}, // x4
        {{{1, 2}, 1}, {{2, 0}, 1}, {{4, 2}, 1}, {{4, 3}, 1}, {{4, 4}, 2}}, // x5
        {{{1, 4}, 1}, {{2, 3}, 1}, {{4, 0}, 1}, {{4, 2}, 2}, {{4, 4}, 1}}, // x6
        {{{1, 4}, 1}, {{2, 2}, 1}, {{4, 1}, 1}, {{4, 4}, 3}},              // x7
        {{{1, 4}, 1}, {{2, 4}, 1}, {{4, 1}, 1}, {{4, 2}, 1}, {{4, 4}, 2}}, // x8
    };
}

wl::MolecularSpec ethylene_spec() {
    wl::MolecularSpec s;
    s.atoms = {0, 0, 1, 1, 1, 1};
    s.bonds = {{0, 1, 1}, {0, 2, 0}, {0, 3, 0}, {1, 4, 0}, {1, 5, 0}};
    s.default_kind = 2;
    return s;
}

wl::ColorMatrix cuneane_input() {
    return wl::normalize(rows(8, {1, 2, 3, 3, 3, 3, 2, 2,  //
                                  2, 1, 2, 2, 3, 3, 3, 3,  //
                                  3, 2, 1, 2, 3, 3, 3, 2,  //
                                  3, 2, 2, 1, 2, 3, 3, 3,  //
                                  3, 3, 3, 2, 1, 2, 2, 3,  //
                                  3, 3, 3, 3, 2, 1, 2, 2,  //
                                  2, 3, 3, 3, 2, 2, 1, 3,  //
                                  2, 3, 2, 3, 3, 2, 3, 1}));
}

wl::ColorMatrix cuneane_round1() {
    return wl::normalize(rows(8, {1, 2, 3, 4, 4, 3, 2, 2,  //
                                  2, 1, 5, 5, 4, 6, 4, 3,  //
                                  3, 5, 1, 5, 4, 4, 6, 2,  //
                                  4, 5, 5, 1, 2, 4, 4, 4,  //
                                  4, 4, 4, 2, 1, 5, 5, 4,  //
                                  3, 6, 4, 4, 5, 1, 5, 2,  //
                                  2, 4, 6, 4, 5, 5, 1, 3,  //
                                  2, 3, 2, 4, 4, 2, 3, 1}));
}

wl::ColorMatrix cuneane_stable() {
    return wl::normalize(rows(8, {1,  2,  3,  4,  4,  3,  2,  5,   //
                                  6,  7,  8,  9,  10, 11, 12, 13,  //
                                  13, 8,  7,  9,  10, 12, 11, 6,   //
                                  14, 15, 15, 16, 17, 18, 18, 14,  //
                                  14, 18, 18, 17, 16, 15, 15, 14,  //
                                  13, 11, 12, 10, 9,  7,  8,  6,   //
                                  6,  12, 11, 10, 9,  8,  7,  13,  //
                                  5,  3,  2,  4,  4,  2,  3,  1}));
}

wl::ColorMatrix star4_input() {
    // center vertex 0 joined to three leaves
    return dense(4, {0, 1, 1, 1,  //
                     1, 0, 2, 2,  //
                     1, 2, 0, 2,  //
                     1, 2, 2, 0});
}

wl::ColorMatrix star4_stable() {
    return dense(4, {0, 2, 2, 2,  //
                     3, 1, 4, 4,  //
                     3, 4, 1, 4,  //
                     3, 4, 4, 1});
}

std::vector<std::vector<std::vector<int>>> star4_basis() {
    return {
        {{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}},  // center vertex
        {{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},  // leaf vertices
        {{0, 1, 1, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}},  // center -> leaves
        {{0, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}},  // leaves -> center
        {{0, 0, 0, 0}, {0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 0}},  // between leaves
    };
}

wl::ColorMatrix five_point_stable() {
    return dense(5, {0, 2, 2, 4, 4,  //
                     2, 0, 2, 4, 4,  //
                     2, 2, 0, 4, 4,  //
                     5, 5, 5, 1, 3,  //
                     5, 5, 5, 3, 1});
}

std::vector<std::vector<int>> five_point_group() {
    return {{0, 1, 2, 3, 4}, {1, 2, 0, 3, 4}, {2, 0, 1, 3, 4},
            {1, 0, 2, 4, 3}, {2, 1, 0, 4, 3}, {0, 2, 1, 4, 3}};
}

wl::ColorMatrix four_point_input() {
    return dense(4, {0, 1, 2, 1,  //
                     1, 0, 1, 1,  //
                     2, 1, 0, 1,  //
                     1, 1, 1, 0});
}

std::vector<int> four_point_automorphism() { return {2, 3, 0, 1}; }

wl::MolecularSpec trinitrophenol_spec() {
    // atom categories: 0 = C, 1 = N, 2 = O, 3 = H; bond kinds: 0 = single,
    // 1 = double, default 2 = none. Ring carbons 0..5, nitro nitrogens 6..8,
    // oxygens 9..15, hydrogens 16..18.
    wl::MolecularSpec s;
    s.atoms = {0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3};
    s.bonds = {{0, 1, 0},  {0, 5, 1},  {0, 8, 0},  {1, 2, 1},  {1, 17, 0},
               {2, 3, 0},  {2, 6, 0},  {3, 4, 1},  {3, 15, 0}, {4, 5, 0},
               {4, 7, 0},  {5, 16, 0}, {6, 9, 1},  {6, 10, 1}, {7, 11, 1},
               {7, 12, 1}, {8, 13, 1}, {8, 14, 1}, {15, 18, 0}};
    s.default_kind = 2;
    return s;
}

wl::ColorMatrix trinitrophenol_input() {
    return dense(
        19, {0, 4, 6, 6, 6, 5, 6, 6, 4, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6,  //
             4, 0, 5, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 4, 6,  //
             6, 5, 0, 4, 6, 6, 4, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6,  //
             6, 6, 4, 0, 5, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 4, 6, 6, 6,  //
             6, 6, 6, 5, 0, 4, 6, 4, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6,  //
             5, 6, 6, 6, 4, 0, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 4, 6, 6,  //
             6, 6, 4, 6, 6, 6, 1, 6, 6, 5, 5, 6, 6, 6, 6, 6, 6, 6, 6,  //
             6, 6, 6, 6, 4, 6, 6, 1, 6, 6, 6, 5, 5, 6, 6, 6, 6, 6, 6,  //
             4, 6, 6, 6, 6, 6, 6, 6, 1, 6, 6, 6, 6, 5, 5, 6, 6, 6, 6,  //
             6, 6, 6, 6, 6, 6, 5, 6, 6, 2, 6, 6, 6, 6, 6, 6, 6, 6, 6,  //
             6, 6, 6, 6, 6, 6, 5, 6, 6, 6, 2, 6, 6, 6, 6, 6, 6, 6, 6,  //
             6, 6, 6, 6, 6, 6, 6, 5, 6, 6, 6, 2, 6, 6, 6, 6, 6, 6, 6,  //
             6, 6, 6, 6, 6, 6, 6, 5, 6, 6, 6, 6, 2, 6, 6, 6, 6, 6, 6,  //
             6, 6, 6, 6, 6, 6, 6, 6, 5, 6, 6, 6, 6, 2, 6, 6, 6, 6, 6,  //
             6, 6, 6, 6, 6, 6, 6, 6, 5, 6, 6, 6, 6, 6, 2, 6, 6, 6, 6,  //
             6, 6, 6, 4, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 2, 6, 6, 4,  //
             6, 6, 6, 6, 6, 4, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 3, 6, 6,  //
             6, 4, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 3, 6,  //
             6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 4, 6, 6, 3});
}

wl::ColorMatrix trinitrophenol_aromatic() {
    wl::ColorMatrix out = trinitrophenol_input();
    for (int i = 0; i < 6; ++i) {
        int u = i, v = (i + 1) % 6;
        out.at(u, v) = 4;
        out.at(v, u) = 4;
    }
    return out;
}

std::vector<int> trinitrophenol_automorphism() {
    return {0, 5, 4, 3, 2, 1, 7, 6, 8, 11, 12, 9, 10, 14, 13, 15, 17, 16, 18};
}

wl::VertexPartition trinitrophenol_orbits() {
    return {{0}, {1, 5}, {2, 4}, {3}, {6, 7}, {8}, {9, 10, 11, 12}, {13, 14}, {15}, {16, 17}, {18}};
}

std::vector<TableRow> benzene_table() {
    return {{1, 6, 1, 4},      {2, 12, 2, 16},    {3, 18, 3, 36},    {4, 24, 4, 64},
            {5, 30, 5, 100},   {6, 36, 6, 144},   {7, 42, 7, 196},   {8, 48, 8, 256},
            {9, 54, 9, 324},   {10, 60, 10, 400}, {11, 66, 11, 484}, {12, 72, 12, 576},
            {13, 78, 13, 676}, {17, 102, 17, 1156}, {21, 126, 21, 1764}, {25, 150, 25, 2500}};
}

std::vector<TableRow> moebius_table() {
    return {{3, 6, 1, 3},   {6, 12, 1, 7},  {9, 18, 1, 10},  {12, 24, 1, 13},
            {15, 30, 1, 16}, {18, 36, 1, 19}, {21, 42, 1, 22}, {24, 48, 1, 25},
            {27, 54, 1, 28}, {30, 60, 1, 31}, {33, 66, 1, 34}, {36, 72, 1, 37},
            {40, 80, 1, 41}, {50, 100, 1, 51}};
}

std::vector<TableRow> dynkin_table() {
    return {{6, 6, 5, 26},     {12, 12, 11, 122},  {18, 18, 17, 290},  {24, 24, 23, 530},
            {30, 30, 29, 842}, {36, 36, 35, 1226}, {42, 42, 41, 1682}, {48, 48, 47, 2210},
            {54, 54, 53, 2810}, {60, 60, 59, 3482}, {66, 66, 65, 4226}, {72, 72, 71, 5042},
            {80, 80, 79, 6242}, {100, 100, 99, 9802}};
}

}  // namespace fx
