#pragma once

#include <utility>

#include "wl/core.hpp"

namespace wl {

// Work set of one incremental round: the colors introduced by the previous
// round and the arcs that are basis arcs of at least one triangle whose
// nonbasis arcs include a new-color arc. Empty new_colors means termination.
struct WorkSet {
    std::vector<color_t> new_colors;
    std::vector<std::pair<int, int>> touched_arcs;

    bool empty() const { return new_colors.empty(); }
};

struct StabcolStats {
    int rounds = 0;
    unsigned long long triangles = 0;  // triangle records examined, all rounds
};

// Work set that makes the first round inspect every triangle: all colors new.
WorkSet initial_workset(const ColorMatrix& m);

// One incremental round: every touched arc receives the multiset of nonbasis
// color pairs over its triangles in T_M; arcs of one color with equal
// multisets are grouped (untouched arcs of a split color form the
// empty-multiset group), the largest group keeps the old id (tie: smallest
// multiset in sorted order), others get fresh ids. Grouping uses counting and
// bucket sorts, no hashing. Returns the refined matrix and the next work set
// (fresh colors plus the arcs they touch). If triangle_counter is given it is
// incremented by the number of triangle records examined.
std::pair<ColorMatrix, WorkSet> stabcol_round(const ColorMatrix& m, const WorkSet& w,
                                              unsigned long long* triangle_counter = nullptr);

// Repeats stabcol_round from initial_workset until no new colors appear.
// Same partition as stabil_closure on every input. iterations counts rounds
// including the final confirming one.
StableResult stabcol_closure(const ColorMatrix& m, bool with_constants = false,
                             StabcolStats* stats = nullptr);

}  // namespace wl
