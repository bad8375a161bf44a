#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wl/core.hpp"

namespace wl {

// A formal sum of noncommuting products t_i * t_j: ordered pairs (i, j) with
// multiplicities, sorted by pair.
using Expression = std::vector<std::pair<std::pair<color_t, color_t>, std::uint32_t>>;

struct SymbolicSquare {
    ColorMatrix refined;
    // Expression of each class of the refined matrix, in the old numbering.
    std::vector<Expression> class_expressions;
};

// One symbolic squaring: entry (u,v) becomes the formal sum over w of
// t_{colors(u,w)} * t_{colors(w,v)}. Positions are grouped by (old color,
// expression) -- keying on the old color makes every step a refinement --
// and new ids are assigned by row-major first occurrence.
SymbolicSquare symbolic_square_full(const ColorMatrix& m);
ColorMatrix symbolic_square(const ColorMatrix& m);

// Iterates symbolic_square to fixpoint; the partition equals the one computed
// by the production engines. iterations includes the confirming pass.
StableResult symbolic_closure(const ColorMatrix& m, bool with_constants = false);

// Structure constants of a stable coloring with a full agreement check:
// every arc of every color is fingerprinted and compared. Throws
// not_stable_error if arcs of one color disagree.
StructureConstants structure_constants(const ColorMatrix& stable);

// Verdict of the coherence check. transpose_of[i] is the color class equal to
// the transpose of class i (valid when the transpose check passed for i).
struct CoherenceReport {
    bool ok = false;
    std::vector<std::string> violations;
    std::vector<color_t> transpose_of;
};

// Checks the defining properties of a standard basis on m's classes:
// (1) valid dense partition of the positions, (2) diagonal colors exactly
// cover the diagonal, (3) classes disjoint from the diagonal/off-diagonal
// split, (4) the transpose of every class is a class, (5) all arcs of one
// color have equal fingerprints. Violations name the property and a witness.
CoherenceReport verify_coherent(const ColorMatrix& m);

struct ConstantsCheck {
    enum class Status { ok, mismatch, skipped };
    Status status = Status::skipped;
    std::string detail;
};

// Brute-force check that A_i * A_j == sum_k p_ij^k A_k holds entrywise for
// all i, j, by enumerating every length-2 path of the graph. Skipped for
// n > max_n (the check is desk-scale by design).
ConstantsCheck check_constants_by_multiplication(const ColorMatrix& stable,
                                                 const StructureConstants& c,
                                                 int max_n = 64);

}  // namespace wl
