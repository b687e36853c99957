// Constructive library of the building blocks: the thick-wall cube
// triangulation, Bing's rooms and houses in thin/thick/collapsed-wall
// variants, the three-room house, the dunce hat, and the four labeled gadget
// families (literal, conjunction, clause, disk support), each shipping its
// scripted collapsing certificates.
#ifndef WHC_GADGETS_HPP
#define WHC_GADGETS_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "whc/collapse.hpp"
#include "whc/core.hpp"

namespace whc {

// ---- integer grid scaffolding ----------------------------------------------
// Vertices live on a doubled integer lattice so that face centers (used by
// the fan subdivision of thick-wall end squares) are still lattice points:
// grid point (x,y,z) is stored as (2x,2y,2z), centers get odd coordinates.
struct GridPoint {
    int x = 0, y = 0, z = 0;
    auto operator<=>(const GridPoint&) const = default;
};

// Axis-aligned unit square: lowest corner (grid units) plus normal axis.
struct GridSquare {
    GridPoint corner;
    int normal = 0;  // 0=x, 1=y, 2=z
    auto operator<=>(const GridSquare&) const = default;
};

// Axis-aligned unit box; `axis` points through the two fan-subdivided end
// faces; `flip` mirrors the internal triangulation in the third direction so
// the gate edge can face either side.
struct GridBox {
    GridPoint corner;
    int axis = 0;
    bool flip = false;
    auto operator<=>(const GridBox&) const = default;
};

// A 2-/3-cell complex on the grid. `fans` marks squares triangulated as a
// four-triangle fan around a center vertex instead of the diagonal rule;
// the end faces of every box must be marked as fans.
struct GridCellComplex {
    std::set<GridSquare> squares;
    std::set<GridSquare> fans;
    std::set<GridBox> boxes;

    void add_square(GridSquare s) { squares.insert(s); }
    void add_fan(GridSquare s) {
        squares.insert(s);
        fans.insert(s);
    }
    void add_box(GridBox b) { boxes.insert(b); }

    // Throws std::invalid_argument when a box lacks one of its six face
    // squares or an end face is not fan-marked.
    void check_consistent() const;
};

// Deterministic triangulation: plain squares split along the diagonal from
// the lexicographically smallest corner; fan squares split into four
// triangles around a fresh center vertex; boxes into twelve tetrahedra (four
// prisms of three) compatible with the square rule on their boundary.
// Vertex ids are assigned in lexicographic order of doubled coordinates.
struct Triangulation {
    SimplicialComplex complex;
    std::map<GridPoint, int> vertex_of;  // doubled coordinates -> vertex id

    int id(GridPoint doubled) const;
    int id_unit(int x, int y, int z) const { return id({2 * x, 2 * y, 2 * z}); }
};

Triangulation triangulate(const GridCellComplex& g);

// ---- gadget instances --------------------------------------------------------
enum class GadgetKind {
    BingRoomThin,
    BingRoomThick,
    BingRoomCollapsed,
    BingHouse,
    ThreeRoomHouse,
    ThreeRoomCollapsed,
    Literal,
    Conjunction,
    Clause,
    BL,
    Disk,
    DunceHat,
    ThickWall,
};

enum class WallVariant { Thin, Thick, Collapsed };

struct GadgetInstance {
    GadgetKind kind;
    LabeledComplex labeled;
    // One verified certificate per implemented lemma item, keyed by name.
    std::map<std::string, CollapseCertificate> scripted_certificates;
};

// The classic contractible complex with no free faces: a disk whose
// boundary is glued along the word a a a^{-1}. Not collapsible.
GadgetInstance dunce_hat();

// The triangulated thick wall on vertices 0-9 (four prisms around the
// central axis 89). Variants: the full 3-dimensional wall; the residue with
// edge 01 in no 2-cell (fans + top rectangle); the residue keeping
// rectangles 0462, 0451, 4576, 2673, 0132 with edge 89 in no 2-cell.
// The full variant carries certificates "to_01_free" and "to_rectangles".
enum class ThickWallVariant { Full, CollapsedTo01Free, CollapsedKeepRectangles };
GadgetInstance thick_wall(ThickWallVariant variant);

GadgetInstance bing_room(WallVariant wall);
GadgetInstance bing_house(WallVariant w1, WallVariant w2);
GadgetInstance three_room_house(bool collapsed);

// Literal gadget K(l, ~l): X(l) and X(~l) glued along the shared edge 89 of
// their upper thick walls. `var` only affects label names.
GadgetInstance literal_gadget(int var);

// Conjunction gadget K_and for `vars` literal pairs: Bing's house with one
// collapsed and one thin wall, with the anchor tree A drawn on its shell.
GadgetInstance conjunction_gadget(const std::vector<int>& vars);

// Clause gadget K(c): the three-room house with collapsed walls, free edges
// labeled by the clause's literals. `lits` are signed variable indices.
GadgetInstance clause_gadget(const std::array<int, 3>& lits, int clause_index);

// Disk-gadget component B(l): house with one collapsed and one thin wall,
// gate labeled e(l), plus b(l) and one drawn path/edge pair per clause
// containing l.
GadgetInstance bl_gadget(int lit, const std::vector<int>& clause_indices);

// Full disk gadget D(l, ~l): B(l) and B(~l) wedged at v_and, the paths
// p(l), p(~l), edge a(l,~l), and the two filling disks.
GadgetInstance disk_gadget(int var, const std::vector<int>& pos_clauses,
                           const std::vector<int>& neg_clauses);

// Label-name helpers shared by gadgets, reduction, and tests.
std::string lit_name(int lit);  // 3 -> "3", -3 -> "n3"

}  // namespace whc

#endif
