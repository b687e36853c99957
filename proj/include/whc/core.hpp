// Core types for finite abstract simplicial complexes: faces, complexes,
// labeled complexes, and the primitive queries (free faces, elementary
// collapse, Euler characteristic, stars).
#ifndef WHC_CORE_HPP
#define WHC_CORE_HPP

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace whc {

// A face is a strictly increasing, non-empty sequence of vertex ids.
using Face = std::vector<int>;

inline int face_dim(const Face& f) { return static_cast<int>(f.size()) - 1; }

bool is_valid_face(const Face& f);

// Throws std::invalid_argument on unsorted/duplicate/empty input.
void check_face(const Face& f);

// True if a is a subset of b (both strictly sorted).
bool face_subset(const Face& a, const Face& b);

// All non-empty proper subsets of f would be 2^(k+1)-2 faces; we mostly need
// the codimension-1 ones.
std::vector<Face> boundary_faces(const Face& f);

Face parse_face(const std::string& text);
std::string face_to_string(const Face& f);

class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    // Downward closure of the given faces. Inputs need not be inclusion-
    // maximal; duplicates are fine.
    static SimplicialComplex close_downward(const std::vector<Face>& maximal_faces);

    const std::set<Face>& faces() const { return faces_; }
    const std::set<Face>& maximal_faces() const { return maximal_; }

    bool contains(const Face& f) const { return faces_.count(f) > 0; }
    bool is_maximal(const Face& f) const { return maximal_.count(f) > 0; }
    bool empty() const { return faces_.empty(); }
    std::size_t size() const { return faces_.size(); }

    // Max face dimension; -1 for the empty complex.
    int dim() const;

    long long euler_characteristic() const;

    // Number of k-faces.
    std::size_t count_dim(int k) const;
    std::vector<Face> dim_faces(int k) const;

    // All faces containing sigma (including sigma itself if present).
    std::set<Face> star(const Face& sigma) const;

    // Every non-maximal sigma contained in exactly one maximal face tau,
    // paired with that tau, in lexicographic order of sigma.
    std::vector<std::pair<Face, Face>> free_faces() const;

    // If sigma is free, returns (true, tau). Otherwise (false, _).
    std::pair<bool, Face> free_coface(const Face& sigma) const;

    // Removes sigma and every face containing it. Throws if sigma is not
    // free (callers that want a soft check use free_coface first).
    SimplicialComplex elementary_collapse(const Face& sigma) const;

    // Set-level helpers used by the engine and the gadget builders.
    bool is_subcomplex_of(const SimplicialComplex& other) const;
    SimplicialComplex union_with(const SimplicialComplex& other) const;
    SimplicialComplex difference_closure(const SimplicialComplex& other) const;

    // Complex with every face relabeled through the vertex map (which must
    // be injective on the vertices actually used).
    SimplicialComplex relabel(const std::map<int, int>& vertex_map) const;

    std::set<int> vertices() const;

    // 64+64-bit canonical hash of the sorted face list; equal complexes
    // hash equal across runs (content-derived, no RNG).
    std::pair<std::uint64_t, std::uint64_t> canonical_hash() const;

    bool operator==(const SimplicialComplex& other) const { return faces_ == other.faces_; }
    bool operator!=(const SimplicialComplex& other) const { return faces_ != other.faces_; }

    // Internal: construct from an already downward-closed face set.
    static SimplicialComplex from_closed_set(std::set<Face> faces);

  private:
    void rebuild_maximal();

    std::set<Face> faces_;
    std::set<Face> maximal_;
};

// Stable content hash for a single face (used by the canonical complex hash
// and the search memo table).
std::pair<std::uint64_t, std::uint64_t> face_hash(const Face& f);

// An ordered edge list forming a simple path; stored exactly as given.
using EdgePath = std::vector<std::pair<int, int>>;

// True if edges form a connected simple path in K (consecutive edges share
// a vertex, no vertex repeats except at the shared junctions).
bool is_path(const SimplicialComplex& K, const EdgePath& edges);

struct LabeledComplex {
    SimplicialComplex complex;
    std::map<std::string, Face> face_labels;
    std::map<std::string, EdgePath> path_labels;

    void check() const;  // every labeled face/path edge is in the complex
};

}  // namespace whc

#endif
