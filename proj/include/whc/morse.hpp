// Discrete-Morse bridge: collapse certificates to acyclic matchings on the
// face poset, plus the perfection check (one critical vertex).
#ifndef WHC_MORSE_HPP
#define WHC_MORSE_HPP

#include <utility>
#include <vector>

#include "whc/collapse.hpp"
#include "whc/core.hpp"

namespace whc {

struct HasseDiagram {
    std::vector<Face> nodes;                      // all faces, lex order
    std::vector<std::pair<int, int>> covers;      // (sub, super) index pairs,
                                                  // dim super = dim sub + 1
};

HasseDiagram hasse_diagram(const SimplicialComplex& K);

struct MorseMatching {
    std::vector<std::pair<Face, Face>> pairs;  // matched cover pairs (sigma, tau)
    std::vector<Face> critical;                // faces in no pair
};

// Converts a verified certificate ending at a single vertex into a Morse
// matching: within each removed interval [sigma_i, tau_i], every face not
// containing a fixed vertex v in tau_i \ sigma_i (the smallest such vertex)
// is paired with itself plus v. The surviving vertex is the critical cell.
// Throws std::invalid_argument if the certificate does not verify or does
// not end at a single vertex.
MorseMatching certificate_to_matching(const SimplicialComplex& K, const CollapseCertificate& cert);

// True iff the Hasse digraph of K with matched covers reversed (upward) has
// no directed cycle. Throws std::invalid_argument when `m` is not a matching
// on cover pairs of K.
bool is_acyclic(const SimplicialComplex& K, const MorseMatching& m);

// True iff exactly one critical cell remains and it is a vertex.
bool is_perfect(const MorseMatching& m);

}  // namespace whc

#endif
