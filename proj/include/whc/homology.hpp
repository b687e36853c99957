// Integer simplicial homology via Smith normal form: boundary matrices with
// the sorted-vertex orientation convention, exact arbitrary-precision
// elimination, betti numbers and torsion coefficients.
#ifndef WHC_HOMOLOGY_HPP
#define WHC_HOMOLOGY_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "whc/core.hpp"

namespace whc {

struct BoundaryMatrix {
    int k = 0;                   // maps k-chains to (k-1)-chains
    std::vector<Face> rows;      // (k-1)-faces, lex order
    std::vector<Face> cols;      // k-faces, lex order
    // entries[c] lists (row, value) with value in {-1, +1}
    std::vector<std::vector<std::pair<int, int>>> entries;
};

// One matrix per k = 1..dim(K).
std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& K);

// Checks the composite of consecutive boundary maps is zero.
bool boundaries_compose_to_zero(const SimplicialComplex& K);

struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    // row-major: row index -> {col -> value}, zero values never stored
    std::vector<std::map<int, mpz_class>> row_data;

    void set(int r, int c, const mpz_class& v);
    static SparseIntMatrix from_dense(const std::vector<std::vector<long long>>& dense);
    static SparseIntMatrix from_boundary(const BoundaryMatrix& b);
};

struct SmithResult {
    std::vector<mpz_class> invariant_factors;  // d1 | d2 | ..., all positive
    int rank = 0;                              // number of nonzero factors
};

// Exact Smith normal form by integer row/column elimination with unit-pivot
// preference; the diagonal is divisor-chain normalized at the end.
SmithResult smith_normal_form(SparseIntMatrix M);

struct HomologyProfile {
    // betti[k] and torsion[k] for k = 0..dim
    std::vector<long long> betti;
    std::vector<std::vector<mpz_class>> torsion;  // invariant factors > 1

    std::string to_string() const;  // one "H_k = Z^b (+) Z/d ..." line per k
};

HomologyProfile homology(const SimplicialComplex& K);

// True iff betti_0 = 1, all higher betti vanish, and there is no torsion.
bool is_point_like(const SimplicialComplex& K);

}  // namespace whc

#endif
