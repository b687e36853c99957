#include "whc/homology.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace whc {

std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& K) {
    const int d = K.dim();
    std::vector<BoundaryMatrix> out;
    if (d < 1) return out;
    // Per-dimension face lists in lex order, with index maps.
    std::vector<std::vector<Face>> by_dim(d + 1);
    for (const Face& f : K.faces()) by_dim[face_dim(f)].push_back(f);
    std::vector<std::map<Face, int>> idx(d + 1);
    for (int k = 0; k <= d; ++k)
        for (std::size_t i = 0; i < by_dim[k].size(); ++i) idx[k][by_dim[k][i]] = static_cast<int>(i);

    for (int k = 1; k <= d; ++k) {
        BoundaryMatrix b;
        b.k = k;
        b.rows = by_dim[k - 1];
        b.cols = by_dim[k];
        b.entries.resize(b.cols.size());
        for (std::size_t c = 0; c < b.cols.size(); ++c) {
            const Face& f = b.cols[c];
            // d(f) = sum over positions i of (-1)^i * (f minus vertex i),
            // with f's vertices in sorted order.
            for (std::size_t i = 0; i < f.size(); ++i) {
                Face g;
                g.reserve(f.size() - 1);
                for (std::size_t j = 0; j < f.size(); ++j)
                    if (j != i) g.push_back(f[j]);
                int r = idx[k - 1].at(g);
                b.entries[c].emplace_back(r, (i % 2 == 0) ? 1 : -1);
            }
        }
        out.push_back(std::move(b));
    }
    return out;
}

bool boundaries_compose_to_zero(const SimplicialComplex& K) {
    auto mats = boundary_matrices(K);
    for (std::size_t i = 0; i + 1 < mats.size(); ++i) {
        const BoundaryMatrix& low = mats[i];    // k -> k-1
        const BoundaryMatrix& high = mats[i + 1];  // k+1 -> k
        // For each (k+1)-face, accumulate the composite chain and require 0.
        for (const auto& col : high.entries) {
            std::map<int, long long> acc;
            for (auto [mid, s1] : col)
                for (auto [r, s2] : low.entries[mid]) acc[r] += static_cast<long long>(s1) * s2;
            for (auto& [r, v] : acc)
                if (v != 0) return false;
        }
    }
    return true;
}

void SparseIntMatrix::set(int r, int c, const mpz_class& v) {
    if (r < 0 || r >= rows || c < 0 || c >= cols)
        throw std::out_of_range("SparseIntMatrix::set");
    if (v == 0)
        row_data[r].erase(c);
    else
        row_data[r][c] = v;
}

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<long long>>& dense) {
    SparseIntMatrix m;
    m.rows = static_cast<int>(dense.size());
    m.cols = m.rows ? static_cast<int>(dense[0].size()) : 0;
    m.row_data.resize(m.rows);
    for (int r = 0; r < m.rows; ++r) {
        if (static_cast<int>(dense[r].size()) != m.cols)
            throw std::invalid_argument("ragged matrix");
        for (int c = 0; c < m.cols; ++c)
            if (dense[r][c] != 0) m.row_data[r][c] = mpz_class(static_cast<long>(dense[r][c]));
    }
    return m;
}

SparseIntMatrix SparseIntMatrix::from_boundary(const BoundaryMatrix& b) {
    SparseIntMatrix m;
    m.rows = static_cast<int>(b.rows.size());
    m.cols = static_cast<int>(b.cols.size());
    m.row_data.resize(m.rows);
    for (int c = 0; c < m.cols; ++c)
        for (auto [r, v] : b.entries[c]) m.row_data[r][c] = v;
    return m;
}

namespace {

// Column index: for each column, the set of rows holding a nonzero entry.
struct ColIndex {
    std::vector<std::set<int>> rows_of;
    explicit ColIndex(const SparseIntMatrix& m) : rows_of(m.cols) {
        for (int r = 0; r < m.rows; ++r)
            for (const auto& [c, v] : m.row_data[r]) rows_of[c].insert(r);
    }
};

}  // namespace

SmithResult smith_normal_form(SparseIntMatrix M) {
    ColIndex ci(M);
    std::vector<char> row_done(M.rows, 0), col_done(M.cols, 0);
    std::vector<mpz_class> diagonal;

    auto set_entry = [&](int r, int c, const mpz_class& v) {
        if (v == 0) {
            M.row_data[r].erase(c);
            ci.rows_of[c].erase(r);
        } else {
            M.row_data[r][c] = v;
            ci.rows_of[c].insert(r);
        }
    };

    // row[dst] -= q * row[src]
    auto row_axpy = [&](int dst, int src, const mpz_class& q) {
        if (q == 0) return;
        for (const auto& [c, v] : M.row_data[src]) {
            auto it = M.row_data[dst].find(c);
            mpz_class nv = (it == M.row_data[dst].end() ? mpz_class(0) : it->second) - q * v;
            set_entry(dst, c, nv);
        }
    };
    // col[dst] -= q * col[src]
    auto col_axpy = [&](int dst, int src, const mpz_class& q) {
        if (q == 0) return;
        std::vector<int> rows(ci.rows_of[src].begin(), ci.rows_of[src].end());
        for (int r : rows) {
            const mpz_class& v = M.row_data[r].at(src);
            auto it = M.row_data[r].find(dst);
            mpz_class nv = (it == M.row_data[r].end() ? mpz_class(0) : it->second) - q * v;
            set_entry(r, dst, nv);
        }
    };

    for (;;) {
        // Pivot choice: unit entries first (no growth), then smallest
        // magnitude; ties broken by least fill (nnz products).
        int pr = -1, pc = -1;
        bool pivot_unit = false;
        mpz_class pivot_abs;
        long long pivot_fill = 0;
        for (int r = 0; r < M.rows; ++r) {
            if (row_done[r]) continue;
            for (const auto& [c, v] : M.row_data[r]) {
                if (col_done[c]) continue;
                mpz_class a = abs(v);
                bool unit = (a == 1);
                long long fill = static_cast<long long>(M.row_data[r].size() - 1) *
                                 static_cast<long long>(ci.rows_of[c].size() - 1);
                bool better;
                if (pr < 0)
                    better = true;
                else if (unit != pivot_unit)
                    better = unit;
                else if (unit)
                    better = fill < pivot_fill;
                else
                    better = a < pivot_abs || (a == pivot_abs && fill < pivot_fill);
                if (better) {
                    pr = r;
                    pc = c;
                    pivot_unit = unit;
                    pivot_abs = a;
                    pivot_fill = fill;
                }
            }
        }
        if (pr < 0) break;  // matrix is zero on the active block

        // Clean the pivot's row and column: Euclidean reduction until the
        // pivot is the only nonzero in both.
        for (;;) {
            bool changed = false;
            // Reduce the pivot column.
            std::vector<int> col_rows(ci.rows_of[pc].begin(), ci.rows_of[pc].end());
            for (int r : col_rows) {
                if (r == pr || row_done[r]) continue;
                mpz_class q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), M.row_data[r].at(pc).get_mpz_t(),
                            M.row_data[pr].at(pc).get_mpz_t());
                row_axpy(r, pr, q);
                if (rem != 0) {
                    pr = r;  // strictly smaller remainder becomes the pivot
                    changed = true;
                    break;
                }
            }
            if (changed) continue;
            // Reduce the pivot row.
            std::vector<int> row_cols;
            for (const auto& [c, v] : M.row_data[pr])
                if (c != pc && !col_done[c]) row_cols.push_back(c);
            for (int c : row_cols) {
                mpz_class q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), M.row_data[pr].at(c).get_mpz_t(),
                            M.row_data[pr].at(pc).get_mpz_t());
                col_axpy(c, pc, q);
                if (M.row_data[pr].count(c)) {
                    pc = c;
                    changed = true;
                    break;
                }
            }
            if (changed) continue;
            // Pivot alone in row and column?
            bool row_clean = true, col_clean = true;
            for (const auto& [c, v] : M.row_data[pr])
                if (c != pc && !col_done[c]) { row_clean = false; break; }
            for (int r : ci.rows_of[pc])
                if (r != pr && !row_done[r]) { col_clean = false; break; }
            if (row_clean && col_clean) break;
        }

        diagonal.push_back(abs(M.row_data[pr].at(pc)));
        row_done[pr] = 1;
        col_done[pc] = 1;
        set_entry(pr, pc, 0);
    }

    // Divisor-chain normalization: diag(a,b) is equivalent to
    // diag(gcd(a,b), lcm(a,b)); iterate until d1 | d2 | ...
    for (bool dirty = true; dirty;) {
        dirty = false;
        for (std::size_t i = 0; i < diagonal.size(); ++i) {
            for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
                if (diagonal[i] == 1) break;
                mpz_class g = gcd(diagonal[i], diagonal[j]);
                if (g != diagonal[i]) {
                    mpz_class l = diagonal[i] / g * diagonal[j];
                    diagonal[i] = g;
                    diagonal[j] = l;
                    dirty = true;
                }
            }
        }
    }
    std::sort(diagonal.begin(), diagonal.end());

    SmithResult res;
    res.invariant_factors = std::move(diagonal);
    res.rank = static_cast<int>(res.invariant_factors.size());
    return res;
}

HomologyProfile homology(const SimplicialComplex& K) {
    if (K.empty()) throw std::invalid_argument("homology: empty complex");
    const int d = K.dim();
    auto mats = boundary_matrices(K);

    // rank and torsion of each boundary map; rank_of[k] = rank d_k,
    // with d_0 = 0 and d_{d+1} = 0.
    std::vector<int> rank_of(d + 2, 0);
    std::vector<std::vector<mpz_class>> tors_of(d + 2);
    for (const auto& b : mats) {
        SmithResult s = smith_normal_form(SparseIntMatrix::from_boundary(b));
        rank_of[b.k] = s.rank;
        for (const auto& f : s.invariant_factors)
            if (f > 1) tors_of[b.k].push_back(f);
    }

    HomologyProfile prof;
    prof.betti.resize(d + 1);
    prof.torsion.resize(d + 1);
    for (int k = 0; k <= d; ++k) {
        long long n_k = static_cast<long long>(K.count_dim(k));
        prof.betti[k] = n_k - rank_of[k] - rank_of[k + 1];
        prof.torsion[k] = tors_of[k + 1];  // torsion of H_k comes from d_{k+1}
    }
    return prof;
}

std::string HomologyProfile::to_string() const {
    std::ostringstream out;
    for (std::size_t k = 0; k < betti.size(); ++k) {
        out << "H_" << k << " = Z^" << betti[k];
        for (const auto& t : torsion[k]) out << " ⊕ Z/" << t.get_str();
        out << '\n';
    }
    return out.str();
}

bool is_point_like(const SimplicialComplex& K) {
    HomologyProfile p = homology(K);
    if (p.betti.empty() || p.betti[0] != 1) return false;
    for (std::size_t k = 1; k < p.betti.size(); ++k)
        if (p.betti[k] != 0) return false;
    for (const auto& t : p.torsion)
        if (!t.empty()) return false;
    return true;
}

}  // namespace whc
