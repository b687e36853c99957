#include "whc/core.hpp"

#include <algorithm>
#include <sstream>

namespace whc {

bool is_valid_face(const Face& f) {
    if (f.empty()) return false;
    for (std::size_t i = 1; i < f.size(); ++i)
        if (f[i - 1] >= f[i]) return false;
    return true;
}

void check_face(const Face& f) {
    if (!is_valid_face(f))
        throw std::invalid_argument("face must be a non-empty strictly increasing vertex list: " +
                                    face_to_string(f));
}

bool face_subset(const Face& a, const Face& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Face> boundary_faces(const Face& f) {
    std::vector<Face> out;
    if (f.size() < 2) return out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        Face g;
        g.reserve(f.size() - 1);
        for (std::size_t j = 0; j < f.size(); ++j)
            if (j != i) g.push_back(f[j]);
        out.push_back(std::move(g));
    }
    return out;
}

Face parse_face(const std::string& text) {
    Face f;
    std::istringstream in(text);
    int v = 0;
    while (in >> v) f.push_back(v);
    if (!in.eof())
        throw std::invalid_argument("bad vertex list: " + text);
    std::sort(f.begin(), f.end());
    check_face(f);
    return f;
}

std::string face_to_string(const Face& f) {
    std::ostringstream out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out << ' ';
        out << f[i];
    }
    return out.str();
}

SimplicialComplex SimplicialComplex::close_downward(const std::vector<Face>& maximal_faces) {
    std::set<Face> closed;
    // Generate all non-empty subsets of each input face.
    for (const Face& f : maximal_faces) {
        check_face(f);
        const std::size_t n = f.size();
        if (n > 25) throw std::invalid_argument("face too large");
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            Face g;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) g.push_back(f[i]);
            closed.insert(std::move(g));
        }
    }
    return from_closed_set(std::move(closed));
}

SimplicialComplex SimplicialComplex::from_closed_set(std::set<Face> faces) {
    SimplicialComplex K;
    K.faces_ = std::move(faces);
    K.rebuild_maximal();
    return K;
}

void SimplicialComplex::rebuild_maximal() {
    maximal_.clear();
    // A face is non-maximal iff it is the codimension-1 boundary of some
    // other face; collect all such boundaries in one pass.
    std::set<Face> covered;
    for (const Face& f : faces_)
        if (f.size() >= 2)
            for (Face& g : boundary_faces(f)) covered.insert(std::move(g));
    for (const Face& f : faces_)
        if (!covered.count(f)) maximal_.insert(f);
}

int SimplicialComplex::dim() const {
    int d = -1;
    for (const Face& f : maximal_) d = std::max(d, face_dim(f));
    return d;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    for (const Face& f : faces_) chi += (face_dim(f) % 2 == 0) ? 1 : -1;
    return chi;
}

std::size_t SimplicialComplex::count_dim(int k) const {
    std::size_t n = 0;
    for (const Face& f : faces_)
        if (face_dim(f) == k) ++n;
    return n;
}

std::vector<Face> SimplicialComplex::dim_faces(int k) const {
    std::vector<Face> out;
    for (const Face& f : faces_)
        if (face_dim(f) == k) out.push_back(f);
    return out;
}

std::set<Face> SimplicialComplex::star(const Face& sigma) const {
    std::set<Face> out;
    for (const Face& f : faces_)
        if (face_subset(sigma, f)) out.insert(f);
    return out;
}

std::pair<bool, Face> SimplicialComplex::free_coface(const Face& sigma) const {
    if (!contains(sigma) || is_maximal(sigma)) return {false, {}};
    Face tau;
    int hits = 0;
    for (const Face& m : maximal_) {
        if (face_subset(sigma, m)) {
            ++hits;
            if (hits > 1) return {false, {}};
            tau = m;
        }
    }
    if (hits != 1) return {false, {}};
    return {true, tau};
}

std::vector<std::pair<Face, Face>> SimplicialComplex::free_faces() const {
    std::vector<std::pair<Face, Face>> out;
    for (const Face& f : faces_) {
        auto [ok, tau] = free_coface(f);
        if (ok) out.emplace_back(f, tau);
    }
    return out;
}

SimplicialComplex SimplicialComplex::elementary_collapse(const Face& sigma) const {
    auto [ok, tau] = free_coface(sigma);
    if (!ok)
        throw std::invalid_argument("face is not free: " + face_to_string(sigma));
    std::set<Face> rest;
    for (const Face& f : faces_)
        if (!face_subset(sigma, f)) rest.insert(f);
    return from_closed_set(std::move(rest));
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
    for (const Face& f : faces_)
        if (!other.contains(f)) return false;
    return true;
}

SimplicialComplex SimplicialComplex::union_with(const SimplicialComplex& other) const {
    std::set<Face> u = faces_;
    u.insert(other.faces_.begin(), other.faces_.end());
    return from_closed_set(std::move(u));
}

SimplicialComplex SimplicialComplex::difference_closure(const SimplicialComplex& other) const {
    // Faces of this complex not in other, re-closed downward so the result
    // is again a complex (lower faces sitting inside `other` are re-added).
    std::vector<Face> survivors;
    for (const Face& f : faces_)
        if (!other.contains(f)) survivors.push_back(f);
    return close_downward(survivors);
}

SimplicialComplex SimplicialComplex::relabel(const std::map<int, int>& vertex_map) const {
    std::set<Face> out;
    std::map<int, int> used;  // image -> preimage, to catch collisions
    for (const Face& f : faces_) {
        Face g;
        g.reserve(f.size());
        for (int v : f) {
            auto it = vertex_map.find(v);
            g.push_back(it == vertex_map.end() ? v : it->second);
        }
        std::sort(g.begin(), g.end());
        if (!is_valid_face(g))
            throw std::invalid_argument("vertex map identifies vertices of a face: " +
                                        face_to_string(f));
        out.insert(std::move(g));
    }
    return from_closed_set(std::move(out));
}

std::set<int> SimplicialComplex::vertices() const {
    std::set<int> out;
    for (const Face& f : faces_)
        for (int v : f) out.insert(v);
    return out;
}

namespace {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> face_hash(const Face& f) {
    std::uint64_t a = 0x8000000000000001ull;
    std::uint64_t b = 0x00000000000001b3ull;
    for (int v : f) {
        a = splitmix64(a ^ static_cast<std::uint64_t>(static_cast<std::int64_t>(v)));
        b = splitmix64(b + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(static_cast<std::int64_t>(v) + 0x51ull));
    }
    a = splitmix64(a ^ f.size());
    b = splitmix64(b ^ (f.size() * 0xff51afd7ed558ccdull));
    return {a, b};
}

std::pair<std::uint64_t, std::uint64_t> SimplicialComplex::canonical_hash() const {
    // XOR of per-face content hashes: order-independent and incremental.
    std::uint64_t a = 0, b = 0;
    for (const Face& f : faces_) {
        auto [ha, hb] = face_hash(f);
        a ^= ha;
        b ^= hb;
    }
    return {a, b};
}

bool is_path(const SimplicialComplex& K, const EdgePath& edges) {
    if (edges.empty()) return false;
    std::set<int> seen;
    int cur = -1;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [x, y] = edges[i];
        if (x == y) return false;
        Face e{std::min(x, y), std::max(x, y)};
        if (!K.contains(e)) return false;
        if (i == 0) {
            seen.insert(x);
            seen.insert(y);
            cur = y;
        } else {
            if (x != cur) return false;       // consecutive edges must chain
            if (seen.count(y)) return false;  // simple: no revisits
            seen.insert(y);
            cur = y;
        }
    }
    return true;
}

void LabeledComplex::check() const {
    for (const auto& [name, f] : face_labels) {
        if (!complex.contains(f))
            throw std::invalid_argument("label '" + name + "' names a missing face " +
                                        face_to_string(f));
    }
    for (const auto& [name, p] : path_labels) {
        if (!is_path(complex, p))
            throw std::invalid_argument("path label '" + name + "' is not a path in the complex");
    }
}

}  // namespace whc
