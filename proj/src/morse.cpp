#include "whc/morse.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace whc {

HasseDiagram hasse_diagram(const SimplicialComplex& K) {
    HasseDiagram h;
    std::map<Face, int> idx;
    for (const Face& f : K.faces()) {
        idx[f] = static_cast<int>(h.nodes.size());
        h.nodes.push_back(f);
    }
    for (const Face& f : K.faces()) {
        if (f.size() < 2) continue;
        int fi = idx.at(f);
        for (const Face& b : boundary_faces(f)) h.covers.emplace_back(idx.at(b), fi);
    }
    return h;
}

MorseMatching certificate_to_matching(const SimplicialComplex& K,
                                      const CollapseCertificate& cert) {
    VerifyResult vr = verify_certificate_detail(K, cert);
    if (!vr.ok)
        throw std::invalid_argument("certificate_to_matching: certificate invalid at step " +
                                    std::to_string(vr.failed_step) + " (" + vr.reason + ")");
    if (cert.target.size() != 1 || cert.target.dim() != 0)
        throw std::invalid_argument("certificate_to_matching: certificate must end at one vertex");

    MorseMatching m;
    SimplicialComplex cur = K;
    for (const auto& st : cert.steps) {
        // Removed interval = all faces containing sigma; they all lie under
        // tau because tau is sigma's unique maximal coface.
        std::set<Face> interval = cur.star(st.sigma);
        // Fixed pairing vertex: smallest vertex of tau \ sigma.
        int v = -1;
        for (int x : st.tau)
            if (!std::binary_search(st.sigma.begin(), st.sigma.end(), x)) {
                v = x;
                break;
            }
        if (v < 0) throw std::logic_error("certificate_to_matching: tau equals sigma");
        for (const Face& f : interval) {
            if (std::binary_search(f.begin(), f.end(), v)) continue;
            Face g = f;
            g.insert(std::lower_bound(g.begin(), g.end(), v), v);
            m.pairs.emplace_back(f, g);
        }
        cur = cur.elementary_collapse(st.sigma);
    }
    for (const Face& f : cur.faces()) m.critical.push_back(f);
    return m;
}

bool is_acyclic(const SimplicialComplex& K, const MorseMatching& m) {
    std::map<Face, int> idx;
    int n = 0;
    for (const Face& f : K.faces()) idx[f] = n++;

    // Validate the matching: cover pairs, each face used at most once.
    std::vector<int> used(n, 0);
    std::map<std::pair<int, int>, bool> matched;
    for (const auto& [s, t] : m.pairs) {
        auto si = idx.find(s), ti = idx.find(t);
        if (si == idx.end() || ti == idx.end())
            throw std::invalid_argument("is_acyclic: pair face not in complex");
        if (t.size() != s.size() + 1 || !face_subset(s, t))
            throw std::invalid_argument("is_acyclic: pair is not a cover pair");
        if (used[si->second]++ || used[ti->second]++)
            throw std::invalid_argument("is_acyclic: face matched twice");
        matched[{si->second, ti->second}] = true;
    }

    // Hasse digraph, cover edges pointing down except matched ones reversed.
    std::vector<std::vector<int>> adj(n);
    for (const Face& f : K.faces()) {
        if (f.size() < 2) continue;
        int fi = idx.at(f);
        for (const Face& b : boundary_faces(f)) {
            int bi = idx.at(b);
            if (matched.count({bi, fi}))
                adj[bi].push_back(fi);  // matched cover points up
            else
                adj[fi].push_back(bi);
        }
    }

    // Iterative three-color DFS for a directed cycle.
    std::vector<int> color(n, 0);  // 0 white, 1 grey, 2 black
    std::vector<std::pair<int, std::size_t>> stack;
    for (int s = 0; s < n; ++s) {
        if (color[s] != 0) continue;
        stack.emplace_back(s, 0);
        color[s] = 1;
        while (!stack.empty()) {
            auto& [u, next] = stack.back();
            if (next < adj[u].size()) {
                int w = adj[u][next++];
                if (color[w] == 1) return false;  // back edge: cycle
                if (color[w] == 0) {
                    color[w] = 1;
                    stack.emplace_back(w, 0);
                }
            } else {
                color[u] = 2;
                stack.pop_back();
            }
        }
    }
    return true;
}

bool is_perfect(const MorseMatching& m) {
    return m.critical.size() == 1 && m.critical[0].size() == 1;
}

}  // namespace whc
