#include "whc/collapse.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace whc {

namespace {

// Mutable face store over a fixed initial complex: faces only ever die, so
// the Hasse diagram is static and removal/undo are flag flips. All hot-path
// queries (freeness, free-face scans, interval removal) run here; the
// immutable SimplicialComplex API is the boundary of the engine.
class FaceIndex {
  public:
    explicit FaceIndex(const SimplicialComplex& K) {
        int i = 0;
        for (const Face& f : K.faces()) {
            index_[f] = i++;
            recs_.push_back(Rec{f, face_dim(f), {}, {}, true});
        }
        for (auto& r : recs_) {
            if (r.face.size() >= 2) {
                for (const Face& b : boundary_faces(r.face)) {
                    int bi = index_.at(b);
                    r.down.push_back(bi);
                    recs_[bi].up.push_back(static_cast<int>(&r - recs_.data()));
                }
            }
        }
        alive_count_ = static_cast<int>(recs_.size());
        hash_ = {0, 0};
        for (const auto& r : recs_) {
            auto [a, b] = face_hash(r.face);
            hash_.first ^= a;
            hash_.second ^= b;
        }
    }

    int size() const { return static_cast<int>(recs_.size()); }
    int alive_count() const { return alive_count_; }
    bool alive(int i) const { return recs_[i].alive; }
    const Face& face(int i) const { return recs_[i].face; }
    int dim(int i) const { return recs_[i].dim; }
    std::pair<std::uint64_t, std::uint64_t> hash() const { return hash_; }

    int find(const Face& f) const {
        auto it = index_.find(f);
        return it == index_.end() ? -1 : it->second;
    }

    bool is_maximal(int i) const {
        for (int u : recs_[i].up)
            if (recs_[u].alive) return false;
        return true;
    }

    // If face i is free, returns the index of its unique maximal coface,
    // else -1. Walks the alive up-set; bails out at the second maximal face.
    int free_coface(int i) const {
        if (!recs_[i].alive || is_maximal(i)) return -1;
        scratch_.clear();
        stack_.clear();
        stack_.push_back(i);
        int found = -1;
        while (!stack_.empty()) {
            int cur = stack_.back();
            stack_.pop_back();
            bool maximal = true;
            for (int u : recs_[cur].up) {
                if (!recs_[u].alive) continue;
                maximal = false;
                if (scratch_.insert(u).second) stack_.push_back(u);
            }
            if (maximal && cur != i) {
                // cur is a maximal face of the up-set; only reachable faces
                // above i are pushed, so cur contains i.
                if (found != -1 && found != cur) return -1;
                found = cur;
            }
        }
        // i itself non-maximal was checked, so some coface exists.
        return found;
    }

    // All alive faces containing face i (including i), ascending index order.
    std::vector<int> alive_star(int i) const {
        scratch_.clear();
        stack_.clear();
        std::vector<int> out;
        if (!recs_[i].alive) return out;
        stack_.push_back(i);
        scratch_.insert(i);
        while (!stack_.empty()) {
            int cur = stack_.back();
            stack_.pop_back();
            out.push_back(cur);
            for (int u : recs_[cur].up)
                if (recs_[u].alive && scratch_.insert(u).second) stack_.push_back(u);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // Removes the interval {theta : sigma subset theta} (sigma must be free;
    // caller is responsible). Returns the removed indices for undo.
    std::vector<int> remove_star(int sigma) {
        std::vector<int> removed = alive_star(sigma);
        for (int i : removed) kill(i);
        return removed;
    }

    void undo(const std::vector<int>& removed) {
        for (int i : removed) revive(i);
    }

    // Lexicographically ordered list of currently free faces (with their
    // unique maximal cofaces). Index order coincides with lex order on faces.
    std::vector<std::pair<int, int>> free_faces() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < size(); ++i) {
            if (!recs_[i].alive) continue;
            int tau = free_coface(i);
            if (tau >= 0) out.emplace_back(i, tau);
        }
        return out;
    }

    SimplicialComplex to_complex() const {
        std::set<Face> fs;
        for (const auto& r : recs_)
            if (r.alive) fs.insert(r.face);
        return SimplicialComplex::from_closed_set(std::move(fs));
    }

  private:
    struct Rec {
        Face face;
        int dim;
        std::vector<int> up;
        std::vector<int> down;
        bool alive;
    };

    void kill(int i) {
        recs_[i].alive = false;
        --alive_count_;
        auto [a, b] = face_hash(recs_[i].face);
        hash_.first ^= a;
        hash_.second ^= b;
    }
    void revive(int i) {
        recs_[i].alive = true;
        ++alive_count_;
        auto [a, b] = face_hash(recs_[i].face);
        hash_.first ^= a;
        hash_.second ^= b;
    }

    std::vector<Rec> recs_;
    std::map<Face, int> index_;
    int alive_count_ = 0;
    std::pair<std::uint64_t, std::uint64_t> hash_;
    mutable std::vector<int> stack_;
    mutable std::unordered_set<int> scratch_;
};

struct HashPair {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const {
        return static_cast<std::size_t>(p.first ^ (p.second * 0x9e3779b97f4a7c15ull));
    }
};

}  // namespace

VerifyResult verify_certificate_detail(const SimplicialComplex& K,
                                       const CollapseCertificate& cert) {
    FaceIndex fx(K);
    for (std::size_t s = 0; s < cert.steps.size(); ++s) {
        const auto& st = cert.steps[s];
        int i = fx.find(st.sigma);
        VerifyResult bad;
        bad.failed_step = static_cast<long long>(s);
        if (i < 0 || !fx.alive(i)) {
            bad.reason = "step sigma not present: " + face_to_string(st.sigma);
            return bad;
        }
        int tau = fx.free_coface(i);
        if (tau < 0) {
            bad.reason = "step sigma not free: " + face_to_string(st.sigma);
            return bad;
        }
        if (fx.face(tau) != st.tau) {
            bad.reason = "unique maximal coface of " + face_to_string(st.sigma) + " is " +
                         face_to_string(fx.face(tau)) + ", certificate claims " +
                         face_to_string(st.tau);
            return bad;
        }
        fx.remove_star(i);
    }
    if (fx.to_complex() != cert.target) {
        VerifyResult bad;
        bad.failed_step = static_cast<long long>(cert.steps.size());
        bad.reason = "final complex differs from target";
        return bad;
    }
    VerifyResult ok;
    ok.ok = true;
    return ok;
}

bool verify_certificate(const SimplicialComplex& K, const CollapseCertificate& cert) {
    return verify_certificate_detail(K, cert).ok;
}

SimplicialComplex apply_certificate(const SimplicialComplex& K, const CollapseCertificate& cert) {
    FaceIndex fx(K);
    for (std::size_t s = 0; s < cert.steps.size(); ++s) {
        const auto& st = cert.steps[s];
        int i = fx.find(st.sigma);
        int tau = (i >= 0 && fx.alive(i)) ? fx.free_coface(i) : -1;
        if (tau < 0 || fx.face(tau) != st.tau) {
            std::ostringstream msg;
            msg << "invalid certificate step " << s << ": " << face_to_string(st.sigma) << " -> "
                << face_to_string(st.tau);
            throw std::runtime_error(msg.str());
        }
        fx.remove_star(i);
    }
    return fx.to_complex();
}

ConstraintComplex constraint_complex(const SimplicialComplex& M, const SimplicialComplex& L) {
    if (!L.is_subcomplex_of(M))
        throw std::invalid_argument("constraint_complex: L is not a subcomplex of M");
    // Because L is downward-closed, "exists eta in M\L with theta subset
    // eta" is equivalent to "some inclusion-maximal face of M above theta is
    // outside L" (if every maximal face above theta lay in L, so would every
    // intermediate eta). So gamma is the union, over maximal faces m of M
    // with m not in L, of { subsets of m } intersected with L.
    std::set<Face> gamma;
    for (const Face& m : M.maximal_faces()) {
        if (L.contains(m)) continue;
        const std::size_t n = m.size();
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            Face theta;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) theta.push_back(m[i]);
            if (L.contains(theta)) gamma.insert(std::move(theta));
        }
    }
    return ConstraintComplex{SimplicialComplex::from_closed_set(std::move(gamma))};
}

CollapseCertificate lift_collapse(const SimplicialComplex& M, const SimplicialComplex& L,
                                  const CollapseCertificate& cert_L) {
    if (!L.is_subcomplex_of(M))
        throw std::invalid_argument("lift_collapse: L is not a subcomplex of M");
    VerifyResult vr = verify_certificate_detail(L, cert_L);
    if (!vr.ok)
        throw std::invalid_argument("lift_collapse: certificate does not verify on L (step " +
                                    std::to_string(vr.failed_step) + ": " + vr.reason + ")");
    ConstraintComplex gamma = constraint_complex(M, L);
    for (const Face& g : gamma.gamma.faces()) {
        if (!cert_L.target.contains(g))
            throw std::invalid_argument(
                "lift_collapse: constraint face removed by the certificate: " + face_to_string(g));
    }
    // Same steps, new target L' union (M \ L).
    CollapseCertificate lifted;
    lifted.steps = cert_L.steps;
    std::set<Face> fs = cert_L.target.faces();
    for (const Face& f : M.faces())
        if (!L.contains(f)) fs.insert(f);
    lifted.target = SimplicialComplex::from_closed_set(std::move(fs));
    return lifted;
}

namespace {

// Shared greedy loop; `pick` chooses among eligible (sigma, tau) pairs.
std::pair<SimplicialComplex, CollapseCertificate> greedy_codim1_impl(
    const SimplicialComplex& K,
    const std::function<std::size_t(const std::vector<std::pair<int, int>>&)>& pick) {
    const int d = K.dim();
    FaceIndex fx(K);
    CollapseCertificate cert;
    if (d < 1) {
        cert.target = K;
        return {K, cert};
    }
    for (;;) {
        std::vector<std::pair<int, int>> eligible;
        for (int i = 0; i < fx.size(); ++i) {
            if (!fx.alive(i) || fx.dim(i) != d - 1) continue;
            int tau = fx.free_coface(i);
            if (tau >= 0 && fx.dim(tau) == d) eligible.emplace_back(i, tau);
        }
        if (eligible.empty()) break;
        auto [sigma, tau] = eligible[pick(eligible)];
        cert.steps.push_back(CollapseStep{fx.face(sigma), fx.face(tau)});
        fx.remove_star(sigma);
    }
    SimplicialComplex result = fx.to_complex();
    cert.target = result;
    return {result, cert};
}

}  // namespace

std::pair<SimplicialComplex, CollapseCertificate> greedy_codim1(const SimplicialComplex& K) {
    return greedy_codim1_impl(K, [](const auto&) { return std::size_t{0}; });
}

std::pair<SimplicialComplex, CollapseCertificate> greedy_codim1_seeded(const SimplicialComplex& K,
                                                                       std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return greedy_codim1_impl(K, [&rng](const auto& eligible) {
        std::uniform_int_distribution<std::size_t> d(0, eligible.size() - 1);
        return d(rng);
    });
}

namespace {

// Backtracking collapsibility search. Goal: single alive vertex. Memoizes
// fully-refuted states when `use_memo`; truncated subtrees are never
// memoized (budget honesty).
struct DecideSearch {
    FaceIndex fx;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool truncated = false;
    bool use_memo;
    std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, HashPair> failed;
    std::vector<CollapseStep> steps;

    DecideSearch(const SimplicialComplex& K, std::uint64_t b, bool memo)
        : fx(K), budget(b), use_memo(memo) {}

    bool at_goal() const {
        if (fx.alive_count() != 1) return false;
        for (int i = 0; i < fx.size(); ++i)
            if (fx.alive(i)) return fx.dim(i) == 0;
        return false;
    }

    bool dfs() {
        if (at_goal()) return true;
        if (use_memo && failed.count(fx.hash())) return false;
        if (nodes >= budget) {
            truncated = true;
            return false;
        }
        ++nodes;
        bool truncated_before = truncated;
        auto moves = fx.free_faces();
        for (auto [sigma, tau] : moves) {
            steps.push_back(CollapseStep{fx.face(sigma), fx.face(tau)});
            auto removed = fx.remove_star(sigma);
            if (dfs()) return true;
            fx.undo(removed);
            steps.pop_back();
        }
        if (use_memo && truncated == truncated_before) failed.insert(fx.hash());
        return false;
    }
};

}  // namespace

DecisionOutcome decide_collapsible(const SimplicialComplex& K, std::uint64_t budget) {
    if (K.empty()) throw std::invalid_argument("decide_collapsible: empty complex");
    DecideSearch s(K, budget, true);
    DecisionOutcome out;
    out.budget = budget;
    bool found = s.dfs();
    out.nodes_visited = s.nodes;
    if (found) {
        out.verdict = DecisionOutcome::Verdict::Collapsible;
        CollapseCertificate cert;
        cert.steps = s.steps;
        cert.target = s.fx.to_complex();
        out.certificate = std::move(cert);
    } else if (s.truncated) {
        out.verdict = DecisionOutcome::Verdict::Exhausted;
    } else {
        out.verdict = DecisionOutcome::Verdict::NotCollapsible;
    }
    return out;
}

DecisionOutcome decide_collapsible_naive(const SimplicialComplex& K, std::uint64_t budget) {
    if (K.empty()) throw std::invalid_argument("decide_collapsible_naive: empty complex");
    DecideSearch s(K, budget, false);
    DecisionOutcome out;
    out.budget = budget;
    bool found = s.dfs();
    out.nodes_visited = s.nodes;
    if (found) {
        out.verdict = DecisionOutcome::Verdict::Collapsible;
        CollapseCertificate cert;
        cert.steps = s.steps;
        cert.target = s.fx.to_complex();
        out.certificate = std::move(cert);
    } else if (s.truncated) {
        out.verdict = DecisionOutcome::Verdict::Exhausted;
    } else {
        out.verdict = DecisionOutcome::Verdict::NotCollapsible;
    }
    return out;
}

namespace {

struct DimSearch {
    FaceIndex fx;
    int k;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool truncated = false;
    std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, HashPair> failed;
    std::vector<CollapseStep> steps;

    DimSearch(const SimplicialComplex& K, int k_, std::uint64_t b) : fx(K), k(k_), budget(b) {}

    int alive_dim() const {
        int d = -1;
        for (int i = 0; i < fx.size(); ++i)
            if (fx.alive(i)) d = std::max(d, fx.dim(i));
        return d;
    }

    bool dfs() {
        if (alive_dim() <= k) return true;
        if (failed.count(fx.hash())) return false;
        if (nodes >= budget) {
            truncated = true;
            return false;
        }
        ++nodes;
        bool truncated_before = truncated;
        auto moves = fx.free_faces();
        for (auto [sigma, tau] : moves) {
            steps.push_back(CollapseStep{fx.face(sigma), fx.face(tau)});
            auto removed = fx.remove_star(sigma);
            if (dfs()) return true;
            fx.undo(removed);
            steps.pop_back();
        }
        if (truncated == truncated_before) failed.insert(fx.hash());
        return false;
    }
};

}  // namespace

DecisionOutcome decide_collapses_to_dim(const SimplicialComplex& K, int k, std::uint64_t budget) {
    if (K.empty()) throw std::invalid_argument("decide_collapses_to_dim: empty complex");
    const int d = K.dim();
    if (k < 0 || k >= d)
        throw std::invalid_argument("decide_collapses_to_dim: requires 0 <= k < dim K");
    DecisionOutcome out;
    out.budget = budget;
    if (k == d - 1) {
        auto [result, cert] = greedy_codim1(K);
        out.nodes_visited = cert.steps.size();
        if (result.dim() <= k) {
            out.verdict = DecisionOutcome::Verdict::Collapsible;
            out.certificate = cert;
        } else {
            out.verdict = DecisionOutcome::Verdict::NotCollapsible;
        }
        return out;
    }
    DimSearch s(K, k, budget);
    bool found = s.dfs();
    out.nodes_visited = s.nodes;
    if (found) {
        out.verdict = DecisionOutcome::Verdict::Collapsible;
        CollapseCertificate cert;
        cert.steps = s.steps;
        cert.target = s.fx.to_complex();
        out.certificate = std::move(cert);
    } else if (s.truncated) {
        out.verdict = DecisionOutcome::Verdict::Exhausted;
    } else {
        out.verdict = DecisionOutcome::Verdict::NotCollapsible;
    }
    return out;
}

namespace {

// Guided search toward an exact target subcomplex. Move order: highest
// dimension first, then lex -- hollow solids, then eat surfaces, then trim
// the graph; this matches how the gadget cascades are meant to run and
// keeps backtracking rare.
struct GuidedSearch {
    FaceIndex fx;
    std::vector<char> keep;  // per-face: belongs to target
    int target_size;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool truncated = false;
    std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, HashPair> failed;
    std::vector<CollapseStep> steps;

    GuidedSearch(const SimplicialComplex& K, const SimplicialComplex& target, std::uint64_t b)
        : fx(K), budget(b) {
        keep.assign(fx.size(), 0);
        for (int i = 0; i < fx.size(); ++i)
            if (target.contains(fx.face(i))) keep[i] = 1;
        target_size = static_cast<int>(target.size());
    }

    bool dfs() {
        if (fx.alive_count() == target_size) return true;
        if (failed.count(fx.hash())) return false;
        if (nodes >= budget) {
            truncated = true;
            return false;
        }
        ++nodes;
        bool truncated_before = truncated;
        auto moves = fx.free_faces();
        std::stable_sort(moves.begin(), moves.end(), [&](const auto& a, const auto& b) {
            return fx.dim(a.first) > fx.dim(b.first);
        });
        for (auto [sigma, tau] : moves) {
            if (keep[sigma]) continue;  // target faces are never collapsed
            steps.push_back(CollapseStep{fx.face(sigma), fx.face(tau)});
            auto removed = fx.remove_star(sigma);
            if (dfs()) return true;
            fx.undo(removed);
            steps.pop_back();
        }
        if (truncated == truncated_before) failed.insert(fx.hash());
        return false;
    }
};

}  // namespace

std::optional<CollapseCertificate> guided_collapse(const SimplicialComplex& K,
                                                   const SimplicialComplex& target,
                                                   std::uint64_t budget) {
    if (!target.is_subcomplex_of(K))
        throw std::invalid_argument("guided_collapse: target is not a subcomplex of K");
    GuidedSearch s(K, target, budget);
    if (!s.dfs()) return std::nullopt;
    CollapseCertificate cert;
    cert.steps = s.steps;
    cert.target = s.fx.to_complex();
    // A free sigma outside the target can still drag kept faces out with its
    // star; equality of sizes plus keep-filter guarantees exactness, but we
    // assert it to be safe.
    if (cert.target != target) return std::nullopt;
    return cert;
}

// ---- prefix search ----------------------------------------------------------

namespace {

struct PrefixImpl {
    const FaceIndex* fx;
};

}  // namespace

bool PrefixView::alive(const Face& f) const {
    const auto* p = static_cast<const PrefixImpl*>(impl_);
    int i = p->fx->find(f);
    return i >= 0 && p->fx->alive(i);
}

bool PrefixView::was_removed(const Face& f) const {
    const auto* p = static_cast<const PrefixImpl*>(impl_);
    int i = p->fx->find(f);
    return i >= 0 && !p->fx->alive(i);
}

PrefixSearchReport search_prefixes(const SimplicialComplex& K, const PrefixPredicate& violation,
                                   int max_depth, std::uint64_t node_budget) {
    struct Search {
        FaceIndex fx;
        const PrefixPredicate& violation;
        int max_depth;
        std::uint64_t budget;
        PrefixSearchReport rep;
        std::vector<CollapseStep> prefix;
        // State -> shallowest depth it was expanded at. The same alive-set
        // can be reached by prefixes of different lengths (steps remove
        // variable-size intervals), and a shallower arrival leaves more room
        // under max_depth, so it must be re-expanded.
        std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, int, HashPair> seen;

        Search(const SimplicialComplex& K, const PrefixPredicate& v, int d, std::uint64_t b)
            : fx(K), violation(v), max_depth(d), budget(b) {}

        // Returns true when a counterexample was found (cut everything).
        bool dfs(int depth) {
            rep.depth_reached = std::max(rep.depth_reached, depth);
            PrefixImpl impl{&fx};
            PrefixView view(&impl);
            if (violation(view, prefix)) {
                rep.counterexample_found = true;
                rep.counterexample = prefix;
                return true;
            }
            if (depth >= max_depth) return false;
            if (rep.nodes_visited >= budget) {
                truncated = true;
                return false;
            }
            ++rep.nodes_visited;
            auto moves = fx.free_faces();
            for (auto [sigma, tau] : moves) {
                prefix.push_back(CollapseStep{fx.face(sigma), fx.face(tau)});
                auto removed = fx.remove_star(sigma);
                auto [it, fresh] = seen.try_emplace(fx.hash(), depth + 1);
                if (fresh) ++rep.states_seen;
                if (fresh || depth + 1 < it->second) {
                    it->second = depth + 1;
                    if (dfs(depth + 1)) return true;
                }
                fx.undo(removed);
                prefix.pop_back();
            }
            return false;
        }

        bool truncated = false;
    };

    Search s(K, violation, max_depth, node_budget);
    s.rep.node_budget = node_budget;
    s.rep.max_depth = max_depth;
    s.seen.emplace(s.fx.hash(), 0);
    s.rep.states_seen = 1;
    s.dfs(0);
    s.rep.exhausted = !s.truncated;
    return s.rep;
}

}  // namespace whc
