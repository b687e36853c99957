// Collapse certificates and the engine around them: verification/replay,
// constraint-complex lifting, greedy codimension-1 collapsing, the
// exhaustive collapsibility decider, and target-guided certificate search.
#ifndef WHC_COLLAPSE_HPP
#define WHC_COLLAPSE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "whc/core.hpp"

namespace whc {

struct CollapseStep {
    Face sigma;
    Face tau;
    bool operator==(const CollapseStep& o) const { return sigma == o.sigma && tau == o.tau; }
};

struct CollapseCertificate {
    std::vector<CollapseStep> steps;
    SimplicialComplex target;
};

struct VerifyResult {
    bool ok = false;
    // Index of the first failing step (steps.size() means the replay ran but
    // the final complex differs from the target). -1 when ok.
    long long failed_step = -1;
    std::string reason;
};

VerifyResult verify_certificate_detail(const SimplicialComplex& K, const CollapseCertificate& cert);
bool verify_certificate(const SimplicialComplex& K, const CollapseCertificate& cert);

// Replays the steps and returns the final complex; throws std::runtime_error
// with the failing step index on an invalid step.
SimplicialComplex apply_certificate(const SimplicialComplex& K, const CollapseCertificate& cert);

struct ConstraintComplex {
    SimplicialComplex gamma;
};

// gamma = { theta in L : theta subset of eta for some eta in M \ L }.
// Throws std::invalid_argument if L is not a subcomplex of M.
ConstraintComplex constraint_complex(const SimplicialComplex& M, const SimplicialComplex& L);

// Lemma: if L collapses to L' avoiding gamma(M,L) (i.e. gamma subset of L'),
// the same steps collapse M to L' union (M \ L). Returns that certificate.
// Throws std::invalid_argument naming an offending face when the
// precondition fails.
CollapseCertificate lift_collapse(const SimplicialComplex& M, const SimplicialComplex& L,
                                  const CollapseCertificate& cert_L);

// Repeatedly collapses a free (d-1)-face contained in a d-face, d = dim K,
// until none exists. Deterministic variant picks the lexicographically
// smallest eligible face; the seeded variant picks uniformly at random among
// eligible faces (for tie-break-invariance property tests).
std::pair<SimplicialComplex, CollapseCertificate> greedy_codim1(const SimplicialComplex& K);
std::pair<SimplicialComplex, CollapseCertificate> greedy_codim1_seeded(const SimplicialComplex& K,
                                                                       std::uint64_t seed);

struct DecisionOutcome {
    enum class Verdict { Collapsible, NotCollapsible, Exhausted };
    Verdict verdict = Verdict::Exhausted;
    std::optional<CollapseCertificate> certificate;  // present iff Collapsible
    std::uint64_t nodes_visited = 0;
    std::uint64_t budget = 0;
};

// Exhaustive backtracking over free-face choices, memoized on the canonical
// hash of the remaining complex. Collapsible iff some sequence reaches a
// single vertex. NotCollapsible only on fully exhausted search space;
// Exhausted when the node budget was hit first.
DecisionOutcome decide_collapsible(const SimplicialComplex& K, std::uint64_t budget);

// Same search without the memo table (oracle for memoization transparency).
DecisionOutcome decide_collapsible_naive(const SimplicialComplex& K, std::uint64_t budget);

// Decides whether K collapses to a complex of dimension <= k. For
// k = dim K - 1 delegates to greedy_codim1; otherwise backtracking search.
DecisionOutcome decide_collapses_to_dim(const SimplicialComplex& K, int k, std::uint64_t budget);

// Searches for a collapse of K onto exactly `target` (a subcomplex of K;
// no step removes a target face). Uses greedy descent with backtracking and
// a failed-state memo. Returns nullopt if no sequence was found within the
// node budget.
std::optional<CollapseCertificate> guided_collapse(const SimplicialComplex& K,
                                                   const SimplicialComplex& target,
                                                   std::uint64_t budget);

// ---- bounded prefix-order search -------------------------------------------
// Explores all collapse prefixes of K (up to `max_depth` steps and
// `node_budget` search nodes) and reports the first prefix, if any, whose
// state satisfies `violation`. Used for the gadget order lemmas where a
// property must hold on every reachable prefix.
struct PrefixSearchReport {
    bool counterexample_found = false;
    std::vector<CollapseStep> counterexample;  // prefix reaching the violation
    std::uint64_t nodes_visited = 0;
    std::uint64_t states_seen = 0;
    int depth_reached = 0;       // deepest prefix length explored
    bool exhausted = false;      // true iff the entire prefix space (within
                                 // max_depth) was covered without budget cut
    std::uint64_t node_budget = 0;
    int max_depth = 0;
};

class CollapseState;  // defined in collapse.cpp; opaque handle for callbacks

// Callback receives the mutable search state (read-only queries) and the
// prefix so far; returns true when the prefix violates the property.
// Exhaustiveness is guaranteed over reachable STATES: prefixes reaching an
// already-expanded state at the same or greater depth are pruned, so the
// predicate must be a function of the state (the prefix argument is reliable
// for reporting and for depth-1 gating, where states and first steps are in
// bijection).
using PrefixPredicate =
    std::function<bool(const class PrefixView&, const std::vector<CollapseStep>&)>;

// Read-only view of a search state, passed to prefix predicates.
class PrefixView {
  public:
    explicit PrefixView(const void* impl) : impl_(impl) {}
    bool alive(const Face& f) const;          // face currently present
    bool was_removed(const Face& f) const;    // face removed by the prefix
  private:
    const void* impl_;
};

PrefixSearchReport search_prefixes(const SimplicialComplex& K, const PrefixPredicate& violation,
                                   int max_depth, std::uint64_t node_budget);

}  // namespace whc

#endif
