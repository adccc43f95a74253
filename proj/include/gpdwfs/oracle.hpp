#pragma once

#include <cstdint>
#include <random>

#include "gpdwfs/engine.hpp"

namespace gpdwfs {

struct SearchBudget {
    std::size_t max_candidates = 1000000;
    double max_seconds = 60.0;
};

// Every functor X -> B, complete and in canonical order. Enumeration
// backtracks over object images, then arrow images in canonical order with
// identities and inverses forced and composition consistency checked
// incrementally. Throws BudgetExceeded rather than truncating.
std::vector<Functor> enumerate_functors(const GroupoidPtr& x, const GroupoidPtr& b,
                                        const SearchBudget& budget);

// Streaming form of the same enumeration; avoids materializing large functor
// sets when only a filtered subset is needed.
void for_each_functor(const GroupoidPtr& x, const GroupoidPtr& b, const SearchBudget& budget,
                      const std::function<void(const Functor&)>& sink);

// Reference implementation without forcing or pruning; for cross-checks at
// tiny sizes only.
std::vector<Functor> enumerate_functors_naive(const GroupoidPtr& x, const GroupoidPtr& b,
                                              const SearchBudget& budget);

// Number of candidate functors the filler search for prob would examine.
std::size_t filler_search_space(const LiftingProblem& prob);

// All diagonal fillers of prob, complete within budget.
std::vector<Filler> find_fillers(const LiftingProblem& prob, const SearchBudget& budget);

// Decides f against g by reducing every lifting problem to identity-bottom
// form first (pull the fibration back along each bottom arrow).
bool has_llp(const Functor& f, const Fibration& g, const SearchBudget& budget);

// Same verdict, but decides every square directly without the reduction.
bool has_llp_direct(const Functor& f, const Fibration& g, const SearchBudget& budget);

// An unsolvable problem witnessing has_llp = false, if one exists.
std::optional<LiftingProblem> find_llp_counterexample(const Functor& f, const Fibration& g,
                                                      const SearchBudget& budget);

struct SizeBounds {
    std::size_t max_objects = 4;
    std::size_t max_arrows = 12;
};

struct LawTally {
    std::string law;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::vector<std::string> counterexamples;  // serialized, replayable
};

struct VerificationReport {
    std::uint64_t seed = 0;
    SizeBounds bounds;
    std::size_t groupoid_count = 0;
    std::size_t functor_count = 0;
    std::size_t fibration_count = 0;
    std::vector<LawTally> laws;

    bool all_pass() const {
        for (const auto& t : laws)
            if (t.failed) return false;
        return true;
    }
};

// Runs every law suite over a seeded random universe of small groupoids,
// functors and fibrations. Deterministic: same seed and bounds give the same
// report.
VerificationReport verify_wfs(std::uint64_t seed, const SizeBounds& bounds,
                              const SearchBudget& budget);

// Seeded random instances, shared between verify_wfs and the test suites.
GroupoidPtr random_groupoid(std::mt19937_64& rng, const SizeBounds& bounds);
Functor random_functor(std::mt19937_64& rng, const GroupoidPtr& x, const GroupoidPtr& b,
                       const SearchBudget& budget);
// Fibrations with well-formed cleavages: identities, terminals, product
// projections, path boundaries, base changes and composites thereof.
std::vector<Fibration> sample_fibrations(std::mt19937_64& rng, const GroupoidPtr& base,
                                         std::size_t count);

}  // namespace gpdwfs
