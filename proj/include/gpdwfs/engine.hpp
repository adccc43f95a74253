#pragma once

#include <functional>
#include <optional>
#include <variant>

#include "gpdwfs/path_object.hpp"

namespace gpdwfs {

// Evidence that the left arrow of a problem lifts against every fibration.
//
// UnitPullbackWitness: the arrow is pi1 of a pullback cone (C; pi0, pi1) of
// the unit r_p along a fibration q into Path(p).
struct UnitPullbackWitness {
    Fibration p;   // the fibration whose path object is involved
    Fibration q;   // q : B -> Path(p)
    Functor pi0;   // C -> dom(p)
    Functor pi1;   // C -> B, the witnessed arrow itself
};

// FactorizationWitness: the arrow is the unit lambda = <id, r.f> of
// factorize(f).
struct FactorizationWitness {
    Functor f;
};

using LeftWitness = std::variant<UnitPullbackWitness, FactorizationWitness>;

struct LiftingProblem {
    Functor left;      // A -> X
    Fibration right;   // B -> Y
    Functor top;       // A -> B
    Functor bottom;    // X -> Y
    std::optional<LeftWitness> witness;
};

// right.top = bottom.left must hold on the nose.
Violations validate_problem(const LiftingProblem& prob);

struct Filler {
    Functor j;  // X -> B
};

// Both triangle equations, on the nose.
bool is_filler(const LiftingProblem& prob, const Filler& fill);

// The factorization f = rho . lambda through the mapping path object.
struct Factorization {
    Functor f;             // X -> Y
    PathObject path_cod;   // Path(Y), over the terminal fibration
    PullbackSquare map_sq; // Map(f) = pullback of f along d0_Y
    GroupoidPtr mid;       // Map(f)
    Functor lambda;        // X -> Map(f), the unit <id_X, r_Y . f>
    Fibration pm0;         // Map(f) -> X (base change, a fibration)
    Functor pm1;           // Map(f) -> Path(Y)
    Fibration rho;         // Map(f) -> Y with the second-component cleavage
};

Factorization factorize(const Functor& f);

// The chosen pullback of g along d0_p; proj0 is packaged as a fibration by
// base_change. Requires cod(g) = dom(p).
PullbackSquare mapping_path_object(const PathObject& po, const Functor& g);

// Lemma-style unit-square filler. The square is
//
//     C --f--> Ebar
//  pi1|          |qbar
//     B ======== B
//
// where (C; pi0, pi1) is a pullback cone of r_p along q. Returns j : B ->
// Ebar with qbar.j = id_B and j.pi1 = f, computed from the cleavages of q and
// qbar. Throws PreconditionViolated if the cone or the square is wrong.
Filler fill_unit_square(const PathObject& po, const Fibration& q, const Functor& pi0,
                        const Functor& pi1, const Fibration& qbar, const Functor& f);

// Transport u_!e for q.e = d0_p.u: the result satisfies q.(u_!e) = d1_p.u
// and (u_!e).g = e.g for every square with the unit.
Functor transport(const PathObject& po, const Fibration& q, const Functor& e, const Functor& u);

// Reduction of an arbitrary problem to one with identity bottom, plus the
// recomposition of fillers.
struct ReducedProblem {
    LiftingProblem reduced;
    PullbackSquare pb;  // pullback of (bottom, right)
};

ReducedProblem reduce_lifting_problem(const LiftingProblem& prob);
Filler recompose(const ReducedProblem& red, const Filler& reduced_filler);

// Constructive filler synthesis; requires a LeftWitness, throws NoWitness
// otherwise. Witness-free problems belong to the oracle.
Filler solve_lifting(const LiftingProblem& prob);

}  // namespace gpdwfs
