#pragma once

#include "gpdwfs/functor.hpp"

namespace gpdwfs {

// Cleavage table: (object e upstairs, arrow g downstairs with src(g) = p(e))
// maps to the chosen lift of g at e.
using Cleavage = std::map<std::pair<ObjId, ArrId>, ArrId>;

// A normal cloven fibration: a functor together with an explicit cleavage
// whose lifts start at the given object, project to the given arrow, and send
// identities to identities.
struct Fibration {
    Functor p;
    Cleavage cleavage;

    const ArrId& lift(const ObjId& e, const ArrId& gamma) const {
        auto it = cleavage.find({e, gamma});
        if (it == cleavage.end())
            throw Error("cleavage: no entry for (" + e + ", " + gamma + ")");
        return it->second;
    }
    // Target object of the chosen lift.
    const ObjId& lift_target(const ObjId& e, const ArrId& gamma) const {
        return p.dom->tgt(lift(e, gamma));
    }
};

// Codes: NotAFibration (no lift exists at all), BadLift (endpoint or image
// wrong), NotNormal, MissingLift, SpuriousLift. Assumes the underlying
// functor passes validate_functor.
Violations validate_fibration(const Fibration& q);

// First valid lift in the canonical arrow order, identities forced to
// identities. Throws NotAFibration if some pair has no lift.
Cleavage derive_canonical_cleavage(const Functor& p);

Fibration identity_fibration(const GroupoidPtr& g);

// X -> 1 with the forced cleavage (only identities downstairs).
Fibration terminal_fibration(const GroupoidPtr& x);

// p after q, cleavage in two stages: lift along p at q(e), then along q at e.
// Requires cod(q) = dom(p).
Fibration compose_fibrations(const Fibration& p, const Fibration& q);

}  // namespace gpdwfs
