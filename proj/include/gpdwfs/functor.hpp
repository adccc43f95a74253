#pragma once

#include "gpdwfs/groupoid.hpp"

namespace gpdwfs {

// A functor between finite groupoids, given by its full object and arrow
// tables. Immutable after construction; equality is on the nose.
struct Functor {
    GroupoidPtr dom;
    GroupoidPtr cod;
    std::map<ObjId, ObjId> on_objects;
    std::map<ArrId, ArrId> on_arrows;

    const ObjId& obj(const ObjId& x) const { return on_objects.at(x); }
    const ArrId& arr(const ArrId& a) const { return on_arrows.at(a); }
};

Functor identity_functor(const GroupoidPtr& g);

// Codes: BadEndpointImage, IdentityNotPreserved, CompositionNotPreserved,
// MissingImage. Assumes dom/cod themselves pass validate_groupoid.
Violations validate_functor(const Functor& f);

// g after f; throws DomainMismatch unless cod(f) = dom(g).
Functor compose_functors(const Functor& g, const Functor& f);

// True iff same dom/cod (structurally) and identical tables.
bool functor_equal(const Functor& a, const Functor& b);

// Inverts a functor that is bijective on objects and arrows; throws
// PreconditionViolated otherwise.
Functor invert_functor(const Functor& f);

bool is_bijective(const Functor& f);

}  // namespace gpdwfs
