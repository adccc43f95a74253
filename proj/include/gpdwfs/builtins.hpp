#pragma once

#include "gpdwfs/functor.hpp"
#include "gpdwfs/groupoid.hpp"

namespace gpdwfs {

// The terminal groupoid: one reserved object "*" with its identity "1".
GroupoidPtr terminal_groupoid();

// The unique functor X -> 1.
Functor terminal_arrow(const GroupoidPtr& x);

// Functor 1 -> X picking an object.
Functor point(const GroupoidPtr& x, const ObjId& at);

// One object "o", arrows {"1","s"} with s.s = 1 (the group Z2).
GroupoidPtr z2();

// One object "o", arrows {"1","s","t"} with s.s = t (the group Z3).
GroupoidPtr z3();

// Discrete groupoid on objects {"0","1"}: identities only.
GroupoidPtr discrete_pair();

// Indiscrete groupoid on {"0","1"}: exactly one arrow between any two objects.
GroupoidPtr indiscrete_pair();

// n objects indiscretely connected, with vertex group Z_k (k = 1, 2 or 3).
// Arrows are triples "g@i>j" encoding (i, j, group element g); composition is
// (j, l, h) . (i, j, g) = (i, l, h+g). Object names carry the given prefix.
GroupoidPtr connected_component(std::size_t n_objects, std::size_t k, const std::string& prefix);

// Disjoint union; object and arrow names must not clash.
GroupoidPtr disjoint_union(const std::vector<GroupoidPtr>& parts);

}  // namespace gpdwfs
