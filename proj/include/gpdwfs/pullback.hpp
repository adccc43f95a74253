#pragma once

#include "gpdwfs/fibration.hpp"

namespace gpdwfs {

// The chosen pullback of a cospan (f : A -> X, p : E -> X) with p a
// fibration. The apex is the pair groupoid: objects (a,e) with f(a) = p(e),
// arrows componentwise, all named by canonical tuples.
struct PullbackSquare {
    GroupoidPtr apex;
    Functor proj0;  // apex -> dom(f)
    Functor proj1;  // apex -> dom(p)
    Functor f;      // cospan leg 0
    Fibration p;    // cospan leg 1
};

// Throws CodomainMismatch unless cod(f) = cod(p).
PullbackSquare pullback(const Functor& f, const Fibration& p);

// The universal arrow <u,v> into the apex; throws NotACone unless
// f.u = p.v holds on the nose.
Functor mediating_arrow(const PullbackSquare& sq, const Functor& u, const Functor& v);

// proj0 as a fibration over dom(f): the base change f*p, with the derived
// cleavage g |-> (g, p^-1 f(g)).
Fibration base_change(const PullbackSquare& sq);

Fibration base_change_fibration(const Functor& f, const Fibration& p);

// proj1 as a fibration over dom(p), available when the f-leg also carries a
// cleavage: b |-> (f^-1 p(b), b). f_fib must have underlying functor sq.f.
Fibration second_leg_fibration(const PullbackSquare& sq, const Fibration& f_fib);

// Product X x Y as the pullback over the terminal groupoid.
PullbackSquare product(const GroupoidPtr& x, const GroupoidPtr& y);

// E x_p E for a fibration p, with both projections as fibrations.
struct KernelPair {
    PullbackSquare square;
    Fibration pr0;
    Fibration pr1;
};
KernelPair kernel_pair(const Fibration& p);

// Checks whether (C; u, v) with f.u = p.v is *the* pullback up to the
// canonical comparison: the mediating map c |-> (u(c), v(c)) is bijective.
bool is_pullback_cone(const PullbackSquare& sq, const Functor& u, const Functor& v);

}  // namespace gpdwfs
