#pragma once

#include "gpdwfs/pullback.hpp"

namespace gpdwfs {

// The path object of a fibration p : E -> X. Objects of the path groupoid
// are triples (a,b,alpha) with alpha : a -> b vertical over p; arrows are
// component pairs, named together with their source triple because the target
// is determined by conjugation.
struct PathObject {
    Fibration base;     // p
    KernelPair kp;      // E x_p E with both projections as fibrations
    GroupoidPtr path;   // Path(p)
    Functor unit;       // r_p : E -> Path(p)
    Fibration boundary;   // d_p : Path(p) -> E x_p E
    Fibration boundary0;  // pr0 . d_p
    Fibration boundary1;  // pr1 . d_p

    // Triple components of a path object / path arrow.
    struct ObjParts {
        ObjId a, b;
        ArrId alpha;
    };
    struct ArrParts {
        ArrId abar, bbar;
        ObjId source;  // source path object
    };
    std::map<ObjId, ObjParts> obj_parts;
    std::map<ArrId, ArrParts> arr_parts;

    // Object name of the triple (a, b, alpha); must exist.
    const ObjId& object_of(const ObjId& a, const ObjId& b, const ArrId& alpha) const;
    // Arrow name of (abar, bbar) out of the given source triple; must exist.
    const ArrId& arrow_of(const ArrId& abar, const ArrId& bbar, const ObjId& source) const;

private:
    std::map<std::tuple<ObjId, ObjId, ArrId>, ObjId> obj_index_;
    std::map<std::tuple<ArrId, ArrId, ObjId>, ArrId> arr_index_;
    friend PathObject path_object(const Fibration&);
};

// Full construction; throws InvalidFibration if p fails validate_fibration.
PathObject path_object(const Fibration& p);

// Delta_p = <id_E, id_E> : E -> E x_p E into the given kernel pair.
Functor diagonal(const KernelPair& kp);

// The stability comparison for a fibration p : E -> Y and f : X -> Y:
// an isomorphism i : Map_p(p*f) -> Path(f*p) together with everything built
// along the way.
struct Stability {
    PullbackSquare pb;        // F = X x_Y E with proj0 = f*p, proj1 = p*f
    Fibration pulled;         // f*p : F -> X (base change, a fibration)
    PathObject path_base;     // Path(p)
    PathObject path_pulled;   // Path(f*p)
    PullbackSquare map_side;  // Map_p(p*f): pullback of proj1 along d0_p
    Functor iso;              // i
};

Stability stability(const Fibration& p, const Functor& f);

// Same, reusing path objects the caller already holds.
Stability stability(const Fibration& p, const Functor& f, const PathObject& path_base);

}  // namespace gpdwfs
