#include "gpdwfs/engine.hpp"

#include "gpdwfs/builtins.hpp"

namespace gpdwfs {

Violations validate_problem(const LiftingProblem& prob) {
    Violations out;
    auto report = [&out](std::string code, std::string detail) {
        out.push_back(Violation{std::move(code), std::move(detail)});
    };
    if (!same_groupoid(prob.left.dom, prob.top.dom)) report("BadShape", "dom(left) != dom(top)");
    if (!same_groupoid(prob.left.cod, prob.bottom.dom)) report("BadShape", "cod(left) != dom(bottom)");
    if (!same_groupoid(prob.top.cod, prob.right.p.dom)) report("BadShape", "cod(top) != dom(right)");
    if (!same_groupoid(prob.bottom.cod, prob.right.p.cod)) report("BadShape", "cod(bottom) != cod(right)");
    if (!out.empty()) return out;
    if (!functor_equal(compose_functors(prob.right.p, prob.top),
                       compose_functors(prob.bottom, prob.left)))
        report("SquareNotCommuting", "right.top != bottom.left");
    return out;
}

bool is_filler(const LiftingProblem& prob, const Filler& fill) {
    if (!same_groupoid(fill.j.dom, prob.left.cod) || !same_groupoid(fill.j.cod, prob.right.p.dom))
        return false;
    return functor_equal(compose_functors(fill.j, prob.left), prob.top) &&
           functor_equal(compose_functors(prob.right.p, fill.j), prob.bottom);
}

PullbackSquare mapping_path_object(const PathObject& po, const Functor& g) {
    if (!same_groupoid(g.cod, po.base.p.dom))
        throw CodomainMismatch("mapping_path_object: cod(g) != dom(p)");
    return pullback(g, po.boundary0);
}

Factorization factorize(const Functor& f) {
    if (auto vs = validate_functor(f); !vs.empty())
        throw PreconditionViolated("factorize: invalid functor: " + describe(vs));
    Factorization fact;
    fact.f = f;
    fact.path_cod = path_object(terminal_fibration(f.cod));
    fact.map_sq = mapping_path_object(fact.path_cod, f);
    fact.mid = fact.map_sq.apex;
    fact.lambda = mediating_arrow(fact.map_sq, identity_functor(f.dom),
                                  compose_functors(fact.path_cod.unit, f));
    fact.pm0 = base_change(fact.map_sq);
    fact.pm1 = fact.map_sq.proj1;

    const Groupoid& X = *f.dom;
    const Groupoid& Y = *f.cod;
    fact.rho.p = compose_functors(fact.path_cod.boundary1.p, fact.pm1);
    // The projection onto the second boundary lifts beta to (1_x, (1_a, beta)).
    for (const ObjId& o : fact.mid->objects) {
        const ObjId& x = fact.map_sq.proj0.obj(o);
        const ObjId& w = fact.map_sq.proj1.obj(o);
        const auto& wp = fact.path_cod.obj_parts.at(w);
        for (const ArrId& beta : Y.arrows_from(wp.b))
            fact.rho.cleavage[{o, beta}] =
                pair_name(X.id(x), fact.path_cod.arrow_of(Y.id(wp.a), beta, w));
    }
    return fact;
}

Filler fill_unit_square(const PathObject& po, const Fibration& q, const Functor& pi0,
                        const Functor& pi1, const Fibration& qbar, const Functor& f) {
    const Groupoid& E = *po.base.p.dom;
    const Groupoid& B = *q.p.dom;
    const Groupoid& Up = *qbar.p.dom;
    const GroupoidPtr C = pi0.dom;

    if (!same_groupoid(q.p.cod, po.path))
        throw PreconditionViolated("fill_unit_square: q does not land in Path(p)");
    if (!same_groupoid(pi1.dom, C) || !same_groupoid(pi1.cod, q.p.dom))
        throw PreconditionViolated("fill_unit_square: bad cone shape");
    if (!functor_equal(compose_functors(po.unit, pi0), compose_functors(q.p, pi1)))
        throw PreconditionViolated("fill_unit_square: (pi0, pi1) is not a cone over (r_p, q)");
    if (!is_pullback_cone(pullback(po.unit, q), pi0, pi1))
        throw PreconditionViolated("fill_unit_square: cone is not the pullback of r_p along q");
    if (!same_groupoid(f.dom, C) || !same_groupoid(qbar.p.cod, q.p.dom) ||
        !same_groupoid(f.cod, qbar.p.dom) || !functor_equal(compose_functors(qbar.p, f), pi1))
        throw PreconditionViolated("fill_unit_square: square qbar.f = pi1 does not commute");

    auto c_object = [&](const ObjId& a, const ObjId& b) -> const ObjId& {
        for (const ObjId& c : C->objects)
            if (pi0.obj(c) == a && pi1.obj(c) == b) return c;
        throw PreconditionViolated("fill_unit_square: pullback object (" + a + "," + b + ") missing");
    };
    auto c_arrow = [&](const ArrId& over_a, const ArrId& over_b) -> const ArrId& {
        for (const auto& [c, d] : C->arrows)
            if (pi0.arr(c) == over_a && pi1.arr(c) == over_b) return c;
        throw PreconditionViolated("fill_unit_square: pullback arrow (" + over_a + "," + over_b + ") missing");
    };
    // The chosen retraction b -> b0 into the fiber over the unit: lift of
    // (1_a, alpha^-1) along q at b.
    auto retract = [&](const ObjId& b) -> const ArrId& {
        const ObjId& w = q.p.obj(b);
        const auto& wp = po.obj_parts.at(w);
        return q.lift(b, po.arrow_of(E.id(wp.a), E.inv(wp.alpha), w));
    };

    Filler out;
    out.j.dom = q.p.dom;
    out.j.cod = qbar.p.dom;

    for (const ObjId& b : B.objects) {
        const auto& wp = po.obj_parts.at(q.p.obj(b));
        const ArrId& gamma = retract(b);
        const ObjId& c = c_object(wp.a, B.tgt(gamma));
        const ArrId& eta = qbar.lift(f.obj(c), B.inv(gamma));
        out.j.on_objects[b] = Up.tgt(eta);
    }
    for (const auto& [beta, bd] : B.arrows) {
        const auto& image = po.arr_parts.at(q.p.arr(beta));
        const auto& src_parts = po.obj_parts.at(image.source);
        const ArrId& gamma0 = retract(bd.src);
        const ArrId& gamma1 = retract(bd.tgt);
        const ObjId& c0 = c_object(src_parts.a, B.tgt(gamma0));
        const auto& tgt_parts = po.obj_parts.at(po.path->tgt(q.p.arr(beta)));
        const ObjId& c1 = c_object(tgt_parts.a, B.tgt(gamma1));
        const ArrId& mid = B.compose(gamma1, B.compose(beta, B.inv(gamma0)));
        const ArrId& carr = c_arrow(image.abar, mid);
        const ArrId& eta0 = qbar.lift(f.obj(c0), B.inv(gamma0));
        const ArrId& eta1 = qbar.lift(f.obj(c1), B.inv(gamma1));
        out.j.on_arrows[beta] = Up.compose(eta1, Up.compose(f.arr(carr), Up.inv(eta0)));
    }
    return out;
}

Functor transport(const PathObject& po, const Fibration& q, const Functor& e, const Functor& u) {
    if (!same_groupoid(q.p.cod, po.base.p.dom))
        throw PreconditionViolated("transport: q does not land in dom(p)");
    if (!functor_equal(compose_functors(q.p, e), compose_functors(po.boundary0.p, u)))
        throw PreconditionViolated("transport: q.e != d0_p.u");

    const GroupoidPtr E = q.p.dom;
    PullbackSquare map_sq = pullback(q.p, po.boundary0);
    Fibration pm1 = second_leg_fibration(map_sq, q);
    Functor l = mediating_arrow(map_sq, identity_functor(E), compose_functors(po.unit, q.p));

    LiftingProblem inner;
    inner.left = l;
    inner.right = q;
    inner.top = identity_functor(E);
    inner.bottom = compose_functors(po.boundary1.p, map_sq.proj1);
    ReducedProblem red = reduce_lifting_problem(inner);
    Filler jr = fill_unit_square(po, pm1, q.p, l, red.reduced.right, red.reduced.top);
    Functor j = compose_functors(red.pb.proj1, jr.j);  // Map_p(q) -> E

    Functor med = mediating_arrow(map_sq, e, u);
    return compose_functors(j, med);
}

ReducedProblem reduce_lifting_problem(const LiftingProblem& prob) {
    if (auto vs = validate_problem(prob); !vs.empty())
        throw PreconditionViolated("reduce_lifting_problem: " + describe(vs));
    ReducedProblem out;
    out.pb = pullback(prob.bottom, prob.right);
    out.reduced.left = prob.left;
    out.reduced.right = base_change(out.pb);
    out.reduced.top = mediating_arrow(out.pb, prob.left, prob.top);
    out.reduced.bottom = identity_functor(prob.left.cod);
    out.reduced.witness = prob.witness;
    return out;
}

Filler recompose(const ReducedProblem& red, const Filler& reduced_filler) {
    return Filler{compose_functors(red.pb.proj1, reduced_filler.j)};
}

namespace {

// The Lemma-fact pipeline on an identity-bottom problem of lambda against a
// fibration q into Map(f): builds k in the wrong fiber, a path psi from q.k
// to the identity, and transports k along it.
Filler solve_factorization_unit(const Factorization& fact, const Fibration& q, const Functor& g) {
    const PathObject& pathY = fact.path_cod;
    const GroupoidPtr Eprime = q.p.dom;

    Fibration rho_q = compose_fibrations(fact.rho, q);  // E' -> Y
    PullbackSquare map2 = pullback(rho_q.p, pathY.boundary0);
    Fibration pm1p = second_leg_fibration(map2, rho_q);
    Functor l = mediating_arrow(map2, identity_functor(Eprime),
                                compose_functors(pathY.unit, rho_q.p));

    // h : Map(rho.q) -> E' with q.h = q.pm0 and h.l = id.
    LiftingProblem hprob;
    hprob.left = l;
    hprob.right = q;
    hprob.top = identity_functor(Eprime);
    hprob.bottom = compose_functors(q.p, map2.proj0);
    ReducedProblem hred = reduce_lifting_problem(hprob);
    Filler hjr = fill_unit_square(pathY, pm1p, rho_q.p, l, hred.reduced.right, hred.reduced.top);
    Functor h = compose_functors(hred.pb.proj1, hjr.j);

    // k = h.<g.pm0, pm1> : Map(f) -> E', in the wrong fiber over q.
    Functor k = compose_functors(
        h, mediating_arrow(map2, compose_functors(g, fact.pm0.p), fact.pm1));

    // phi : Path(Y) -> Path(d0_Y), a filler against the boundary of the
    // iterated path object; the unit r_Y is its own base change along the
    // identity fibration.
    PathObject path_d0 = path_object(pathY.boundary0);
    LiftingProblem phiprob;
    phiprob.left = pathY.unit;
    phiprob.right = path_d0.boundary;
    phiprob.top = compose_functors(path_d0.unit, pathY.unit);
    phiprob.bottom = mediating_arrow(
        path_d0.kp.square, compose_functors(pathY.unit, pathY.boundary0.p),
        identity_functor(pathY.path));
    ReducedProblem phired = reduce_lifting_problem(phiprob);
    Filler phijr = fill_unit_square(pathY, identity_fibration(pathY.path),
                                    identity_functor(pathY.base.p.dom), pathY.unit,
                                    phired.reduced.right, phired.reduced.top);
    Functor phi = compose_functors(phired.pb.proj1, phijr.j);

    // psi = i.<q.k, phi.pm1> : the path in Map(f) from q.k to the identity.
    Stability st = stability(pathY.boundary0, fact.f, path_d0);
    Functor psi = compose_functors(
        st.iso, mediating_arrow(st.map_side, compose_functors(q.p, k),
                                compose_functors(phi, fact.pm1)));

    return Filler{transport(st.path_pulled, q, k, psi)};
}

}  // namespace

Filler solve_lifting(const LiftingProblem& prob) {
    if (auto vs = validate_problem(prob); !vs.empty())
        throw PreconditionViolated("solve_lifting: " + describe(vs));
    if (!prob.witness)
        throw NoWitness("solve_lifting: left arrow carries no witness; use the oracle instead");

    ReducedProblem red = reduce_lifting_problem(prob);
    if (const auto* w = std::get_if<UnitPullbackWitness>(&*prob.witness)) {
        if (!functor_equal(w->pi1, prob.left))
            throw PreconditionViolated("solve_lifting: witness does not describe the left arrow");
        PathObject po = path_object(w->p);
        Filler jr = fill_unit_square(po, w->q, w->pi0, w->pi1, red.reduced.right, red.reduced.top);
        return recompose(red, jr);
    }
    const auto& w = std::get<FactorizationWitness>(*prob.witness);
    Factorization fact = factorize(w.f);
    if (!functor_equal(fact.lambda, prob.left))
        throw PreconditionViolated("solve_lifting: left arrow is not the factorization unit of f");
    Filler jr = solve_factorization_unit(fact, red.reduced.right, red.reduced.top);
    return recompose(red, jr);
}

}  // namespace gpdwfs
