#include "doctest.h"

#include "gpdwfs/builtins.hpp"
#include "gpdwfs/engine.hpp"
#include "gpdwfs/oracle.hpp"

using namespace gpdwfs;

namespace {

Functor inclusion() {
    Functor f;
    f.dom = discrete_pair();
    f.cod = indiscrete_pair();
    for (const ObjId& o : f.dom->objects) f.on_objects[o] = o;
    for (const auto& [a, d] : f.dom->arrows) f.on_arrows[a] = f.cod->id(d.src);
    return f;
}

}  // namespace

TEST_CASE("mapping path object sizes") {
    const PathObject po_i = path_object(terminal_fibration(indiscrete_pair()));
    const PullbackSquare m = mapping_path_object(po_i, inclusion());
    CHECK(m.apex->object_count() == 4);  // two objects x two triples each

    const PathObject po_z = path_object(terminal_fibration(z2()));
    const PullbackSquare m2 = mapping_path_object(po_z, point(z2(), "o"));
    CHECK(m2.apex->object_count() == 2);

    // Along an identity the mapping path object is the path object itself.
    const PullbackSquare m3 = mapping_path_object(po_z, identity_functor(z2()));
    CHECK(m3.apex->object_count() == po_z.path->object_count());
    CHECK(m3.apex->arrow_count() == po_z.path->arrow_count());
}

TEST_CASE("unit-square filler with identity covering is the identity") {
    const PathObject po = path_object(terminal_fibration(z2()));
    const Fibration q = identity_fibration(po.path);
    const Functor pi0 = identity_functor(po.base.p.dom);
    const Functor& pi1 = po.unit;  // (E; id, r) is the pullback of r along id
    const Fibration qbar = identity_fibration(po.path);
    const Filler j = fill_unit_square(po, q, pi0, pi1, qbar, po.unit);
    CHECK(functor_equal(j.j, identity_functor(po.path)));
}

TEST_CASE("unit-square filler against a product covering is in the oracle set") {
    const PathObject po = path_object(terminal_fibration(z2()));
    const Fibration q = identity_fibration(po.path);
    const Functor pi0 = identity_functor(po.base.p.dom);
    const Functor& pi1 = po.unit;

    const PullbackSquare prod = pullback(terminal_arrow(po.path), terminal_fibration(z2()));
    const Fibration qbar = base_change(prod);  // Path(Z2) x Z2 -> Path(Z2)
    const Functor f = mediating_arrow(prod, po.unit, identity_functor(z2()));

    const Filler j = fill_unit_square(po, q, pi0, pi1, qbar, f);
    LiftingProblem prob{pi1, qbar, f, identity_functor(po.path), std::nullopt};
    CHECK(validate_problem(prob).empty());
    CHECK(is_filler(prob, j));
    bool member = false;
    for (const Filler& cand : find_fillers(prob, SearchBudget{}))
        if (functor_equal(cand.j, j.j)) member = true;
    CHECK(member);
}

TEST_CASE("unit-square filler rejects broken cones") {
    const PathObject po = path_object(terminal_fibration(z2()));
    const Fibration q = identity_fibration(po.path);
    // Right shapes, but pi1 is constant at the wrong object, so the cone
    // equation r.pi0 = q.pi1 fails.
    Functor pi1;
    pi1.dom = z2();
    pi1.cod = po.path;
    const ObjId& bad = po.object_of("o", "o", "s");
    pi1.on_objects["o"] = bad;
    pi1.on_arrows["1"] = po.path->id(bad);
    pi1.on_arrows["s"] = po.path->id(bad);
    CHECK_THROWS_AS(
        fill_unit_square(po, q, identity_functor(z2()), pi1, q, pi1),
        PreconditionViolated);
}

TEST_CASE("transport of a unit path is the identity transport") {
    const PathObject po = path_object(terminal_fibration(z2()));
    const Fibration q = identity_fibration(z2());
    const Functor e = point(z2(), "o");
    const Functor u = compose_functors(po.unit, compose_functors(q.p, e));
    const Functor res = transport(po, q, e, u);
    CHECK(functor_equal(res, e));
}

TEST_CASE("transport moves a point along a path in the indiscrete pair") {
    const PathObject po = path_object(terminal_fibration(indiscrete_pair()));
    const Fibration q = identity_fibration(indiscrete_pair());
    const Functor e = point(indiscrete_pair(), "0");
    const Functor u = point(po.path, po.object_of("0", "1", "g0@0>1"));
    const Functor res = transport(po, q, e, u);
    CHECK(res.obj("*") == "1");  // forced: q(u_!e) = d1(u)
}

TEST_CASE("transport through the product projection satisfies both contracts") {
    const PathObject po = path_object(terminal_fibration(z2()));
    const Fibration q = base_change(product(z2(), z2()));  // pr0 : Z2 x Z2 -> Z2
    const GroupoidPtr one = terminal_groupoid();
    const Functor e = point(q.p.dom, pair_name("o", "o"));
    const Functor u = point(po.path, po.object_of("o", "o", "s"));
    const Functor res = transport(po, q, e, u);
    CHECK(functor_equal(compose_functors(q.p, res), compose_functors(po.boundary1.p, u)));
    // Contract (ii) over all commuting squares with the unit.
    for (const Functor& s : enumerate_functors(one, one, SearchBudget{}))
        for (const Functor& g : enumerate_functors(one, z2(), SearchBudget{})) {
            if (!functor_equal(compose_functors(u, s), compose_functors(po.unit, g))) continue;
            CHECK(functor_equal(compose_functors(res, s), compose_functors(e, s)));
        }
}

TEST_CASE("factorization of the identity on the terminal groupoid") {
    const Factorization fact = factorize(identity_functor(terminal_groupoid()));
    CHECK(fact.mid->object_count() == 1);
    CHECK(is_bijective(fact.lambda));
    CHECK(is_bijective(fact.rho.p));
    CHECK(functor_equal(compose_functors(fact.rho.p, fact.lambda), fact.f));
}

TEST_CASE("factorization of the identity on Z2") {
    const Factorization fact = factorize(identity_functor(z2()));
    CHECK(fact.mid->object_count() == 2);  // same objects as Path(Z2)
    CHECK(fact.lambda.obj("o") == pair_name("o", triple_name("o", "o", "1")));
    for (const ObjId& m : fact.mid->objects) CHECK(fact.rho.p.obj(m) == "o");
    CHECK(functor_equal(compose_functors(fact.rho.p, fact.lambda), fact.f));
    CHECK(validate_fibration(fact.rho).empty());
}

TEST_CASE("factorization of the discrete-to-indiscrete inclusion") {
    const Functor f = inclusion();
    const Factorization fact = factorize(f);
    CHECK(fact.mid->object_count() == 4);
    for (const ObjId& x : f.dom->objects)
        CHECK(fact.lambda.obj(x) ==
              pair_name(x, triple_name(x, x, f.cod->id(x))));
    // rho projects onto the second boundary component.
    const PathObject& py = fact.path_cod;
    for (const ObjId& m : fact.mid->objects) {
        const ObjId& w = fact.map_sq.proj1.obj(m);
        CHECK(fact.rho.p.obj(m) == py.obj_parts.at(w).b);
    }
    CHECK(functor_equal(compose_functors(fact.rho.p, fact.lambda), f));
    CHECK(validate_fibration(fact.rho).empty());
    CHECK(validate_functor(fact.lambda).empty());
}

TEST_CASE("reduction to identity-bottom and recomposition") {
    // A square with non-identity bottom: collapse Z2 downstairs.
    Functor collapse;  // Z2 -> Z2, s |-> 1
    collapse.dom = z2();
    collapse.cod = z2();
    collapse.on_objects["o"] = "o";
    collapse.on_arrows["1"] = "1";
    collapse.on_arrows["s"] = "1";

    const Fibration pr0 = base_change(product(z2(), z2()));
    LiftingProblem prob;
    prob.left = point(z2(), "o");
    prob.right = pr0;
    prob.bottom = collapse;
    prob.top = point(pr0.p.dom, pair_name("o", "o"));
    REQUIRE(validate_problem(prob).empty());

    const ReducedProblem red = reduce_lifting_problem(prob);
    CHECK(functor_equal(red.reduced.bottom, identity_functor(z2())));
    REQUIRE(validate_problem(red.reduced).empty());

    const auto fillers = find_fillers(red.reduced, SearchBudget{});
    REQUIRE(!fillers.empty());
    for (const Filler& fr : fillers) {
        const Filler back = recompose(red, fr);
        CHECK(is_filler(prob, back));
    }
}

TEST_CASE("reduction along an identity bottom keeps the verdict") {
    const Fibration pr0 = base_change(product(z2(), z2()));
    LiftingProblem prob;
    prob.left = point(z2(), "o");
    prob.right = pr0;
    prob.bottom = identity_functor(z2());
    prob.top = point(pr0.p.dom, pair_name("o", "o"));
    const ReducedProblem red = reduce_lifting_problem(prob);
    CHECK(find_fillers(prob, SearchBudget{}).size() ==
          find_fillers(red.reduced, SearchBudget{}).size());
}

TEST_CASE("solve_lifting requires a witness") {
    const Fibration pr0 = base_change(product(z2(), z2()));
    LiftingProblem prob;
    prob.left = point(z2(), "o");
    prob.right = pr0;
    prob.bottom = identity_functor(z2());
    prob.top = point(pr0.p.dom, pair_name("o", "o"));
    CHECK_THROWS_AS(solve_lifting(prob), NoWitness);
}

TEST_CASE("solve_lifting fills the retraction square of a factorization") {
    const Functor f = inclusion();
    const Factorization fact = factorize(f);
    LiftingProblem prob{fact.lambda, fact.rho, fact.lambda, fact.rho.p,
                        FactorizationWitness{f}};
    REQUIRE(validate_problem(prob).empty());
    const Filler fill = solve_lifting(prob);
    CHECK(is_filler(prob, fill));
    bool member = false;
    for (const Filler& cand : find_fillers(prob, SearchBudget{}))
        if (functor_equal(cand.j, fill.j)) member = true;
    CHECK(member);
}

TEST_CASE("solve_lifting with a unit-pullback witness") {
    const PathObject po = path_object(terminal_fibration(z2()));
    const Fibration q = identity_fibration(po.path);
    const Functor pi0 = identity_functor(z2());
    const Functor& pi1 = po.unit;

    const PullbackSquare prod = pullback(terminal_arrow(po.path), terminal_fibration(z2()));
    const Fibration qbar = base_change(prod);
    const Functor top = mediating_arrow(prod, po.unit, identity_functor(z2()));

    LiftingProblem prob{pi1, qbar, top, identity_functor(po.path),
                        UnitPullbackWitness{po.base, q, pi0, pi1}};
    REQUIRE(validate_problem(prob).empty());
    const Filler fill = solve_lifting(prob);
    CHECK(is_filler(prob, fill));
}
