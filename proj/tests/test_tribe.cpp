#include "doctest.h"

#include "gpdwfs/builtins.hpp"
#include "gpdwfs/path_object.hpp"
#include "gpdwfs/pullback.hpp"

using namespace gpdwfs;

namespace {

// The object inclusion of the discrete pair into the indiscrete pair.
Functor inclusion() {
    Functor f;
    f.dom = discrete_pair();
    f.cod = indiscrete_pair();
    for (const ObjId& o : f.dom->objects) f.on_objects[o] = o;
    for (const auto& [a, d] : f.dom->arrows) f.on_arrows[a] = f.cod->id(d.src);
    return f;
}

bool has_code(const Violations& vs, const std::string& code) {
    for (const auto& v : vs)
        if (v.code == code) return true;
    return false;
}

}  // namespace

TEST_CASE("pullback of the identity cospan over Z2") {
    const Functor id = identity_functor(z2());
    const PullbackSquare sq = pullback(id, identity_fibration(z2()));
    CHECK(sq.apex->object_count() == 1);
    CHECK(sq.apex->arrow_count() == 2);  // (1,1) and (s,s): equal images only
    CHECK(validate_groupoid(*sq.apex).empty());
    CHECK(sq.apex->has_arrow(pair_name("s", "s")));
    CHECK(!sq.apex->has_arrow(pair_name("s", "1")));
}

TEST_CASE("product Z2 x Z2 has one object and four arrows") {
    const PullbackSquare sq = product(z2(), z2());
    CHECK(sq.apex->object_count() == 1);
    CHECK(sq.apex->arrow_count() == 4);
    CHECK(validate_groupoid(*sq.apex).empty());
    CHECK(validate_functor(sq.proj0).empty());
    CHECK(validate_functor(sq.proj1).empty());
}

TEST_CASE("pullback along an identity is the domain of the other leg") {
    const Functor pt = point(indiscrete_pair(), "0");
    const PullbackSquare sq = pullback(pt, identity_fibration(indiscrete_pair()));
    CHECK(sq.apex->object_count() == 1);
    CHECK(sq.apex->arrow_count() == 1);
    CHECK(is_bijective(sq.proj0));
}

TEST_CASE("mediating arrow of the diagonal cone over Z2") {
    const Functor id = identity_functor(z2());
    const PullbackSquare sq = pullback(id, identity_fibration(z2()));
    const Functor diag = mediating_arrow(sq, id, id);
    CHECK(diag.obj("o") == pair_name("o", "o"));
    CHECK(diag.arr("s") == pair_name("s", "s"));
    CHECK(validate_functor(diag).empty());
    // Projection equations characterize it.
    CHECK(functor_equal(compose_functors(sq.proj0, diag), id));
    CHECK(functor_equal(compose_functors(sq.proj1, diag), id));
}

TEST_CASE("mediating arrow rejects non-cones") {
    const PullbackSquare sq = product(z2(), z2());
    Functor bad = terminal_arrow(z3());  // wrong codomain entirely
    CHECK_THROWS_AS(mediating_arrow(sq, bad, bad), NotACone);
    // Right shapes but a non-commuting pair: impossible over the terminal
    // cospan, so instead break the domain agreement.
    CHECK_THROWS_AS(mediating_arrow(sq, identity_functor(z2()), identity_functor(z3())),
                    NotACone);
}

TEST_CASE("identity and terminal fibrations validate") {
    CHECK(validate_fibration(identity_fibration(z2())).empty());
    CHECK(validate_fibration(terminal_fibration(z2())).empty());
    CHECK(validate_fibration(terminal_fibration(indiscrete_pair())).empty());
}

TEST_CASE("the discrete-to-indiscrete inclusion is not a fibration") {
    const Functor f = inclusion();
    CHECK(validate_functor(f).empty());
    CHECK_THROWS_AS(derive_canonical_cleavage(f), NotAFibration);
    try {
        derive_canonical_cleavage(f);
    } catch (const NotAFibration& e) {
        CHECK(e.object == "0");
        CHECK(e.base_arrow == "g0@0>1");  // u : 0 -> 1 has no lift upstairs
    }
    Fibration q{f, {}};
    CHECK(has_code(validate_fibration(q), "NotAFibration"));
}

TEST_CASE("canonical cleavage derivation") {
    const Fibration idf = identity_fibration(z2());
    CHECK(derive_canonical_cleavage(idf.p) == idf.cleavage);

    // Only identities downstairs: everything lifts to identities.
    const Cleavage cl = derive_canonical_cleavage(terminal_arrow(indiscrete_pair()));
    for (const auto& [key, lift] : cl) CHECK(indiscrete_pair()->is_identity(lift));

    // First valid lift in canonical order for the product projection.
    const PullbackSquare sq = product(z2(), z2());
    const Cleavage pr = derive_canonical_cleavage(sq.proj0);
    CHECK(pr.at({pair_name("o", "o"), "s"}) == pair_name("s", "1"));
}

TEST_CASE("composing with identity fibrations is neutral") {
    const Fibration pr0 = base_change(product(z2(), z2()));
    const Fibration left = compose_fibrations(identity_fibration(pr0.p.cod), pr0);
    const Fibration right = compose_fibrations(pr0, identity_fibration(pr0.p.dom));
    CHECK(functor_equal(left.p, pr0.p));
    CHECK(left.cleavage == pr0.cleavage);
    CHECK(functor_equal(right.p, pr0.p));
    CHECK(right.cleavage == pr0.cleavage);
}

TEST_CASE("composite of projection and terminal is the terminal fibration") {
    const PullbackSquare sq = product(z2(), z2());
    const Fibration pr0 = base_change(sq);
    const Fibration comp = compose_fibrations(terminal_fibration(z2()), pr0);
    CHECK(functor_equal(comp.p, terminal_arrow(sq.apex)));
    for (const auto& [key, lift] : comp.cleavage) CHECK(sq.apex->is_identity(lift));
    CHECK(validate_fibration(comp).empty());
}

TEST_CASE("composite cleavage lifts are valid lifts") {
    // Two-stage cleavage of a derived boundary composite, cross-checked
    // against direct enumeration of all valid lifts.
    const PathObject po = path_object(terminal_fibration(z2()));
    const Fibration& d0 = po.boundary0;
    CHECK(validate_fibration(d0).empty());
    for (const auto& [key, lift] : d0.cleavage) {
        const auto& [e, gamma] = key;
        bool member = false;
        for (const ArrId& cand : po.path->arrows_from(e))
            if (d0.p.arr(cand) == gamma && cand == lift) member = true;
        CHECK(member);
    }
}

TEST_CASE("base change along the identity renames the cleavage") {
    const Fibration pr0 = base_change(product(z2(), z2()));
    const Fibration bc = base_change_fibration(identity_functor(z2()), pr0);
    CHECK(validate_fibration(bc).empty());
    CHECK(bc.p.dom->object_count() == pr0.p.dom->object_count());
    CHECK(bc.p.dom->arrow_count() == pr0.p.dom->arrow_count());
}

TEST_CASE("base change of the terminal fibration on Z2 along the identity point") {
    const Fibration bc =
        base_change_fibration(identity_functor(terminal_groupoid()), terminal_fibration(z2()));
    CHECK(bc.p.dom->object_count() == 1);
    CHECK(bc.p.dom->arrow_count() == 2);
    CHECK(validate_fibration(bc).empty());
}

TEST_CASE("base change of the boundary of Z2 along a point is the fiber") {
    const PathObject po = path_object(terminal_fibration(z2()));
    const Functor pt = point(po.kp.square.apex, pair_name("o", "o"));
    const Fibration bc = base_change_fibration(pt, po.boundary);
    CHECK(bc.p.dom->object_count() == 2);  // (o,o,1) and (o,o,s) in the fiber
    CHECK(validate_fibration(bc).empty());
}

TEST_CASE("kernel pair of the terminal fibration is the product") {
    const KernelPair kp = kernel_pair(terminal_fibration(z2()));
    CHECK(kp.square.apex->object_count() == 1);
    CHECK(kp.square.apex->arrow_count() == 4);
    CHECK(validate_fibration(kp.pr0).empty());
    CHECK(validate_fibration(kp.pr1).empty());
}

TEST_CASE("pullback cone recognition") {
    const Fibration idf = identity_fibration(z2());
    const Functor id = identity_functor(z2());
    const PullbackSquare sq = pullback(id, idf);
    CHECK(is_pullback_cone(sq, id, id));  // E itself as the apex of (id, id)
    // A cone that is not jointly bijective: the terminal groupoid.
    const Functor pt = point(z2(), "o");
    CHECK(!is_pullback_cone(sq, pt, pt));
}

TEST_CASE("second leg of a pullback of two fibrations is a fibration") {
    const Fibration p = terminal_fibration(z2());
    const PullbackSquare sq = pullback(terminal_arrow(z3()), p);
    const Fibration snd = second_leg_fibration(sq, terminal_fibration(z3()));
    CHECK(validate_fibration(snd).empty());
    CHECK(functor_equal(snd.p, sq.proj1));
}
