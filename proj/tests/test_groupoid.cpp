#include "doctest.h"

#include <set>
#include <tuple>

#include "gpdwfs/builtins.hpp"
#include "gpdwfs/groupoid.hpp"

using namespace gpdwfs;

namespace {

bool has_code(const Violations& vs, const std::string& code) {
    for (const auto& v : vs)
        if (v.code == code) return true;
    return false;
}

}  // namespace

TEST_CASE("builtin groupoids pass validation") {
    for (const GroupoidPtr& g :
         {terminal_groupoid(), z2(), z3(), discrete_pair(), indiscrete_pair()}) {
        const Violations vs = validate_groupoid(*g);
        CAPTURE(describe(vs));
        CHECK(vs.empty());
    }
}

TEST_CASE("Z2 with inverse table omitting s is rejected") {
    Groupoid broken = *z2();
    broken.inverse.erase("s");
    const Violations vs = validate_groupoid(broken);
    REQUIRE(!vs.empty());
    CHECK(has_code(vs, "MissingInverse"));
}

TEST_CASE("missing identity is reported") {
    Groupoid broken = *z2();
    broken.identity.erase("o");
    CHECK(has_code(validate_groupoid(broken), "MissingIdentity"));
}

TEST_CASE("non-associative table is reported") {
    // Rewire Z3: s.s = 1 instead of t breaks associativity.
    Groupoid broken = *z3();
    broken.compose_table[{"s", "s"}] = "1";
    CHECK(has_code(validate_groupoid(broken), "NonAssociative"));
}

TEST_CASE("bad endpoints on a composite are reported") {
    Groupoid broken = *indiscrete_pair();
    // Point a cross-component composite at an identity with wrong endpoints.
    broken.compose_table[{"g0@0>1", "g0@1>0"}] = "g0@0>1";
    CHECK(has_code(validate_groupoid(broken), "BadEndpoints"));
}

TEST_CASE("arrow count equals the sum of hom-set sizes") {
    for (const GroupoidPtr& g : {z2(), z3(), indiscrete_pair(), connected_component(3, 2, "c")}) {
        std::size_t total = 0;
        for (const ObjId& a : g->objects)
            for (const ObjId& b : g->objects) total += g->hom(a, b).size();
        CHECK(total == g->arrow_count());
    }
}

TEST_CASE("every hom-set is in bijection with the vertex group") {
    // Composition with a fixed arrow a->b maps hom(a,a) onto hom(a,b).
    for (const GroupoidPtr& g : {z3(), indiscrete_pair(), connected_component(2, 3, "c")}) {
        for (const ObjId& a : g->objects)
            for (const ObjId& b : g->objects) {
                const auto ab = g->hom(a, b);
                if (ab.empty()) continue;
                const ArrId fixed = ab.front();
                std::set<ArrId> image;
                for (const ArrId& e : g->hom(a, a)) image.insert(g->compose(fixed, e));
                CHECK(image.size() == g->hom(a, a).size());
                CHECK(image.size() == ab.size());
            }
    }
}

TEST_CASE("canonical arrow order sorts by (src, tgt, id)") {
    const GroupoidPtr g = indiscrete_pair();
    const auto order = g->arrows_canonical();
    REQUIRE(order.size() == 4);
    CHECK(g->src(order[0]) <= g->src(order[1]));
    for (std::size_t i = 1; i < order.size(); ++i) {
        auto key = [&](const ArrId& x) {
            return std::make_tuple(g->src(x), g->tgt(x), x);
        };
        CHECK(key(order[i - 1]) < key(order[i]));
    }
}
