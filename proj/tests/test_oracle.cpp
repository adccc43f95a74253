#include "doctest.h"

#include "gpdwfs/builtins.hpp"
#include "gpdwfs/io.hpp"
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

bool contains(const std::vector<Functor>& fs, const Functor& f) {
    for (const Functor& g : fs)
        if (functor_equal(g, f)) return true;
    return false;
}

}  // namespace

TEST_CASE("functor enumeration counts") {
    CHECK(enumerate_functors(terminal_groupoid(), z2(), SearchBudget{}).size() == 1);
    CHECK(enumerate_functors(z2(), z2(), SearchBudget{}).size() == 2);
    CHECK(enumerate_functors(discrete_pair(), indiscrete_pair(), SearchBudget{}).size() == 4);
    // Functors out of the indiscrete pair into the discrete pair must be
    // constant, since u : 0 -> 1 needs an arrow between the image objects.
    CHECK(enumerate_functors(indiscrete_pair(), discrete_pair(), SearchBudget{}).size() == 2);
}

TEST_CASE("pruned enumeration agrees with the naive one") {
    const std::vector<std::pair<GroupoidPtr, GroupoidPtr>> pairs = {
        {z2(), z2()},
        {z2(), z3()},
        {discrete_pair(), indiscrete_pair()},
        {indiscrete_pair(), z2()},
    };
    for (const auto& [x, b] : pairs) {
        const auto fast = enumerate_functors(x, b, SearchBudget{});
        const auto slow = enumerate_functors_naive(x, b, SearchBudget{});
        CHECK(fast.size() == slow.size());
        for (const Functor& f : fast) CHECK(contains(slow, f));
        for (const Functor& f : fast) CHECK(validate_functor(f).empty());
    }
}

TEST_CASE("enumeration respects the candidate budget") {
    SearchBudget tiny;
    tiny.max_candidates = 1;
    CHECK_THROWS_AS(enumerate_functors(z2(), z3(), tiny), BudgetExceeded);
}

TEST_CASE("filler search for an identity fibration is the bottom functor") {
    LiftingProblem prob;
    prob.left = point(z2(), "o");
    prob.right = identity_fibration(z2());
    prob.top = point(z2(), "o");
    prob.bottom = identity_functor(z2());
    const auto fillers = find_fillers(prob, SearchBudget{});
    REQUIRE(fillers.size() == 1);
    CHECK(functor_equal(fillers.front().j, prob.bottom));
}

TEST_CASE("the inclusion square against the discrete covering has no filler") {
    // No functor from the indiscrete pair back to the discrete pair can fix
    // both objects, so the square with identity top has no filler.
    LiftingProblem prob;
    prob.left = inclusion();
    prob.right = terminal_fibration(discrete_pair());
    prob.top = identity_functor(discrete_pair());
    prob.bottom = terminal_arrow(indiscrete_pair());
    REQUIRE(validate_problem(prob).empty());
    CHECK(find_fillers(prob, SearchBudget{}).empty());
}

TEST_CASE("the retraction square of a factorization has the solved filler") {
    const Functor f = inclusion();
    const Factorization fact = factorize(f);
    LiftingProblem prob{fact.lambda, fact.rho, fact.lambda, fact.rho.p,
                        FactorizationWitness{f}};
    const auto fillers = find_fillers(prob, SearchBudget{});
    REQUIRE(!fillers.empty());
    const Filler solved = solve_lifting(prob);
    bool member = false;
    for (const Filler& cand : fillers)
        if (functor_equal(cand.j, solved.j)) member = true;
    CHECK(member);
}

TEST_CASE("lifting property against identity fibrations always holds") {
    CHECK(has_llp(inclusion(), identity_fibration(indiscrete_pair()), SearchBudget{}));
    CHECK(has_llp(point(z2(), "o"), identity_fibration(z2()), SearchBudget{}));
}

TEST_CASE("the inclusion fails the lifting property against the discrete covering") {
    const bool verdict = has_llp(inclusion(), terminal_fibration(discrete_pair()), SearchBudget{});
    CHECK(!verdict);
    const auto ce = find_llp_counterexample(inclusion(), terminal_fibration(discrete_pair()),
                                            SearchBudget{});
    REQUIRE(ce.has_value());
    CHECK(validate_problem(*ce).empty());
    CHECK(find_fillers(*ce, SearchBudget{}).empty());
}

TEST_CASE("the factorization unit of id_Z2 lifts against the boundary of Z2") {
    const Factorization fact = factorize(identity_functor(z2()));
    const PathObject po = path_object(terminal_fibration(z2()));
    CHECK(has_llp(fact.lambda, po.boundary, SearchBudget{}));
}

TEST_CASE("reduced and direct lifting-property decisions agree") {
    const std::vector<Functor> lefts = {inclusion(), identity_functor(discrete_pair())};
    const std::vector<Fibration> rights = {terminal_fibration(discrete_pair()),
                                           identity_fibration(indiscrete_pair())};
    for (const Functor& f : lefts)
        for (const Fibration& g : rights)
            CHECK(has_llp(f, g, SearchBudget{}) == has_llp_direct(f, g, SearchBudget{}));
}

TEST_CASE("random instances are deterministic and well formed") {
    std::mt19937_64 a(123), b(123);
    const SizeBounds bounds;
    for (int i = 0; i < 5; ++i) {
        const GroupoidPtr ga = random_groupoid(a, bounds);
        const GroupoidPtr gb = random_groupoid(b, bounds);
        CHECK(*ga == *gb);
        CHECK(validate_groupoid(*ga).empty());
        CHECK(ga->object_count() <= bounds.max_objects);
        CHECK(ga->arrow_count() <= bounds.max_arrows);
    }
    const Functor fa = random_functor(a, z2(), z2(), SearchBudget{});
    const Functor fb = random_functor(b, z2(), z2(), SearchBudget{});
    CHECK(functor_equal(fa, fb));
    CHECK(validate_functor(fa).empty());
}

TEST_CASE("sampled fibrations validate") {
    std::mt19937_64 rng(5);
    for (const GroupoidPtr& base : {z2(), indiscrete_pair(), discrete_pair()})
        for (const Fibration& q : sample_fibrations(rng, base, 3))
            CHECK(validate_fibration(q).empty());
}

TEST_CASE("the verification suite passes and is reproducible") {
    const SizeBounds bounds{3, 9};
    SearchBudget budget;
    const VerificationReport r1 = verify_wfs(11, bounds, budget);
    CHECK(r1.all_pass());
    const VerificationReport r2 = verify_wfs(11, bounds, budget);
    CHECK(serialize_report(r1) == serialize_report(r2));
}

TEST_CASE("oversized bounds are rejected before any enumeration") {
    CHECK_THROWS_AS(verify_wfs(1, SizeBounds{100, 1000}, SearchBudget{}), BudgetExceeded);
}

TEST_CASE("filler search space grows with the candidate codomain") {
    LiftingProblem small;
    small.left = point(z2(), "o");
    small.right = identity_fibration(z2());
    small.top = point(z2(), "o");
    small.bottom = identity_functor(z2());
    // One free arrow (s is self-inverse), two candidate images.
    CHECK(filler_search_space(small) == 2);

    LiftingProblem larger = small;
    larger.right = identity_fibration(z3());
    larger.top = point(z3(), "o");
    Functor collapse;  // Z2 -> Z3, s |-> 1
    collapse.dom = z2();
    collapse.cod = z3();
    collapse.on_objects["o"] = "o";
    collapse.on_arrows = {{"1", "1"}, {"s", "1"}};
    larger.bottom = collapse;
    CHECK(filler_search_space(larger) == 3);
}
