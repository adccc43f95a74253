#include "gpdwfs/oracle.hpp"

#include <chrono>

#include "gpdwfs/builtins.hpp"
#include "gpdwfs/io.hpp"

namespace gpdwfs {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Backtracking enumerator: object images first, then non-identity arrow
// images in canonical order. Identity images are forced by the object map,
// inverse images by the partner arrow; after every assignment the partial map
// is checked against every composition both factors and composite of which
// are already assigned.
struct FunctorEnum {
    GroupoidPtr xp, bp;
    const Groupoid& X;
    const Groupoid& B;
    const SearchBudget& budget;
    Clock::time_point start = Clock::now();
    std::size_t candidates = 0;
    std::vector<ObjId> xobjs;
    std::vector<ArrId> xarrs;
    std::map<ObjId, ObjId> omap;
    std::map<ArrId, ArrId> amap;
    std::function<void(const Functor&)> sink;

    FunctorEnum(const GroupoidPtr& x, const GroupoidPtr& b, const SearchBudget& bud)
        : xp(x), bp(b), X(*x), B(*b), budget(bud), xobjs(x->objects) {
        for (const ArrId& a : X.arrows_canonical())
            if (!X.is_identity(a)) xarrs.push_back(a);
    }

    void charge() {
        if (++candidates > budget.max_candidates)
            throw BudgetExceeded("functor enumeration: more than " +
                                 std::to_string(budget.max_candidates) + " candidates");
        if ((candidates & 0x3ff) == 0 && seconds_since(start) > budget.max_seconds)
            throw BudgetExceeded("functor enumeration: time limit exceeded");
    }

    // Assigns x |-> y and closes under inverses and composition with every
    // arrow already assigned, forcing composite images. Every composable pair
    // is checked exactly when its later member enters the map, so a full map
    // is a functor. Returns false on any clash; trail records the additions.
    bool assign(const ArrId& a0, const ArrId& img0, std::vector<ArrId>& trail) {
        std::vector<ArrId> queue;
        auto set = [&](const ArrId& x, const ArrId& y) -> bool {
            auto it = amap.find(x);
            if (it != amap.end()) return it->second == y;
            if (B.src(y) != omap.at(X.src(x)) || B.tgt(y) != omap.at(X.tgt(x))) return false;
            amap[x] = y;
            trail.push_back(x);
            queue.push_back(x);
            return true;
        };
        if (!set(a0, img0)) return false;
        if (!set(X.inv(a0), B.inv(img0))) return false;
        while (!queue.empty()) {
            const ArrId x = queue.back();
            queue.pop_back();
            const ArrId xi = amap.at(x);
            for (const auto& [v, vi] : amap) {
                if (X.tgt(x) == X.src(v) && !set(X.compose(v, x), B.compose(vi, xi)))
                    return false;
                if (X.tgt(v) == X.src(x) && !set(X.compose(x, v), B.compose(xi, vi)))
                    return false;
            }
        }
        return true;
    }

    void unwind(const std::vector<ArrId>& trail) {
        for (const ArrId& x : trail) amap.erase(x);
    }

    void rec_objects(std::size_t i) {
        if (i == xobjs.size()) {
            rec_arrows(0);
            return;
        }
        const ObjId& x = xobjs[i];
        for (const ObjId& b : B.objects) {
            charge();
            omap[x] = b;
            amap[X.id(x)] = B.id(b);
            rec_objects(i + 1);
            amap.erase(X.id(x));
            omap.erase(x);
        }
    }

    void rec_arrows(std::size_t i) {
        while (i < xarrs.size() && amap.count(xarrs[i])) ++i;
        if (i == xarrs.size()) {
            sink(Functor{xp, bp, omap, amap});
            return;
        }
        const ArrId& a = xarrs[i];
        for (const ArrId& img : B.hom(omap.at(X.src(a)), omap.at(X.tgt(a)))) {
            charge();
            std::vector<ArrId> trail;
            if (assign(a, img, trail)) rec_arrows(i + 1);
            unwind(trail);
        }
    }
};

std::size_t sat_mul(std::size_t a, std::size_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > std::numeric_limits<std::size_t>::max() / b)
        return std::numeric_limits<std::size_t>::max();
    return a * b;
}

}  // namespace

void for_each_functor(const GroupoidPtr& x, const GroupoidPtr& b, const SearchBudget& budget,
                      const std::function<void(const Functor&)>& sink) {
    FunctorEnum e(x, b, budget);
    e.sink = sink;
    e.rec_objects(0);
}

std::vector<Functor> enumerate_functors(const GroupoidPtr& x, const GroupoidPtr& b,
                                        const SearchBudget& budget) {
    std::vector<Functor> out;
    for_each_functor(x, b, budget, [&out](const Functor& f) { out.push_back(f); });
    return out;
}

std::vector<Functor> enumerate_functors_naive(const GroupoidPtr& x, const GroupoidPtr& b,
                                              const SearchBudget& budget) {
    const Groupoid& X = *x;
    const Groupoid& B = *b;
    std::vector<ArrId> xarrs;
    for (const ArrId& a : X.arrows_canonical())
        if (!X.is_identity(a)) xarrs.push_back(a);

    const Clock::time_point start = Clock::now();
    std::size_t candidates = 0;
    std::vector<Functor> out;

    std::map<ObjId, ObjId> omap;
    std::function<void(std::size_t)> objects = [&](std::size_t i) {
        if (i == X.objects.size()) {
            // Every endpoint-respecting arrow map, validated wholesale.
            std::vector<std::vector<ArrId>> choices;
            for (const ArrId& a : xarrs) {
                choices.push_back(B.hom(omap.at(X.src(a)), omap.at(X.tgt(a))));
                if (choices.back().empty()) return;
            }
            std::vector<std::size_t> pick(xarrs.size(), 0);
            while (true) {
                if (++candidates > budget.max_candidates)
                    throw BudgetExceeded("naive enumeration: candidate limit");
                if ((candidates & 0xff) == 0 && seconds_since(start) > budget.max_seconds)
                    throw BudgetExceeded("naive enumeration: time limit");
                Functor f{x, b, omap, {}};
                for (const ObjId& o : X.objects) f.on_arrows[X.id(o)] = B.id(omap.at(o));
                for (std::size_t k = 0; k < xarrs.size(); ++k)
                    f.on_arrows[xarrs[k]] = choices[k][pick[k]];
                if (validate_functor(f).empty()) out.push_back(std::move(f));
                std::size_t k = 0;
                while (k < pick.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
                if (k == pick.size() && !pick.empty()) break;
                if (pick.empty()) break;
            }
            return;
        }
        for (const ObjId& img : B.objects) {
            omap[X.objects[i]] = img;
            objects(i + 1);
        }
        omap.erase(X.objects[i]);
    };
    objects(0);
    return out;
}

std::size_t filler_search_space(const LiftingProblem& prob) {
    const Groupoid& X = *prob.left.cod;
    const Groupoid& B = *prob.right.p.dom;
    std::size_t max_hom = 0;
    for (const ObjId& a : B.objects)
        for (const ObjId& b : B.objects)
            max_hom = std::max(max_hom, B.hom(a, b).size());
    std::size_t free_arrows = 0;
    for (const ArrId& a : X.arrows_canonical()) {
        if (X.is_identity(a)) continue;
        if (X.inv(a) < a && X.inv(a) != a) continue;  // inverse partner counted once
        ++free_arrows;
    }
    std::size_t space = 1;
    for (std::size_t i = 0; i < X.object_count(); ++i) space = sat_mul(space, B.object_count());
    for (std::size_t i = 0; i < free_arrows; ++i) space = sat_mul(space, max_hom);
    return space;
}

std::vector<Filler> find_fillers(const LiftingProblem& prob, const SearchBudget& budget) {
    if (auto vs = validate_problem(prob); !vs.empty())
        throw PreconditionViolated(describe(vs));
    std::vector<Filler> out;
    for_each_functor(prob.left.cod, prob.right.p.dom, budget, [&](const Functor& j) {
        Filler fill{j};
        if (is_filler(prob, fill)) out.push_back(std::move(fill));
    });
    return out;
}

namespace {

// Walks every commuting square from f to g and reports the first without a
// filler, deciding each square either directly or in reduced identity-bottom
// form.
std::optional<LiftingProblem> first_unsolvable(const Functor& f, const Fibration& g,
                                               const SearchBudget& budget, bool reduce) {
    for (const Functor& k : enumerate_functors(f.cod, g.p.cod, budget)) {
        const Functor kf = compose_functors(k, f);
        for (const Functor& t : enumerate_functors(f.dom, g.p.dom, budget)) {
            if (!functor_equal(compose_functors(g.p, t), kf)) continue;
            LiftingProblem prob{f, g, t, k, std::nullopt};
            if (reduce) {
                ReducedProblem red = reduce_lifting_problem(prob);
                if (find_fillers(red.reduced, budget).empty()) return prob;
            } else {
                if (find_fillers(prob, budget).empty()) return prob;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

bool has_llp(const Functor& f, const Fibration& g, const SearchBudget& budget) {
    return !first_unsolvable(f, g, budget, true).has_value();
}

bool has_llp_direct(const Functor& f, const Fibration& g, const SearchBudget& budget) {
    return !first_unsolvable(f, g, budget, false).has_value();
}

std::optional<LiftingProblem> find_llp_counterexample(const Functor& f, const Fibration& g,
                                                      const SearchBudget& budget) {
    return first_unsolvable(f, g, budget, true);
}

GroupoidPtr random_groupoid(std::mt19937_64& rng, const SizeBounds& bounds) {
    std::vector<GroupoidPtr> parts;
    std::size_t obj_left = bounds.max_objects ? 1 + rng() % bounds.max_objects : 0;
    std::size_t arr_left = bounds.max_arrows;
    std::size_t idx = 0;
    while (obj_left > 0 && arr_left > 0) {
        std::size_t n = 1 + rng() % obj_left;
        while (n > 1 && n * n > arr_left) --n;
        if (n * n > arr_left) break;
        const std::size_t kmax = std::min<std::size_t>(3, arr_left / (n * n));
        const std::size_t k = 1 + rng() % kmax;
        parts.push_back(connected_component(n, k, "c" + std::to_string(idx++) + "_"));
        obj_left -= n;
        arr_left -= n * n * k;
    }
    return disjoint_union(parts);
}

Functor random_functor(std::mt19937_64& rng, const GroupoidPtr& x, const GroupoidPtr& b,
                       const SearchBudget& budget) {
    std::vector<Functor> all = enumerate_functors(x, b, budget);
    if (all.empty()) throw NoWitness("random_functor: no functors between the given groupoids");
    return all[rng() % all.size()];
}

std::vector<Fibration> sample_fibrations(std::mt19937_64& rng, const GroupoidPtr& base,
                                         std::size_t count) {
    std::vector<Fibration> pool;
    pool.push_back(identity_fibration(base));
    // Product projection base x Z2 -> base.
    pool.push_back(base_change_fibration(terminal_arrow(base), terminal_fibration(z2())));
    if (base->arrow_count() <= 16 && base->arrow_count() > 0) {
        const PathObject po = path_object(terminal_fibration(base));
        pool.push_back(po.boundary0);
        pool.push_back(po.boundary1);
    }
    // A base change of a pool member along a random endofunctor.
    try {
        SearchBudget small{20000, 5.0};
        const Functor h = random_functor(rng, base, base, small);
        const Fibration& q = pool[rng() % pool.size()];
        if (q.p.dom->arrow_count() <= 16)
            pool.push_back(base_change_fibration(h, q));
    } catch (const Error&) {
        // No endofunctor found within the small budget; the fixed pool stands.
    }

    std::vector<Fibration> out;
    std::vector<std::size_t> order(pool.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    while (out.size() < count && !order.empty()) {
        const std::size_t at = rng() % order.size();
        out.push_back(pool[order[at]]);
        order.erase(order.begin() + at);
    }
    return out;
}

namespace {

LawTally& new_tally(VerificationReport& rep, const std::string& law) {
    rep.laws.push_back(LawTally{law, 0, 0, {}});
    return rep.laws.back();
}

void record(LawTally& t, bool ok, const std::string& counterexample) {
    ++t.checked;
    if (!ok) {
        ++t.failed;
        if (t.counterexamples.size() < 3) t.counterexamples.push_back(counterexample);
    }
}

std::size_t vertical_count(const Fibration& q) {
    std::size_t n = 0;
    for (const auto& [a, d] : q.p.dom->arrows)
        if (q.p.cod->is_identity(q.p.arr(a))) ++n;
    return n;
}

}  // namespace

VerificationReport verify_wfs(std::uint64_t seed, const SizeBounds& bounds,
                              const SearchBudget& budget) {
    if (bounds.max_objects > 6 || bounds.max_arrows > 24)
        throw BudgetExceeded("verify_wfs: bounds beyond max_objects=6 / max_arrows=24 "
                             "are outside the supported search sizes");
    const Clock::time_point start = Clock::now();
    const auto charge = [&] {
        if (seconds_since(start) > budget.max_seconds)
            throw BudgetExceeded("verify_wfs: time limit exceeded");
    };

    std::mt19937_64 rng(seed);
    VerificationReport rep;
    rep.seed = seed;
    rep.bounds = bounds;

    std::vector<GroupoidPtr> pool = {terminal_groupoid(), z2(), discrete_pair(),
                                     indiscrete_pair()};
    for (int i = 0; i < 3; ++i) pool.push_back(random_groupoid(rng, bounds));
    rep.groupoid_count = pool.size();

    {
        LawTally& t = new_tally(rep, "groupoid-laws");
        for (const auto& g : pool)
            record(t, validate_groupoid(*g).empty(), serialize_groupoid(*g));
    }

    std::vector<Functor> funs;
    for (int i = 0; i < 8; ++i) {
        charge();
        const GroupoidPtr& x = pool[rng() % pool.size()];
        const GroupoidPtr& b = pool[rng() % pool.size()];
        try {
            funs.push_back(random_functor(rng, x, b, budget));
        } catch (const NoWitness&) {
        }
    }
    rep.functor_count = funs.size();

    {
        LawTally& t = new_tally(rep, "functor-laws");
        for (const Functor& f : funs) {
            const bool ok = validate_functor(f).empty() &&
                            functor_equal(compose_functors(identity_functor(f.cod), f), f) &&
                            functor_equal(compose_functors(f, identity_functor(f.dom)), f);
            record(t, ok, serialize_functor(f));
        }
    }

    std::vector<Fibration> fibs;
    for (const auto& base : pool) {
        charge();
        for (Fibration& q : sample_fibrations(rng, base, 2)) fibs.push_back(std::move(q));
    }
    rep.fibration_count = fibs.size();

    {
        LawTally& t = new_tally(rep, "fibration-laws");
        for (const Fibration& q : fibs)
            record(t, validate_fibration(q).empty(), serialize_fibration(q));
    }

    {
        // Derived cleavages (base change, composite with identity) stay valid.
        LawTally& t = new_tally(rep, "cleavage-stability");
        for (const Fibration& q : fibs) {
            charge();
            if (q.p.dom->arrow_count() > 16) continue;
            bool ok = true;
            try {
                const Functor h = random_functor(rng, q.p.cod, q.p.cod, budget);
                ok = ok && validate_fibration(base_change_fibration(h, q)).empty();
            } catch (const NoWitness&) {
            }
            const Fibration comp = compose_fibrations(q, identity_fibration(q.p.dom));
            ok = ok && validate_fibration(comp).empty() && comp.cleavage == q.cleavage;
            record(t, ok, serialize_fibration(q));
        }
    }

    std::vector<std::pair<Fibration, PathObject>> paths;
    {
        LawTally& t = new_tally(rep, "path-object-laws");
        for (const Fibration& q : fibs) {
            charge();
            if (q.p.dom->arrow_count() > 16) continue;
            const PathObject po = path_object(q);
            const bool ok = validate_groupoid(*po.path).empty() &&
                            validate_functor(po.unit).empty() &&
                            validate_fibration(po.boundary).empty() &&
                            functor_equal(compose_functors(po.boundary.p, po.unit),
                                          diagonal(po.kp)) &&
                            po.path->object_count() == vertical_count(q);
            record(t, ok, serialize_fibration(q));
            if (ok && paths.size() < 4) paths.emplace_back(q, po);
        }
    }

    {
        // The canonical comparison Map_p(p*f) -> Path(f*p) is an isomorphism
        // commuting with units and boundaries.
        LawTally& t = new_tally(rep, "stability");
        for (const auto& [q, po] : paths) {
            charge();
            try {
                const Functor f = random_functor(rng, pool[rng() % pool.size()], q.p.cod, budget);
                if (f.dom->arrow_count() * q.p.dom->arrow_count() > 64) continue;
                const Stability st = stability(q, f, po);
                const GroupoidPtr F = st.pb.apex;
                const Functor m_top =
                    mediating_arrow(st.map_side, identity_functor(F),
                                    compose_functors(po.unit, st.pb.proj1));
                const Functor inner = mediating_arrow(
                    st.pb, compose_functors(st.pulled.p, st.map_side.proj0),
                    compose_functors(po.boundary1.p, st.map_side.proj1));
                const Functor outer =
                    mediating_arrow(st.path_pulled.kp.square, st.map_side.proj0, inner);
                const bool ok =
                    validate_functor(st.iso).empty() && is_bijective(st.iso) &&
                    functor_equal(compose_functors(st.iso, m_top), st.path_pulled.unit) &&
                    functor_equal(compose_functors(st.path_pulled.boundary.p, st.iso), outer);
                record(t, ok, serialize_fibration(q));
            } catch (const NoWitness&) {
            }
        }
    }

    std::vector<Factorization> facts;
    {
        LawTally& t = new_tally(rep, "factorization");
        for (const Functor& f : funs) {
            charge();
            if (f.cod->arrow_count() > 12) continue;
            const Factorization fact = factorize(f);
            const bool ok = functor_equal(compose_functors(fact.rho.p, fact.lambda), f) &&
                            validate_fibration(fact.rho).empty() &&
                            validate_functor(fact.lambda).empty();
            record(t, ok, serialize_functor(f));
            if (ok && facts.size() < 3 && fact.mid->arrow_count() <= 24)
                facts.push_back(fact);
        }
    }

    {
        // Solve the retraction square of each factorization constructively and
        // cross-check the filler against the exhaustive search.
        LawTally& t = new_tally(rep, "lifting");
        for (const Factorization& fact : facts) {
            charge();
            LiftingProblem prob{fact.lambda, fact.rho, fact.lambda, fact.rho.p,
                                FactorizationWitness{fact.f}};
            bool ok = validate_problem(prob).empty();
            if (ok) {
                const Filler fill = solve_lifting(prob);
                ok = is_filler(prob, fill);
                if (ok && filler_search_space(prob) <= 100000) {
                    bool found = false;
                    for (const Filler& cand : find_fillers(prob, budget))
                        if (functor_equal(cand.j, fill.j)) found = true;
                    ok = found;
                }
            }
            record(t, ok, serialize_functor(fact.f));
        }
    }

    {
        LawTally& t = new_tally(rep, "transport-contracts");
        for (const auto& [p, po] : paths) {
            charge();
            if (p.p.dom->arrow_count() > 8 || po.path->arrow_count() > 32) continue;
            const std::vector<Fibration> qs = sample_fibrations(rng, p.p.dom, 1);
            if (qs.empty()) continue;
            const Fibration& q = qs.front();
            if (q.p.dom->arrow_count() > 16) continue;
            const GroupoidPtr Z = discrete_pair();
            std::size_t used = 0;
            for (const Functor& e : enumerate_functors(Z, q.p.dom, budget)) {
                if (used >= 2) break;
                for (const Functor& u : enumerate_functors(Z, po.path, budget)) {
                    if (used >= 2) break;
                    if (!functor_equal(compose_functors(q.p, e),
                                       compose_functors(po.boundary0.p, u)))
                        continue;
                    ++used;
                    const Functor res = transport(po, q, e, u);
                    bool ok = functor_equal(compose_functors(q.p, res),
                                            compose_functors(po.boundary1.p, u));
                    // Unit squares must transport to e itself.
                    const GroupoidPtr W = terminal_groupoid();
                    for (const Functor& s : enumerate_functors(W, Z, budget))
                        for (const Functor& g : enumerate_functors(W, p.p.dom, budget)) {
                            if (!functor_equal(compose_functors(u, s),
                                               compose_functors(po.unit, g)))
                                continue;
                            ok = ok && functor_equal(compose_functors(res, s),
                                                     compose_functors(e, s));
                        }
                    record(t, ok, serialize_fibration(q));
                }
            }
        }
    }

    {
        // The reduced and the direct lifting-property decision agree.
        LawTally& t = new_tally(rep, "llp-agreement");
        Functor incl;
        incl.dom = discrete_pair();
        incl.cod = indiscrete_pair();
        for (const ObjId& o : incl.dom->objects) incl.on_objects[o] = o;
        for (const auto& [a, d] : incl.dom->arrows)
            incl.on_arrows[a] = incl.cod->id(d.src);
        const std::vector<Functor> lefts = {incl, identity_functor(discrete_pair()),
                                            terminal_arrow(z2())};
        const std::vector<Fibration> rights = {terminal_fibration(discrete_pair()),
                                               identity_fibration(indiscrete_pair()),
                                               terminal_fibration(z2())};
        for (const Functor& f : lefts)
            for (const Fibration& g : rights) {
                charge();
                record(t, has_llp(f, g, budget) == has_llp_direct(f, g, budget),
                       serialize_fibration(g));
            }
    }

    return rep;
}

}  // namespace gpdwfs
