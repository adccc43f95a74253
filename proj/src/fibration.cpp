#include "gpdwfs/fibration.hpp"

#include "gpdwfs/builtins.hpp"

namespace gpdwfs {

namespace {

// All lifts of gamma at e, canonical order.
std::vector<ArrId> lifts_of(const Functor& p, const ObjId& e, const ArrId& gamma) {
    std::vector<ArrId> out;
    for (const ArrId& a : p.dom->arrows_from(e))
        if (p.arr(a) == gamma) out.push_back(a);
    return out;
}

}  // namespace

Violations validate_fibration(const Fibration& q) {
    Violations out;
    auto report = [&out](std::string code, std::string detail) {
        out.push_back(Violation{std::move(code), std::move(detail)});
    };
    const Groupoid& E = *q.p.dom;
    const Groupoid& X = *q.p.cod;

    for (const ObjId& e : E.objects) {
        for (const auto& [gamma, d] : X.arrows) {
            if (d.src != q.p.obj(e)) continue;
            auto it = q.cleavage.find({e, gamma});
            if (it == q.cleavage.end()) {
                if (lifts_of(q.p, e, gamma).empty())
                    report("NotAFibration", "no lift of " + gamma + " at " + e);
                else
                    report("MissingLift", "(" + e + ", " + gamma + ")");
                continue;
            }
            const ArrId& l = it->second;
            if (!E.has_arrow(l)) {
                report("BadLift", "(" + e + ", " + gamma + ") names unknown arrow " + l);
                continue;
            }
            if (E.src(l) != e)
                report("BadLift", "lift of " + gamma + " at " + e + " does not start at " + e);
            if (q.p.arr(l) != gamma)
                report("BadLift", "lift of " + gamma + " at " + e + " does not project to " + gamma);
            if (X.is_identity(gamma) && l != E.id(e))
                report("NotNormal", "(" + e + ", " + gamma + ")");
        }
    }
    for (const auto& [key, l] : q.cleavage) {
        const auto& [e, gamma] = key;
        if (!E.has_object(e))
            report("SpuriousLift", "unknown object " + e);
        else if (!X.has_arrow(gamma))
            report("SpuriousLift", "unknown base arrow " + gamma);
        else if (X.src(gamma) != q.p.obj(e))
            report("SpuriousLift", "(" + e + ", " + gamma + ") is not a liftable pair");
    }
    return out;
}

Cleavage derive_canonical_cleavage(const Functor& p) {
    Cleavage c;
    for (const ObjId& e : p.dom->objects) {
        for (const auto& [gamma, d] : p.cod->arrows) {
            if (d.src != p.obj(e)) continue;
            if (p.cod->is_identity(gamma)) {
                c[{e, gamma}] = p.dom->id(e);
                continue;
            }
            auto ls = lifts_of(p, e, gamma);
            if (ls.empty()) throw NotAFibration(e, gamma);
            c[{e, gamma}] = ls.front();
        }
    }
    return c;
}

Fibration identity_fibration(const GroupoidPtr& g) {
    Fibration f;
    f.p = identity_functor(g);
    for (const ObjId& e : g->objects)
        for (const ArrId& a : g->arrows_from(e)) f.cleavage[{e, a}] = a;
    return f;
}

Fibration terminal_fibration(const GroupoidPtr& x) {
    Fibration f;
    f.p = terminal_arrow(x);
    for (const ObjId& e : x->objects) f.cleavage[{e, "1"}] = x->id(e);
    return f;
}

Fibration compose_fibrations(const Fibration& p, const Fibration& q) {
    if (!same_groupoid(q.p.cod, p.p.dom))
        throw DomainMismatch("compose_fibrations: cod of inner differs from dom of outer");
    Fibration out;
    out.p = compose_functors(p.p, q.p);
    for (const ObjId& e : q.p.dom->objects) {
        const ObjId& mid = q.p.obj(e);
        for (const auto& [gamma, d] : p.p.cod->arrows) {
            if (d.src != p.p.obj(mid)) continue;
            const ArrId& upper = p.lift(mid, gamma);
            out.cleavage[{e, gamma}] = q.lift(e, upper);
        }
    }
    return out;
}

}  // namespace gpdwfs
