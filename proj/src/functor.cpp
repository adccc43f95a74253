#include "gpdwfs/functor.hpp"

#include <set>

namespace gpdwfs {

Functor identity_functor(const GroupoidPtr& g) {
    Functor f;
    f.dom = g;
    f.cod = g;
    for (const ObjId& x : g->objects) f.on_objects[x] = x;
    for (const auto& [a, d] : g->arrows) f.on_arrows[a] = a;
    return f;
}

Violations validate_functor(const Functor& f) {
    Violations out;
    auto report = [&out](std::string code, std::string detail) {
        out.push_back(Violation{std::move(code), std::move(detail)});
    };
    const Groupoid& A = *f.dom;
    const Groupoid& B = *f.cod;

    for (const ObjId& x : A.objects) {
        auto it = f.on_objects.find(x);
        if (it == f.on_objects.end()) {
            report("MissingImage", "object " + x);
        } else if (std::count(B.objects.begin(), B.objects.end(), it->second) == 0) {
            report("BadEndpointImage", "object " + x + " maps to unknown " + it->second);
        }
    }
    for (const auto& [a, d] : A.arrows) {
        auto it = f.on_arrows.find(a);
        if (it == f.on_arrows.end()) {
            report("MissingImage", "arrow " + a);
            continue;
        }
        auto jt = B.arrows.find(it->second);
        if (jt == B.arrows.end()) {
            report("BadEndpointImage", "arrow " + a + " maps to unknown " + it->second);
            continue;
        }
        auto sx = f.on_objects.find(d.src);
        auto tx = f.on_objects.find(d.tgt);
        if (sx == f.on_objects.end() || tx == f.on_objects.end()) continue;  // reported above
        if (jt->second.src != sx->second || jt->second.tgt != tx->second)
            report("BadEndpointImage", "arrow " + a + ": image endpoints do not match object images");
    }
    if (!out.empty()) return out;

    for (const ObjId& x : A.objects)
        if (f.arr(A.id(x)) != B.id(f.obj(x)))
            report("IdentityNotPreserved", "1_" + x);

    for (const auto& [a, da] : A.arrows)
        for (const auto& [b, db] : A.arrows) {
            if (da.tgt != db.src) continue;
            const ArrId& comp = A.compose(b, a);
            if (f.arr(comp) != B.compose(f.arr(b), f.arr(a)))
                report("CompositionNotPreserved", b + " . " + a);
        }
    return out;
}

Functor compose_functors(const Functor& g, const Functor& f) {
    if (!same_groupoid(f.cod, g.dom))
        throw DomainMismatch("compose_functors: cod of the first factor differs from dom of the second");
    Functor out;
    out.dom = f.dom;
    out.cod = g.cod;
    for (const auto& [x, y] : f.on_objects) out.on_objects[x] = g.obj(y);
    for (const auto& [a, b] : f.on_arrows) out.on_arrows[a] = g.arr(b);
    return out;
}

bool functor_equal(const Functor& a, const Functor& b) {
    return same_groupoid(a.dom, b.dom) && same_groupoid(a.cod, b.cod) &&
           a.on_objects == b.on_objects && a.on_arrows == b.on_arrows;
}

bool is_bijective(const Functor& f) {
    std::set<ObjId> objs;
    for (const auto& [x, y] : f.on_objects) objs.insert(y);
    if (objs.size() != f.dom->objects.size() || objs.size() != f.cod->objects.size()) return false;
    std::set<ArrId> arrs;
    for (const auto& [a, b] : f.on_arrows) arrs.insert(b);
    return arrs.size() == f.dom->arrows.size() && arrs.size() == f.cod->arrows.size();
}

Functor invert_functor(const Functor& f) {
    if (!is_bijective(f)) throw PreconditionViolated("invert_functor: not bijective");
    Functor out;
    out.dom = f.cod;
    out.cod = f.dom;
    for (const auto& [x, y] : f.on_objects) out.on_objects[y] = x;
    for (const auto& [a, b] : f.on_arrows) out.on_arrows[b] = a;
    return out;
}

}  // namespace gpdwfs
