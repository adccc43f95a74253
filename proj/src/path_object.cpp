#include "gpdwfs/path_object.hpp"

namespace gpdwfs {

const ObjId& PathObject::object_of(const ObjId& a, const ObjId& b, const ArrId& alpha) const {
    auto it = obj_index_.find({a, b, alpha});
    if (it == obj_index_.end())
        throw Error("path object: no triple (" + a + "," + b + "," + alpha + ")");
    return it->second;
}

const ArrId& PathObject::arrow_of(const ArrId& abar, const ArrId& bbar, const ObjId& source) const {
    auto it = arr_index_.find({abar, bbar, source});
    if (it == arr_index_.end())
        throw Error("path object: no arrow (" + abar + "," + bbar + ") out of " + source);
    return it->second;
}

PathObject path_object(const Fibration& p) {
    if (auto vs = validate_functor(p.p); !vs.empty())
        throw InvalidFibration(describe(vs));
    if (auto vs = validate_fibration(p); !vs.empty())
        throw InvalidFibration(describe(vs));

    const Groupoid& E = *p.p.dom;
    PathObject po;
    po.base = p;
    po.kp = kernel_pair(p);

    auto path = std::make_shared<Groupoid>();

    // Objects: one per p-vertical arrow of E.
    for (const auto& [alpha, d] : E.arrows) {
        if (!p.p.cod->is_identity(p.p.arr(alpha))) continue;
        const ObjId o = triple_name(d.src, d.tgt, alpha);
        path->add_object(o);
        po.obj_parts[o] = PathObject::ObjParts{d.src, d.tgt, alpha};
        po.obj_index_[{d.src, d.tgt, alpha}] = o;
    }

    // Arrows out of (a,b,alpha): pairs (abar, bbar) with equal images; the
    // target third component is bbar . alpha . abar^-1.
    for (const auto& [o, parts] : po.obj_parts) {
        for (const ArrId& abar : E.arrows_from(parts.a))
            for (const ArrId& bbar : E.arrows_from(parts.b)) {
                if (p.p.arr(abar) != p.p.arr(bbar)) continue;
                const ArrId id = at_name(pair_name(abar, bbar), o);
                const ArrId& conj = E.compose(bbar, E.compose(parts.alpha, E.inv(abar)));
                const ObjId tgt = triple_name(E.tgt(abar), E.tgt(bbar), conj);
                path->add_arrow(id, o, tgt);
                po.arr_parts[id] = PathObject::ArrParts{abar, bbar, o};
                po.arr_index_[{abar, bbar, o}] = id;
            }
    }
    for (const auto& [o, parts] : po.obj_parts)
        path->identity[o] = po.arr_index_.at({E.id(parts.a), E.id(parts.b), o});
    for (const auto& [id, parts] : po.arr_parts) {
        const ObjId& tgt = path->tgt(id);
        path->inverse[id] = po.arr_index_.at({E.inv(parts.abar), E.inv(parts.bbar), tgt});
    }
    for (const auto& [x, dx] : path->arrows)
        for (const auto& [y, dy] : path->arrows) {
            if (dx.tgt != dy.src) continue;
            const auto& px = po.arr_parts.at(x);
            const auto& py = po.arr_parts.at(y);
            path->compose_table[{x, y}] = po.arr_index_.at(
                {E.compose(py.abar, px.abar), E.compose(py.bbar, px.bbar), dx.src});
        }
    path->normalize();
    po.path = path;

    // Unit r_p : a |-> (a,a,1_a), alpha |-> (alpha, alpha).
    po.unit.dom = p.p.dom;
    po.unit.cod = path;
    for (const ObjId& a : E.objects)
        po.unit.on_objects[a] = po.obj_index_.at({a, a, E.id(a)});
    for (const auto& [alpha, d] : E.arrows)
        po.unit.on_arrows[alpha] = po.arr_index_.at({alpha, alpha, po.unit.on_objects.at(d.src)});

    // Boundary d_p with the conjugation cleavage.
    po.boundary.p.dom = path;
    po.boundary.p.cod = po.kp.square.apex;
    for (const auto& [o, parts] : po.obj_parts)
        po.boundary.p.on_objects[o] = pair_name(parts.a, parts.b);
    for (const auto& [id, parts] : po.arr_parts)
        po.boundary.p.on_arrows[id] = pair_name(parts.abar, parts.bbar);
    for (const auto& [o, parts] : po.obj_parts) {
        const ObjId& below = po.boundary.p.on_objects.at(o);
        for (const ArrId& g : po.kp.square.apex->arrows_from(below)) {
            const ArrId& abar = po.kp.square.proj0.arr(g);
            const ArrId& bbar = po.kp.square.proj1.arr(g);
            po.boundary.cleavage[{o, g}] = po.arr_index_.at({abar, bbar, o});
        }
    }

    po.boundary0 = compose_fibrations(po.kp.pr0, po.boundary);
    po.boundary1 = compose_fibrations(po.kp.pr1, po.boundary);
    return po;
}

Functor diagonal(const KernelPair& kp) {
    const Functor id = identity_functor(kp.square.f.dom);
    return mediating_arrow(kp.square, id, id);
}

Stability stability(const Fibration& p, const Functor& f) {
    return stability(p, f, path_object(p));
}

Stability stability(const Fibration& p, const Functor& f, const PathObject& path_base) {
    if (!same_groupoid(f.cod, p.p.cod))
        throw CodomainMismatch("stability: cod(f) != cod(p)");
    Stability st;
    st.pb = pullback(f, p);
    st.pulled = base_change(st.pb);
    st.path_base = path_base;
    st.path_pulled = path_object(st.pulled);
    st.map_side = pullback(st.pb.proj1, path_base.boundary0);

    const Groupoid& X = *f.dom;
    st.iso.dom = st.map_side.apex;
    st.iso.cod = st.path_pulled.path;
    for (const ObjId& o : st.map_side.apex->objects) {
        const ObjId& fo = st.map_side.proj0.obj(o);   // (x, e)
        const ObjId& w = st.map_side.proj1.obj(o);    // (e, e', eps)
        const auto& wp = path_base.obj_parts.at(w);
        const ObjId& x = st.pb.proj0.obj(fo);
        const ObjId other = pair_name(x, wp.b);
        const ArrId vert = pair_name(X.id(x), wp.alpha);
        st.iso.on_objects[o] = st.path_pulled.object_of(fo, other, vert);
    }
    for (const auto& [m, d] : st.map_side.apex->arrows) {
        const ArrId& fa = st.map_side.proj0.arr(m);   // (zeta, eta)
        const ArrId& wa = st.map_side.proj1.arr(m);   // (eta, eta') out of a triple
        const auto& wp = path_base.arr_parts.at(wa);
        const ArrId& zeta = st.pb.proj0.arr(fa);
        const ArrId other = pair_name(zeta, wp.bbar);
        st.iso.on_arrows[m] = st.path_pulled.arrow_of(fa, other, st.iso.on_objects.at(d.src));
    }
    return st;
}

}  // namespace gpdwfs
