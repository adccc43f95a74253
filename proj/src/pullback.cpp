#include "gpdwfs/pullback.hpp"

#include "gpdwfs/builtins.hpp"

namespace gpdwfs {

PullbackSquare pullback(const Functor& f, const Fibration& p) {
    if (!same_groupoid(f.cod, p.p.cod))
        throw CodomainMismatch("pullback: legs have different codomains");
    const Groupoid& A = *f.dom;
    const Groupoid& E = *p.p.dom;

    auto apex = std::make_shared<Groupoid>();
    PullbackSquare sq;
    sq.f = f;
    sq.p = p;
    sq.proj0.dom = apex;
    sq.proj0.cod = f.dom;
    sq.proj1.dom = apex;
    sq.proj1.cod = p.p.dom;

    for (const ObjId& a : A.objects)
        for (const ObjId& e : E.objects) {
            if (f.obj(a) != p.p.obj(e)) continue;
            const ObjId o = pair_name(a, e);
            apex->add_object(o);
            apex->identity[o] = pair_name(A.id(a), E.id(e));
            sq.proj0.on_objects[o] = a;
            sq.proj1.on_objects[o] = e;
        }
    for (const auto& [al, da] : A.arrows)
        for (const auto& [be, db] : E.arrows) {
            if (f.arr(al) != p.p.arr(be)) continue;
            const ArrId id = pair_name(al, be);
            apex->add_arrow(id, pair_name(da.src, db.src), pair_name(da.tgt, db.tgt));
            apex->inverse[id] = pair_name(A.inv(al), E.inv(be));
            sq.proj0.on_arrows[id] = al;
            sq.proj1.on_arrows[id] = be;
        }
    for (const auto& [x, dx] : apex->arrows)
        for (const auto& [y, dy] : apex->arrows) {
            if (dx.tgt != dy.src) continue;
            apex->compose_table[{x, y}] = pair_name(
                A.compose(sq.proj0.on_arrows.at(y), sq.proj0.on_arrows.at(x)),
                E.compose(sq.proj1.on_arrows.at(y), sq.proj1.on_arrows.at(x)));
        }
    apex->normalize();
    sq.apex = apex;
    return sq;
}

Functor mediating_arrow(const PullbackSquare& sq, const Functor& u, const Functor& v) {
    if (!same_groupoid(u.dom, v.dom))
        throw NotACone("mediating_arrow: legs have different domains");
    if (!same_groupoid(u.cod, sq.f.dom) || !same_groupoid(v.cod, sq.p.p.dom))
        throw NotACone("mediating_arrow: legs do not target the cospan feet");
    if (!functor_equal(compose_functors(sq.f, u), compose_functors(sq.p.p, v)))
        throw NotACone("mediating_arrow: cone condition f.u = p.v fails");
    Functor out;
    out.dom = u.dom;
    out.cod = sq.apex;
    for (const ObjId& x : u.dom->objects) out.on_objects[x] = pair_name(u.obj(x), v.obj(x));
    for (const auto& [a, d] : u.dom->arrows) out.on_arrows[a] = pair_name(u.arr(a), v.arr(a));
    return out;
}

Fibration base_change(const PullbackSquare& sq) {
    Fibration out;
    out.p = sq.proj0;
    for (const ObjId& o : sq.apex->objects) {
        const ObjId& a = sq.proj0.obj(o);
        const ObjId& e = sq.proj1.obj(o);
        for (const ArrId& gamma : sq.f.dom->arrows_from(a))
            out.cleavage[{o, gamma}] = pair_name(gamma, sq.p.lift(e, sq.f.arr(gamma)));
    }
    return out;
}

Fibration base_change_fibration(const Functor& f, const Fibration& p) {
    return base_change(pullback(f, p));
}

Fibration second_leg_fibration(const PullbackSquare& sq, const Fibration& f_fib) {
    if (!functor_equal(f_fib.p, sq.f))
        throw PreconditionViolated("second_leg_fibration: cleavage is not for the f-leg");
    Fibration out;
    out.p = sq.proj1;
    for (const ObjId& o : sq.apex->objects) {
        const ObjId& a = sq.proj0.obj(o);
        const ObjId& e = sq.proj1.obj(o);
        for (const ArrId& beta : sq.p.p.dom->arrows_from(e))
            out.cleavage[{o, beta}] = pair_name(f_fib.lift(a, sq.p.p.arr(beta)), beta);
    }
    return out;
}

PullbackSquare product(const GroupoidPtr& x, const GroupoidPtr& y) {
    return pullback(terminal_arrow(x), terminal_fibration(y));
}

KernelPair kernel_pair(const Fibration& p) {
    KernelPair kp;
    kp.square = pullback(p.p, p);
    kp.pr0 = base_change(kp.square);
    kp.pr1 = second_leg_fibration(kp.square, p);
    return kp;
}

bool is_pullback_cone(const PullbackSquare& sq, const Functor& u, const Functor& v) {
    Functor med;
    try {
        med = mediating_arrow(sq, u, v);
    } catch (const NotACone&) {
        return false;
    }
    return is_bijective(med);
}

}  // namespace gpdwfs
