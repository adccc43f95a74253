#include "gpdwfs/builtins.hpp"

namespace gpdwfs {

namespace {

GroupoidPtr freeze(Groupoid g) {
    g.normalize();
    return std::make_shared<const Groupoid>(std::move(g));
}

}  // namespace

GroupoidPtr terminal_groupoid() {
    static const GroupoidPtr one = [] {
        Groupoid g;
        g.add_object("*");
        g.add_arrow("1", "*", "*");
        g.identity["*"] = "1";
        g.compose_table[{"1", "1"}] = "1";
        g.inverse["1"] = "1";
        return freeze(std::move(g));
    }();
    return one;
}

Functor terminal_arrow(const GroupoidPtr& x) {
    Functor f;
    f.dom = x;
    f.cod = terminal_groupoid();
    for (const ObjId& o : x->objects) f.on_objects[o] = "*";
    for (const auto& [a, d] : x->arrows) f.on_arrows[a] = "1";
    return f;
}

Functor point(const GroupoidPtr& x, const ObjId& at) {
    if (!std::count(x->objects.begin(), x->objects.end(), at))
        throw Error("point: unknown object " + at);
    Functor f;
    f.dom = terminal_groupoid();
    f.cod = x;
    f.on_objects["*"] = at;
    f.on_arrows["1"] = x->id(at);
    return f;
}

GroupoidPtr z2() {
    static const GroupoidPtr g = [] {
        Groupoid z;
        z.add_object("o");
        z.add_arrow("1", "o", "o");
        z.add_arrow("s", "o", "o");
        z.identity["o"] = "1";
        z.compose_table[{"1", "1"}] = "1";
        z.compose_table[{"1", "s"}] = "s";
        z.compose_table[{"s", "1"}] = "s";
        z.compose_table[{"s", "s"}] = "1";
        z.inverse["1"] = "1";
        z.inverse["s"] = "s";
        return freeze(std::move(z));
    }();
    return g;
}

GroupoidPtr z3() {
    static const GroupoidPtr g = [] {
        Groupoid z;
        z.add_object("o");
        const std::vector<ArrId> el = {"1", "s", "t"};  // 0, 1, 2
        for (const ArrId& a : el) z.add_arrow(a, "o", "o");
        z.identity["o"] = "1";
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                z.compose_table[{el[i], el[j]}] = el[(i + j) % 3];
        z.inverse["1"] = "1";
        z.inverse["s"] = "t";
        z.inverse["t"] = "s";
        return freeze(std::move(z));
    }();
    return g;
}

GroupoidPtr discrete_pair() {
    static const GroupoidPtr g = [] {
        Groupoid d;
        for (const ObjId& o : {"0", "1"}) {
            d.add_object(o);
            const ArrId id = "1_" + o;
            d.add_arrow(id, o, o);
            d.identity[o] = id;
            d.compose_table[{id, id}] = id;
            d.inverse[id] = id;
        }
        return freeze(std::move(d));
    }();
    return g;
}

GroupoidPtr indiscrete_pair() {
    static const GroupoidPtr g = connected_component(2, 1, "");
    return g;
}

GroupoidPtr connected_component(std::size_t n_objects, std::size_t k, const std::string& prefix) {
    if (n_objects == 0 || k == 0 || k > 3) throw Error("connected_component: bad parameters");
    Groupoid g;
    std::vector<ObjId> objs;
    for (std::size_t i = 0; i < n_objects; ++i) objs.push_back(prefix + std::to_string(i));
    auto arrow_id = [&objs](std::size_t i, std::size_t j, std::size_t e) {
        return "g" + std::to_string(e) + "@" + objs[i] + ">" + objs[j];
    };
    for (std::size_t i = 0; i < n_objects; ++i) {
        g.add_object(objs[i]);
        g.identity[objs[i]] = arrow_id(i, i, 0);
    }
    for (std::size_t i = 0; i < n_objects; ++i)
        for (std::size_t j = 0; j < n_objects; ++j)
            for (std::size_t e = 0; e < k; ++e) {
                g.add_arrow(arrow_id(i, j, e), objs[i], objs[j]);
                g.inverse[arrow_id(i, j, e)] = arrow_id(j, i, (k - e) % k);
            }
    for (std::size_t i = 0; i < n_objects; ++i)
        for (std::size_t j = 0; j < n_objects; ++j)
            for (std::size_t l = 0; l < n_objects; ++l)
                for (std::size_t e = 0; e < k; ++e)
                    for (std::size_t h = 0; h < k; ++h)
                        g.compose_table[{arrow_id(i, j, e), arrow_id(j, l, h)}] =
                            arrow_id(i, l, (e + h) % k);
    return freeze(std::move(g));
}

GroupoidPtr disjoint_union(const std::vector<GroupoidPtr>& parts) {
    Groupoid g;
    for (const GroupoidPtr& p : parts) {
        for (const ObjId& o : p->objects) {
            if (g.has_object(o)) throw Error("disjoint_union: object name clash " + o);
            g.add_object(o);
        }
        for (const auto& [a, d] : p->arrows) {
            if (g.arrows.count(a)) throw Error("disjoint_union: arrow name clash " + a);
            g.arrows[a] = d;
        }
        for (const auto& [o, a] : p->identity) g.identity[o] = a;
        for (const auto& [pr, c] : p->compose_table) g.compose_table[pr] = c;
        for (const auto& [a, b] : p->inverse) g.inverse[a] = b;
    }
    g.normalize();
    return std::make_shared<const Groupoid>(std::move(g));
}

}  // namespace gpdwfs
