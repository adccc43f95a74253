#include "gpdwfs/groupoid.hpp"

#include <algorithm>

namespace gpdwfs {

std::string tuple_name(const std::vector<std::string>& parts) {
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += parts[i];
    }
    out += ")";
    return out;
}

bool Groupoid::is_identity(const ArrId& a) const {
    auto it = arrows.find(a);
    if (it == arrows.end()) return false;
    auto jt = identity.find(it->second.src);
    return jt != identity.end() && jt->second == a;
}

std::vector<ArrId> Groupoid::arrows_canonical() const {
    std::vector<ArrId> out;
    out.reserve(arrows.size());
    for (const auto& [a, d] : arrows) out.push_back(a);
    std::sort(out.begin(), out.end(), [this](const ArrId& x, const ArrId& y) {
        const auto& dx = arrows.at(x);
        const auto& dy = arrows.at(y);
        return std::tie(dx.src, dx.tgt, x) < std::tie(dy.src, dy.tgt, y);
    });
    return out;
}

std::vector<ArrId> Groupoid::hom(const ObjId& a, const ObjId& b) const {
    std::vector<ArrId> out;
    for (const auto& [id, d] : arrows)
        if (d.src == a && d.tgt == b) out.push_back(id);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ArrId> Groupoid::arrows_from(const ObjId& a) const {
    std::vector<ArrId> out;
    for (const ArrId& id : arrows_canonical())
        if (arrows.at(id).src == a) out.push_back(id);
    return out;
}

void Groupoid::add_object(const ObjId& x) { objects.push_back(x); }

void Groupoid::add_arrow(const ArrId& a, const ObjId& src, const ObjId& tgt) {
    arrows[a] = ArrowData{src, tgt};
}

void Groupoid::normalize() {
    std::sort(objects.begin(), objects.end());
    objects.erase(std::unique(objects.begin(), objects.end()), objects.end());
}

bool same_groupoid(const GroupoidPtr& a, const GroupoidPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

Violations validate_groupoid(const Groupoid& g) {
    Violations out;
    auto report = [&out](std::string code, std::string detail) {
        out.push_back(Violation{std::move(code), std::move(detail)});
    };

    {
        auto sorted = g.objects;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i] == sorted[i - 1]) report("DuplicateObject", sorted[i]);
    }

    auto known_object = [&g](const ObjId& x) {
        return std::count(g.objects.begin(), g.objects.end(), x) > 0;
    };

    for (const auto& [a, d] : g.arrows) {
        if (!known_object(d.src)) report("BadEndpoints", "arrow " + a + " has unknown source " + d.src);
        if (!known_object(d.tgt)) report("BadEndpoints", "arrow " + a + " has unknown target " + d.tgt);
    }

    for (const ObjId& x : g.objects) {
        auto it = g.identity.find(x);
        if (it == g.identity.end()) {
            report("MissingIdentity", "object " + x);
            continue;
        }
        auto jt = g.arrows.find(it->second);
        if (jt == g.arrows.end()) {
            report("MissingIdentity", "identity of " + x + " names unknown arrow " + it->second);
        } else if (jt->second.src != x || jt->second.tgt != x) {
            report("BadEndpoints", "identity of " + x + " is not an endo-arrow: " + it->second);
        }
    }
    for (const auto& [x, a] : g.identity)
        if (!known_object(x)) report("BadEndpoints", "identity table names unknown object " + x);

    // Composition: defined exactly on composable pairs, endpoints correct.
    for (const auto& [f, df] : g.arrows) {
        for (const auto& [h, dh] : g.arrows) {
            auto it = g.compose_table.find({f, h});
            const bool composable = df.tgt == dh.src;
            if (!composable) {
                if (it != g.compose_table.end())
                    report("SpuriousComposite", "entry (" + f + ", " + h + ") on a non-composable pair");
                continue;
            }
            if (it == g.compose_table.end()) {
                report("MissingComposite", "(" + f + ", " + h + ")");
                continue;
            }
            auto jt = g.arrows.find(it->second);
            if (jt == g.arrows.end()) {
                report("BadEndpoints", "composite of (" + f + ", " + h + ") names unknown arrow " + it->second);
            } else if (jt->second.src != df.src || jt->second.tgt != dh.tgt) {
                report("BadEndpoints", "composite " + it->second + " of (" + f + ", " + h + ") has wrong endpoints");
            }
        }
    }
    if (!out.empty()) return out;  // laws below assume a well-formed table

    // Identity laws.
    for (const auto& [f, d] : g.arrows) {
        if (g.compose(f, g.id(d.src)) != f)
            report("IdentityLaw", f + " . 1_" + d.src + " != " + f);
        if (g.compose(g.id(d.tgt), f) != f)
            report("IdentityLaw", "1_" + d.tgt + " . " + f + " != " + f);
    }

    // Associativity over all composable triples.
    for (const auto& [f, df] : g.arrows)
        for (const auto& [h, dh] : g.arrows) {
            if (df.tgt != dh.src) continue;
            for (const auto& [k, dk] : g.arrows) {
                if (dh.tgt != dk.src) continue;
                const ArrId& left = g.compose(k, g.compose(h, f));
                const ArrId& right = g.compose(g.compose(k, h), f);
                if (left != right)
                    report("NonAssociative", "(" + k + " . " + h + ") . " + f + " != " + k + " . (" + h + " . " + f + ")");
            }
        }

    // Inverse laws; the stored table is cross-checked, not trusted.
    for (const auto& [f, d] : g.arrows) {
        auto it = g.inverse.find(f);
        if (it == g.inverse.end()) {
            report("MissingInverse", f);
            continue;
        }
        auto jt = g.arrows.find(it->second);
        if (jt == g.arrows.end()) {
            report("MissingInverse", "inverse of " + f + " names unknown arrow " + it->second);
            continue;
        }
        if (jt->second.src != d.tgt || jt->second.tgt != d.src) {
            report("BadEndpoints", "inverse " + it->second + " of " + f + " has wrong endpoints");
            continue;
        }
        if (g.compose(it->second, f) != g.id(d.src))
            report("InverseLaw", it->second + " . " + f + " != 1_" + d.src);
        if (g.compose(f, it->second) != g.id(d.tgt))
            report("InverseLaw", f + " . " + it->second + " != 1_" + d.tgt);
    }
    for (const auto& [f, finv] : g.inverse)
        if (!g.arrows.count(f)) report("MissingInverse", "inverse table names unknown arrow " + f);

    return out;
}

}  // namespace gpdwfs
