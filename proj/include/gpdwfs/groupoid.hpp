#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gpdwfs/errors.hpp"

namespace gpdwfs {

// Identifiers are opaque tokens, unique within one groupoid. Derived
// constructions (pullbacks, path objects) name their elements by canonical
// tuples of the source names, so identical inputs yield identical structures.
using ObjId = std::string;
using ArrId = std::string;

std::string tuple_name(const std::vector<std::string>& parts);
inline std::string pair_name(const std::string& a, const std::string& b) { return tuple_name({a, b}); }
inline std::string triple_name(const std::string& a, const std::string& b, const std::string& c) {
    return tuple_name({a, b, c});
}
// Arrows of a path groupoid are determined by their component pair plus the
// source object, so the source participates in the name.
inline std::string at_name(const std::string& arrow, const std::string& src_obj) {
    return arrow + "@" + src_obj;
}

struct ArrowData {
    ObjId src;
    ObjId tgt;
    bool operator==(const ArrowData&) const = default;
};

// A finite groupoid given by full tables: objects, arrows with endpoints,
// identities, a total composition table on composable pairs, and inverses.
class Groupoid {
public:
    std::vector<ObjId> objects;  // kept sorted and unique
    std::map<ArrId, ArrowData> arrows;
    std::map<ObjId, ArrId> identity;
    // Keyed (f, g) with tgt(f) = src(g); the value is "g after f".
    std::map<std::pair<ArrId, ArrId>, ArrId> compose_table;
    std::map<ArrId, ArrId> inverse;

    bool operator==(const Groupoid&) const = default;

    bool has_object(const ObjId& x) const { return identity.count(x) || std::count(objects.begin(), objects.end(), x); }
    bool has_arrow(const ArrId& a) const { return arrows.count(a) != 0; }

    const ObjId& src(const ArrId& a) const { return arrows.at(a).src; }
    const ObjId& tgt(const ArrId& a) const { return arrows.at(a).tgt; }
    const ArrId& id(const ObjId& x) const { return identity.at(x); }
    const ArrId& inv(const ArrId& a) const { return inverse.at(a); }

    // g after f; requires tgt(f) = src(g).
    const ArrId& compose(const ArrId& g, const ArrId& f) const {
        auto it = compose_table.find({f, g});
        if (it == compose_table.end())
            throw Error("compose: no entry for (" + f + ", " + g + ")");
        return it->second;
    }

    bool is_identity(const ArrId& a) const;

    // Arrows sorted lexicographically by (src, tgt, id): the canonical order
    // used for every deterministic choice in the library.
    std::vector<ArrId> arrows_canonical() const;

    std::vector<ArrId> hom(const ObjId& a, const ObjId& b) const;

    // Arrows with source a, canonical order.
    std::vector<ArrId> arrows_from(const ObjId& a) const;

    std::size_t object_count() const { return objects.size(); }
    std::size_t arrow_count() const { return arrows.size(); }

    void add_object(const ObjId& x);
    void add_arrow(const ArrId& a, const ObjId& src, const ObjId& tgt);

    // Recomputes the sorted object list; call after bulk edits.
    void normalize();
};

using GroupoidPtr = std::shared_ptr<const Groupoid>;

// Structural equality; pointer identity is only a shortcut.
bool same_groupoid(const GroupoidPtr& a, const GroupoidPtr& b);

// Checks every groupoid law and reports each failure with its witnesses.
// Codes: MissingIdentity, MissingInverse, NonAssociative, BadEndpoints,
// MissingComposite, SpuriousComposite, IdentityLaw, InverseLaw, DuplicateObject.
Violations validate_groupoid(const Groupoid& g);

}  // namespace gpdwfs
