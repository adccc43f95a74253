#include "gpdwfs/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "json.hpp"

#include "gpdwfs/builtins.hpp"

namespace gpdwfs {

using json = nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void check_keys(const json& j, const std::string& path, const std::set<std::string>& required,
                const std::set<std::string>& optional = {}) {
    if (!j.is_object()) throw SchemaError(path, "expected an object");
    for (const auto& item : j.items()) {
        if (!required.count(item.key()) && !optional.count(item.key()))
            throw SchemaError(path + "." + item.key(), "unknown field");
    }
    for (const auto& k : required)
        if (!j.contains(k)) throw SchemaError(path + "." + k, "missing field");
}

const json& get(const json& j, const std::string& field, const std::string& path) {
    auto it = j.find(field);
    if (it == j.end()) throw SchemaError(path + "." + field, "missing field");
    return *it;
}

std::string get_str(const json& j, const std::string& field, const std::string& path) {
    const json& v = get(j, field, path);
    if (!v.is_string()) throw SchemaError(path + "." + field, "expected a string");
    return v.get<std::string>();
}

void expect_type(const json& j, const std::string& expected, const std::string& path) {
    if (get_str(j, "type", path) != expected)
        throw SchemaError(path + ".type", "expected \"" + expected + "\"");
}

json j_groupoid(const Groupoid& g) {
    json arrows = json::array();
    for (const auto& [id, d] : g.arrows)
        arrows.push_back({{"id", id}, {"src", d.src}, {"tgt", d.tgt}});
    json compose = json::array();
    for (const auto& [key, val] : g.compose_table)
        compose.push_back({key.first, key.second, val});
    json out;
    out["arrows"] = arrows;
    out["compose"] = compose;
    out["identity"] = g.identity;
    out["inverse"] = g.inverse;
    out["objects"] = g.objects;
    out["type"] = "groupoid";
    return out;
}

Groupoid g_from(const json& j, const std::string& path) {
    check_keys(j, path, {"arrows", "compose", "identity", "inverse", "objects", "type"});
    expect_type(j, "groupoid", path);
    Groupoid g;

    const json& objs = get(j, "objects", path);
    if (!objs.is_array()) throw SchemaError(path + ".objects", "expected an array");
    for (const auto& o : objs) {
        if (!o.is_string()) throw SchemaError(path + ".objects", "expected strings");
        const ObjId name = o.get<std::string>();
        if (std::count(g.objects.begin(), g.objects.end(), name))
            throw SchemaError(path + ".objects", "duplicate object '" + name + "'");
        g.objects.push_back(name);
    }

    const json& arrs = get(j, "arrows", path);
    if (!arrs.is_array()) throw SchemaError(path + ".arrows", "expected an array");
    for (const auto& a : arrs) {
        check_keys(a, path + ".arrows[]", {"id", "src", "tgt"});
        const ArrId id = get_str(a, "id", path + ".arrows[]");
        if (g.arrows.count(id))
            throw SchemaError(path + ".arrows", "duplicate arrow '" + id + "'");
        g.arrows[id] = ArrowData{get_str(a, "src", path + ".arrows[]"),
                                 get_str(a, "tgt", path + ".arrows[]")};
    }

    const json& ident = get(j, "identity", path);
    if (!ident.is_object()) throw SchemaError(path + ".identity", "expected an object");
    for (const auto& item : ident.items()) {
        if (!item.value().is_string()) throw SchemaError(path + ".identity", "expected strings");
        g.identity[item.key()] = item.value().get<std::string>();
    }

    const json& comp = get(j, "compose", path);
    if (!comp.is_array()) throw SchemaError(path + ".compose", "expected an array");
    for (const auto& entry : comp) {
        if (!entry.is_array() || entry.size() != 3 || !entry[0].is_string() ||
            !entry[1].is_string() || !entry[2].is_string())
            throw SchemaError(path + ".compose", "expected [first, second, composite] triples");
        std::pair<ArrId, ArrId> key{entry[0].get<std::string>(), entry[1].get<std::string>()};
        if (g.compose_table.count(key))
            throw SchemaError(path + ".compose",
                              "duplicate pair (" + key.first + ", " + key.second + ")");
        g.compose_table[key] = entry[2].get<std::string>();
    }

    const json& inv = get(j, "inverse", path);
    if (!inv.is_object()) throw SchemaError(path + ".inverse", "expected an object");
    for (const auto& item : inv.items()) {
        if (!item.value().is_string()) throw SchemaError(path + ".inverse", "expected strings");
        g.inverse[item.key()] = item.value().get<std::string>();
    }

    std::sort(g.objects.begin(), g.objects.end());
    return g;
}

std::map<std::string, std::string> str_map(const json& j, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path, "expected an object");
    std::map<std::string, std::string> out;
    for (const auto& item : j.items()) {
        if (!item.value().is_string()) throw SchemaError(path, "expected strings");
        out[item.key()] = item.value().get<std::string>();
    }
    return out;
}

json j_functor(const Functor& f) {
    json out;
    out["cod"] = j_groupoid(*f.cod);
    out["dom"] = j_groupoid(*f.dom);
    out["on_arrows"] = f.on_arrows;
    out["on_objects"] = f.on_objects;
    out["type"] = "functor";
    return out;
}

Functor f_from(const json& j, const std::string& path) {
    check_keys(j, path, {"cod", "dom", "on_arrows", "on_objects", "type"});
    expect_type(j, "functor", path);
    Functor f;
    f.dom = std::make_shared<Groupoid>(g_from(get(j, "dom", path), path + ".dom"));
    f.cod = std::make_shared<Groupoid>(g_from(get(j, "cod", path), path + ".cod"));
    f.on_objects = str_map(get(j, "on_objects", path), path + ".on_objects");
    f.on_arrows = str_map(get(j, "on_arrows", path), path + ".on_arrows");
    return f;
}

json j_fibration(const Fibration& q) {
    json cleavage = json::array();
    for (const auto& [key, val] : q.cleavage)
        cleavage.push_back({key.first, key.second, val});
    json out;
    out["cleavage"] = cleavage;
    out["functor"] = j_functor(q.p);
    out["type"] = "fibration";
    return out;
}

Fibration fib_from(const json& j, const std::string& path) {
    check_keys(j, path, {"cleavage", "functor", "type"});
    expect_type(j, "fibration", path);
    Fibration q;
    q.p = f_from(get(j, "functor", path), path + ".functor");

    const json& cl = get(j, "cleavage", path);
    if (cl.is_string()) {
        if (cl.get<std::string>() != "auto")
            throw SchemaError(path + ".cleavage", "expected \"auto\" or a lift table");
        Violations vs = validate_groupoid(*q.p.dom);
        for (const auto& v : validate_groupoid(*q.p.cod)) vs.push_back(v);
        for (const auto& v : validate_functor(q.p)) vs.push_back(v);
        if (!vs.empty()) throw ValidationError(vs);
        try {
            q.cleavage = derive_canonical_cleavage(q.p);
        } catch (const NotAFibration& e) {
            throw ValidationError(Violations{{"NotAFibration", e.what()}});
        }
        return q;
    }
    if (!cl.is_array()) throw SchemaError(path + ".cleavage", "expected \"auto\" or a lift table");
    for (const auto& entry : cl) {
        if (!entry.is_array() || entry.size() != 3 || !entry[0].is_string() ||
            !entry[1].is_string() || !entry[2].is_string())
            throw SchemaError(path + ".cleavage", "expected [object, arrow, lift] triples");
        std::pair<ObjId, ArrId> key{entry[0].get<std::string>(), entry[1].get<std::string>()};
        if (q.cleavage.count(key))
            throw SchemaError(path + ".cleavage",
                              "duplicate pair (" + key.first + ", " + key.second + ")");
        q.cleavage[key] = entry[2].get<std::string>();
    }
    return q;
}

json j_witness(const LeftWitness& w) {
    json out;
    if (const auto* fw = std::get_if<FactorizationWitness>(&w)) {
        out["f"] = j_functor(fw->f);
        out["kind"] = "factorization_unit";
    } else {
        const auto& uw = std::get<UnitPullbackWitness>(w);
        out["kind"] = "unit_pullback";
        out["p"] = j_fibration(uw.p);
        out["pi0"] = j_functor(uw.pi0);
        out["pi1"] = j_functor(uw.pi1);
        out["q"] = j_fibration(uw.q);
    }
    return out;
}

LeftWitness w_from(const json& j, const std::string& path) {
    const std::string kind = get_str(j, "kind", path);
    if (kind == "factorization_unit") {
        check_keys(j, path, {"f", "kind"});
        return FactorizationWitness{f_from(get(j, "f", path), path + ".f")};
    }
    if (kind == "unit_pullback") {
        check_keys(j, path, {"kind", "p", "pi0", "pi1", "q"});
        return UnitPullbackWitness{fib_from(get(j, "p", path), path + ".p"),
                                   fib_from(get(j, "q", path), path + ".q"),
                                   f_from(get(j, "pi0", path), path + ".pi0"),
                                   f_from(get(j, "pi1", path), path + ".pi1")};
    }
    throw SchemaError(path + ".kind", "unknown witness kind '" + kind + "'");
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw SyntaxError(e.what(), line, col);
    }
}

}  // namespace

std::string document_type(const std::string& text) {
    return get_str(parse_text(text), "type", "$");
}

std::string serialize_groupoid(const Groupoid& g) { return dump(j_groupoid(g)); }

GroupoidPtr parse_groupoid(const std::string& text) {
    return std::make_shared<Groupoid>(g_from(parse_text(text), "$"));
}

std::string serialize_functor(const Functor& f) { return dump(j_functor(f)); }

Functor parse_functor(const std::string& text) { return f_from(parse_text(text), "$"); }

std::string serialize_fibration(const Fibration& q) { return dump(j_fibration(q)); }

Fibration parse_fibration(const std::string& text) { return fib_from(parse_text(text), "$"); }

std::string serialize_problem(const LiftingProblem& prob) {
    json out;
    out["bottom"] = j_functor(prob.bottom);
    out["left"] = j_functor(prob.left);
    out["right"] = j_fibration(prob.right);
    out["top"] = j_functor(prob.top);
    out["type"] = "lifting_problem";
    if (prob.witness) out["witness"] = j_witness(*prob.witness);
    return dump(out);
}

LiftingProblem parse_problem(const std::string& text) {
    const json j = parse_text(text);
    check_keys(j, "$", {"bottom", "left", "right", "top", "type"}, {"witness"});
    expect_type(j, "lifting_problem", "$");
    LiftingProblem prob;
    prob.left = f_from(get(j, "left", "$"), "$.left");
    prob.right = fib_from(get(j, "right", "$"), "$.right");
    prob.top = f_from(get(j, "top", "$"), "$.top");
    prob.bottom = f_from(get(j, "bottom", "$"), "$.bottom");
    if (j.contains("witness")) prob.witness = w_from(j["witness"], "$.witness");
    return prob;
}

std::string serialize_filler(const Filler& fill, bool verified) {
    json out;
    out["filler"] = j_functor(fill.j);
    out["type"] = "filler";
    out["verified"] = verified;
    return dump(out);
}

std::string serialize_factorization(const Factorization& fact, bool verified) {
    json out;
    out["f"] = j_functor(fact.f);
    out["lambda"] = j_functor(fact.lambda);
    out["mid"] = j_groupoid(*fact.mid);
    out["rho"] = j_fibration(fact.rho);
    out["type"] = "factorization";
    out["verified"] = verified;
    return dump(out);
}

std::string serialize_pullback(const PullbackSquare& sq) {
    json out;
    out["apex"] = j_groupoid(*sq.apex);
    out["proj0"] = j_functor(sq.proj0);
    out["proj1"] = j_functor(sq.proj1);
    out["type"] = "pullback";
    return dump(out);
}

std::string serialize_path_object(const PathObject& po) {
    json out;
    out["boundary"] = j_fibration(po.boundary);
    out["path"] = j_groupoid(*po.path);
    out["type"] = "path_object";
    out["unit"] = j_functor(po.unit);
    return dump(out);
}

std::string serialize_report(const VerificationReport& report) {
    json laws = json::array();
    for (const auto& t : report.laws) {
        json ces = json::array();
        for (const auto& ce : t.counterexamples) ces.push_back(json::parse(ce));
        laws.push_back({{"checked", t.checked},
                        {"counterexamples", ces},
                        {"failed", t.failed},
                        {"law", t.law}});
    }
    json out;
    out["all_pass"] = report.all_pass();
    out["bounds"] = {{"max_arrows", report.bounds.max_arrows},
                     {"max_objects", report.bounds.max_objects}};
    out["counts"] = {{"fibrations", report.fibration_count},
                     {"functors", report.functor_count},
                     {"groupoids", report.groupoid_count}};
    out["laws"] = laws;
    out["seed"] = report.seed;
    out["tool"] = kToolVersion;
    out["type"] = "verification_report";
    return dump(out);
}

std::string serialize_diagnostic(const std::string& kind, const std::string& message,
                                 const Violations& vs) {
    json violations = json::array();
    for (const auto& v : vs) violations.push_back({{"code", v.code}, {"detail", v.detail}});
    json out;
    out["kind"] = kind;
    out["message"] = message;
    out["type"] = "diagnostic";
    out["violations"] = violations;
    return dump(out);
}

namespace {
std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}
}  // namespace

std::string export_dot(const Groupoid& g, const std::string& name) {
    std::string out = "digraph \"" + dot_escape(name) + "\" {\n";
    for (const ObjId& o : g.objects)
        out += "  \"" + dot_escape(o) + "\";\n";
    for (const ArrId& a : g.arrows_canonical())
        out += "  \"" + dot_escape(g.src(a)) + "\" -> \"" + dot_escape(g.tgt(a)) +
               "\" [label=\"" + dot_escape(a) + "\"];\n";
    out += "}\n";
    return out;
}

void atomic_write(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open '" + tmp + "' for writing");
        out << content;
        if (!out.flush()) throw Error("write to '" + tmp + "' failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::remove(tmp.c_str());
        throw Error("cannot rename '" + tmp + "' to '" + path + "': " + ec.message());
    }
}

}  // namespace gpdwfs
