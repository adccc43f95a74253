#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "gpdwfs/io.hpp"

using namespace gpdwfs;

namespace {

// Exit codes: 0 success, 1 mathematical failure (violations, missing filler,
// failing report), 2 usage / syntax / schema / operational errors.
constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        atomic_write(out_path, content);
}

int cmd_validate(const std::string& in, const std::string& out) {
    const std::string text = slurp(in);
    const std::string type = document_type(text);
    Violations vs;
    std::string kind;
    if (type == "groupoid") {
        kind = "groupoid";
        vs = validate_groupoid(*parse_groupoid(text));
    } else if (type == "functor") {
        kind = "functor";
        const Functor f = parse_functor(text);
        vs = validate_groupoid(*f.dom);
        for (auto& v : validate_groupoid(*f.cod)) vs.push_back(v);
        if (vs.empty()) vs = validate_functor(f);
    } else if (type == "fibration") {
        kind = "fibration";
        const Fibration q = parse_fibration(text);
        vs = validate_groupoid(*q.p.dom);
        for (auto& v : validate_groupoid(*q.p.cod)) vs.push_back(v);
        if (vs.empty()) vs = validate_functor(q.p);
        if (vs.empty()) vs = validate_fibration(q);
    } else if (type == "lifting_problem") {
        kind = "lifting_problem";
        vs = validate_problem(parse_problem(text));
    } else {
        throw SchemaError("$.type", "cannot validate documents of type '" + type + "'");
    }
    const std::string verdict = vs.empty() ? "valid" : "invalid";
    emit(out, serialize_diagnostic(kind, verdict, vs));
    return vs.empty() ? kOk : kFail;
}

int cmd_pullback(const std::string& in_f, const std::string& in_p, const std::string& out,
                 const std::string& format) {
    const Functor f = parse_functor(slurp(in_f));
    const Fibration p = parse_fibration(slurp(in_p));
    const PullbackSquare sq = pullback(f, p);
    if (format == "dot")
        emit(out, export_dot(*sq.apex, "pullback"));
    else
        emit(out, serialize_pullback(sq));
    return kOk;
}

int cmd_path(const std::string& in, const std::string& out, const std::string& format) {
    const Fibration p = parse_fibration(slurp(in));
    const PathObject po = path_object(p);
    if (format == "dot")
        emit(out, export_dot(*po.path, "path"));
    else
        emit(out, serialize_path_object(po));
    return kOk;
}

int cmd_factorize(const std::string& in, const std::string& out) {
    const Functor f = parse_functor(slurp(in));
    const Factorization fact = factorize(f);
    const bool verified = functor_equal(compose_functors(fact.rho.p, fact.lambda), f) &&
                          validate_fibration(fact.rho).empty();
    emit(out, serialize_factorization(fact, verified));
    return verified ? kOk : kFail;
}

int cmd_lift(const std::string& in, const std::string& out, bool oracle) {
    const LiftingProblem prob = parse_problem(slurp(in));
    if (auto vs = validate_problem(prob); !vs.empty()) {
        emit(out, serialize_diagnostic("lifting_problem", "invalid", vs));
        return kFail;
    }
    if (prob.witness) {
        const Filler fill = solve_lifting(prob);
        emit(out, serialize_filler(fill, is_filler(prob, fill)));
        return kOk;
    }
    if (!oracle)
        throw NoWitness("problem carries no witness; pass --oracle for exhaustive search");
    const auto fillers = find_fillers(prob, SearchBudget{});
    if (fillers.empty()) {
        emit(out, serialize_diagnostic("lifting_problem", "no filler exists", {}));
        return kFail;
    }
    emit(out, serialize_filler(fillers.front(), true));
    return kOk;
}

int cmd_verify(std::uint64_t seed, std::size_t max_objects, std::size_t max_arrows,
               std::size_t budget, const std::string& out) {
    SearchBudget sb;
    sb.max_candidates = budget;
    const VerificationReport rep = verify_wfs(seed, SizeBounds{max_objects, max_arrows}, sb);
    emit(out, serialize_report(rep));
    return rep.all_pass() ? kOk : kFail;
}

int cmd_export_dot(const std::string& in, const std::string& out) {
    const GroupoidPtr g = parse_groupoid(slurp(in));
    emit(out, export_dot(*g, "groupoid"));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Groupoid weak-factorization toolkit"};
    app.require_subcommand(1);

    std::vector<std::string> inputs;
    std::string out_path;
    std::string format = "json";
    bool oracle = false;
    std::uint64_t seed = 0;
    std::size_t max_objects = 4, max_arrows = 12, budget = 1000000;

    auto add_io = [&](CLI::App* sub, std::size_t n_inputs) {
        sub->add_option("--in", inputs, "input document path ('-' for stdin)")
            ->expected(static_cast<int>(n_inputs))
            ->required();
        sub->add_option("--out", out_path, "output path (atomic write; default stdout)");
    };

    CLI::App* validate = app.add_subcommand("validate", "validate a document");
    add_io(validate, 1);

    CLI::App* pb = app.add_subcommand("pullback", "chosen pullback of a functor along a fibration");
    add_io(pb, 2);
    pb->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

    CLI::App* path = app.add_subcommand("path", "path object of a fibration");
    add_io(path, 1);
    path->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

    CLI::App* fact = app.add_subcommand("factorize", "factor a functor through its mapping path object");
    add_io(fact, 1);

    CLI::App* lift = app.add_subcommand("lift", "solve a lifting problem");
    add_io(lift, 1);
    lift->add_flag("--oracle", oracle, "fall back to exhaustive filler search");

    CLI::App* verify = app.add_subcommand("verify-wfs", "run the randomized law suites");
    verify->add_option("--seed", seed, "rng seed");
    verify->add_option("--max-objects", max_objects, "object bound for random groupoids");
    verify->add_option("--max-arrows", max_arrows, "arrow bound for random groupoids");
    verify->add_option("--budget", budget, "candidate budget for searches");
    verify->add_option("--out", out_path, "output path (atomic write; default stdout)");

    CLI::App* dot = app.add_subcommand("export-dot", "render a groupoid as a DOT digraph");
    add_io(dot, 1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kOk : kUsage;
    }

    try {
        if (*validate) return cmd_validate(inputs.at(0), out_path);
        if (*pb) return cmd_pullback(inputs.at(0), inputs.at(1), out_path, format);
        if (*path) return cmd_path(inputs.at(0), out_path, format);
        if (*fact) return cmd_factorize(inputs.at(0), out_path);
        if (*lift) return cmd_lift(inputs.at(0), out_path, oracle);
        if (*verify) return cmd_verify(seed, max_objects, max_arrows, budget, out_path);
        if (*dot) return cmd_export_dot(inputs.at(0), out_path);
    } catch (const ValidationError& e) {
        std::cerr << e.what() << "\n";
        if (!out_path.empty())
            atomic_write(out_path, serialize_diagnostic("error", e.what(), e.violations));
        return kFail;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        if (!out_path.empty())
            atomic_write(out_path, serialize_diagnostic("error", e.what(), {}));
        return kUsage;
    }
    return kUsage;
}
