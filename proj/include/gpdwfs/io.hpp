#pragma once

#include "gpdwfs/oracle.hpp"

namespace gpdwfs {

struct SyntaxError : Error {
    SyntaxError(const std::string& what, std::size_t line_, std::size_t col_)
        : Error("SyntaxError at " + std::to_string(line_) + ":" + std::to_string(col_) + ": " + what),
          line(line_),
          col(col_) {}
    std::size_t line;
    std::size_t col;
};

struct SchemaError : Error {
    SchemaError(const std::string& field_, const std::string& what)
        : Error("SchemaError(" + field_ + "): " + what), field(field_) {}
    std::string field;
};

struct ValidationError : Error {
    explicit ValidationError(Violations vs)
        : Error("ValidationError: " + describe(vs)), violations(std::move(vs)) {}
    Violations violations;
};

inline constexpr const char* kToolVersion = "gpdwfs 1.0.0";

// Top-level "type" field of a document.
std::string document_type(const std::string& text);

// Documents are canonical JSON: object keys sorted, lists in table order,
// two-space indent, trailing newline. parse(serialize(x)) == x and
// serialize(parse(d)) is byte-stable.
std::string serialize_groupoid(const Groupoid& g);
GroupoidPtr parse_groupoid(const std::string& text);

std::string serialize_functor(const Functor& f);
Functor parse_functor(const std::string& text);

// A fibration document carries an explicit cleavage table keyed
// (object, base arrow), or the token "auto" which resolves through
// derive_canonical_cleavage at load time.
std::string serialize_fibration(const Fibration& q);
Fibration parse_fibration(const std::string& text);

std::string serialize_problem(const LiftingProblem& prob);
LiftingProblem parse_problem(const std::string& text);

std::string serialize_filler(const Filler& fill, bool verified);
std::string serialize_factorization(const Factorization& fact, bool verified);
std::string serialize_pullback(const PullbackSquare& sq);
std::string serialize_path_object(const PathObject& po);
std::string serialize_report(const VerificationReport& report);
std::string serialize_diagnostic(const std::string& kind, const std::string& message,
                                 const Violations& vs);

// DOT digraph; identities render as self-loops like every other endo-arrow.
std::string export_dot(const Groupoid& g, const std::string& name);

// Write-temp-then-rename.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace gpdwfs
