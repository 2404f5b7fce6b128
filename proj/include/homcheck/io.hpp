#pragma once

#include <map>
#include <string>
#include <variant>

#include "homcheck/deformation.hpp"
#include "homcheck/graded.hpp"
#include "homcheck/operators.hpp"
#include "homcheck/representation.hpp"

namespace homcheck::io {

// JSON documents with rationals as strings ("p" or "p/q", q > 0) and dense
// row-major nested arrays for matrices and structure-constant tensors.
// Serialization is canonical: sorted keys, lowest-term rationals, two-space
// indent, trailing newline. parse(serialize(x)) == x for every document.

/// Operator documents keep T as a raw matrix so that `check` can report an
/// Eq. (35) failure as a mathematical result instead of a parse error.
struct OperatorDocument {
  std::variant<Representation, PoissonRepresentation> rep;
  Matrix matrix;
};

struct OperatorListDocument {
  std::variant<Representation, PoissonRepresentation> rep;
  std::vector<Matrix> operators;
};

struct AverageOperatorDocument {
  std::variant<HomAlgebra, HomTwoProductAlgebra> algebra;
  Matrix matrix;
};

struct CocycleDocument {
  HomTwoProductAlgebra algebra;
  TwoCocycle cocycle;
};

using DocumentValue =
    std::variant<HomAlgebra, HomTwoProductAlgebra, GradedAlgebra,
                 Representation, PoissonRepresentation, OperatorDocument,
                 OperatorListDocument, AverageOperatorDocument,
                 CocycleDocument, TruncatedDeformation>;

struct Document {
  DocumentValue value;
  std::map<std::string, std::string> metadata;  // free-form name/notes
};

/// Throws validation_error with field context on malformed input
/// (malformed rational, shape mismatch, unknown kind, non-multiplicative
/// twist, inhomogeneous grading, ...).
Document parse_document(const std::string& bytes);

std::string serialize_document(const Document& doc);

inline std::string serialize(DocumentValue value,
                             std::map<std::string, std::string> meta = {}) {
  return serialize_document(Document{std::move(value), std::move(meta)});
}

Document load_file(const std::string& path);
void write_file(const std::string& path, const Document& doc);

/// Algebra documents must pass their own kind checker; throws
/// precondition_error naming the first violation otherwise. Non-algebra
/// documents validate structurally at construction and pass through.
void validate_document(const Document& doc);

/// Fail-closed write for construction outputs: validate_document first,
/// nothing is written on failure.
void write_validated(const std::string& path, const Document& doc);

/// Machine-readable CheckReport (1-based indices, rationals as strings).
std::string report_to_json(const CheckReport& r);

/// A standalone matrix file, [["1","0"],["0","1"]]; used for twist
/// endomorphisms, operator matrices, average operators and cocycles given
/// on the command line.
Matrix parse_matrix_file(const std::string& bytes);

}  // namespace homcheck::io
