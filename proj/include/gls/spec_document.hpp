#pragma once

// JSON input documents describing a Lie-Leibniz triple.
//
// {
//   "field": "rational",
//   "lie_algebra": {"dim": 3, "basis": ["h","e","f"], "brackets": [[0, 1, ["0","2","0"]], ...]},
//   "module": {"dim": 3, "basis": [...], "action": [[["1","0"],["0","-1"]], ...]},
//   "theta": [["1","0","0"], ...],          // dim g rows, dim V columns
//   "window": {"min": -3, "max": 4},        // optional
//   "options": {"name": "...", "description": "..."}  // optional
// }
//
// Coefficients are strings "p/q" or "p"; plain JSON integers are accepted too.

#include "gls/lie_leibniz.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gls {

struct SchemaError {
	std::string path;  // JSON pointer, e.g. "/theta/1"
	std::string message;
};

struct AlgebraSpecDocument {
	std::string field = "rational";
	LieAlgebra lie_algebra;
	Representation module;
	Matrix theta;
	std::optional<Window> window;
	std::map<std::string, std::string> options;

	LieLeibnizTriple triple() const { return LieLeibnizTriple{lie_algebra, module, theta}; }
};

struct SpecParse {
	std::optional<AlgebraSpecDocument> document;
	std::vector<SchemaError> errors;

	bool ok() const { return document.has_value(); }
};

/// Structural validation only (shapes, indices, rationals, keys). Algebraic
/// identities are left to `check`.
SpecParse parse_spec(const std::string& text, bool strict = true);

/// Canonical document text; parse_spec(emit_spec(d)) reproduces d.
std::string emit_spec(const AlgebraSpecDocument& d);
AlgebraSpecDocument document_from_triple(const LieLeibnizTriple& t, std::optional<Window> w = std::nullopt);

}  // namespace gls
