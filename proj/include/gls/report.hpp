#pragma once

// Command reports and their canonical serializations.

#include "gls/algebra.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gls {

struct CheckOutcome {
	std::string name;
	bool pass = false;
	std::string witness;  // empty on pass

	friend bool operator==(const CheckOutcome&, const CheckOutcome&) = default;
};

/// One nonzero structure constant [b^i_a, b^j_b] = value.
struct ConstantEntry {
	int i = 0;
	std::size_t a = 0;
	int j = 0;
	std::size_t b = 0;
	std::vector<std::string> value;

	friend bool operator==(const ConstantEntry&, const ConstantEntry&) = default;
};

struct Report {
	std::vector<std::string> command;
	std::map<std::string, std::map<int, std::size_t>> dimensions;  // table name -> degree -> dim
	std::vector<CheckOutcome> checks;
	std::map<std::string, std::string> facts;
	std::map<std::string, bool> truncated;
	std::optional<std::vector<ConstantEntry>> constants;
	std::optional<double> seconds;  // only with --timing

	bool passed() const;
	friend bool operator==(const Report&, const Report&) = default;
};

/// Constants with i <= j (and a <= b when i == j), nonzero only, in basis order.
std::vector<ConstantEntry> constant_entries(const GradedLieSuperalgebra& g);

enum class Format { json, text };

std::string emit_report(const Report& r, Format f);
/// Inverse of emit_report(r, Format::json). Throws std::invalid_argument.
Report parse_report(const std::string& json_text);

}  // namespace gls
