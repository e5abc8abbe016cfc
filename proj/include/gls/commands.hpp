#pragma once

// Command dispatch shared by the gls executable and the tests.
//
//   check <spec>
//   build --target {U|W|P|T|L} [--n N] [--min D] [--max D] [--via minimal|prolongation] [spec]
//   compare-theorem <spec>
//   free-dims --gens K --max D
//   chain <spec>
//
// Global options: --format json|text, --timing, --constants, --lenient.

#include "gls/report.hpp"

#include <string>
#include <vector>

namespace gls {

namespace exit_code {
inline constexpr int pass = 0;
inline constexpr int check_failure = 1;
inline constexpr int usage = 2;
}  // namespace exit_code

struct CommandResult {
	int exit_code = exit_code::pass;
	std::string out;  // serialized report (empty on usage errors)
	std::string err;  // one JSON object per line
	Report report;
	std::string subcommand;
	Format format = Format::text;
};

/// argv without the program name.
CommandResult run_command(const std::vector<std::string>& argv);

/// Name of the optional output-directory variable.
inline constexpr const char* output_dir_variable = "GLS_OUTPUT_DIR";

}  // namespace gls
