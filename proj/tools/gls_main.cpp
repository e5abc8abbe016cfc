#include "gls/commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

int main(int argc, char** argv)
{
	const std::vector<std::string> args(argv + 1, argv + argc);
	const gls::CommandResult r = gls::run_command(args);
	std::cout << r.out;
	std::cerr << r.err;
	if (const char* dir = std::getenv(gls::output_dir_variable); dir && *dir && !r.subcommand.empty() && !r.out.empty()) {
		const auto path = std::filesystem::path(dir) /
		                  (r.subcommand + (r.format == gls::Format::json ? ".json" : ".txt"));
		std::ofstream f(path, std::ios::binary);
		if (!f) {
			std::cerr << "{\"error\":\"io\",\"message\":\"cannot write report\",\"path\":\"" << path.string() << "\"}\n";
			return gls::exit_code::usage;
		}
		f << r.out;
	}
	return r.exit_code;
}
