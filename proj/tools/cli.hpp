#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tconvex::cli {

enum class Command { polygon, gram, orthoscheme, solve, cone, check };
enum class OutFormat { json, csv };

// One flat config shape for every command; fields irrelevant to a command
// are ignored. Loadable from a JSON file, overridable from flags.
struct JobConfig {
    Command command = Command::polygon;
    std::vector<double> phis;
    std::vector<double> hs;
    std::vector<double> dihedral_sq;
    int periods = 3;
    std::uint64_t seed = 20250815u;
    OutFormat out_format = OutFormat::json;
    std::string svg_path;
};

// Merge the JSON object in `path` into `cfg`. Unknown keys are ignored (the
// emitted polygon JSON must itself be a usable config). Throws
// std::runtime_error on unreadable files, malformed JSON, wrong types, or a
// "command" field that contradicts `cfg.command`.
void merge_config_file(JobConfig& cfg, const std::string& path);

// Execute one job. Results go to `out`, diagnostics to `err`.
// Returns 0 on success, 1 on domain errors (the domain error name is printed
// to `err`), 2 on config-level errors.
int run(const JobConfig& cfg, std::ostream& out, std::ostream& err);

// Full entry point: parse argv (subcommand + --config + overrides), then run.
// Exit code contract as for run(), with 2 for unparseable command lines.
int main_impl(int argc, const char* const* argv, std::ostream& out,
              std::ostream& err);

} // namespace tconvex::cli
