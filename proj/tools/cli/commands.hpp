#pragma once

#include "report.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace g2k::cli {

struct RunConfig {
    std::string command;
    std::vector<std::string> fixtures;
    std::string orbifold, resolution;  // count-associatives without a fixture
    std::filesystem::path data_dir;
    std::filesystem::path out_dir;  // empty: report to stdout
    std::uint64_t seed = 20240601;
    bool csv = false;
    Tolerances tolerances;

    // command-specific
    int height = 1;  // enumerate-bieberbach axis search
    std::string ade;  // fixed-locus without a fixture
    std::vector<std::string> rotations;  // R2, R+, R-, R3, R4, R6 or I
    std::size_t trials = 100;  // fueter-demo
};

struct RunResult {
    json report;
    std::string csv;
    int exit_code = 0;
};

const std::vector<std::string>& command_names();

/// Dispatches on config.command; throws InputError for bad input.
RunResult run(const RunConfig& config);

/// run() plus file output and diagnostics on stderr; returns the process exit code.
int run_and_emit(const RunConfig& config);

}  // namespace g2k::cli
