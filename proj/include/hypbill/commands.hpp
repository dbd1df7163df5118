#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypbill/config.hpp"

namespace hypbill {

enum class OutputFormat { Json, Csv, Text, Svg };

std::optional<OutputFormat> parse_format(const std::string& name);

/// Command-line options; set fields override the run config file.
struct RunOptions {
    std::optional<OutputFormat> format;
    std::optional<std::uint64_t> seed;
    std::optional<int> depth;
    /// Word-count budget for enumerations.
    std::optional<std::size_t> budget;
    std::optional<double> theta;
    std::optional<double> phi;
    std::optional<int> n_future;
    std::optional<int> n_past;
    std::optional<std::string> word;
};

struct CommandOutput {
    std::string body;
    /// Extra artifacts keyed by file suffix, e.g. ".code.txt".
    std::vector<std::pair<std::string, std::string>> attachments;
    std::vector<std::string> warnings;
};

/// Each command takes the text of its --config file. Errors surface as
/// hypbill::Error.
CommandOutput cmd_validate(const std::string& config, const RunOptions& opts);
CommandOutput cmd_simulate(const std::string& config, const RunOptions& opts);
CommandOutput cmd_decode(const std::string& config, const RunOptions& opts);
CommandOutput cmd_analyze(const std::string& config, const RunOptions& opts);
CommandOutput cmd_distance(const std::string& config, const RunOptions& opts);
CommandOutput cmd_converge(const std::string& config, const RunOptions& opts);
CommandOutput cmd_render(const std::string& config, const RunOptions& opts);

}  // namespace hypbill
