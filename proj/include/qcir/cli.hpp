#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qcir/parser.hpp"
#include "qcir/style.hpp"

namespace qcir {

enum class OutputFormat {
    Svg,
    Ascii,
    Scene,
};

struct CliOptions {
    std::vector<std::string> inputs;  // "-" reads standard input
    OutputFormat format = OutputFormat::Svg;
    std::optional<std::string> output;  // file or directory; stdout if unset
    bool lenient = false;
    std::optional<std::string> style_file;
    std::optional<double> px_per_em;
    bool check_only = false;
};

// Exit codes: 0 clean, 1 parse/validation error, 2 I/O or option error.
// Batch inputs are processed independently; the worst severity wins.
int run(const CliOptions &options, std::istream &in, std::ostream &out, std::ostream &err);

// Convenience overload on std::cin/cout/cerr.
int run(const CliOptions &options);

// Parses argv (excluding argv[0]) into options, then runs. Used by main().
int run_command_line(const std::vector<std::string> &args);

}  // namespace qcir
