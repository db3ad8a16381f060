#include <map>
#include <string>

#include <CLI11.hpp>

#include "qcir/cli.hpp"

namespace qcir {

int run_command_line(const std::vector<std::string> &args) {
    CLI::App app{"Qcircuit diagram compiler: parse, lay out and render \\Qcircuit sources"};
    app.name("qcir");

    CliOptions options;
    std::string format = "svg";
    std::string output;
    std::string style_file;
    double px_per_em = 0;

    app.add_option("inputs", options.inputs, "input files ('-' reads standard input)")
        ->required();
    app.add_option("-f,--format", format, "output format")
        ->check(CLI::IsMember({"svg", "ascii", "scene"}))
        ->capture_default_str();
    app.add_option("-o,--output", output, "output file, or directory for batch runs");
    app.add_flag("--lenient", options.lenient, "skip unknown commands with a warning");
    app.add_option("--style", style_file, "style file (falls back to $QCIR_STYLE)");
    app.add_option("--px-per-em", px_per_em, "pixels per em in SVG output");
    app.add_flag("--check-only", options.check_only, "validate only, write no output");

    try {
        // CLI11 wants argv order reversed.
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (format == "ascii") {
        options.format = OutputFormat::Ascii;
    } else if (format == "scene") {
        options.format = OutputFormat::Scene;
    } else {
        options.format = OutputFormat::Svg;
    }
    if (!output.empty()) {
        options.output = output;
    }
    if (!style_file.empty()) {
        options.style_file = style_file;
    }
    if (px_per_em != 0) {
        options.px_per_em = px_per_em;
    }
    return run(options);
}

}  // namespace qcir
