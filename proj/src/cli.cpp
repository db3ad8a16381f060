#include "qcir/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qcir/geometry.hpp"
#include "qcir/render.hpp"
#include "qcir/scene.hpp"
#include "qcir/validate.hpp"

namespace qcir {

namespace fs = std::filesystem;

namespace {

const char *severity_name(Severity severity) {
    return severity == Severity::Error ? "error" : "warning";
}

void print_diagnostics(std::ostream &err, const std::string &file,
                       const std::vector<Diagnostic> &diagnostics) {
    for (const auto &d : diagnostics) {
        std::size_t offset = d.source_span ? d.source_span->begin : 0;
        err << file << ':' << offset << ": " << severity_name(d.severity) << ' ' << d.code
            << ": " << d.message << '\n';
    }
}

const char *format_extension(OutputFormat format) {
    switch (format) {
        case OutputFormat::Svg:
            return "svg";
        case OutputFormat::Ascii:
            return "txt";
        case OutputFormat::Scene:
            return "scene";
    }
    return "svg";
}

bool is_directory_target(const std::string &path) {
    if (path.empty()) {
        return false;
    }
    if (path.back() == '/' || path.back() == fs::path::preferred_separator) {
        return true;
    }
    std::error_code ec;
    return fs::is_directory(path, ec);
}

// Write whole-file via a temp sibling and rename so readers never see a
// partial file.
bool write_atomic(const fs::path &target, const std::string &content, std::string &error) {
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            error = "cannot write '" + tmp.string() + "'";
            return false;
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) {
            error = "short write to '" + tmp.string() + "'";
            return false;
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        error = "cannot rename '" + tmp.string() + "' to '" + target.string() + "'";
        fs::remove(tmp, ec);
        return false;
    }
    return true;
}

struct Pipeline {
    const CliOptions &options;
    const StyleConfig &style;
    std::istream &in;
    std::ostream &out;
    std::ostream &err;

    // 0 = clean, 1 = parse/validation errors, 2 = I/O trouble.
    int process(const std::string &input) {
        std::string source;
        if (input == "-") {
            std::ostringstream buf;
            buf << in.rdbuf();
            source = buf.str();
        } else {
            std::ifstream file(input, std::ios::binary);
            if (!file) {
                err << input << ": cannot read input file\n";
                return 2;
            }
            std::ostringstream buf;
            buf << file.rdbuf();
            source = buf.str();
        }
        const std::string display = input;

        ParseResult parsed = parse(source, options.lenient ? ParseMode::Lenient : ParseMode::Strict);
        print_diagnostics(err, display, parsed.diagnostics);
        if (!parsed.ok()) {
            return 1;
        }

        std::vector<Diagnostic> diags = validate(*parsed.ast);
        print_diagnostics(err, display, diags);
        if (has_errors(diags)) {
            return 1;
        }
        if (options.check_only) {
            return 0;
        }

        std::string rendered;
        if (options.format == OutputFormat::Ascii) {
            rendered = render_ascii(*parsed.ast, style);
        } else {
            GridGeometry grid = grid_geometry(*parsed.ast, style);
            Scene scene = plan_scene(*parsed.ast, grid, style);
            rendered = options.format == OutputFormat::Svg ? render_svg(scene, style)
                                                           : render_scene_text(scene);
        }
        return emit(input, rendered);
    }

    int emit(const std::string &input, const std::string &rendered) {
        if (!options.output) {
            out << rendered;
            return 0;
        }
        fs::path target;
        if (is_directory_target(*options.output)) {
            std::error_code ec;
            fs::create_directories(*options.output, ec);
            if (ec) {
                err << *options.output << ": cannot create output directory\n";
                return 2;
            }
            std::string stem = input == "-" ? "stdin" : fs::path(input).stem().string();
            target = fs::path(*options.output) /
                     (stem + "." + format_extension(options.format));
        } else {
            target = *options.output;
        }
        std::string error;
        if (!write_atomic(target, rendered, error)) {
            err << error << '\n';
            return 2;
        }
        return 0;
    }
};

}  // namespace

int run(const CliOptions &options, std::istream &in, std::ostream &out, std::ostream &err) {
    if (options.inputs.empty()) {
        err << "qcir: no inputs\n";
        return 2;
    }
    if (options.inputs.size() > 1 && options.output && !is_directory_target(*options.output) &&
        !options.check_only) {
        err << "qcir: output must be a directory when rendering multiple inputs\n";
        return 2;
    }

    StyleConfig style;
    std::optional<std::string> style_path = options.style_file;
    if (!style_path) {
        if (const char *env = std::getenv("QCIR_STYLE")) {
            if (*env != '\0') {
                style_path = std::string(env);
            }
        }
    }
    if (style_path) {
        StyleLoadResult loaded = load_style(*style_path);
        for (const auto &warning : loaded.warnings) {
            err << *style_path << ": warning: " << warning << '\n';
        }
        if (!loaded.config) {
            err << *style_path << ": " << loaded.error << '\n';
            return 2;
        }
        style = *loaded.config;
    }
    if (options.px_per_em) {
        if (*options.px_per_em <= 0) {
            err << "qcir: --px-per-em must be positive\n";
            return 2;
        }
        style.px_per_em = *options.px_per_em;
    }

    Pipeline pipeline{options, style, in, out, err};
    int exit_code = 0;
    for (const auto &input : options.inputs) {
        exit_code = std::max(exit_code, pipeline.process(input));
    }
    return exit_code;
}

int run(const CliOptions &options) {
    return run(options, std::cin, std::cout, std::cerr);
}

}  // namespace qcir
