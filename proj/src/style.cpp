#include "qcir/style.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace qcir {

namespace {

std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    return text;
}

bool parse_number(std::string_view value, double &out) {
    std::string buf(trim(value));
    // An optional trailing "em" is tolerated on length keys.
    if (buf.size() > 2 && buf.substr(buf.size() - 2) == "em") {
        buf.resize(buf.size() - 2);
    }
    if (buf.empty()) {
        return false;
    }
    char *end = nullptr;
    double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size()) {
        return false;
    }
    out = v;
    return true;
}

}  // namespace

StyleLoadResult parse_style(std::string_view text, const StyleConfig &base) {
    StyleLoadResult result;
    StyleConfig config = base;

    struct NumberKey {
        std::string_view name;
        double StyleConfig::*field;
    };
    static const NumberKey kNumberKeys[] = {
        {"gatePad", &StyleConfig::gate_pad},
        {"multiPadX", &StyleConfig::multi_pad_x},
        {"multiPadY", &StyleConfig::multi_pad_y},
        {"measurePad", &StyleConfig::measure_pad},
        {"meterRadius", &StyleConfig::meter_radius},
        {"stickOffset", &StyleConfig::stick_offset},
        {"openDotRadius", &StyleConfig::open_dot_radius},
        {"ctrlRadius", &StyleConfig::ctrl_radius},
        {"targRadius", &StyleConfig::targ_radius},
        {"targFrame", &StyleConfig::targ_frame},
        {"swapArm", &StyleConfig::swap_arm},
        {"nodePad", &StyleConfig::node_pad},
        {"minRowHeight", &StyleConfig::min_row_height},
        {"doubleGap", &StyleConfig::double_gap},
        {"braceAmplitude", &StyleConfig::brace_amplitude},
        {"charWidth", &StyleConfig::char_width},
        {"smallCharWidth", &StyleConfig::small_char_width},
        {"lineHeight", &StyleConfig::line_height},
        {"smallScale", &StyleConfig::small_scale},
        {"pxPerEm", &StyleConfig::px_per_em},
        {"strokeWidth", &StyleConfig::stroke_width},
        {"margin", &StyleConfig::margin},
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            result.error = "line " + std::to_string(line_no) + ": expected key=value";
            return result;
        }
        std::string_view key = trim(line.substr(0, eq));
        std::string_view value = trim(line.substr(eq + 1));

        if (key == "fontFamily") {
            config.font_family = std::string(value);
            continue;
        }
        if (key == "background") {
            if (value == "none") {
                config.background = Background::None;
            } else if (value == "white") {
                config.background = Background::White;
            } else {
                result.error = "line " + std::to_string(line_no) + ": background must be none or white";
                return result;
            }
            continue;
        }

        bool known = false;
        for (const auto &entry : kNumberKeys) {
            if (key == entry.name) {
                double v = 0;
                if (!parse_number(value, v)) {
                    result.error = "line " + std::to_string(line_no) + ": '" + std::string(value) +
                                   "' is not a number for key " + std::string(key);
                    return result;
                }
                config.*(entry.field) = v;
                known = true;
                break;
            }
        }
        if (!known) {
            result.warnings.push_back("unknown style key '" + std::string(key) + "'");
        }
    }

    if (config.px_per_em <= 0) {
        result.error = "pxPerEm must be positive";
        return result;
    }
    if (config.margin < 0) {
        result.error = "margin must be non-negative";
        return result;
    }
    result.config = config;
    return result;
}

StyleLoadResult load_style(const std::string &path, const StyleConfig &base) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        StyleLoadResult result;
        result.error = "cannot read style file '" + path + "'";
        return result;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_style(buf.str(), base);
}

}  // namespace qcir
