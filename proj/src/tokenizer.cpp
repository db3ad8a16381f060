#include "qcir/tokenizer.hpp"

#include <cctype>

namespace qcir {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_dim_char(char c) {
    return c == '+' || c == '-' || c == '.' || std::isalnum(static_cast<unsigned char>(c));
}

bool is_text_stop(char c) {
    return is_space(c) || c == '\\' || c == '{' || c == '}' || c == '&' || c == '@' || c == '%';
}

struct Scanner {
    std::string_view src;
    std::size_t base = 0;
    std::size_t pos = 0;
    TokenizeResult result;

    bool done() const {
        return pos >= src.size();
    }

    void fail(std::string message, std::size_t offset) {
        if (!result.error) {
            result.error = TokenizeError{std::move(message), base + offset};
        }
        pos = src.size();
    }

    void push(TokenKind kind, std::string text, std::size_t begin, std::size_t end,
              std::string value = {}) {
        Token token;
        token.kind = kind;
        token.text = std::move(text);
        token.value = std::move(value);
        token.span = SourceSpan{base + begin, base + end};
        result.tokens.push_back(std::move(token));
    }

    void skip_blank() {
        while (!done()) {
            if (is_space(src[pos])) {
                ++pos;
            } else if (src[pos] == '%') {
                while (!done() && src[pos] != '\n') {
                    ++pos;
                }
            } else {
                break;
            }
        }
    }

    // src[pos] == '{'. Escaped braces (\{ and \}) do not count toward the
    // depth; % comments hide the rest of their line, as TeX would.
    void scan_group() {
        std::size_t begin = pos;
        std::size_t depth = 0;
        std::size_t j = pos;
        while (j < src.size()) {
            char c = src[j];
            if (c == '\\') {
                if (j + 1 >= src.size()) {
                    break;
                }
                j += 2;
                continue;
            }
            if (c == '%') {
                while (j < src.size() && src[j] != '\n') {
                    ++j;
                }
                continue;
            }
            if (c == '{') {
                ++depth;
            } else if (c == '}') {
                if (depth == 0) {
                    break;
                }
                --depth;
                if (depth == 0) {
                    push(TokenKind::Group, std::string(src.substr(begin + 1, j - begin - 1)),
                         begin, j + 1);
                    pos = j + 1;
                    return;
                }
            }
            ++j;
        }
        fail("unbalanced brace", begin);
    }

    void scan_opt_arg() {
        std::size_t begin = pos;
        std::size_t j = pos + 1;
        while (j < src.size() && src[j] != ']') {
            ++j;
        }
        if (j >= src.size()) {
            fail("unbalanced bracket", begin);
            return;
        }
        push(TokenKind::OptArg, std::string(src.substr(begin + 1, j - begin - 1)), begin, j + 1);
        pos = j + 1;
    }

    void scan_backslash() {
        std::size_t begin = pos;
        if (pos + 1 >= src.size()) {
            fail("control sequence at end of input", begin);
            return;
        }
        char next = src[pos + 1];
        if (next == '\\') {
            push(TokenKind::RowBreak, "\\\\", begin, begin + 2);
            pos += 2;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(next))) {
            std::size_t j = pos + 1;
            while (j < src.size() && std::isalpha(static_cast<unsigned char>(src[j]))) {
                ++j;
            }
            push(TokenKind::Command, std::string(src.substr(begin + 1, j - begin - 1)), begin, j);
            pos = j;
            return;
        }
        // Control symbol such as \; — a one-character command name.
        push(TokenKind::Command, std::string(1, next), begin, begin + 2);
        pos += 2;
    }

    void scan_spacing_opt() {
        std::size_t begin = pos;
        std::string_view rest = src.substr(pos + 1);
        auto value_until_blank = [&](std::size_t value_start) -> std::size_t {
            std::size_t j = value_start;
            while (j < src.size() && is_dim_char(src[j])) {
                ++j;
            }
            return j;
        };
        if (rest.starts_with("C=") || rest.starts_with("R=")) {
            std::string key(1, rest[0]);
            std::size_t value_start = pos + 3;
            std::size_t j = value_until_blank(value_start);
            if (j == value_start) {
                fail("missing value in spacing option", begin);
                return;
            }
            push(TokenKind::SpacingOpt, key, begin, j,
                 std::string(src.substr(value_start, j - value_start)));
            pos = j;
            return;
        }
        if (rest.starts_with("!R") || rest.starts_with("!C")) {
            push(TokenKind::SpacingOpt, std::string(rest.substr(0, 2)), begin, begin + 3);
            pos += 3;
            return;
        }
        if (rest.starts_with("!")) {
            push(TokenKind::SpacingOpt, "!", begin, begin + 2);
            pos += 2;
            return;
        }
        if (rest.starts_with("*=<")) {
            std::size_t value_start = pos + 4;
            std::size_t j = value_start;
            while (j < src.size() && src[j] != '>') {
                ++j;
            }
            if (j >= src.size()) {
                fail("unterminated @*=<...> spacing option", begin);
                return;
            }
            push(TokenKind::SpacingOpt, "*=", begin, j + 1,
                 std::string(src.substr(value_start, j - value_start)));
            pos = j + 1;
            return;
        }
        if (rest.starts_with("*[o]")) {
            push(TokenKind::SpacingOpt, "*[o]", begin, begin + 5);
            pos += 5;
            return;
        }
        fail("malformed spacing option after '@'", begin);
    }

    void scan_text() {
        std::size_t begin = pos;
        while (!done() && !is_text_stop(src[pos])) {
            ++pos;
        }
        push(TokenKind::Text, std::string(src.substr(begin, pos - begin)), begin, pos);
    }

    void run() {
        while (true) {
            skip_blank();
            if (done()) {
                return;
            }
            char c = src[pos];
            if (c == '\\') {
                scan_backslash();
            } else if (c == '{') {
                scan_group();
            } else if (c == '}') {
                fail("unmatched closing brace", pos);
            } else if (c == '[' && !result.tokens.empty() &&
                       result.tokens.back().kind == TokenKind::Command) {
                scan_opt_arg();
            } else if (c == '&') {
                push(TokenKind::Ampersand, "&", pos, pos + 1);
                ++pos;
            } else if (c == '@') {
                scan_spacing_opt();
            } else {
                scan_text();
            }
        }
    }
};

}  // namespace

TokenizeResult tokenize(std::string_view source, std::size_t base_offset) {
    Scanner scanner;
    scanner.src = source;
    scanner.base = base_offset;
    scanner.run();
    return std::move(scanner.result);
}

}  // namespace qcir
