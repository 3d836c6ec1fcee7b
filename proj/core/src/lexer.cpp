#include "rene/script.hpp"

#include <cctype>

namespace rene::script {

namespace {

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_keyword(std::string_view s) {
    return s == "vars" || s == "assert" || s == "show";
}

} // namespace

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    int line = 1;
    int col = 1;

    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };

    while (i < src.size()) {
        const char c = src[i];
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        const SourcePos pos{line, col};
        if (is_ident_start(c)) {
            std::size_t j = i;
            while (j < src.size() && is_ident_char(src[j])) ++j;
            std::string text(src.substr(i, j - i));
            advance(j - i);
            out.push_back({is_keyword(text) ? TokenKind::Keyword : TokenKind::Ident,
                           std::move(text), pos});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            // digits, optionally "/" digits (longest match: "1/2" is one token)
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            if (j < src.size() && src[j] == '/' && j + 1 < src.size() &&
                std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
                ++j;
                while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            }
            std::string text(src.substr(i, j - i));
            advance(j - i);
            out.push_back({TokenKind::Number, std::move(text), pos});
            continue;
        }
        if (c == '=' && i + 1 < src.size() && src[i + 1] == '=') {
            advance(2);
            out.push_back({TokenKind::Punct, "==", pos});
            continue;
        }
        if (c == '!' && i + 1 < src.size() && src[i + 1] == '=') {
            advance(2);
            out.push_back({TokenKind::Punct, "!=", pos});
            continue;
        }
        if (std::string_view("(),;=+-*/^").find(c) != std::string_view::npos) {
            advance(1);
            out.push_back({TokenKind::Punct, std::string(1, c), pos});
            continue;
        }
        throw LexError(pos, std::string("unrecognized character '") + c + "'");
    }
    out.push_back({TokenKind::Eof, "", {line, col}});
    return out;
}

} // namespace rene::script
