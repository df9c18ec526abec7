#include "scurve/gauss_code.hpp"

#include <cctype>

#include "scurve/common.hpp"

namespace scurve {

namespace {

bool label_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

SignedGaussCode tokenize(const std::string& text) {
    SignedGaussCode tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        std::string tok = text.substr(i, j - i);
        char sign = tok.back();
        if (sign != '+' && sign != '-')
            throw ParseError("token '" + tok + "' lacks a trailing sign");
        std::string label = tok.substr(0, tok.size() - 1);
        if (label.empty()) throw ParseError("token '" + tok + "' lacks a label");
        for (char c : label)
            if (!label_char(c)) throw ParseError("bad character in label '" + label + "'");
        tokens.push_back({std::move(label), sign == '-'});
        i = j;
    }
    return tokens;
}

std::string render_tokens(const SignedGaussCode& tokens) {
    std::string out;
    for (std::size_t k = 0; k < tokens.size(); ++k) {
        if (k) out += ' ';
        out += tokens[k].name;
        out += tokens[k].neg ? '-' : '+';
    }
    return out;
}

}  // namespace scurve
