#pragma once

#include <string>
#include <vector>

namespace scurve {

struct Token {
    std::string name;
    bool neg = false;
    bool operator==(const Token&) const = default;
};

// Serialized curve: a double-occurrence word with one sign per crossing.
// Grammar (whitespace-separated): token := label sign, label := [A-Za-z0-9_]+,
// sign := '+' | '-'. Empty input encodes the trivial curve.
using SignedGaussCode = std::vector<Token>;

SignedGaussCode tokenize(const std::string& text);
std::string render_tokens(const SignedGaussCode& tokens);

}  // namespace scurve
