#pragma once

// Tiny expression language for quaternion-valued functions of q:
//   expr    := term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := '-' factor | primary
//   primary := number | number '/' number | 'q' | 'qbar' | 'i' | 'j' | 'k' | '(' expr ')'
// Multiplication keeps its written order; the product is not commutative.

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qhx/quaternion.hpp"

namespace qhx::expr {

struct ParseError : std::invalid_argument {
    size_t position;
    ParseError(const std::string& what, size_t pos)
        : std::invalid_argument(what + " at position " + std::to_string(pos)), position(pos) {}
};

class Expression {
public:
    struct Node;

    Quat eval(const Quat& q) const;
    std::string to_string() const { return source_; }

private:
    friend Expression parse(std::string_view);
    std::shared_ptr<const Node> root_;
    std::string source_;
};

Expression parse(std::string_view text);

} // namespace qhx::expr
