#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "slcs/errors.hpp"
#include "slcs/formula.hpp"

namespace slcs {

/// Byte range [start, end) into the parsed text.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

class ParseError : public Error {
public:
  ParseError(const std::string& message, SourceSpan span)
      : Error(message + " at offset " + std::to_string(span.start)), span_(span) {}
  SourceSpan span() const { return span_; }

private:
  SourceSpan span_;
};

/// Parses the formula grammar
///
///   formula  := or
///   or       := and ("|" and)*
///   and      := not ("&" not)*
///   not      := "!" not | atomexpr
///   atomexpr := "true" | "false" | IDENT | STRING
///             | fn "(" formula ("," formula)? ")" | "(" formula ")"
///   fn       := reachFwd | reachBwd | near | surrounded | propagate
///
/// `|` is left-associative; a chain of `&` becomes one n-ary And.
Formula parse(std::string_view text);

}  // namespace slcs
