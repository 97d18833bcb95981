#pragma once

#include <string_view>

#include "ppi/element.hpp"

namespace ppi {

/// Parses an element expression.
///
///   expr    := term (('+' | '-') term)*
///   term    := ['-'] power (['*'] power)*
///   power   := primary ('^' k)*
///   primary := '(' expr ')' | 'adj(' expr ')' | scalar | atom
///   atom    := v | v* | e | p | pt | pi[n] | pit[n] | z[n]
///            | eu[n,i,j] | f[i,j] | ft[i,j]
///
/// A scalar such as 3, 1/2, 2i or i stands for that multiple of e. `v*`
/// written without a space is the adjoint letter; a `*` after whitespace or
/// any other factor is the product. Juxtaposition is also the product.
/// Throws ParseError with the offending position.
Element parse_element(std::string_view text);

}  // namespace ppi
