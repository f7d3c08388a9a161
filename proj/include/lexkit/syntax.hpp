#pragma once

#include <string>
#include <string_view>

#include "lexkit/errors.hpp"
#include "lexkit/term.hpp"
#include "lexkit/types.hpp"

namespace lexkit {

// term     := "\" ident "." term | suffixed+
// suffixed := atom ("[" ident "/" term "]" | "[[" ident "/" term "]]")*
// atom     := ident | "(" term ")" | "?" ident "{" ident,* "}"
Term parse_term(std::string_view src);
std::string print_term(const Term& t);

// ty := inter ("->" ty)?   inter := atomty ("&" atomty)*
Type parse_type(std::string_view src);
std::string print_type(const Type& t);

}  // namespace lexkit
