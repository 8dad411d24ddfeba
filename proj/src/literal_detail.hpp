#pragma once

#include "ordcx/element.hpp"
#include "text_cursor.hpp"

namespace ordcx::detail {

// `a`, `-2.5i`, `1+2i`, `(3-i)`, and `inf` when allow_inf is set.
Complex parse_scalar(TextCursor& in, bool allow_inf);

// Reads one bracketed literal starting at '['.
ComplexElement parse_element_literal(TextCursor& in, bool allow_inf = false);

}  // namespace ordcx::detail
