// json_io.hpp -- canonical text form for polynomials and small JSON helpers.
//
// The canonical text form is exactly what exact_poly::str() prints: terms in
// ascending (a, t, q) order joined with " + " / " - ", explicit "*" between
// factors, integral exponents as q^3 and fractional ones as q^(3/4).
// parse_poly inverts it, so text stored in fixture files round-trips.

#pragma once

#include <string>

#include "curvelink/exactpoly.hpp"

namespace curvelink {

struct parse_error : calc_error {
    using calc_error::calc_error;
};

// inverse of exact_poly::str(); accepts arbitrary whitespace between tokens
exact_poly parse_poly(const std::string& text);

// round-trip helper used by tests and the fixture verifier
bool poly_text_roundtrips(const std::string& text);

}  // namespace curvelink
