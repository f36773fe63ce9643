#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "carmichael/poly.hpp"

// Text forms used by the command line.
//
// Fields: "p" or "p^e", with an optional modulus "c0,c1,...,ce".
// Polynomials: comma-separated coefficients in ascending degree. Over prime
// fields a coefficient is an integer in [0, p); over F_{p^e} it is e residues
// joined by ':' (constant residue first), so over F_4 "0:1" is the generator.
// Prime-field polynomials may also be written as "t^4+t".
namespace carmichael {

std::vector<std::uint64_t> parse_uint_list(std::string_view text);

Field parse_field(std::string_view text, std::optional<std::string_view> modulus = std::nullopt);

Poly parse_poly(const Field& f, std::string_view text);

FieldElement parse_element(const Field& f, std::string_view text);

std::string format_element(const Field& f, FieldElement a);

// Canonical comma-separated form; the zero polynomial is "0".
std::string format_poly(const Field& f, const Poly& a);

// "t^4+t" style, highest degree first.
std::string pretty_poly(const Field& f, const Poly& a);

}  // namespace carmichael
