#pragma once

// Text, JSON and DOT forms of elements and certificates.

#include <string>
#include <string_view>

#include "json.hpp"

#include "thompson/certify.hpp"
#include "thompson/element.hpp"

namespace thompson {

using Json = nlohmann::ordered_json;

// One pair per line, "u -> v"; '#' starts a comment; "e" is the empty word.
Element parse_element_text(std::string_view text);
std::string format_element_text(const Element& f);

Json element_to_json(const Element& f);
Element element_from_json(const Json& j);

Json certificate_to_json(const Certificate& c);
// Throws Parse for a bad layout and InvalidCode / LengthMismatch when an
// element table is not a valid diagram.
Certificate certificate_from_json(const Json& j);

std::string dump_json(const Json& j);
Json parse_json(std::string_view text);

// The two trees of the reduced diagram as a DOT digraph.
std::string element_to_dot(const Element& f, std::string_view name = "element");

}  // namespace thompson
