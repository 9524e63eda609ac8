#pragma once

#include <string>
#include <string_view>

#include "houghton/element.hpp"
#include "houghton/metric.hpp"
#include "houghton/morphisms.hpp"

namespace houghton {

/// {"n":3,"t":[-1,1,0],"map":[[[0,1],[1,1]]]}, map sorted by source.
std::string element_to_record(const Element& e);
/// Parses and validates an element record. Throws BadRecord on malformed
/// input and the usual construction errors on invalid data.
Element element_from_record(std::string_view text);

/// Adds the complexity profile: "p", "P", "T".
std::string element_report_record(const Element& e);

/// {"p":2,"base":{...},"blocks":[...]}; the ray count is base.n / p.
std::string np_to_record(const NpElement& phi);
NpElement np_from_record(std::string_view text);

std::string synthesis_to_record(const SynthesisReport& report);

}  // namespace houghton
