// JSON interchange for scattering data, reflectionless soliton specs and
// experiment reports.  Schemas are versioned by the "schema" tag.
#pragma once

#include "nlslab/nsoliton.hpp"
#include "nlslab/spectrum.hpp"

#include <string>

namespace nlslab {

std::string scattering_data_to_json(const ScatteringData& data);
ScatteringData scattering_data_from_json(const std::string& text);

std::string soliton_spec_to_json(const SolitonSpec& spec);
SolitonSpec soliton_spec_from_json(const std::string& text);

void save_text(const std::string& path, const std::string& text);
std::string load_text(const std::string& path);

} // namespace nlslab
