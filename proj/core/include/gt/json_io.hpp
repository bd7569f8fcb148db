#pragma once

#include <string>
#include <string_view>

#include "gt/adaptive.hpp"
#include "gt/models.hpp"
#include "gt/set_family.hpp"
#include "gt/sweeps.hpp"

namespace gt {

// Shared wire formats, 1-based elements throughout:
//   family     {"n": 4, "sets": [[1,2],[3,4]]}            (set order significant)
//   transcript {"n":..,"d":..,"steps":[{"q":[..],"a":true},..],"verdict":[..]}
// Parsers throw JsonError on malformed input.

std::string family_to_json(const SetFamily& f);
SetFamily family_from_json(std::string_view text);

std::string transcript_to_json(const Transcript& t);
Transcript transcript_from_json(std::string_view text);

std::string report_to_json(const PropertyReport& r);
std::string verdict_to_json(const ModelVerdict& v);
std::string sweep_result_to_json(const SweepResult& r);

SetFamily load_family(const std::string& path);
void save_family(const std::string& path, const SetFamily& f);
Transcript load_transcript(const std::string& path);
void save_transcript(const std::string& path, const Transcript& t);

}  // namespace gt
