#pragma once
#include <string>
#include <vector>

#include "leg/mcf.hpp"

namespace leg {

// Plat diagram; handleslides of the slice, if any, as vertical red segments.
std::string front_svg(const PlatWord& w, const McfSlice* slice = nullptr);
// One row per frame.
std::string frames_svg(const std::vector<PlatWord>& frames, const std::vector<McfSlice>* slices = nullptr);

}  // namespace leg
