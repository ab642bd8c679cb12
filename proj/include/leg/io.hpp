#pragma once
#include <string>

#include "json.hpp"
#include "leg/algebra.hpp"
#include "leg/filler.hpp"

namespace leg {

using Json = nlohmann::json;

Json word_to_json(const PlatWord& w);
PlatWord word_from_json(const Json& j);  // also accepts a plain word string

Json dga_to_json(const Dga& d);
Dga dga_from_json(const Json& j);

Json aform_to_json(const AFormData& a);
AFormData aform_from_json(const Json& j);

// The potential is written as well so that links keep their component offsets.
Json mcf_to_json(const McfSlice& c);
McfSlice mcf_from_json(const Json& j);

Json move_to_json(const Move& m);
Move move_from_json(const Json& j);
Json movie_to_json(const Movie& m);
Movie movie_from_json(const Json& j);

Json certificate_to_json(const FillingCertificate& c);
FillingCertificate certificate_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace leg
