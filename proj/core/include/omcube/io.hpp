#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "omcube/comstruct.hpp"
#include "omcube/complete.hpp"
#include "omcube/corpus.hpp"
#include "omcube/family.hpp"
#include "omcube/signvec.hpp"

namespace omcube::io {

using Json = nlohmann::ordered_json;

enum class BitOrder { msb_element_1, msb_element_m };

// Element 1 leftmost by default.
std::string bitstring(Mask v, int m, BitOrder order = BitOrder::msb_element_1);
Mask parse_bitstring(std::string_view s, int m, BitOrder order = BitOrder::msb_element_1);

Json family_to_json(const Family& f);
Family family_from_json(const Json& j);
Family parse_family(std::string_view text);
Family load_family(const std::string& path);
void save_family(const std::string& path, const Family& f);

SignSystem parse_signsystem(std::string_view text);
std::string format_signsystem(const SignSystem& sys);
SignSystem load_signsystem(const std::string& path);

Json arrangement_to_json(const Arrangement& arr);
Arrangement arrangement_from_json(const Json& j);
Arrangement parse_arrangement(std::string_view text);

Json report_to_json(const ClassReport& r);
Json face_to_json(const Face& f);
Json trace_to_json(const CompletionTrace& t);
void save_trace(const std::string& path, const CompletionTrace& t);

// Undirected graph, vertices labelled by bitstrings, edges by their 1-based coordinate.
std::string export_dot(const Family& f);

std::string read_text(const std::string& path);

// 64-bit FNV-1a, printed as 16 hex digits.
std::string digest(std::string_view bytes);

}  // namespace omcube::io
