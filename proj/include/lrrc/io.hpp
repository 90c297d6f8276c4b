#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lrrc/bijection.hpp"
#include "lrrc/qpoly.hpp"
#include "lrrc/rect_seq.hpp"
#include "lrrc/rigged.hpp"
#include "lrrc/tableau.hpp"

namespace lrrc {

using json = nlohmann::json;

// "5,4,3,2,2,1"; the empty string is the empty partition.
Partition parse_partition(const std::string& text);
std::string format_partition(const Partition& p);

// One row per line, entries separated by single spaces.
std::string format_tableau(const Tableau& t);
// Tableaux separated by blank lines.
std::string format_tableaux(const std::vector<Tableau>& ts);

// Strings as "vacancy |length| label", one block per rigged partition.
std::string format_rc(const RiggedConfig& rc);
std::string format_trace(const BijectionTrace& trace);

json to_json(const Tableau& t);
json to_json(const RectSeq& r);
json to_json(const RiggedConfig& rc);
json to_json(const QPoly& p);
json to_json(const TraceStep& s);

Tableau tableau_from_json(const json& j);
RectSeq rects_from_json(const json& j);
RiggedConfig rc_from_json(const json& j);

} // namespace lrrc
