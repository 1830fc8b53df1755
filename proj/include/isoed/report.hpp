#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "isoed/edim.hpp"
#include "isoed/instance_io.hpp"

namespace isoed {

inline constexpr std::string_view kToolName = "isoed";
inline constexpr std::string_view kToolVersion = "0.1.0";

using ojson = nlohmann::ordered_json;

// Every command builds its structured block first; the text renderers read
// only from that block, so the two forms cannot drift apart.

ojson kernel_json(const Instance& instance);
ojson subvarieties_json(const Instance& instance);
ojson bounds_json(const Instance& instance, const EdBoundReport& report);

std::string render_kernel_text(const ojson& block);
std::string render_subvarieties_text(const ojson& block);
std::string render_bounds_text(const ojson& block);
std::string render_groupbound_text(const ojson& block);

/// Serialized form used for --json output (two-space indent, trailing newline).
std::string dump_block(const ojson& block);

std::string json_scalar_text(const ojson& value);

}  // namespace isoed
