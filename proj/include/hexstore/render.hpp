#pragma once

#include <string>
#include <string_view>

#include "hexstore/config.hpp"

namespace hexstore {

/// One block per layer, bottom layer first:
///
///     z=0
///     D@ D
///     D D
///
/// Rows run from y = 0 upward, cells within a row from x = 0. 'T' is a
/// three-axis cell, 'D' a two-axis cell and '@' marks the loading cell. With
/// `color`, D is drawn green and T blue using ANSI escapes.
std::string render_layers(const WarehouseConfig& cfg, bool color = false);

/// Reads the output of render_layers() (colored or not) back into a config.
/// Throws ConfigError on malformed text.
WarehouseConfig parse_layers(std::string_view text);

}  // namespace hexstore
