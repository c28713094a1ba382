#pragma once

#include <string>

#include "hodge/wallcross.hpp"

namespace hodge {

std::string to_json(const BlockData& bd);
BlockData block_data_from_json(const std::string& text);

}  // namespace hodge
