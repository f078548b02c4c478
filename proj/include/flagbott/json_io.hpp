#pragma once

#include <string>
#include <variant>
#include <vector>

#include "flagbott/fan.hpp"
#include "flagbott/tower.hpp"

namespace flagbott {

// File formats are UTF-8 JSON. Tower files key the matrices/vectors on
// 1-based "j,l" strings to match the (j,l) subscripts; fan files index rays
// 0-based. Entries outside the int64 range are written as decimal strings.

using TowerVariant = std::variant<FlagBottTower, GeneralizedBottTower>;

TowerVariant parse_tower_json(const std::string& text);
TowerVariant load_tower_file(const std::string& path);

/// Either tower kind as a flag Bott tower (generalized towers pass through
/// associate()).
FlagBottTower as_flag_tower(const TowerVariant& t);

Fan parse_fan_json(const std::string& text);
Fan load_fan_file(const std::string& path);

std::string fan_to_json(const Fan& f, const std::vector<std::string>& labels = {});

std::vector<std::string> gbt_ray_labels(const std::vector<int>& dims);
std::vector<std::string> orbit_ray_labels(const std::vector<int>& dims);
std::vector<std::string> permutohedral_ray_labels(int n);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace flagbott
