#include "flagbott/json_io.hpp"

#include <json.hpp>

#include <fstream>
#include <limits>
#include <sstream>

namespace flagbott {

namespace {

using nlohmann::json;

Int int_from_json(const json& x) {
  if (x.is_string()) {
    try {
      return Int(x.get<std::string>());
    } catch (const std::exception&) {
      throw input_error("bad integer literal: " + x.get<std::string>());
    }
  }
  if (x.is_number_integer()) return Int(x.get<std::int64_t>());
  throw input_error("expected an integer, got " + x.dump());
}

json int_to_json(const Int& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

std::pair<int, int> parse_key(const std::string& key) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) throw input_error("tower key must look like \"j,l\": " + key);
  try {
    const int j = std::stoi(key.substr(0, comma));
    const int l = std::stoi(key.substr(comma + 1));
    return {j, l};
  } catch (const std::exception&) {
    throw input_error("tower key must look like \"j,l\": " + key);
  }
}

json parse_or_throw(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw input_error(std::string("bad json: ") + e.what());
  }
}

std::string subset_string(std::uint64_t a) {
  std::string s;
  bool first = true;
  for (int x = 0; x < 64; ++x)
    if (a & (std::uint64_t(1) << x)) {
      if (!first) s += ",";
      s += std::to_string(x + 1);
      first = false;
    }
  return s;
}

}  // namespace

TowerVariant parse_tower_json(const std::string& text) {
  const json in = parse_or_throw(text);
  try {
    const std::string type = in.at("type").get<std::string>();
    const std::vector<int> dims = in.at("n").get<std::vector<int>>();
    if (type == "flag_bott") {
      FlagBottTower t;
      t.dims = dims;
      if (in.contains("A"))
        for (const auto& [key, value] : in.at("A").items()) {
          const auto [j, l] = parse_key(key);
          if (!value.is_array() || value.empty() || !value[0].is_array())
            throw input_error("matrix " + key + " must be a list of rows");
          IntMatrix m(static_cast<int>(value.size()), static_cast<int>(value[0].size()));
          for (int r = 0; r < m.rows(); ++r) {
            if (static_cast<int>(value[r].size()) != m.cols())
              throw input_error("matrix " + key + " has ragged rows");
            for (int c = 0; c < m.cols(); ++c) m(r, c) = int_from_json(value[r][c]);
          }
          t.mats.emplace(std::make_pair(j, l), std::move(m));
        }
      validate_flag_tower(t);
      return t;
    }
    if (type == "generalized_bott") {
      GeneralizedBottTower t;
      t.dims = dims;
      if (in.contains("a"))
        for (const auto& [key, value] : in.at("a").items()) {
          IntVec v;
          for (const auto& x : value) v.push_back(int_from_json(x));
          t.vecs.emplace(parse_key(key), std::move(v));
        }
      validate_generalized_tower(t);
      return t;
    }
    throw input_error("tower type must be \"flag_bott\" or \"generalized_bott\", got \"" + type +
                      "\"");
  } catch (const json::exception& e) {
    throw input_error(std::string("bad tower file: ") + e.what());
  }
}

TowerVariant load_tower_file(const std::string& path) {
  return parse_tower_json(read_text_file(path));
}

FlagBottTower as_flag_tower(const TowerVariant& t) {
  if (std::holds_alternative<FlagBottTower>(t)) return std::get<FlagBottTower>(t);
  return associate(std::get<GeneralizedBottTower>(t));
}

Fan parse_fan_json(const std::string& text) {
  const json in = parse_or_throw(text);
  Fan f;
  try {
    f.dim = in.at("dim").get<int>();
    for (const auto& ray : in.at("rays")) {
      IntVec v;
      for (const auto& x : ray) v.push_back(int_from_json(x));
      f.rays.push_back(std::move(v));
    }
    for (const auto& cone : in.at("max_cones")) f.max_cones.push_back(cone.get<ConeRef>());
    if (in.contains("labels") &&
        in.at("labels").size() != f.rays.size())
      throw input_error("labels must parallel the ray list");
  } catch (const json::exception& e) {
    throw input_error(std::string("bad fan file: ") + e.what());
  }
  f.normalize();
  f.validate();
  return f;
}

Fan load_fan_file(const std::string& path) { return parse_fan_json(read_text_file(path)); }

std::string fan_to_json(const Fan& f, const std::vector<std::string>& labels) {
  json out;
  out["dim"] = f.dim;
  auto rays = json::array();
  for (const IntVec& ray : f.rays) {
    auto r = json::array();
    for (const Int& x : ray) r.push_back(int_to_json(x));
    rays.push_back(std::move(r));
  }
  out["rays"] = std::move(rays);
  out["max_cones"] = f.max_cones;
  if (!labels.empty()) {
    if (labels.size() != f.rays.size()) throw input_error("labels must parallel the ray list");
    out["labels"] = labels;
  }
  return out.dump(2) + "\n";
}

std::vector<std::string> gbt_ray_labels(const std::vector<int>& dims) {
  std::vector<std::string> labels;
  for (size_t j = 1; j <= dims.size(); ++j)
    for (int k = 1; k <= dims[j - 1] + 1; ++k)
      labels.push_back("u^" + std::to_string(j) + "_" + std::to_string(k));
  return labels;
}

std::vector<std::string> orbit_ray_labels(const std::vector<int>& dims) {
  std::vector<std::string> labels;
  for (size_t l = 1; l <= dims.size(); ++l) {
    const std::uint64_t full = (std::uint64_t(1) << (dims[l - 1] + 1)) - 1;
    for (std::uint64_t a = 1; a < full; ++a)
      labels.push_back("u^" + std::to_string(l) + "_{" + subset_string(a) + "}");
  }
  return labels;
}

std::vector<std::string> permutohedral_ray_labels(int n) {
  std::vector<std::string> labels;
  const std::uint64_t full = (std::uint64_t(1) << (n + 1)) - 1;
  for (std::uint64_t a = 1; a < full; ++a) labels.push_back("u_{" + subset_string(a) + "}");
  return labels;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write " + path);
  out << text;
  if (!out) throw input_error("failed writing " + path);
}

}  // namespace flagbott
