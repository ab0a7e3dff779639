#include "ncat/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace ncat {

namespace {

using nlohmann::json;

json level_maps_to_json(const std::vector<LevelMap>& maps, int first_level) {
  json out = json::array();
  for (std::size_t l = first_level; l < maps.size(); ++l) {
    json obj = json::object();
    for (const auto& [k, v] : maps[l]) obj[k] = v;
    out.push_back(std::move(obj));
  }
  return out;
}

std::vector<LevelMap> level_maps_from_json(const json& arr, int first_level, int n,
                                           const std::string& field) {
  if (!arr.is_array() || static_cast<int>(arr.size()) != n + 1 - first_level)
    throw std::runtime_error("field '" + field + "': expected " +
                             std::to_string(n + 1 - first_level) + " level objects");
  std::vector<LevelMap> maps(n + 1);
  for (std::size_t k = 0; k < arr.size(); ++k) {
    if (!arr[k].is_object())
      throw std::runtime_error("field '" + field + "' level " +
                               std::to_string(k + first_level) + ": expected an object");
    for (const auto& [key, val] : arr[k].items())
      maps[k + first_level][key] = val.get<std::string>();
  }
  return maps;
}

std::pair<Cell, Cell> split_on_bar(const std::string& key, const std::string& where) {
  auto bar = key.find('|');
  if (bar == std::string::npos)
    throw std::runtime_error(where + ": pair key '" + key + "' lacks '|'");
  return {key.substr(0, bar), key.substr(bar + 1)};
}

json ncat_to_json(const NCat& a) {
  json doc;
  doc["n"] = a.n;
  json cells = json::array();
  for (const auto& lvl : a.cells) {
    std::vector<Cell> sorted = lvl;
    std::sort(sorted.begin(), sorted.end());
    cells.push_back(sorted);
  }
  doc["cells"] = std::move(cells);
  doc["src"] = level_maps_to_json(a.src, 1);
  doc["tgt"] = level_maps_to_json(a.tgt, 1);
  doc["idn"] = level_maps_to_json(a.idn, 1);
  json comp = json::object();
  for (const auto& [ji, tab] : a.comp) {
    json entries = json::object();
    for (const auto& [args, res] : tab) entries[args.first + "|" + args.second] = res;
    comp[std::to_string(ji.first) + "," + std::to_string(ji.second)] = std::move(entries);
  }
  doc["comp"] = std::move(comp);
  return doc;
}

NCat ncat_from_json(const json& doc) {
  if (!doc.is_object()) throw std::runtime_error("expected a JSON object");
  for (const char* field : {"n", "cells", "src", "tgt", "idn", "comp"})
    if (!doc.contains(field)) throw std::runtime_error(std::string("missing field '") + field + "'");
  NCat a;
  a.n = doc["n"].get<int>();
  if (a.n < 1) throw std::runtime_error("field 'n': must be >= 1");
  const json& cells = doc["cells"];
  if (!cells.is_array() || static_cast<int>(cells.size()) != a.n + 1)
    throw std::runtime_error("field 'cells': expected " + std::to_string(a.n + 1) + " levels");
  a.cells.resize(a.n + 1);
  for (int l = 0; l <= a.n; ++l)
    for (const auto& c : cells[l]) a.cells[l].push_back(c.get<std::string>());
  a.src = level_maps_from_json(doc["src"], 1, a.n, "src");
  a.tgt = level_maps_from_json(doc["tgt"], 1, a.n, "tgt");
  a.idn = level_maps_from_json(doc["idn"], 1, a.n, "idn");
  if (!doc["comp"].is_object()) throw std::runtime_error("field 'comp': expected an object");
  for (const auto& [key, tab] : doc["comp"].items()) {
    auto comma = key.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("comp key '" + key + "': expected \"j,i\"");
    CompTable& out = a.comp[{std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))}];
    for (const auto& [pk, res] : tab.items()) {
      auto [later, earlier] = split_on_bar(pk, "comp[" + key + "]");
      out[{later, earlier}] = res.get<std::string>();
    }
  }
  return a;
}

}  // namespace

std::string ncat_to_string(const NCat& a) { return ncat_to_json(a).dump(2) + "\n"; }

NCat ncat_from_string(const std::string& text) {
  try {
    return ncat_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("parse error: ") + e.what());
  }
}

void write_ncat(const std::string& path, const NCat& a) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << ncat_to_string(a);
}

NCat read_ncat(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  try {
    return ncat_from_json(json::parse(in));
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::string nfunctor_to_string(const NFunctor& f) {
  json doc;
  doc["dom"] = ncat_to_json(f.dom);
  doc["cod"] = ncat_to_json(f.cod);
  json maps = json::array();
  for (const auto& lm : f.maps) {
    json obj = json::object();
    for (const auto& [k, v] : lm) obj[k] = v;
    maps.push_back(std::move(obj));
  }
  doc["maps"] = std::move(maps);
  return doc.dump(2) + "\n";
}

NFunctor nfunctor_from_string(const std::string& text, const std::string& base_dir) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("parse error: ") + e.what());
  }
  for (const char* field : {"dom", "cod", "maps"})
    if (!doc.contains(field)) throw std::runtime_error(std::string("missing field '") + field + "'");
  auto load_side = [&](const json& side, const std::string& name) {
    if (side.is_string())
      return read_ncat((std::filesystem::path(base_dir) / side.get<std::string>()).string());
    try {
      return ncat_from_json(side);
    } catch (const std::exception& e) {
      throw std::runtime_error("field '" + name + "': " + e.what());
    }
  };
  NFunctor f{load_side(doc["dom"], "dom"), load_side(doc["cod"], "cod"), {}};
  f.maps = level_maps_from_json(doc["maps"], 0, f.dom.n, "maps");
  return f;
}

void write_nfunctor(const std::string& path, const NFunctor& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << nfunctor_to_string(f);
}

NFunctor read_nfunctor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return nfunctor_from_string(text, std::filesystem::path(path).parent_path().string());
  } catch (const std::exception& e) {
    std::string msg = e.what();
    if (msg.rfind(path, 0) == 0) throw;
    throw std::runtime_error(path + ": " + msg);
  }
}

}  // namespace ncat
