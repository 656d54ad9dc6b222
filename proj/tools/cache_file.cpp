#include "cache_file.hpp"

#include <charconv>
#include <fstream>

#include <json.hpp>

#include "planepart/errors.hpp"

namespace planepart::cli {

namespace {

using nlohmann::json;

const char* key(SequenceId id) { return id == SequenceId::kP1d ? "p1d" : "p2d"; }

void read_section(const json& doc, const char* name, std::map<int, BigCount>& into) {
  if (!doc.contains(name)) return;
  const auto& section = doc.at(name);
  if (!section.is_object()) throw DomainError(std::string("cache: section '") + name + "' is not an object");
  for (const auto& [n_text, value] : section.items()) {
    int n = -1;
    const auto [ptr, ec] = std::from_chars(n_text.data(), n_text.data() + n_text.size(), n);
    if (ec != std::errc() || ptr != n_text.data() + n_text.size() || n < 0) {
      throw DomainError("cache: bad key '" + n_text + "' in section '" + name + "'");
    }
    if (!value.is_string()) throw DomainError("cache: value for n = " + n_text + " is not a decimal string");
    into.insert_or_assign(n, BigCount::parse(value.get<std::string>()));
  }
}

}  // namespace

CacheFile CacheFile::load(const std::filesystem::path& path) {
  CacheFile cache;
  cache.path_ = path;
  std::ifstream in(path);
  if (!in) return cache;
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw DomainError("cache: " + path.string() + ": " + e.what());
  }
  if (!doc.is_object()) throw DomainError("cache: " + path.string() + ": top level is not an object");
  read_section(doc, "p1d", cache.p1d_);
  read_section(doc, "p2d", cache.p2d_);
  return cache;
}

std::optional<BigCount> CacheFile::find(SequenceId id, int n) const {
  const auto& table = id == SequenceId::kP1d ? p1d_ : p2d_;
  if (auto it = table.find(n); it != table.end()) return it->second;
  return std::nullopt;
}

void CacheFile::store(SequenceId id, int n, const BigCount& value) {
  auto& table = id == SequenceId::kP1d ? p1d_ : p2d_;
  auto [it, inserted] = table.try_emplace(n, value);
  if (!inserted && it->second == value) return;
  it->second = value;
  dirty_ = true;
}

void CacheFile::save() const {
  if (!dirty_) return;
  json doc = {{"p1d", json::object()}, {"p2d", json::object()}};
  for (const auto id : {SequenceId::kP1d, SequenceId::kP2d}) {
    for (const auto& [n, v] : id == SequenceId::kP1d ? p1d_ : p2d_) doc[key(id)][std::to_string(n)] = v.to_string();
  }
  auto tmp = path_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cache: cannot write " + tmp.string());
    out << doc.dump(2) << '\n';
  }
  std::filesystem::rename(tmp, path_);
}

}  // namespace planepart::cli
