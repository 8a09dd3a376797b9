#include "holonomy/emit.hpp"

#include "holonomy/errors.hpp"

#include <cstdio>
#include <fstream>

#include "json.hpp"

namespace holonomy {

namespace {

std::string hash_string(std::uint64_t h) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "0x%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

std::string cell_to_string(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) {
    return format_sci17(*d);
  }
  if (const auto* i = std::get_if<std::int64_t>(&cell)) {
    return std::to_string(*i);
  }
  return std::get<std::string>(cell);
}

}  // namespace

std::string format_sci17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

std::string table_to_csv(const Table& t, std::uint64_t config_hash) {
  std::string out = "# config_hash=" + hash_string(config_hash) + "\n";
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    out += t.columns[c];
    out += (c + 1 == t.columns.size()) ? '\n' : ',';
  }
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += cell_to_string(row[c]);
      out += (c + 1 == row.size()) ? '\n' : ',';
    }
  }
  return out;
}

std::string table_to_json(const Table& t, std::uint64_t config_hash) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json jrow = nlohmann::json::array();
    for (const auto& cell : row) {
      if (const auto* d = std::get_if<double>(&cell)) {
        jrow.push_back(*d);
      } else if (const auto* i = std::get_if<std::int64_t>(&cell)) {
        jrow.push_back(*i);
      } else {
        jrow.push_back(std::get<std::string>(cell));
      }
    }
    rows.push_back(std::move(jrow));
  }
  const nlohmann::json doc{{"config_hash", hash_string(config_hash)},
                           {"name", t.name},
                           {"columns", t.columns},
                           {"rows", rows}};
  return doc.dump(2) + "\n";
}

std::filesystem::path write_table(const Table& t,
                                  const std::filesystem::path& dir,
                                  const std::string& format,
                                  std::uint64_t config_hash) {
  const std::filesystem::path path = dir / (t.name + "." + format);
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ConfigError("cannot open output file: " + path.string());
  }
  out << (format == "json" ? table_to_json(t, config_hash)
                           : table_to_csv(t, config_hash));
  if (!out) {
    throw ConfigError("write failed: " + path.string());
  }
  return path;
}

}  // namespace holonomy
