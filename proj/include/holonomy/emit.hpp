#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace holonomy {

using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
  std::string name;  // output file stem
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// 17 significant digits, scientific: round-trips doubles bit-exactly.
std::string format_sci17(double v);

/// CSV body: one comment line with the config hash, a header row, then data.
std::string table_to_csv(const Table& t, std::uint64_t config_hash);

std::string table_to_json(const Table& t, std::uint64_t config_hash);

/// Writes <dir>/<name>.<format> and returns the path.
std::filesystem::path write_table(const Table& t,
                                  const std::filesystem::path& dir,
                                  const std::string& format,
                                  std::uint64_t config_hash);

}  // namespace holonomy
