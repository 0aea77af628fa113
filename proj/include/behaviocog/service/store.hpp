#pragma once

#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "json.hpp"

namespace behaviocog {

// Append-only JSON-lines record store. Each append is one write of one
// line followed by a flush. Without a path, records live in memory only.
class Store {
 public:
  Store() = default;
  explicit Store(std::filesystem::path path);

  /// A store that drops every record; nothing can be replayed from it.
  static std::shared_ptr<Store> discard();

  void append(const nlohmann::json& record);

  /// Every record in append order; throws DataError on a corrupt line.
  std::vector<nlohmann::json> records() const;

  const std::optional<std::filesystem::path>& path() const { return path_; }

 private:
  bool discard_ = false;
  std::optional<std::filesystem::path> path_;
  std::vector<nlohmann::json> memory_;
  mutable std::mutex mutex_;
};

}  // namespace behaviocog
