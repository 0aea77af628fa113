#include "behaviocog/service/store.hpp"

#include <cstdio>
#include <fstream>

#include "behaviocog/errors.hpp"

namespace behaviocog {

Store::Store(std::filesystem::path path) : path_(std::move(path)) {
  if (path_->has_parent_path()) std::filesystem::create_directories(path_->parent_path());
}

std::shared_ptr<Store> Store::discard() {
  auto store = std::make_shared<Store>();
  store->discard_ = true;
  return store;
}

void Store::append(const nlohmann::json& record) {
  if (discard_) return;
  const std::string line = record.dump() + "\n";
  std::lock_guard lock(mutex_);
  if (!path_) {
    memory_.push_back(record);
    return;
  }
  std::FILE* f = std::fopen(path_->c_str(), "ab");
  if (!f) throw DataError("cannot open store " + path_->string());
  const bool ok = std::fwrite(line.data(), 1, line.size(), f) == line.size() && std::fflush(f) == 0;
  std::fclose(f);
  if (!ok) throw DataError("short write to store " + path_->string());
}

std::vector<nlohmann::json> Store::records() const {
  std::lock_guard lock(mutex_);
  if (!path_) return memory_;
  std::vector<nlohmann::json> out;
  std::ifstream in(*path_);
  if (!in) return out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      out.push_back(nlohmann::json::parse(line));
    } catch (const nlohmann::json::exception& e) {
      throw DataError(path_->string() + " line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace behaviocog
