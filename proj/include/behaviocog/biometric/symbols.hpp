#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace behaviocog {

// The public map from responses in Z_d to symbols.
struct SymbolSet {
  std::string name;
  std::vector<std::string> symbols;  // symbols[r] renders response r

  int size() const { return static_cast<int>(symbols.size()); }
  const std::string& sym(int response) const;
  std::optional<int> response_of(std::string_view symbol) const;
};

SymbolSet easy_words();     // zero one two three four
SymbolSet complex_words();  // xman bmwz quak hurt fogy

/// "easy-words" or "complex-words"; throws ConfigError otherwise.
SymbolSet symbol_set_by_name(std::string_view name);

/// Throws ConfigError on duplicate or empty symbols.
SymbolSet make_symbol_set(std::string name, std::vector<std::string> symbols);

nlohmann::json to_json(const SymbolSet& set);
SymbolSet symbol_set_from_json(const nlohmann::json& j);

}  // namespace behaviocog
