#include "behaviocog/biometric/symbols.hpp"

#include <algorithm>
#include <set>

#include "behaviocog/errors.hpp"

namespace behaviocog {

const std::string& SymbolSet::sym(int response) const {
  if (response < 0 || response >= size()) throw DataError("response outside the symbol set");
  return symbols[static_cast<std::size_t>(response)];
}

std::optional<int> SymbolSet::response_of(std::string_view symbol) const {
  auto it = std::find(symbols.begin(), symbols.end(), symbol);
  if (it == symbols.end()) return std::nullopt;
  return static_cast<int>(it - symbols.begin());
}

SymbolSet make_symbol_set(std::string name, std::vector<std::string> symbols) {
  std::set<std::string> seen;
  for (const auto& s : symbols) {
    if (s.empty()) throw ConfigError("empty symbol name");
    if (!seen.insert(s).second) throw ConfigError("duplicate symbol '" + s + "'");
  }
  return {std::move(name), std::move(symbols)};
}

SymbolSet easy_words() { return make_symbol_set("easy-words", {"zero", "one", "two", "three", "four"}); }

SymbolSet complex_words() {
  return make_symbol_set("complex-words", {"xman", "bmwz", "quak", "hurt", "fogy"});
}

SymbolSet symbol_set_by_name(std::string_view name) {
  if (name == "easy-words") return easy_words();
  if (name == "complex-words") return complex_words();
  throw ConfigError("unknown symbol set '" + std::string(name) + "'");
}

nlohmann::json to_json(const SymbolSet& set) {
  return {{"name", set.name}, {"symbols", set.symbols}};
}

SymbolSet symbol_set_from_json(const nlohmann::json& j) {
  try {
    return make_symbol_set(j.value("name", std::string("custom")),
                           j.at("symbols").get<std::vector<std::string>>());
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("symbol set: ") + e.what());
  }
}

}  // namespace behaviocog
