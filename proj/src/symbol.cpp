#include "painleve/symbol.hpp"

namespace painleve {

namespace {

constexpr std::array<std::string_view, kSymbolCount> kNames{
    "alpha0", "alpha1", "alpha2", "alpha3", "alpha4", "A0", "A1",  "A2", "A3", "eps",
    "t",      "q",      "p",      "T",      "Q",      "P",  "tau", "x",  "y",  "E"};

constexpr std::array<std::string_view, kSymbolCount> kPretty{
    "α₀", "α₁", "α₂", "α₃", "α₄", "A₀", "A₁", "A₂", "A₃", "ε",
    "t",  "q",  "p",  "T",  "Q",  "P",  "τ",  "x",  "y",  "ε'"};

}  // namespace

std::string_view Symbol::name() const noexcept { return kNames[index_]; }

std::string_view Symbol::pretty_name() const noexcept { return kPretty[index_]; }

std::optional<Symbol> find_symbol(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return Symbol(static_cast<std::uint8_t>(i));
  }
  return std::nullopt;
}

}  // namespace painleve
