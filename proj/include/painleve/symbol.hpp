#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace painleve {

/// Number of registered symbols. The registry is fixed at compile time; its
/// order is the global lexicographic monomial order (first entry most
/// significant).
inline constexpr std::size_t kSymbolCount = 20;

/// A variable or parameter letter from the fixed global registry.
class Symbol {
 public:
  constexpr Symbol() = default;
  constexpr explicit Symbol(std::uint8_t index) : index_(index) {}

  constexpr std::uint8_t index() const noexcept { return index_; }
  std::string_view name() const noexcept;
  /// Name with greek letters and subscripts, for human-facing reports.
  std::string_view pretty_name() const noexcept;

  friend constexpr bool operator==(Symbol, Symbol) = default;
  friend constexpr auto operator<=>(Symbol, Symbol) = default;

 private:
  std::uint8_t index_ = 0;
};

/// Looks a symbol up by its ASCII name ("alpha0", "eps", "Q", ...).
std::optional<Symbol> find_symbol(std::string_view name) noexcept;

namespace sym {
inline constexpr Symbol alpha0{0};
inline constexpr Symbol alpha1{1};
inline constexpr Symbol alpha2{2};
inline constexpr Symbol alpha3{3};
inline constexpr Symbol alpha4{4};
inline constexpr Symbol A0{5};
inline constexpr Symbol A1{6};
inline constexpr Symbol A2{7};
inline constexpr Symbol A3{8};
inline constexpr Symbol eps{9};
inline constexpr Symbol t{10};
inline constexpr Symbol q{11};
inline constexpr Symbol p{12};
inline constexpr Symbol T{13};
inline constexpr Symbol Q{14};
inline constexpr Symbol P{15};
inline constexpr Symbol tau{16};
inline constexpr Symbol x{17};
inline constexpr Symbol y{18};
/// Auxiliary: stands for the image of eps under a lifted generator while a
/// composite is still exact, before the branch series is plugged in.
inline constexpr Symbol E{19};

inline constexpr std::array<Symbol, 5> alpha{alpha0, alpha1, alpha2, alpha3, alpha4};
inline constexpr std::array<Symbol, 4> A{A0, A1, A2, A3};
}  // namespace sym

}  // namespace painleve
