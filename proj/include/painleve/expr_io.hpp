#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "painleve/ratfn.hpp"

namespace painleve {

class EpsSeries;

/// Parses the expression grammar
///
///   expression := term (('+'|'-') term)*
///   term       := ['-'] factor (('*'|'/') factor)*
///   factor     := base ('^' ['-'] integer)?
///   base       := integer | 'sqrt2' | symbol | '(' expression ')'
///
/// Throws SyntaxError (with byte offset) or UnknownSymbol.
RatFn parse(std::string_view text);

struct PrintOptions {
  /// Greek letters, subscripts and "√2" instead of the ASCII names.
  bool unicode = false;
};

/// Deterministic text; parse(to_string(f)) equals f. The ASCII form only
/// uses the grammar above.
std::string to_string(const Poly& f, PrintOptions opts = {});
std::string to_string(const RatFn& f, PrintOptions opts = {});
/// "(order, coefficient)" pairs in increasing order, then "O(eps^M)" where
/// M is one past the last known order.
std::string to_string(const EpsSeries& s, PrintOptions opts = {});

struct FixtureLine {
  int line = 0;
  std::string text;
};

/// Reads a fixture file: one expression per line, blank lines and '#'
/// comments skipped.
std::vector<FixtureLine> read_fixture(const std::filesystem::path& path);

}  // namespace painleve
