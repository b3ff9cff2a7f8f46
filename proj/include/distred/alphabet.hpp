#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "distred/errors.hpp"

namespace distred {

using Symbol = int;

/// A set of symbols as a bitmask over the alphabet's symbol indices.
/// Alphabets are capped at 64 symbols (desk scale), so one word suffices.
using Mask = std::uint64_t;

inline int mask_size(Mask m) { return std::popcount(m); }
inline bool mask_contains(Mask m, Symbol s) { return (m >> s) & 1u; }
inline Mask mask_of(Symbol s) { return Mask{1} << s; }

/// Iterate symbols of a mask in ascending order.
template <typename F>
void for_each_symbol(Mask m, F&& f) {
  while (m) {
    Symbol s = std::countr_zero(m);
    f(s);
    m &= m - 1;
  }
}

inline std::vector<Symbol> mask_symbols(Mask m) {
  std::vector<Symbol> out;
  for_each_symbol(m, [&](Symbol s) { out.push_back(s); });
  return out;
}

/// Compares masks as ascending symbol sequences (lexicographic).
bool mask_lex_less(Mask a, Mask b);

/// Immutable interned alphabet. Symbols carry a fixed total order (creation
/// order) and are addressed by index everywhere else in the library.
class Alphabet {
 public:
  static constexpr std::size_t kMaxSymbols = 64;

  /// Throws on empty input, duplicates, or more than 64 symbols.
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return data_->names.size(); }
  const std::string& name(Symbol s) const { return data_->names[s]; }
  std::optional<Symbol> index(std::string_view name) const;
  Mask universe() const {
    std::size_t n = size();
    return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  }

  /// Content equality; two alphabets are interchangeable iff they list the
  /// same symbols in the same order.
  bool operator==(const Alphabet& other) const {
    return data_ == other.data_ || data_->names == other.data_->names;
  }
  bool operator!=(const Alphabet& other) const { return !(*this == other); }

  std::string mask_to_string(Mask m) const;
  /// Parses "{a,b,c}" or "a,b,c" relative to this alphabet.
  Mask mask_from_names(const std::vector<std::string>& names) const;

 private:
  struct Data {
    std::vector<std::string> names;
  };
  std::shared_ptr<const Data> data_;
};

/// A non-empty subset of one alphabet.
struct SubAlphabet {
  Alphabet alphabet;
  Mask bits;

  SubAlphabet(Alphabet a, Mask m) : alphabet(std::move(a)), bits(m) {
    if (m == 0) throw Error(ErrorCode::EmptyPart, "sub-alphabet must be non-empty");
    if (m & ~alphabet.universe())
      throw Error(ErrorCode::AlphabetMismatch, "sub-alphabet has foreign symbols");
  }

  int size() const { return mask_size(bits); }
  std::string to_string() const { return alphabet.mask_to_string(bits); }
};

}  // namespace distred
