#include "distred/alphabet.hpp"

#include <algorithm>
#include <sstream>

namespace distred {

bool mask_lex_less(Mask a, Mask b) {
  while (a && b) {
    Symbol sa = std::countr_zero(a);
    Symbol sb = std::countr_zero(b);
    if (sa != sb) return sa < sb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

Alphabet::Alphabet(std::vector<std::string> symbols) {
  if (symbols.empty())
    throw Error(ErrorCode::EmptyPart, "alphabet must be non-empty");
  if (symbols.size() > kMaxSymbols)
    throw Error(ErrorCode::AlphabetTooLarge,
                "alphabets are limited to 64 symbols");
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (symbols[i].empty())
      throw Error(ErrorCode::ParseError, "empty symbol name");
    for (std::size_t j = i + 1; j < symbols.size(); ++j)
      if (symbols[i] == symbols[j])
        throw Error(ErrorCode::DuplicatePart,
                    "duplicate symbol '" + symbols[i] + "' in alphabet");
  }
  data_ = std::make_shared<Data>(Data{std::move(symbols)});
}

std::optional<Symbol> Alphabet::index(std::string_view name) const {
  const auto& names = data_->names;
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<Symbol>(it - names.begin());
}

std::string Alphabet::mask_to_string(Mask m) const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for_each_symbol(m, [&](Symbol s) {
    if (!first) out << ',';
    out << name(s);
    first = false;
  });
  out << '}';
  return out.str();
}

Mask Alphabet::mask_from_names(const std::vector<std::string>& names) const {
  Mask m = 0;
  for (const auto& n : names) {
    auto s = index(n);
    if (!s)
      throw Error(ErrorCode::ParseError, "unknown symbol '" + n + "'");
    m |= mask_of(*s);
  }
  return m;
}

}  // namespace distred
