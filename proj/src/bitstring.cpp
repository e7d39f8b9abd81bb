#include "robp/bitstring.hpp"

#include "robp/error.hpp"

namespace robp {

BitString parse_bits(std::string_view text) {
  if (text.size() > max_bits)
    throw Error(ErrorKind::ParseError, "bit strings longer than 64 are not supported");
  BitString out{0, static_cast<unsigned>(text.size())};
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1')
      out.word |= std::uint64_t{1} << i;
    else if (text[i] != '0')
      throw Error(ErrorKind::ParseError, "bad character in bit string '" + std::string(text) + "'");
  }
  return out;
}

std::string format_bits(std::uint64_t word, unsigned n) {
  std::string s(n, '0');
  for (unsigned i = 0; i < n; ++i)
    if ((word >> i) & 1u)
      s[i] = '1';
  return s;
}

} // namespace robp
