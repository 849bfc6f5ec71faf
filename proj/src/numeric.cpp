#include "socle/numeric.hpp"

#include "socle/error.hpp"

namespace socle {

Int parse_int(std::string_view text) {
  if (text.empty()) fail(ErrorCode::Parse, "empty integer");
  std::size_t i = 0;
  if (text[0] == '-') i = 1;
  if (i == text.size()) fail(ErrorCode::Parse, "sign without digits");
  for (std::size_t k = i; k < text.size(); ++k)
    if (text[k] < '0' || text[k] > '9')
      fail(ErrorCode::Parse, "bad integer '" + std::string(text) + "'");
  return Int(std::string(text));
}

std::string to_string(const Int& n) { return n.str(); }

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Int d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

}  // namespace socle
