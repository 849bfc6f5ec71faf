#include "socle/jset.hpp"

#include <algorithm>

#include "socle/error.hpp"

namespace socle {

static std::vector<Int> checked_primes(std::vector<Int> ps) {
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  for (const Int& p : ps)
    if (!is_prime(p))
      fail(ErrorCode::Parse, "not a prime: " + to_string(p));
  return ps;
}

JSet JSet::all() { return JSet(Mode::All, {}); }

JSet JSet::of(std::vector<Int> primes) {
  auto ps = checked_primes(std::move(primes));
  if (ps.empty()) return none();
  return JSet(Mode::Finite, std::move(ps));
}

JSet JSet::all_except(std::vector<Int> primes) {
  auto ps = checked_primes(std::move(primes));
  if (ps.empty()) return all();
  return JSet(Mode::Cofinite, std::move(ps));
}

bool JSet::contains(const Int& p) const {
  bool listed = std::binary_search(primes_.begin(), primes_.end(), p);
  switch (mode_) {
    case Mode::Empty: return false;
    case Mode::All: return true;
    case Mode::Finite: return listed;
    case Mode::Cofinite: return !listed;
  }
  return false;
}

static std::vector<Int> parse_prime_list(std::string_view text) {
  std::vector<Int> ps;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(
        pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
    if (item.empty()) fail(ErrorCode::Parse, "empty entry in prime list");
    ps.push_back(parse_int(item));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return ps;
}

JSet JSet::parse(std::string_view text) {
  if (text == "none") return none();
  if (text == "all") return all();
  constexpr std::string_view kExcept = "all-except:";
  if (text.substr(0, kExcept.size()) == kExcept) {
    auto rest = text.substr(kExcept.size());
    if (rest.empty()) fail(ErrorCode::Parse, "all-except: needs primes");
    return all_except(parse_prime_list(rest));
  }
  if (text.empty()) fail(ErrorCode::Parse, "empty prime set");
  return of(parse_prime_list(text));
}

std::string JSet::str() const {
  auto list = [&] {
    std::string s;
    for (std::size_t i = 0; i < primes_.size(); ++i) {
      if (i) s += ',';
      s += to_string(primes_[i]);
    }
    return s;
  };
  switch (mode_) {
    case Mode::Empty: return "none";
    case Mode::All: return "all";
    case Mode::Finite: return list();
    case Mode::Cofinite: return "all-except:" + list();
  }
  return "none";
}

bool is_j_number(const Int& n, const JSet& j) {
  if (n <= 0) fail(ErrorCode::Parse, "is_j_number needs n >= 1");
  return j_part(n, j).second == 1;
}

std::pair<Int, Int> j_part(const Int& n, const JSet& j) {
  if (n <= 0) fail(ErrorCode::Parse, "j_part needs n >= 1");
  // Extract the full p-power part of m for each listed prime.
  auto strip = [](Int m, const std::vector<Int>& ps) {
    for (const Int& p : ps)
      while (m % p == 0) m /= p;
    return m;
  };
  switch (j.mode()) {
    case JSet::Mode::Empty: return {Int(1), n};
    case JSet::Mode::All: return {n, Int(1)};
    case JSet::Mode::Finite: {
      Int c = strip(n, j.primes());
      return {n / c, c};
    }
    case JSet::Mode::Cofinite: {
      // Listed primes are the complement; their part is the coprime part.
      Int jpart = strip(n, j.primes());
      return {jpart, n / jpart};
    }
  }
  return {Int(1), n};
}

}  // namespace socle
