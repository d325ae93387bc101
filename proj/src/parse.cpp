#include "horace/parse.hpp"

#include <algorithm>
#include <cctype>

namespace horace {

namespace {

void upoly_trim(UPoly& f) {
  for (auto it = f.begin(); it != f.end();)
    it = (it->second == 0) ? f.erase(it) : std::next(it);
}

UPoly upoly_const(i64 c) {
  UPoly f;
  if (c != 0) f[{0, 0, 0}] = c;
  return f;
}

UPoly upoly_add(const UPoly& a, const UPoly& b, i64 sign) {
  UPoly r = a;
  for (const auto& [m, c] : b) r[m] += sign * c;
  upoly_trim(r);
  return r;
}

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at position " + std::to_string(pos) + " in '" +
                     s + "'");
  }

  long integer() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (start == pos) fail("expected an integer");
    return std::stol(s.substr(start, pos - start));
  }

  UPoly atom() {
    char c = peek();
    if (c == '(') {
      ++pos;
      UPoly f = poly();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    if (c == 'x' || c == 'y' || c == 't') {
      ++pos;
      return upoly_var(c == 'x' ? 0 : c == 'y' ? 1 : 2);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return upoly_const(integer());
    fail("expected a variable, number or '('");
  }

  UPoly factor() {
    UPoly f = atom();
    while (eat('^')) {
      long k = integer();
      if (k < 0) fail("negative exponent");
      f = upoly_pow(f, static_cast<int>(k));
    }
    return f;
  }

  UPoly term() {
    UPoly f = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos;
        f = upoly_mul(f, factor());
      } else if (c == '(' || c == 'x' || c == 'y' || c == 't' ||
                 std::isdigit(static_cast<unsigned char>(c))) {
        f = upoly_mul(f, factor());  // juxtaposition
      } else {
        return f;
      }
    }
  }

  UPoly poly() {
    i64 sign = eat('-') ? -1 : (eat('+'), 1);
    UPoly f = upoly_add(UPoly{}, term(), sign);
    for (;;) {
      if (eat('+'))
        f = upoly_add(f, term(), 1);
      else if (eat('-'))
        f = upoly_add(f, term(), -1);
      else
        return f;
    }
  }
};

}  // namespace

UPoly parse_upoly(const std::string& text) {
  Parser p(text);
  UPoly f = p.poly();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return f;
}

std::vector<UPoly> parse_ideal(const std::string& text) {
  Parser p(text);
  if (!p.eat('(')) p.fail("ideal must start with '('");
  std::vector<UPoly> gens;
  gens.push_back(p.poly());
  while (p.eat(',')) gens.push_back(p.poly());
  if (!p.eat(')')) p.fail("expected ')'");
  long k = 1;
  if (p.eat('^')) k = p.integer();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  if (k < 1) throw ParseError("ideal power must be positive");
  if (k == 1) return gens;

  // Expand to all products of k generators (multisets).
  std::vector<UPoly> out;
  std::vector<std::size_t> idx(k, 0);
  for (;;) {
    UPoly prod = upoly_const(1);
    for (std::size_t i : idx) prod = upoly_mul(prod, gens[i]);
    out.push_back(std::move(prod));
    long pos = k - 1;
    while (pos >= 0 && idx[pos] == gens.size() - 1) --pos;
    if (pos < 0) break;
    std::size_t v = ++idx[pos];
    for (long j = pos + 1; j < k; ++j) idx[j] = v;  // non-decreasing indices
  }
  return out;
}

Coord detect_coord(const std::vector<UPoly>& gens) {
  for (const UPoly& g : gens) {
    i64 cx = 0, cy = 0, ct = 0;
    bool linear = true;
    for (const auto& [m, c] : g) {
      if (m == std::array<int, 3>{1, 0, 0})
        cx = c;
      else if (m == std::array<int, 3>{0, 1, 0})
        cy = c;
      else if (m == std::array<int, 3>{0, 0, 1})
        ct = c;
      else
        linear = false;
    }
    if (!linear || (cy != 1 && cy != -1)) continue;
    // v = (a x + y + c t) up to sign; y = -a u + v - c t
    return Coord{-cx * cy, cy, -ct * cy};
  }
  return coord_plain();
}

EngineInput make_engine_input(const std::vector<UPoly>& gens,
                              const std::vector<int>& ps, u64 prime) {
  if (gens.empty()) throw ParseError("empty generator list");
  EngineInput in;
  in.prime = prime;
  in.coord = detect_coord(gens);
  int maxdeg = 1;
  for (const UPoly& g : gens)
    for (const auto& [m, c] : g) maxdeg = std::max(maxdeg, m[0] + m[1]);
  in.nxy = 2 * maxdeg + 2;
  in.pt = ps.empty() ? 2 : ps.front() + 1;
  in.gens = gens;
  return in;
}

}  // namespace horace
