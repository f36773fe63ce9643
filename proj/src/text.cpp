#include "carmichael/text.hpp"

#include <cctype>
#include <charconv>

namespace carmichael {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::uint64_t parse_uint(std::string_view s) {
  s = trim(s);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    fail(ErrorKind::ParseError, "expected a non-negative integer, got '" + std::string(s) + "'");
  }
  return v;
}

// "c", "ct", "t", "ct^k", "t^k" -> (coefficient, exponent)
std::pair<std::uint64_t, std::size_t> parse_term(std::string_view term) {
  term = trim(term);
  const auto tpos = term.find('t');
  if (tpos == std::string_view::npos) return {parse_uint(term), 0};
  std::string_view coef = trim(term.substr(0, tpos));
  if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));
  const std::uint64_t c = coef.empty() ? 1 : parse_uint(coef);
  std::string_view rest = trim(term.substr(tpos + 1));
  if (rest.empty()) return {c, 1};
  if (rest.front() != '^') fail(ErrorKind::ParseError, "malformed term '" + std::string(term) + "'");
  return {c, static_cast<std::size_t>(parse_uint(rest.substr(1)))};
}

Poly parse_pretty(const Field& f, std::string_view text) {
  if (!f.is_prime_field()) {
    fail(ErrorKind::ParseError, "the t^k form is only accepted over prime fields");
  }
  std::vector<FieldElement> c;
  std::size_t start = 0;
  bool negative = false;
  auto flush = [&](std::string_view term, bool neg) {
    const auto [coef, exp] = parse_term(term);
    if (exp >= c.size()) c.resize(exp + 1);
    FieldElement v = f.from_int(static_cast<std::int64_t>(coef % f.p()));
    if (neg) v = f.neg(v);
    c[exp] = f.add(c[exp], v);
  };
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] != '+' && text[i] != '-') continue;
    const std::string_view term = text.substr(start, i - start);
    if (!trim(term).empty()) {
      flush(term, negative);
    } else if (i != 0 || i == text.size()) {
      // only a single leading sign may stand without a term before it
      fail(ErrorKind::ParseError, "empty term in '" + std::string(text) + "'");
    }
    if (i < text.size()) negative = text[i] == '-';
    start = i + 1;
  }
  return Poly(std::move(c));
}

}  // namespace

std::vector<std::uint64_t> parse_uint_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  for (auto tok : split(text, ',')) out.push_back(parse_uint(tok));
  return out;
}

Field parse_field(std::string_view text, std::optional<std::string_view> modulus) {
  text = trim(text);
  const auto caret = text.find('^');
  const std::uint64_t p = parse_uint(text.substr(0, caret));
  const std::uint64_t e = caret == std::string_view::npos ? 1 : parse_uint(text.substr(caret + 1));
  if (e == 0 || e > 64) fail(ErrorKind::DegreeMismatch, "extension degree out of range");
  std::optional<std::vector<std::uint64_t>> m;
  if (modulus) m = parse_uint_list(*modulus);
  return Field::create(p, static_cast<unsigned>(e), std::move(m));
}

FieldElement parse_element(const Field& f, std::string_view text) {
  const auto parts = split(trim(text), ':');
  std::vector<std::uint64_t> residues;
  for (auto part : parts) residues.push_back(parse_uint(part));
  if (residues.size() == 1 && f.e() > 1) residues.resize(f.e(), 0);
  for (auto r : residues) {
    if (r >= f.p()) fail(ErrorKind::ParseError, "coefficient " + std::to_string(r) + " is not in [0, p)");
  }
  if (residues.size() != f.e()) {
    fail(ErrorKind::ParseError, "expected " + std::to_string(f.e()) + " ':'-separated residues");
  }
  return f.from_residues(residues);
}

Poly parse_poly(const Field& f, std::string_view text) {
  text = trim(text);
  if (text.empty()) fail(ErrorKind::ParseError, "empty polynomial");
  if (text.find('t') != std::string_view::npos) return parse_pretty(f, text);
  std::vector<FieldElement> c;
  for (auto tok : split(text, ',')) c.push_back(parse_element(f, tok));
  return Poly(f, std::move(c));
}

std::string format_element(const Field& f, FieldElement a) {
  if (f.is_prime_field()) return std::to_string(a.code);
  std::string out;
  for (auto r : f.residues(a)) {
    if (!out.empty()) out += ':';
    out += std::to_string(r);
  }
  return out;
}

std::string format_poly(const Field& f, const Poly& a) {
  if (a.is_zero()) return format_element(f, f.zero());
  std::string out;
  for (auto c : a.coeffs()) {
    if (!out.empty()) out += ',';
    out += format_element(f, c);
  }
  return out;
}

std::string pretty_poly(const Field& f, const Poly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  const auto& c = a.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].code == 0) continue;
    if (!out.empty()) out += '+';
    std::string coef = format_element(f, c[i]);
    if (!f.is_prime_field()) coef = "(" + coef + ")";
    if (i == 0) {
      out += coef;
      continue;
    }
    if (c[i] != f.one()) out += coef;
    out += 't';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out;
}

}  // namespace carmichael
