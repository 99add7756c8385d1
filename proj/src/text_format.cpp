#include "nilclean/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace nilclean::text {

namespace {

[[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& message) {
  throw ParseError(line, column, message);
}

std::uint64_t parse_uint(const Token& t, std::size_t line, const char* what) {
  std::uint64_t v = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    fail(line, t.column, std::string("expected ") + what + ", found '" + std::string(t.text) + "'");
  }
  return v;
}

// Splits "<keyword> <a> <b>" and checks the keyword and token count.
std::vector<Token> header(Reader& r, std::string_view keyword, std::size_t args, const char* usage) {
  const std::string_view line = r.next_line(usage);
  auto tokens = tokenize(line);
  if (tokens.empty() || tokens[0].text != keyword) {
    fail(r.line_number(), tokens.empty() ? 1 : tokens[0].column, std::string("expected header '") + usage + "'");
  }
  if (tokens.size() != args + 1) {
    const std::size_t col = tokens.size() > args + 1 ? tokens[args + 1].column : line.size() + 1;
    fail(r.line_number(), col, std::string("malformed header, expected '") + usage + "'");
  }
  return tokens;
}

std::vector<std::uint64_t> residue_row(Reader& r, std::size_t n, std::vector<Token>& tokens_out) {
  const std::string_view line = r.next_line("matrix row");
  tokens_out = tokenize(line);
  if (tokens_out.size() != n) {
    const std::size_t col = tokens_out.size() > n ? tokens_out[n].column : line.size() + 1;
    fail(r.line_number(), col,
         "expected " + std::to_string(n) + " entries, found " + std::to_string(tokens_out.size()));
  }
  std::vector<std::uint64_t> values;
  for (const auto& t : tokens_out) values.push_back(parse_uint(t, r.line_number(), "a decimal residue"));
  return values;
}

PrimePower parse_prime_power(const Token& t, std::size_t line) {
  const auto caret = t.text.find('^');
  if (caret == std::string_view::npos) fail(line, t.column, "expected a cyclic factor p^k, found '" + std::string(t.text) + "'");
  const Token base{t.text.substr(0, caret), t.column};
  const Token exp{t.text.substr(caret + 1), t.column + caret + 1};
  const std::uint64_t p = parse_uint(base, line, "a prime");
  const std::uint64_t k = parse_uint(exp, line, "an exponent");
  if (!is_prime(p)) fail(line, base.column, std::to_string(p) + " is not prime");
  if (k == 0 || k > 4096) fail(line, exp.column, "exponent must be between 1 and 4096");
  return {p, static_cast<unsigned>(k)};
}

bool starts_with_digit(const std::optional<std::string>& keyword) {
  return keyword && !keyword->empty() && std::isdigit(static_cast<unsigned char>((*keyword)[0]));
}

void expect_label(Reader& r, std::string_view label) {
  const std::string_view line = r.next_line(std::string(label).c_str());
  auto tokens = tokenize(line);
  if (tokens.size() != 1 || tokens[0].text != label) {
    fail(r.line_number(), tokens.empty() ? 1 : tokens[0].column, "expected line '" + std::string(label) + "'");
  }
}

std::vector<Token> keyed_line(Reader& r, std::string_view key) {
  const std::string_view line = r.next_line(std::string(key).c_str());
  auto tokens = tokenize(line);
  if (tokens.size() != 2 || tokens[0].text != key) {
    fail(r.line_number(), tokens.empty() ? 1 : tokens[0].column, "expected '" + std::string(key) + " <value>'");
  }
  return tokens;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

Reader::Reader(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    lines_.push_back(std::move(line));
  }
}

bool Reader::skip_blank() {
  while (index_ < lines_.size() && lines_[index_].find_first_not_of(" \t") == std::string::npos) ++index_;
  return index_ < lines_.size();
}

bool Reader::at_end() { return !skip_blank(); }

std::string_view Reader::next_line(const char* expected) {
  if (!skip_blank()) fail(lines_.size() + 1, 1, std::string("unexpected end of input, expected ") + expected);
  return lines_[index_++];
}

std::optional<std::string> Reader::peek_keyword() {
  if (!skip_blank()) return std::nullopt;
  const auto tokens = tokenize(lines_[index_]);
  return std::string(tokens.front().text);
}

void Reader::expect_end() {
  if (skip_blank()) {
    const auto tokens = tokenize(lines_[index_]);
    fail(index_ + 1, tokens.front().column, "unexpected trailing input");
  }
}

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

Gf2Matrix read_gf2(Reader& r) {
  const auto h = header(r, "gf2", 2, "gf2 <rows> <cols>");
  const std::size_t hl = r.line_number();
  const auto rows = parse_uint(h[1], hl, "a row count");
  const auto cols = parse_uint(h[2], hl, "a column count");
  if (rows == 0) fail(hl, h[1].column, "row count must be positive");
  if (cols == 0) fail(hl, h[2].column, "column count must be positive");
  if (rows > 65536 || cols > 65536) fail(hl, h[1].column, "matrix too large");

  std::vector<std::string_view> lines;
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string_view line = r.next_line("matrix row");
    for (std::size_t j = 0; j < line.size() && j < cols; ++j) {
      if (line[j] != '0' && line[j] != '1') fail(r.line_number(), j + 1, "expected '0' or '1'");
    }
    if (line.size() != cols) {
      fail(r.line_number(), std::min(line.size(), static_cast<std::size_t>(cols)) + 1,
           "expected exactly " + std::to_string(cols) + " characters, found " + std::to_string(line.size()));
    }
    lines.push_back(line);
  }
  Gf2Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (lines[i][j] == '1') m.set(i, j, true);
    }
  }
  return m;
}

Mod2kMatrix read_mod2k(Reader& r) {
  const auto h = header(r, "mod2k", 2, "mod2k <k> <n>");
  const std::size_t hl = r.line_number();
  const auto k = parse_uint(h[1], hl, "an exponent");
  const auto n = parse_uint(h[2], hl, "a size");
  if (k < 1 || k > Mod2kMatrix::kMaxExponent) fail(hl, h[1].column, "exponent must be between 1 and 60");
  if (n == 0) fail(hl, h[2].column, "size must be positive");
  if (n > 4096) fail(hl, h[2].column, "matrix too large");

  const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  std::vector<std::uint64_t> entries;
  std::vector<Token> tokens;
  for (std::size_t i = 0; i < n; ++i) {
    const auto values = residue_row(r, n, tokens);
    for (std::size_t j = 0; j < n; ++j) {
      if (values[j] > mask) {
        fail(r.line_number(), tokens[j].column, "residue " + std::to_string(values[j]) + " is not below 2^" + std::to_string(k));
      }
    }
    entries.insert(entries.end(), values.begin(), values.end());
  }
  Mod2kMatrix m(static_cast<unsigned>(k), n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, entries[i * n + j]);
  }
  return m;
}

BoolMatrix read_bool(Reader& r) {
  const auto h = header(r, "bool", 2, "bool <m> <n>");
  const std::size_t hl = r.line_number();
  const auto m = parse_uint(h[1], hl, "a component count");
  const auto n = parse_uint(h[2], hl, "a size");
  if (m < 1 || m > BoolMatrix::kMaxComponents) fail(hl, h[1].column, "component count must be between 1 and 64");
  if (n == 0) fail(hl, h[2].column, "size must be positive");
  if (n > 4096) fail(hl, h[2].column, "matrix too large");

  std::vector<std::uint64_t> entries;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string_view line = r.next_line("matrix row");
    const auto tokens = tokenize(line);
    if (tokens.size() != n) {
      const std::size_t col = tokens.size() > n ? tokens[n].column : line.size() + 1;
      fail(r.line_number(), col, "expected " + std::to_string(n) + " entries, found " + std::to_string(tokens.size()));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const auto& t = tokens[j];
      if (t.text.size() != m) {
        fail(r.line_number(), t.column, "entry must have exactly " + std::to_string(m) + " characters");
      }
      std::uint64_t value = 0;
      for (std::size_t c = 0; c < m; ++c) {
        if (t.text[c] != '0' && t.text[c] != '1') fail(r.line_number(), t.column + c, "expected '0' or '1'");
        if (t.text[c] == '1') value |= std::uint64_t{1} << c;
      }
      entries.push_back(value);
    }
  }
  BoolMatrix b(static_cast<unsigned>(m), n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) b.set(i, j, entries[i * n + j]);
  }
  return b;
}

GroupInput read_group(Reader& r, bool endo_required) {
  const std::string_view line = r.next_line("group <p^k> ...");
  const auto tokens = tokenize(line);
  const std::size_t hl = r.line_number();
  if (tokens.empty() || tokens[0].text != "group") fail(hl, 1, "expected header 'group <p^k> ...'");
  if (tokens.size() < 2) fail(hl, line.size() + 1, "group needs at least one cyclic factor");
  std::vector<PrimePower> factors;
  for (std::size_t i = 1; i < tokens.size(); ++i) factors.push_back(parse_prime_power(tokens[i], hl));
  GroupInput input{AbelianGroupSpec(factors), std::nullopt};

  if (!endo_required && !starts_with_digit(r.peek_keyword())) return input;

  if (!input.group.is_two_group()) fail(hl, 1, "endomorphism matrices are supported for 2-groups only");
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    if (factors[i - 1].exponent > GroupEndo::kMaxExponent) fail(hl, tokens[i].column, "exponent must be at most 60");
  }
  // Rows follow the sorted order of the cyclic factors.
  GroupEndo f(input.group);
  const std::size_t n = f.size();
  std::vector<Token> row_tokens;
  for (std::size_t i = 0; i < n; ++i) {
    const auto values = residue_row(r, n, row_tokens);
    for (std::size_t j = 0; j < n; ++j) {
      try {
        f.set(i, j, values[j]);
      } catch (const EndoConstraintError& e) {
        fail(r.line_number(), row_tokens[j].column, e.what());
      }
    }
  }
  input.endo = std::move(f);
  return input;
}

AnyInput read_any(Reader& r) {
  const auto keyword = r.peek_keyword();
  if (!keyword) fail(1, 1, "empty input");
  if (*keyword == "gf2") return read_gf2(r);
  if (*keyword == "mod2k") return read_mod2k(r);
  if (*keyword == "bool") return read_bool(r);
  if (*keyword == "group") return read_group(r, false);
  r.skip_blank();
  fail(r.line_number() + 1, 1, "unknown header '" + *keyword + "' (expected gf2, mod2k, bool or group)");
}

template <>
Gf2Matrix read_matrix<Gf2Matrix>(Reader& r) {
  return read_gf2(r);
}
template <>
Mod2kMatrix read_matrix<Mod2kMatrix>(Reader& r) {
  return read_mod2k(r);
}
template <>
BoolMatrix read_matrix<BoolMatrix>(Reader& r) {
  return read_bool(r);
}
template <>
GroupEndo read_matrix<GroupEndo>(Reader& r) {
  return *read_group(r, true).endo;
}

template <class M>
ParsedCert<M> read_cert(Reader& r) {
  ParsedCert<M> parsed;
  expect_label(r, "E");
  parsed.cert.e_part = read_matrix<M>(r);
  expect_label(r, "N");
  parsed.cert.n_part = read_matrix<M>(r);
  const auto index = keyed_line(r, "index");
  parsed.cert.nilpotency_index = parse_uint(index[1], r.line_number(), "a nilpotency index");
  const auto strong = keyed_line(r, "strong");
  if (strong[1].text == "true") {
    parsed.strong = true;
  } else if (strong[1].text != "false") {
    fail(r.line_number(), strong[1].column, "expected 'true' or 'false'");
  }
  return parsed;
}

template ParsedCert<Gf2Matrix> read_cert<Gf2Matrix>(Reader&);
template ParsedCert<Mod2kMatrix> read_cert<Mod2kMatrix>(Reader&);
template ParsedCert<BoolMatrix> read_cert<BoolMatrix>(Reader&);
template ParsedCert<GroupEndo> read_cert<GroupEndo>(Reader&);

void write(std::ostream& out, const Gf2Matrix& m) {
  out << "gf2 " << m.rows() << " " << m.cols() << "\n";
  std::string row(m.cols(), '0');
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m.get(i, j) ? '1' : '0';
    out << row << "\n";
  }
}

void write(std::ostream& out, const Mod2kMatrix& m) {
  out << "mod2k " << m.exponent() << " " << m.size() << "\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out << (j ? " " : "") << m(i, j);
    out << "\n";
  }
}

void write(std::ostream& out, const BoolMatrix& m) {
  out << "bool " << m.components() << " " << m.size() << "\n";
  std::string token(m.components(), '0');
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      for (unsigned c = 0; c < m.components(); ++c) token[c] = ((m(i, j) >> c) & 1U) ? '1' : '0';
      out << (j ? " " : "") << token;
    }
    out << "\n";
  }
}

void write(std::ostream& out, const AbelianGroupSpec& g) { out << g.to_string() << "\n"; }

void write(std::ostream& out, const GroupEndo& m) {
  write(out, m.group());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out << (j ? " " : "") << m(i, j);
    out << "\n";
  }
}

std::string to_text(const Gf2Matrix& m) {
  std::ostringstream s;
  write(s, m);
  return s.str();
}

}  // namespace nilclean::text
