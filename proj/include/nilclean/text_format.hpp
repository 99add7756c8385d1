#pragma once

// Line-oriented text formats for matrices, groups and certificates.
//
//   gf2 <rows> <cols>      then <rows> lines of <cols> characters '0'/'1'
//   mod2k <k> <n>          then n lines of n decimal residues in [0, 2^k)
//   bool <m> <n>           then n lines of n tokens, each m characters '0'/'1'
//   group <p^k> <p^k> ...  optionally followed by n lines of n residues
//
// A certificate is a line "E", a matrix, a line "N", a matrix, then
// "index <k>" and "strong <true|false>".

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nilclean/abelian_groups.hpp"
#include "nilclean/boolean_ring.hpp"
#include "nilclean/certificate.hpp"
#include "nilclean/gf2.hpp"
#include "nilclean/mod2k.hpp"

namespace nilclean::text {

/// Positions are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Sequential reader over the lines of a stream; blank lines between blocks
/// are skipped.
class Reader {
 public:
  explicit Reader(std::istream& in);

  /// Advances past blank lines; false at end of input.
  bool skip_blank();
  bool at_end();
  /// Next non-blank line with trailing whitespace removed. Throws ParseError
  /// at end of input, naming `expected`.
  std::string_view next_line(const char* expected);
  /// 1-based number of the line most recently returned.
  std::size_t line_number() const { return index_; }
  /// Peeks the first token of the next non-blank line, if any.
  std::optional<std::string> peek_keyword();
  /// Throws ParseError unless only blank lines remain.
  void expect_end();

 private:
  std::vector<std::string> lines_;
  std::size_t index_ = 0;  // lines consumed
};

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line);

struct GroupInput {
  AbelianGroupSpec group;
  std::optional<GroupEndo> endo;
};

using AnyInput = std::variant<Gf2Matrix, Mod2kMatrix, BoolMatrix, GroupInput>;

Gf2Matrix read_gf2(Reader& r);
Mod2kMatrix read_mod2k(Reader& r);
BoolMatrix read_bool(Reader& r);
/// Reads a group line and, when `endo` is required or further non-header
/// lines follow, the endomorphism rows.
GroupInput read_group(Reader& r, bool endo_required);
/// Dispatches on the header keyword.
AnyInput read_any(Reader& r);

template <class M>
M read_matrix(Reader& r);
template <>
Gf2Matrix read_matrix<Gf2Matrix>(Reader& r);
template <>
Mod2kMatrix read_matrix<Mod2kMatrix>(Reader& r);
template <>
BoolMatrix read_matrix<BoolMatrix>(Reader& r);
template <>
GroupEndo read_matrix<GroupEndo>(Reader& r);

void write(std::ostream& out, const Gf2Matrix& m);
void write(std::ostream& out, const Mod2kMatrix& m);
void write(std::ostream& out, const BoolMatrix& m);
void write(std::ostream& out, const GroupEndo& m);
void write(std::ostream& out, const AbelianGroupSpec& g);

template <class M>
struct ParsedCert {
  NilCleanCert<M> cert;
  bool strong = false;
};

template <class M>
void write_cert(std::ostream& out, const NilCleanCert<M>& cert, bool strong) {
  out << "E\n";
  write(out, cert.e_part);
  out << "N\n";
  write(out, cert.n_part);
  out << "index " << cert.nilpotency_index << "\n";
  out << "strong " << (strong ? "true" : "false") << "\n";
}

template <class M>
ParsedCert<M> read_cert(Reader& r);

std::string to_text(const Gf2Matrix& m);

}  // namespace nilclean::text
