#include "nilclean/cli.hpp"

#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nilclean/abelian_groups.hpp"
#include "nilclean/boolean_ring.hpp"
#include "nilclean/canonical_form.hpp"
#include "nilclean/engine.hpp"
#include "nilclean/mod2k.hpp"
#include "nilclean/oracle.hpp"
#include "nilclean/text_format.hpp"

namespace nilclean::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const Gf2Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::string row(m.cols(), '0');
    for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m.get(i, j) ? '1' : '0';
    rows.push_back(row);
  }
  return {{"ring", "gf2"}, {"rows", m.rows()}, {"cols", m.cols()}, {"data", rows}};
}

json to_json(const Mod2kMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return {{"ring", "mod2k"}, {"k", m.exponent()}, {"n", m.size()}, {"data", rows}};
}

json to_json(const BoolMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) {
      std::string token(m.components(), '0');
      for (unsigned c = 0; c < m.components(); ++c) token[c] = ((m(i, j) >> c) & 1U) ? '1' : '0';
      row.push_back(token);
    }
    rows.push_back(row);
  }
  return {{"ring", "bool"}, {"m", m.components()}, {"n", m.size()}, {"data", rows}};
}

json to_json(const AbelianGroupSpec& g) {
  json factors = json::array();
  for (const auto& f : g.factors()) factors.push_back(std::to_string(f.prime) + "^" + std::to_string(f.exponent));
  return factors;
}

json to_json(const GroupEndo& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return {{"ring", "group"}, {"group", to_json(m.group())}, {"data", rows}};
}

template <class M>
json cert_json(const NilCleanCert<M>& c, bool strong) {
  return {{"E", to_json(c.e_part)}, {"N", to_json(c.n_part)}, {"index", c.nilpotency_index}, {"strong", strong}};
}

template <class M>
bool commutes(const NilCleanCert<M>& c) {
  return mul(c.e_part, c.n_part) == mul(c.n_part, c.e_part);
}

struct Context {
  bool json_output = false;
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

// Owns a file stream when a path is given; otherwise borrows stdin.
class Input {
 public:
  Input(const std::string& path, std::istream& fallback) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ifstream>(path);
      if (!*file_) throw UsageError("cannot open '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::istream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::istream* stream_;
};

template <class M>
int emit_cert(Context& ctx, const NilCleanCert<M>& cert) {
  const bool strong = commutes(cert);
  if (ctx.json_output) {
    ctx.out << cert_json(cert, strong).dump(2) << "\n";
  } else {
    text::write_cert(ctx.out, cert, strong);
  }
  return kSuccess;
}

void require_square(const Gf2Matrix& a) {
  if (!a.is_square()) throw UsageError("matrix must be square, got " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

int cmd_decompose(Context& ctx, const std::string& path) {
  Input input(path, ctx.in);
  text::Reader reader(input.get());
  auto parsed = text::read_any(reader);
  reader.expect_end();

  if (auto* g = std::get_if<Gf2Matrix>(&parsed)) {
    require_square(*g);
    return emit_cert(ctx, nil_clean_decompose(*g));
  }
  if (auto* m = std::get_if<Mod2kMatrix>(&parsed)) return emit_cert(ctx, nil_clean_decompose_mod2k(*m));
  if (auto* b = std::get_if<BoolMatrix>(&parsed)) return emit_cert(ctx, nil_clean_decompose_boolean(*b));

  auto& group = std::get<text::GroupInput>(parsed);
  if (!group.endo) {
    if (!group.group.is_two_group()) {
      ctx.err << "group is not a 2-group: its endomorphism ring is not nil-clean\n";
      return kNegative;
    }
    throw UsageError("decompose needs an endomorphism matrix after the group line");
  }
  return emit_cert(ctx, endo_nil_clean_decompose(*group.endo));
}

template <class M>
std::vector<std::string> cert_problems(const M& a, const text::ParsedCert<M>& parsed) {
  std::vector<std::string> problems;
  const auto& c = parsed.cert;
  try {
    if (!(mul(c.e_part, c.e_part) == c.e_part)) problems.emplace_back("E is not idempotent");
    if (!(add(c.e_part, c.n_part) == a)) problems.emplace_back("E + N does not equal the matrix");
    const auto index = nilpotency_index(c.n_part);
    if (!index) {
      problems.emplace_back("N is not nilpotent");
    } else if (*index != c.nilpotency_index) {
      problems.emplace_back("nilpotency index is " + std::to_string(*index) + ", certificate claims " +
                            std::to_string(c.nilpotency_index));
    }
    if (parsed.strong && !commutes(c)) problems.emplace_back("certificate claims strong but E and N do not commute");
  } catch (const std::invalid_argument& e) {
    problems.emplace_back(std::string("certificate does not match the matrix: ") + e.what());
  }
  return problems;
}

template <class M>
int verify_as(Context& ctx, const M& a, text::Reader& cert_reader) {
  const auto parsed = text::read_cert<M>(cert_reader);
  cert_reader.expect_end();
  const auto problems = cert_problems(a, parsed);
  if (ctx.json_output) {
    ctx.out << json{{"result", problems.empty() ? "PASS" : "FAIL"}, {"problems", problems}}.dump(2) << "\n";
  } else if (problems.empty()) {
    ctx.out << "PASS\n";
  } else {
    ctx.out << "FAIL\n";
    for (const auto& p : problems) ctx.out << "reason " << p << "\n";
  }
  return problems.empty() ? kSuccess : kNegative;
}

int cmd_verify(Context& ctx, const std::string& matrix_path, const std::string& cert_path) {
  if (matrix_path.empty() || matrix_path == "-") {
    if (cert_path.empty() || cert_path == "-") throw UsageError("verify needs the matrix or the certificate from a file");
  }
  Input matrix_input(matrix_path, ctx.in);
  text::Reader matrix_reader(matrix_input.get());
  auto parsed = text::read_any(matrix_reader);
  matrix_reader.expect_end();

  Input cert_input(cert_path, ctx.in);
  text::Reader cert_reader(cert_input.get());
  if (auto* g = std::get_if<Gf2Matrix>(&parsed)) {
    require_square(*g);
    return verify_as(ctx, *g, cert_reader);
  }
  if (auto* m = std::get_if<Mod2kMatrix>(&parsed)) return verify_as(ctx, *m, cert_reader);
  if (auto* b = std::get_if<BoolMatrix>(&parsed)) return verify_as(ctx, *b, cert_reader);
  auto& group = std::get<text::GroupInput>(parsed);
  if (!group.endo) throw UsageError("verify needs an endomorphism matrix after the group line");
  return verify_as(ctx, *group.endo, cert_reader);
}

Gf2Matrix read_square_gf2(Context& ctx, const std::string& path, const char* command) {
  Input input(path, ctx.in);
  text::Reader reader(input.get());
  const auto keyword = reader.peek_keyword();
  if (keyword && *keyword != "gf2") throw UsageError(std::string(command) + " expects a gf2 matrix");
  Gf2Matrix a = text::read_gf2(reader);
  reader.expect_end();
  require_square(a);
  return a;
}

int cmd_rcf(Context& ctx, const std::string& path) {
  const Gf2Matrix a = read_square_gf2(ctx, path, "rcf");
  const FrobeniusForm form = frobenius_form(a);
  if (ctx.json_output) {
    json factors = json::array();
    for (const auto& f : form.invariant_factors) factors.push_back(f.to_string());
    ctx.out << json{{"transform", to_json(form.transform)}, {"factors", factors}}.dump(2) << "\n";
    return kSuccess;
  }
  ctx.out << "transform\n";
  text::write(ctx.out, form.transform);
  ctx.out << "factors " << form.invariant_factors.size() << "\n";
  for (const auto& f : form.invariant_factors) ctx.out << "factor " << f.to_string() << "\n";
  return kSuccess;
}

int cmd_strong(Context& ctx, const std::string& path) {
  const Gf2Matrix a = read_square_gf2(ctx, path, "strong");
  try {
    const Gf2StrongCert strong = strongly_nil_clean_decompose(a);
    return emit_cert(ctx, strong.cert);
  } catch (const NotStronglyNilCleanError& e) {
    if (ctx.json_output) {
      ctx.out << json{{"strong", false}, {"witness", to_json(e.witness())}}.dump(2) << "\n";
    } else {
      ctx.out << "not strongly nil-clean\nwitness\n";
      text::write(ctx.out, e.witness());
    }
    return kNegative;
  }
}

int cmd_group(Context& ctx, const std::string& path) {
  Input input(path, ctx.in);
  text::Reader reader(input.get());
  const auto keyword = reader.peek_keyword();
  if (keyword && *keyword != "group") throw UsageError("group expects a 'group <p^k> ...' line");
  const text::GroupInput parsed = text::read_group(reader, false);
  reader.expect_end();

  const bool nil_clean = group_nil_clean_verdict(parsed.group);
  const bool strongly = group_strongly_nil_clean_verdict(parsed.group);
  const auto witness = strongly_witness(parsed.group);
  if (ctx.json_output) {
    ctx.out << json{{"group", to_json(parsed.group)},
                    {"nil_clean", nil_clean},
                    {"strongly", strongly},
                    {"witness", witness ? to_json(*witness) : json(nullptr)}}
                   .dump(2)
            << "\n";
  } else {
    ctx.out << "nil-clean " << (nil_clean ? "true" : "false") << "\n";
    ctx.out << "strongly " << (strongly ? "true" : "false") << "\n";
    if (witness) {
      ctx.out << "witness\n";
      text::write(ctx.out, *witness);
    } else {
      ctx.out << "witness none\n";
    }
  }
  return nil_clean ? kSuccess : kNegative;
}

struct OracleOptions {
  std::string check;
  std::size_t n = 0;
  bool extended = false;
};

int cmd_oracle(Context& ctx, const OracleOptions& opt) {
  json report{{"check", opt.check}};
  bool ok = true;
  std::vector<oracle::f4::Matrix> f4_failures;

  if (opt.check == "idempotents" || opt.check == "nilpotents") {
    const std::size_t n = opt.n ? opt.n : 2;
    if (n > 3 && !opt.extended) throw UsageError("n = 4 scans need --extended");
    const auto found = opt.check == "idempotents" ? oracle::enumerate_idempotents(n) : oracle::enumerate_nilpotents(n);
    report["n"] = n;
    report["count"] = found.size();
  } else if (opt.check == "nil-clean") {
    const std::size_t n = opt.n ? opt.n : 3;
    if (n > 3 && !opt.extended) throw UsageError("n = 4 scans need --extended");
    if (n == 0 || n > oracle::kMaxEnumerationSize) throw UsageError("nil-clean check supports n <= 4");
    std::size_t brute_ok = 0;
    std::size_t engine_ok = 0;
    const std::uint64_t total = std::uint64_t{1} << (n * n);
    for (std::uint64_t code = 0; code < total; ++code) {
      const Gf2Matrix a = oracle::decode(code, n);
      const auto brute = oracle::brute_nil_clean(a);
      if (brute && verify_cert(a, *brute)) ++brute_ok;
      if (verify_cert(a, nil_clean_decompose(a))) ++engine_ok;
    }
    ok = brute_ok == total && engine_ok == total;
    report["n"] = n;
    report["matrices"] = total;
    report["brute"] = brute_ok;
    report["engine"] = engine_ok;
    report["agree"] = ok;
  } else if (opt.check == "strong") {
    const std::size_t n = opt.n ? opt.n : 2;
    const auto census = oracle::brute_strongly_nil_clean(n);
    std::size_t agree = 0;
    for (std::uint64_t code = 0; code < census.verdicts.size(); ++code) {
      if (census.verdicts[code] == is_strongly_nil_clean(oracle::decode(code, n))) ++agree;
    }
    ok = agree == census.verdicts.size();
    report["n"] = n;
    report["matrices"] = census.verdicts.size();
    report["count"] = census.count;
    report["agree"] = ok;
  } else {
    const std::size_t n = opt.n ? opt.n : 1;
    f4_failures = oracle::f4_negative_check(n);
    report["n"] = n;
    report["count"] = f4_failures.size();
    json list = json::array();
    for (const auto& m : f4_failures) {
      json rows = json::array();
      for (std::size_t i = 0; i < m.n; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.n; ++j) row.push_back(oracle::f4::name(m(i, j)));
        rows.push_back(row);
      }
      list.push_back(rows);
    }
    report["matrices_without_decomposition"] = list;
    ok = !f4_failures.empty();
  }

  if (ctx.json_output) {
    ctx.out << report.dump(2) << "\n";
  } else {
    for (const auto& key : {"check", "n", "matrices", "count", "brute", "engine", "agree"}) {
      if (!report.contains(key)) continue;
      const auto& v = report[key];
      ctx.out << key << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    for (const auto& m : f4_failures) {
      ctx.out << "f4 " << m.n << " " << m.n << "\n";
      for (std::size_t i = 0; i < m.n; ++i) {
        for (std::size_t j = 0; j < m.n; ++j) ctx.out << (j ? " " : "") << oracle::f4::name(m(i, j));
        ctx.out << "\n";
      }
    }
  }
  return ok ? kSuccess : kNegative;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nil-clean decompositions over F2, Z/2^k, finite Boolean rings and abelian 2-group endomorphisms",
               "nilclean"};
  app.require_subcommand(1, 1);
  Context ctx{false, in, out, err};
  app.add_flag("--json", ctx.json_output, "Emit JSON instead of the text format");
  app.fallthrough();

  std::string input;
  auto* decompose = app.add_subcommand("decompose", "Print a nil-clean certificate for a matrix");
  decompose->add_option("input", input, "Matrix file (default: stdin)");

  std::string matrix_path;
  std::string cert_path;
  auto* verify = app.add_subcommand("verify", "Check a certificate against a matrix; prints PASS or FAIL");
  verify->add_option("matrix", matrix_path, "Matrix file")->required();
  verify->add_option("certificate", cert_path, "Certificate file (default: stdin)");

  auto* rcf = app.add_subcommand("rcf", "Print the Frobenius form transform and invariant factors of a gf2 matrix");
  rcf->add_option("input", input, "Matrix file (default: stdin)");

  auto* strong = app.add_subcommand("strong", "Strongly nil-clean certificate, or the witness A + A^2");
  strong->add_option("input", input, "Matrix file (default: stdin)");

  auto* group = app.add_subcommand("group", "Nil-clean verdicts for a finite-rank abelian group");
  group->add_option("input", input, "Group file (default: stdin)");

  OracleOptions oracle_opts;
  auto* oracle_cmd = app.add_subcommand("oracle", "Run an exhaustive brute-force check");
  oracle_cmd->add_option("check", oracle_opts.check, "idempotents | nilpotents | nil-clean | strong | f4")
      ->required()
      ->check(CLI::IsMember({"idempotents", "nilpotents", "nil-clean", "strong", "f4"}));
  oracle_cmd->add_option("--n", oracle_opts.n, "Matrix size");
  oracle_cmd->add_flag("--extended", oracle_opts.extended, "Allow n = 4 exhaustive scans");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kMalformed;
  }

  try {
    if (*decompose) return cmd_decompose(ctx, input);
    if (*verify) return cmd_verify(ctx, matrix_path, cert_path);
    if (*rcf) return cmd_rcf(ctx, input);
    if (*strong) return cmd_strong(ctx, input);
    if (*group) return cmd_group(ctx, input);
    return cmd_oracle(ctx, oracle_opts);
  } catch (const text::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kMalformed;
  } catch (const VerificationError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kMalformed;
  }
}

}  // namespace nilclean::cli
