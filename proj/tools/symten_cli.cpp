// Command-line surface: necklace listings, orbit-sum products (optionally
// checked against the brute-force tensor model), tensor expansion, rewriting
// into the free commutative generators, power-plethysm polynomials, invariant
// polynomials of generic matrices, and the graded isomorphism verification.
//
// Exit codes: 0 success, 1 mathematical mismatch, 2 invalid input,
// 3 resource cap exceeded.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "symten/io.hpp"
#include "symten/symten.hpp"
#include "symten/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

struct MismatchError {
  std::string message;
};

std::uint32_t resolve_alphabet(std::optional<std::uint32_t> m_flag,
                               const std::vector<std::string>& inputs) {
  std::uint32_t seen = 0;
  for (const auto& text : inputs) seen = std::max(seen, symten::scan_max_generator(text));
  if (m_flag) {
    if (*m_flag < 1) throw symten::input_error("m must be >= 1");
    if (seen > *m_flag)
      throw symten::input_error("input mentions x" + std::to_string(seen) +
                                " but m = " + std::to_string(*m_flag));
    return *m_flag;
  }
  if (seen == 0)
    throw symten::input_error("cannot infer the alphabet size; pass --m");
  return seen;
}

void cmd_necklaces(std::uint32_t m, std::uint32_t max_deg, bool json) {
  const auto necklaces = symten::enumerate_necklaces(m, max_deg);
  std::vector<std::size_t> counts(max_deg + 1, 0);
  for (const auto& w : necklaces) ++counts[w.length()];
  if (json) {
    symten::Json out;
    out["m"] = m;
    out["max_deg"] = max_deg;
    symten::Json list = symten::Json::array();
    for (const auto& w : necklaces) list.push_back(symten::word_to_json(w));
    out["necklaces"] = std::move(list);
    symten::Json per_length = symten::Json::array();
    for (std::uint32_t len = 1; len <= max_deg; ++len) per_length.push_back(counts[len]);
    out["counts_by_length"] = std::move(per_length);
    out["total"] = necklaces.size();
    std::cout << out.dump(2) << "\n";
    return;
  }
  for (const auto& w : necklaces) std::cout << w.to_string() << "\n";
  for (std::uint32_t len = 1; len <= max_deg; ++len)
    std::cout << "length " << len << ": " << counts[len] << "\n";
  std::cout << "total: " << necklaces.size() << "\n";
}

void cmd_mul(std::optional<std::uint32_t> n, bool free_mode,
             std::optional<std::uint32_t> m_flag, const std::string& lhs_text,
             const std::string& rhs_text, bool oracle, bool json,
             const symten::Limits& limits) {
  if (free_mode == n.has_value())
    throw symten::input_error("pass exactly one of --n and --free");
  const std::uint32_t m = resolve_alphabet(m_flag, {lhs_text, rhs_text});
  const symten::Mode mode =
      free_mode ? symten::Mode::free() : symten::Mode::truncated(*n);

  const symten::SymElement lhs = symten::parse_sym_element(lhs_text, mode, m);
  const symten::SymElement rhs = symten::parse_sym_element(rhs_text, mode, m);
  const symten::SymElement product = symten::elem_mul(lhs, rhs);

  if (oracle) {
    if (free_mode)
      throw symten::input_error("--oracle requires truncated mode (--n)");
    symten::TensorElement lhs_t(*n, m), rhs_t(*n, m);
    for (const auto& [alpha, c] : lhs.terms())
      lhs_t += symten::orbit_expand(alpha, *n, limits) * c;
    for (const auto& [alpha, c] : rhs.terms())
      rhs_t += symten::orbit_expand(alpha, *n, limits) * c;
    const symten::SymElement checked =
        symten::project_to_basis(symten::tensor_mul(lhs_t, rhs_t, limits), limits);
    if (!(checked == product))
      throw MismatchError{"oracle disagrees with the product formula:\n  formula: " +
                          product.to_string() + "\n  oracle:  " + checked.to_string()};
  }

  if (json) {
    symten::Json out = symten::sym_element_to_json(product);
    if (oracle) out["oracle"] = "ok";
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << product.to_string() << "\n";
    if (oracle) std::cout << "oracle: ok\n";
  }
}

void cmd_expand(std::uint32_t n, std::optional<std::uint32_t> m_flag,
                const std::string& alpha_text, bool json, const symten::Limits& limits) {
  const std::uint32_t m = resolve_alphabet(m_flag, {alpha_text});
  const symten::ExponentMap alpha = symten::parse_exponent_map(alpha_text, m);
  const symten::TensorElement expanded = symten::orbit_expand(alpha, n, limits);
  if (json)
    std::cout << symten::tensor_element_to_json(expanded).dump(2) << "\n";
  else
    std::cout << expanded.to_string() << "\n";
}

void cmd_rewrite(std::optional<std::uint32_t> m_flag, const std::string& alpha_text,
                 bool json) {
  const std::uint32_t m = resolve_alphabet(m_flag, {alpha_text});
  const symten::ExponentMap alpha = symten::parse_exponent_map(alpha_text, m);
  const symten::AbelianPoly rewritten = symten::ab_rewrite(alpha);
  if (json)
    std::cout << symten::abelian_poly_to_json(rewritten).dump(2) << "\n";
  else
    std::cout << rewritten.to_string() << "\n";
}

void cmd_newton(std::uint32_t h, std::uint32_t k, bool json) {
  const symten::EPolynomial p = symten::plethysm_P(h, k);
  if (json)
    std::cout << symten::multipoly_to_json(p).dump(2) << "\n";
  else
    std::cout << p.to_string() << "\n";
}

void cmd_sigma(std::uint32_t n, std::optional<std::uint32_t> m_flag, std::uint32_t i,
               const std::string& word_text, bool json) {
  const std::uint32_t m = resolve_alphabet(m_flag, {word_text});
  const symten::Word w = symten::parse_word(word_text, m);
  if (w.empty()) throw symten::input_error("word must be nonempty");
  const symten::GenericContext ctx(n, m);
  const symten::MultiPoly value = symten::sigma(ctx, i, w);
  if (json)
    std::cout << symten::multipoly_to_json(value).dump(2) << "\n";
  else
    std::cout << value.to_string() << "\n";
}

// Exit 0 only when every graded piece agrees. The JSON form omits timings so
// that output bytes are reproducible across runs.
int cmd_verify_iso(std::uint32_t n, std::uint32_t m, std::uint32_t max_deg, bool json,
                   const symten::Limits& limits) {
  const symten::VerifyReport report = symten::run_verify_iso(n, m, max_deg, limits);
  if (json) {
    symten::Json out;
    out["n"] = report.n;
    out["m"] = report.m;
    out["max_deg"] = report.max_total_degree;
    symten::Json rows = symten::Json::array();
    for (const auto& row : report.rows) {
      symten::Json r;
      r["delta"] = row.delta.counts();
      r["dim_ts_ab"] = row.dim_ts_ab;
      r["dim_c_n"] = row.dim_c;
      r["dim_invariants"] = row.dim_invariants;
      r["agree"] = row.agree;
      rows.push_back(std::move(r));
    }
    out["rows"] = std::move(rows);
    out["verdict"] = report.verdict;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "delta        dim_TS_ab  dim_C_n  dim_inv  agree  ms\n";
    for (const auto& row : report.rows) {
      std::string delta = row.delta.to_string();
      delta.resize(13, ' ');
      std::string a = std::to_string(row.dim_ts_ab), b = std::to_string(row.dim_c),
                  c = std::to_string(row.dim_invariants);
      a.resize(11, ' ');
      b.resize(9, ' ');
      c.resize(9, ' ');
      std::cout << delta << a << b << c << (row.agree ? "yes    " : "NO     ")
                << row.wall_ms << "\n";
    }
    std::cout << "verdict: "
              << (report.verdict ? "agree on every graded piece" : "MISMATCH") << "\n";
  }
  return report.verdict ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "symten: exact symmetric tensors over free algebras and matrix invariants"};
  app.require_subcommand(1);
  app.footer(
      "Element grammar:  sums of q*e<i>[word] with rational q, e.g. \"2*e2[x1] + "
      "e1[x1.x1]\"\n"
      "Exponent maps:    {word:exp, ...}, e.g. \"{x2.x1:1}\"; {} is the identity\n"
      "Words:            generators joined by dots, e.g. x1.x2.x1\n"
      "Generators f[i;word] name the free commutative generators of the\n"
      "abelianization (word a canonical primitive necklace).\n"
      "Caps: SYMTEN_MAX_BASIS (default 5000) and SYMTEN_MAX_ROWS (default 20000)\n"
      "override the per-graded-piece basis and rank row limits.\n"
      "Exit codes: 0 ok, 1 mathematical mismatch, 2 invalid input, 3 resource cap.");

  std::uint64_t seed = 0; // reserved for randomized property suites
  app.add_option("--seed", seed, "seed for randomized property suites")
      ->capture_default_str();

  symten::Limits limits = symten::Limits::from_environment();

  // necklaces
  auto* necklaces = app.add_subcommand("necklaces", "aperiodic necklace representatives");
  std::uint32_t neck_m = 0, neck_deg = 0;
  bool neck_json = false;
  necklaces->add_option("--m", neck_m, "alphabet size")->required();
  necklaces->add_option("--max-deg", neck_deg, "maximal total degree")->required();
  necklaces->add_flag("--json", neck_json, "machine-readable output");

  // mul
  auto* mul = app.add_subcommand("mul", "product of two elements (Product Formula)");
  std::optional<std::uint32_t> mul_n, mul_m;
  bool mul_free = false, mul_oracle = false, mul_json = false;
  std::string mul_lhs, mul_rhs;
  mul->add_option("--n", mul_n, "truncation order");
  mul->add_flag("--free", mul_free, "work in the free object");
  mul->add_option("--m", mul_m, "alphabet size (default: inferred)");
  mul->add_option("--lhs", mul_lhs, "left element")->required();
  mul->add_option("--rhs", mul_rhs, "right element")->required();
  mul->add_flag("--oracle", mul_oracle, "check against the brute-force tensor model");
  mul->add_flag("--json", mul_json, "machine-readable output");

  // expand
  auto* expand = app.add_subcommand("expand", "orbit sum as an explicit tensor");
  std::uint32_t expand_n = 0;
  std::optional<std::uint32_t> expand_m;
  std::string expand_alpha;
  bool expand_json = false;
  expand->add_option("--n", expand_n, "tensor order")->required();
  expand->add_option("--m", expand_m, "alphabet size (default: inferred)");
  expand->add_option("--alpha", expand_alpha, "exponent map, e.g. {x1:2,x2:1}")
      ->required();
  expand->add_flag("--json", expand_json, "machine-readable output");

  // rewrite
  auto* rewrite =
      app.add_subcommand("rewrite", "abelianized element in the free generators");
  std::optional<std::uint32_t> rewrite_m;
  std::string rewrite_alpha;
  bool rewrite_json = false;
  rewrite->add_option("--m", rewrite_m, "alphabet size (default: inferred)");
  rewrite->add_option("--alpha", rewrite_alpha, "exponent map")->required();
  rewrite->add_flag("--json", rewrite_json, "machine-readable output");

  // newton
  auto* newton =
      app.add_subcommand("newton", "P_{h,k} = e_h at k-th powers, in the E basis");
  newton->set_help_flag("--help", "print help"); // frees -h for the --h option
  std::uint32_t newton_h = 0, newton_k = 0;
  bool newton_json = false;
  newton->add_option("--h", newton_h, "elementary index")->required();
  newton->add_option("--k", newton_k, "power (h=1 gives the Newton power sums)")
      ->required();
  newton->add_flag("--json", newton_json, "machine-readable output");

  // sigma
  auto* sigma_cmd =
      app.add_subcommand("sigma", "characteristic coefficient of a word in generic matrices");
  std::uint32_t sigma_n = 0, sigma_i = 0;
  std::optional<std::uint32_t> sigma_m;
  std::string sigma_word;
  bool sigma_json = false;
  sigma_cmd->add_option("--n", sigma_n, "matrix size")->required();
  sigma_cmd->add_option("--m", sigma_m, "number of matrices (default: inferred)");
  sigma_cmd->add_option("--i", sigma_i, "coefficient index, 1..n")->required();
  sigma_cmd->add_option("--word", sigma_word, "word, e.g. x1.x2")->required();
  sigma_cmd->add_flag("--json", sigma_json, "machine-readable output");

  // verify-iso
  auto* verify = app.add_subcommand(
      "verify-iso", "compare the three graded dimension pipelines piece by piece");
  std::uint32_t verify_n = 0, verify_m = 0, verify_deg = 0;
  bool verify_json = false;
  verify->add_option("--n", verify_n, "matrix size / truncation order")->required();
  verify->add_option("--m", verify_m, "number of generators / matrices")->required();
  verify->add_option("--max-deg", verify_deg, "maximal total degree")->required();
  verify->add_flag("--json", verify_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*necklaces) {
      if (neck_m < 1 || neck_deg < 1)
        throw symten::input_error("--m and --max-deg must be >= 1");
      cmd_necklaces(neck_m, neck_deg, neck_json);
    } else if (*mul) {
      cmd_mul(mul_n, mul_free, mul_m, mul_lhs, mul_rhs, mul_oracle, mul_json, limits);
    } else if (*expand) {
      cmd_expand(expand_n, expand_m, expand_alpha, expand_json, limits);
    } else if (*rewrite) {
      cmd_rewrite(rewrite_m, rewrite_alpha, rewrite_json);
    } else if (*newton) {
      cmd_newton(newton_h, newton_k, newton_json);
    } else if (*sigma_cmd) {
      cmd_sigma(sigma_n, sigma_m, sigma_i, sigma_word, sigma_json);
    } else if (*verify) {
      return cmd_verify_iso(verify_n, verify_m, verify_deg, verify_json, limits);
    }
  } catch (const symten::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const symten::resource_error& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResource;
  } catch (const MismatchError& e) {
    std::cerr << "mismatch: " << e.message << "\n";
    return kExitMismatch;
  }
  return kExitOk;
}
