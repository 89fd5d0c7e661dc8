#include "xprod/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include "xprod/error.hpp"
#include "xprod/products.hpp"
#include "xprod/table.hpp"
#include "xprod/verify.hpp"

namespace xprod::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  bool exact = false;
  bool floating = false;
  std::string output;

  int table_k = 0;
  std::string format = "md";

  std::size_t n = 0;
  int k = 0;
  std::string u, v;
  std::vector<std::string> rows;
  std::string product = "table";

  std::size_t samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
  std::string axioms = "all";

  int counter_k = 3;
  int max_k = 6;
};

ScalarMode mode_of(const Options& o) {
  return o.floating ? ScalarMode::kFloat : ScalarMode::kExact;
}

void require_exact(const Options& o, const char* command) {
  if (o.floating) {
    throw UsageError(std::string(command) + " always evaluates exactly; drop --float");
  }
}

int level_for_dim(std::size_t n) {
  for (int k = 1; k <= kMaxLevel; ++k) {
    if (basis_size(k) == n) return k;
  }
  throw UsageError("no table level has dimension " + std::to_string(n) +
                   " (expected 2^(k+1)-1)");
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string run_table(const Options& o) {
  const MulTable t = build_table(o.table_k);
  if (o.format == "csv") return table_to_csv(t);
  if (o.format == "json") return table_to_json(t);
  return table_to_markdown(t);
}

std::string run_cross(Options o) {
  if (o.n == 0 && o.k != 0 && o.product == "table") o.n = basis_size(o.k);
  if (o.n == 0) throw UsageError("cross needs --n");
  if (o.k != 0 && o.product == "table" && basis_size(o.k) != o.n) {
    throw UsageError("--n does not match --k");
  }
  const ScalarMode mode = mode_of(o);
  const Vector u = Vector::parse(o.u, mode, o.n);
  const Vector v = Vector::parse(o.v, mode, o.n);
  Vector result;
  if (o.product == "cross3") {
    result = cross3(u, v);
  } else if (o.product == "cross7") {
    result = cross7(u, v);
  } else if (o.product == "padded") {
    result = padded_cross(u, v);
  } else if (o.product == "det") {
    std::vector<Vector> rows{u, v};
    for (const auto& r : o.rows) rows.push_back(Vector::parse(r, mode, o.n));
    result = det_product(rows);
  } else {
    const int k = o.k != 0 ? o.k : level_for_dim(o.n);
    const MulTable t = build_table(k);
    result = table_product(t, u, v);
  }
  return result.to_string() + "\n";
}

ProductUnderTest product_for(const Options& o, std::string& family, int& level) {
  family = o.product;
  level = 0;
  if (o.product == "cross3") return ProductUnderTest::cross3();
  if (o.product == "cross7") return ProductUnderTest::cross7();
  if (o.product == "det") {
    if (o.n != 0 && o.n != 3) throw UsageError("det is a binary product only for n = 3");
    return ProductUnderTest::det3();
  }
  if (o.product == "padded") {
    if (o.n < 3) throw UsageError("padded needs --n >= 3");
    return ProductUnderTest::padded(o.n);
  }
  level = o.k != 0 ? o.k : (o.n != 0 ? level_for_dim(o.n) : 0);
  if (level == 0) throw UsageError("table product needs --k or --n");
  if (o.n != 0 && basis_size(level) != o.n) throw UsageError("--n does not match --k");
  return ProductUnderTest::table(level);
}

std::vector<Axiom> axioms_for(const Options& o, bool is_table) {
  std::vector<Axiom> out;
  std::stringstream list(o.axioms);
  std::string item;
  while (std::getline(list, item, ',')) {
    if (item == "all") {
      out.insert(out.end(), std::begin(kAllAxioms), std::end(kAllAxioms));
      if (is_table) out.push_back(Axiom::kOrthonormalClosure);
    } else if (item == "identities") {
      out.insert(out.end(), std::begin(kIdentities), std::end(kIdentities));
    } else if (auto a = parse_axiom(item)) {
      if (*a == Axiom::kOrthonormalClosure && !is_table) {
        throw UsageError("orthonormal-closure applies to table products only");
      }
      out.push_back(*a);
    } else {
      throw UsageError("unknown axiom '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("no axioms selected");
  return out;
}

int run_verify(const Options& o, std::string& text, std::ostream& err) {
  require_exact(o, "verify");
  std::string family;
  int level = 0;
  const ProductUnderTest p = product_for(o, family, level);
  std::vector<AxiomReport> reports;
  int status = kOk;
  for (Axiom a : axioms_for(o, p.mul_table() != nullptr)) {
    AxiomReport r = check_axiom(p, a, o.samples, o.seed);
    const auto expected = expected_verdict(family, p.dim(), level, a);
    if (expected && *expected != r.verdict) {
      err << "unexpected verdict: " << p.name() << " " << to_string(a) << " "
          << to_string(r.verdict) << " (expected " << to_string(*expected) << ")\n";
      status = kUnexpectedVerdict;
    }
    reports.push_back(std::move(r));
  }
  text = reports_to_json(reports);
  return status;
}

int run_counterexample(const Options& o, std::string& text) {
  require_exact(o, "counterexample");
  if (o.counter_k < 3) {
    throw UsageError("the counterexample is built from u_0..u_3, so it needs k >= 3");
  }
  const auto [u, v] = counterexample_vectors(o.counter_k);
  const MulTable t = build_table(o.counter_k);
  const Vector uv = table_product(t, u, v);
  const Rational uu = dot(u, u).exact();
  const Rational vv = dot(v, v).exact();
  const Rational udv = dot(u, v).exact();
  const Rational norms = uu * vv;
  const Rational composed = dot(uv, uv).exact() + udv * udv;

  std::ostringstream s;
  s << "k = " << o.counter_k << ", n = " << t.n() << "\n"
    << "u = (u₀×u₁) + (u₁×u₃) = e₃ + e₁₀\n"
    << "v = (u₁×u₂) − (((u₀×u₁)×u₂)×u₃) = e₆ − e₁₅\n"
    << "u = " << u.to_string() << "\n"
    << "v = " << v.to_string() << "\n"
    << "u×v = " << uv.to_string() << "\n"
    << "u·v = " << format_rational(udv) << "\n"
    << "u·u = " << format_rational(uu) << "\n"
    << "v·v = " << format_rational(vv) << "\n"
    << "LHS (u·u)(v·v) = " << format_rational(norms) << "\n"
    << "RHS (u×v)·(u×v) + (u·v)² = " << format_rational(composed) << "\n";
  const bool fails = norms != composed;
  s << (fails ? "Pythagorean fails" : "Pythagorean holds") << "\n";
  text = s.str();
  return fails ? kOk : kUnexpectedVerdict;
}

int run_classify(const Options& o, std::string& text) {
  require_exact(o, "classify");
  const auto verdicts = classify_dimensions(o.max_k, o.samples, o.seed);
  std::ostringstream s;
  s << pad("k", 4) << pad("n", 7) << pad("pythagorean", 23) << "witness\n";
  int status = kOk;
  for (const auto& d : verdicts) {
    s << pad(std::to_string(d.k), 4) << pad(std::to_string(d.n), 7)
      << pad(std::string(to_string(d.report.verdict)), 23);
    if (d.witness) {
      s << "u=" << d.witness->vector("u")->to_string()
        << " v=" << d.witness->vector("v")->to_string()
        << " lhs=" << to_string(d.witness->lhs) << " rhs=" << to_string(d.witness->rhs);
    } else {
      s << "-";
    }
    s << "\n";
    if (d.pythagorean_refuted != (d.k >= 3)) status = kUnexpectedVerdict;
  }
  s << "cross product exists for n =";
  const auto survivors = surviving_dimensions(verdicts);
  for (std::size_t i = 0; i < survivors.size(); ++i) {
    s << (i ? ", " : " ") << survivors[i];
  }
  s << " (n = 0 and 1 by the zero map)\n";
  text = s.str();
  return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Cross products on R^n: tables, evaluation and axiom checks", "xprod"};
  app.fallthrough();
  app.require_subcommand(1);
  auto* exact_flag = app.add_flag("--exact", o.exact, "Exact rational arithmetic (default)");
  app.add_flag("--float", o.floating, "Double-precision evaluation")->excludes(exact_flag);
  app.add_option("--output", o.output, "Write output to this file");

  auto* table = app.add_subcommand("table", "Print the multiplication table of S_k");
  table->add_option("--k", o.table_k, "Level, n = 2^(k+1)-1")
      ->required()
      ->check(CLI::Range(1, kMaxLevel));
  table->add_option("--format", o.format, "md, csv or json")
      ->check(CLI::IsMember({"md", "csv", "json"}));

  const auto products = CLI::IsMember({"table", "cross3", "cross7", "padded", "det"});

  auto* cross = app.add_subcommand("cross", "Evaluate a product of two vectors");
  cross->add_option("--n", o.n, "Dimension (defaults from --k for tables)");
  cross->add_option("--k", o.k, "Table level (defaults from --n)")
      ->check(CLI::Range(1, kMaxLevel));
  cross->add_option("--u", o.u, "First vector, e.g. 1,-2/3,0 or e2")->required();
  cross->add_option("--v", o.v, "Second vector")->required();
  cross->add_option("--row", o.rows, "Further rows for the determinant product");
  cross->add_option("--product", o.product, "table, cross3, cross7, padded or det")
      ->check(products);

  auto* verify = app.add_subcommand("verify", "Check axioms on a product");
  verify->add_option("--n", o.n, "Dimension");
  verify->add_option("--k", o.k, "Table level")->check(CLI::Range(1, kMaxLevel));
  verify->add_option("--product", o.product, "table, cross3, cross7, padded or det")
      ->check(products);
  verify->add_option("--samples", o.samples, "Random samples per axiom")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));
  verify->add_option("--seed", o.seed, "Sampler seed");
  verify->add_option("--axioms", o.axioms,
                     "Comma-separated axioms, 'identities' or 'all'");

  auto* counter = app.add_subcommand("counterexample",
                                     "Show the pair refuting the Pythagorean property");
  counter->add_option("--k", o.counter_k, "Level >= 3")->check(CLI::Range(0, kMaxLevel));

  auto* classify = app.add_subcommand("classify", "Pythagorean verdict for each level");
  classify->add_option("--max-k", o.max_k, "Highest level, 1..6")->check(CLI::Range(1, 6));
  classify->add_option("--samples", o.samples, "Random samples per level")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));
  classify->add_option("--seed", o.seed, "Sampler seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::string text;
  int status = kOk;
  try {
    if (table->parsed()) {
      text = run_table(o);
    } else if (cross->parsed()) {
      text = run_cross(o);
    } else if (verify->parsed()) {
      status = run_verify(o, text, err);
    } else if (counter->parsed()) {
      status = run_counterexample(o, text);
    } else {
      status = run_classify(o, text);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!(file << text)) {
      err << "error: cannot write " << o.output << "\n";
      return kUsage;
    }
  }
  return status;
}

}  // namespace xprod::cli
