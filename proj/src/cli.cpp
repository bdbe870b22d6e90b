#include "lange/cli.hpp"

#include "lange/atiyah.hpp"
#include "lange/gluing.hpp"
#include "lange/report.hpp"
#include "lange/splitting.hpp"
#include "lange/strata.hpp"
#include "lange/subbundle.hpp"

#include "CLI11.hpp"

#include <functional>
#include <optional>
#include <random>
#include <sstream>

namespace lange::cli {
namespace {

using report::cell;
using report::Table;

struct Options {
  std::string format = "md";
  std::uint64_t seed = 0;
  std::uint64_t prime = 10007;
  Int trials = 200;

  Int g = 0, n = 0, d = 0, nprime = 0, dprime = 0;
  std::optional<Int> s;
  Int src_n = 1, src_d = 0;
  std::string twist = "generic";
  Int dg = 0, d1 = 0, elliptic_degree = 0;
  std::uint64_t field = 2;
  std::string phi;
};

std::string parts_text(const std::vector<Part>& parts) {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    os << (i ? "+" : "") << "(" << parts[i].rank << "," << parts[i].degree << ")";
  }
  return os.str();
}

std::string matrix_text(const fp::Matrix& m) {
  std::ostringstream os;
  for (fp::Index i = 0; i < m.rows(); ++i) {
    if (i) os << ";";
    for (fp::Index j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
  }
  return os.str();
}

fp::Matrix parse_matrix(const std::string& text, Int n, std::uint64_t p) {
  std::vector<std::vector<Int>> rows;
  std::stringstream row_stream(text);
  std::string row;
  while (std::getline(row_stream, row, ';')) {
    std::vector<Int> values;
    std::stringstream entry_stream(row);
    std::string entry;
    while (std::getline(entry_stream, entry, ',')) {
      std::size_t used = 0;
      Int v = 0;
      try {
        v = std::stoll(entry, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0) throw std::invalid_argument("bad matrix entry '" + entry + "'");
      values.push_back(v);
    }
    rows.push_back(std::move(values));
  }
  if (static_cast<Int>(rows.size()) != n) throw std::invalid_argument("--phi must have n rows");
  fp::Matrix m(n, n);
  for (Int i = 0; i < n; ++i) {
    if (static_cast<Int>(rows[static_cast<std::size_t>(i)].size()) != n) {
      throw std::invalid_argument("--phi must have n columns in every row");
    }
    for (Int j = 0; j < n; ++j) {
      const Int v = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      m(i, j) = static_cast<fp::Scalar>(v - static_cast<Int>(p) * floor_div(v, static_cast<Int>(p)));
    }
  }
  return m;
}

Table strata(const Options& o) {
  Table t{"strata",
          {"g", "n", "d", "nprime", "s", "dprime", "status", "expected_dim", "expected_dim_capped",
           "full", "boundary", "dim_A", "regime_note"},
          {}};
  const auto rows = o.s ? std::vector<StratumReport>{classify_stratum(o.g, o.n, o.d, o.nprime, *o.s)}
                        : strata_table(o.g, o.n, o.d, o.nprime);
  for (const auto& r : rows) {
    t.add_row({cell(r.g), cell(r.n), cell(r.d), cell(r.nprime), cell(r.s), cell(r.dprime),
               cell(to_string(r.status)), cell(r.expected_dim), cell(r.expected_dim_capped),
               cell(r.full), cell(r.boundary), cell(r.dim_A_generic), cell(r.regime_note)});
  }
  return t;
}

Table hom(const Options& o) {
  TwistClass target_twist = TwistClass::generic("L");
  TwistClass source_twist;
  if (o.twist == "same") {
    source_twist = target_twist;
  } else if (o.twist == "generic") {
    source_twist = TwistClass::generic("L1");
  } else {
    throw std::invalid_argument("--twist must be 'generic' or 'same'");
  }
  const IndecomposableBundle source(o.src_n, o.src_d, source_twist);
  const IndecomposableBundle target(o.n, o.d, target_twist);
  const RankDegree hb = tensor_invariants(dual(source), target);

  Table t{"hom",
          {"source", "target", "delta", "hom_dim", "hom_slope", "hom_rank", "hom_degree",
           "h0_source", "h0_target", "target_generically_generated"},
          {}};
  t.add_row({cell(source.to_string()), cell(target.to_string()), cell(hom_delta(source, target)),
             cell(hom_dim(source, target)), cell(hom_slope(source, target)), cell(hb.rank),
             cell(hb.degree), cell(h0(source)), cell(h0(target)),
             cell(generically_globally_generated(target))});
  return t;
}

Table splittings(const Options& o) {
  Table t{"splittings",
          {"parts", "k", "eps", "dim_X", "rk_Hom", "h0_end", "balanced", "lhs", "rhs", "equality"},
          {}};
  for (const auto& st : enumerate_types(o.n, o.d, o.nprime, o.dprime)) {
    const BoundCheck b = type_bound_check(st, o.n, o.d, o.nprime, o.dprime);
    std::string eps;
    for (std::size_t i = 0; i < st.eps.size(); ++i) eps += std::string(i ? "," : "") + (st.eps[i] ? "1" : "0");
    t.add_row({cell(parts_text(st.parts)), cell(st.k()), cell(eps), cell(st.dim_X), cell(st.rk_Hom),
               cell(st.h0_end), cell(st.balanced), cell(b.lhs), cell(b.rhs), cell(b.equality)});
  }
  return t;
}

Table regimes(const Options& o) {
  const RegimeDescriptor r = regime(o.n, o.d, o.nprime, o.dprime);
  Table t{"regimes",
          {"n", "d", "nprime", "dprime", "s1", "c", "dim_A", "finite_fibers_piP", "surjective_piP",
           "finite_fibers_piPQ", "surjective_piPQ", "fiber_dim_piP", "image_dim_piP", "subbundle_count"},
          {}};
  t.add_row({cell(o.n), cell(o.d), cell(o.nprime), cell(o.dprime), cell(r.s1), cell(r.c),
             cell(dim_A(o.n, o.d, o.nprime, o.dprime)), cell(r.finite_fibers_piP), cell(r.surjective_piP),
             cell(r.finite_fibers_piPQ), cell(r.surjective_piPQ), cell(r.fiber_dim_piP),
             cell(r.image_dim_piP), cell(equal_slope_subbundle_count(o.n, o.d, o.nprime, o.dprime))});
  return t;
}

Table quotient(const Options& o) {
  const QuotientProfile q = quotient_profile(o.n, o.d, o.nprime, o.dprime);
  Table t{"quotient", {"rank", "degree", "slope", "equal_slope_summands"}, {}};
  t.add_row({cell(q.rank), cell(q.degree), cell(q.slope), cell(q.equal_slope_summands)});
  return t;
}

Table ext_dim(const Options& o) {
  const Int s = segre(o.n, o.d, o.nprime, o.dprime);
  std::optional<Int> expected;
  std::optional<Int> lhs;
  std::optional<Int> rhs;
  if (o.g >= 2) {
    expected = expected_dim(o.g, o.n, s, o.nprime);
    const CountIdentity id = extension_count_identity(o.g, o.n, s, o.nprime);
    lhs = id.lhs;
    rhs = id.rhs;
  }
  Table t{"ext-dim",
          {"g", "n", "d", "nprime", "dprime", "s", "ext_space_rank", "expected_dim", "moduli_dim",
           "identity_lhs", "identity_rhs"},
          {}};
  t.add_row({cell(o.g), cell(o.n), cell(o.d), cell(o.nprime), cell(o.dprime), cell(s),
             cell(ext_space_rank(o.g, o.n, o.d, o.nprime, o.dprime)), cell(expected),
             cell(moduli_dim(o.g, o.n)), cell(lhs), cell(rhs)});
  return t;
}

Table ledger(const Options& o) {
  if (!o.s) throw std::invalid_argument("ledger needs --s");
  const LedgerRecord r = degeneration_ledger(o.g, o.n, o.d, o.nprime, *o.s, o.dg, o.d1, o.elliptic_degree);
  Table t{"ledger",
          {"g", "n", "d", "nprime", "s", "dprime", "dg", "d1", "elliptic_degree", "s_g", "a_g",
           "image_g", "s_1", "a_1", "dim_X", "dim_Is", "excess", "verdict"},
          {}};
  t.add_row({cell(r.g), cell(r.n), cell(r.d), cell(r.nprime), cell(r.s), cell(r.dprime), cell(r.dg),
             cell(r.d1), cell(r.elliptic_degree), cell(r.s_g), cell(r.a_g), cell(r.image_g), cell(r.s_1),
             cell(r.a_1), cell(r.dim_X), cell(r.dim_Is), cell(r.excess), cell(to_string(r.verdict))});
  return t;
}

Table verify_gluing(const Options& o) {
  constexpr int kMaxAttempts = 64;
  const Int expected = o.n * o.n - o.nprime * (o.n - o.nprime);
  std::optional<Int> dim;
  std::uint64_t used_seed = o.seed;
  int attempts = 0;
  for (; attempts < kMaxAttempts && !dim; ++attempts) {
    used_seed = o.seed + static_cast<std::uint64_t>(attempts);
    try {
      dim = incidence_dim(random_instance(o.prime, o.n, o.nprime, used_seed));
    } catch (const DegenerateInstance&) {
    }
  }
  if (!dim) throw std::logic_error("no non-degenerate incidence instance found");
  const Rational rate = invertibility_rate(o.prime, o.n, o.nprime, o.trials, used_seed);

  Table t{"verify-gluing",
          {"p", "n", "nprime", "seed", "attempts", "incidence_dim", "expected", "trials",
           "invertibility_rate", "status"},
          {}};
  t.add_row({cell(static_cast<Int>(o.prime)), cell(o.n), cell(o.nprime), cell(static_cast<Int>(used_seed)),
             cell(static_cast<Int>(attempts)), cell(*dim), cell(expected), cell(o.trials), cell(rate),
             cell(*dim == expected ? "PASS" : "FAIL")});
  return t;
}

Table graph(const Options& o) {
  if (!(0 < o.nprime && o.nprime < o.n)) throw std::invalid_argument("need 0 < nprime < n");
  if (o.field != 2 && o.field != 3) throw std::invalid_argument("--p must be 2 or 3");
  if (o.n > 4) throw std::invalid_argument("graph-count needs n <= 4");
  fp::Matrix phi;
  if (!o.phi.empty()) {
    phi = parse_matrix(o.phi, o.n, o.field);
  } else {
    std::mt19937_64 rng(o.seed);
    do {
      phi = fp::random_matrix(o.n, o.n, o.field, rng);
    } while (fp::rank(phi, o.field) != o.n);
  }
  const Int count = graph_count(o.field, o.n, o.nprime, phi);
  const Int expected = gaussian_binomial(o.n, o.nprime, static_cast<Int>(o.field));
  Table t{"graph-count", {"p", "n", "nprime", "phi", "count", "gaussian_binomial", "status"}, {}};
  t.add_row({cell(static_cast<Int>(o.field)), cell(o.n), cell(o.nprime), cell(matrix_text(phi)), cell(count),
             cell(expected), cell(count == expected ? "PASS" : "FAIL")});
  return t;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact numerics for subbundles of vector bundles on curves", "lange"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format: json, csv or md")
      ->check(CLI::IsMember({"json", "csv", "md", "markdown"}));
  app.add_option("--seed", o.seed, "Random seed");
  app.add_option("--prime", o.prime, "Prime modulus for verify-gluing");
  app.add_option("--trials", o.trials, "Invertibility trials for verify-gluing")->check(CLI::PositiveNumber);

  std::function<Table(const Options&)> action;
  auto sub = [&](const std::string& name, const std::string& help, Table (*fn)(const Options&)) {
    CLI::App* s = app.add_subcommand(name, help);
    s->callback([&action, fn] { action = fn; });
    return s;
  };

  CLI::App* s_strata = sub("strata", "Stratification table for genus g >= 2", strata);
  s_strata->add_option("--g", o.g)->required();
  s_strata->add_option("--n", o.n)->required();
  s_strata->add_option("--d", o.d)->required();
  s_strata->add_option("--nprime", o.nprime)->required();
  s_strata->add_option("--s", o.s, "Classify a single value of s");

  CLI::App* s_hom = sub("hom", "Hom dimension between indecomposables on an elliptic curve", hom);
  s_hom->add_option("--n", o.n, "Target rank")->required();
  s_hom->add_option("--d", o.d, "Target degree")->required();
  s_hom->add_option("--src-n", o.src_n, "Source rank")->required();
  s_hom->add_option("--src-d", o.src_d, "Source degree")->required();
  s_hom->add_option("--twist", o.twist, "Source twist relative to target: generic or same");

  auto elliptic = [&](const std::string& name, const std::string& help, Table (*fn)(const Options&)) {
    CLI::App* s = sub(name, help, fn);
    s->add_option("--n", o.n)->required();
    s->add_option("--d", o.d)->required();
    s->add_option("--nprime", o.nprime)->required();
    s->add_option("--dprime", o.dprime)->required();
    return s;
  };
  elliptic("splittings", "Decomposition types of a subbundle and the dimension bound", splittings);
  elliptic("regimes", "Evaluation-map regimes of the subbundle variety", regimes);
  elliptic("quotient", "Quotient profile of a generic subbundle", quotient);
  CLI::App* s_ext = elliptic("ext-dim", "Extension-space rank and expected dimension", ext_dim);
  s_ext->add_option("--g", o.g)->required();

  CLI::App* s_ledger = sub("ledger", "Gluing dimension ledger for a genus-g curve with an elliptic tail", ledger);
  s_ledger->add_option("--g", o.g)->required();
  s_ledger->add_option("--n", o.n)->required();
  s_ledger->add_option("--d", o.d)->required();
  s_ledger->add_option("--nprime", o.nprime)->required();
  s_ledger->add_option("--s", o.s)->required();
  s_ledger->add_option("--dg", o.dg, "Subbundle degree on the genus-g side")->required();
  s_ledger->add_option("--d1", o.d1, "Subbundle degree on the elliptic side")->required();
  s_ledger->add_option("--elliptic-degree", o.elliptic_degree, "Degree of the bundle on the elliptic side");

  CLI::App* s_verify = sub("verify-gluing", "Certify the incidence dimension over F_p", verify_gluing);
  s_verify->add_option("--n", o.n)->required();
  s_verify->add_option("--nprime", o.nprime)->required();

  CLI::App* s_graph = sub("graph-count", "Count graph pairs (V', phi V') over F_2 or F_3", graph);
  s_graph->add_option("--n", o.n)->required();
  s_graph->add_option("--nprime", o.nprime)->required();
  s_graph->add_option("--p", o.field, "Field size (2 or 3)");
  s_graph->add_option("--phi", o.phi, "Invertible matrix as rows 'a,b;c,d'; random if omitted");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (!fp::is_prime(o.prime) || o.prime >= (std::uint64_t{1} << 32)) {
      throw std::invalid_argument("--prime must be a prime below 2^32");
    }
    const report::Format format = report::parse_format(o.format);
    std::ostringstream buffer;
    report::render(action(o), format, buffer);
    out << buffer.str();
    return 0;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace lange::cli
