#include "brieskorn/cli.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "brieskorn/errors.hpp"
#include "brieskorn/oracle.hpp"
#include "brieskorn/parse.hpp"

namespace brieskorn {

namespace {

using nlohmann::json;

class MismatchFound : public Error {
 public:
  using Error::Error;
};

struct Input {
  std::string text;
  OrderingSpec ord;
  SparsePoly f;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Input read_input(const RunConfig& config, const std::string& text) {
  Input in;
  in.text = text;
  std::vector<std::string> vars = config.vars;
  if (vars.empty()) {
    vars = scan_variables(text);
    std::sort(vars.begin(), vars.end());
  }
  if (vars.empty()) throw Error("polynomial has no variables");
  std::vector<Rational> weights;
  if (config.weights.empty()) {
    weights.assign(vars.size(), Rational(-1));
  } else {
    for (const auto& w : config.weights) weights.push_back(parse_rational(w));
  }
  in.ord = OrderingSpec(vars, weights, {}, {}, config.tie_break);
  in.f = parse_poly(text, in.ord);
  return in;
}

FamilyData family_of(const RunConfig& config, const Input& in) {
  FamilyOverrides overrides;
  if (config.deg_s) overrides.s_weights = std::vector<Rational>{parse_rational(*config.deg_s)};
  return build_family(in.f, in.ord, overrides);
}

std::uint64_t resolve_trunc(const RunConfig& config, const FamilyData& fam, std::string& diag) {
  if (config.trunc == "full") {
    const std::uint64_t k0 = 2 * (fam.mu() + fam.num_x() - 1);
    diag += "warning: --trunc full uses the a priori bound K0 = 2(mu+n-1) = " +
            std::to_string(k0) + ", which is useless in practice for all but tiny examples\n";
    return k0;
  }
  std::size_t used = 0;
  long long n = 0;
  try {
    n = std::stoll(config.trunc, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != config.trunc.size() || n < 1) {
    throw Error("--trunc must be a positive integer or 'full', got '" + config.trunc + "'");
  }
  return static_cast<std::uint64_t>(n);
}

std::optional<std::vector<Monomial>> resolve_basis_order(const RunConfig& config,
                                                         const OrderingSpec& ord) {
  if (!config.basis_order) return std::nullopt;
  std::vector<std::string> names;
  if (auto named = named_basis_order(*config.basis_order)) {
    names = *named;
  } else {
    names = split_list(*config.basis_order);
  }
  std::vector<Monomial> out;
  for (const auto& n : names) {
    Monomial m = parse_monomial(n, ord.x_vars());
    out.emplace_back(Exponents(1, 0), m.x);
  }
  return out;
}

json poly_json(const SparsePoly& p, const OrderingSpec& ord) { return to_string(p, ord); }

std::vector<std::string> monomial_names(const std::vector<Monomial>& basis,
                                        const OrderingSpec& ord) {
  std::vector<std::string> out;
  for (const auto& m : basis) out.push_back(to_string(Monomial(Exponents{}, m.x), ord));
  return out;
}

json base_document(const RunConfig& config, const Input& in) {
  json doc;
  doc["subcommand"] = config.subcommand;
  doc["poly"] = in.text;
  doc["vars"] = in.ord.x_vars();
  json w = json::array();
  for (const auto& x : in.ord.x_weights()) w.push_back(to_string(x));
  doc["weights"] = w;
  return doc;
}

json rational_matrix_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::string render_text(const json& doc) {
  std::ostringstream out;
  for (const auto& [key, value] : doc.items()) {
    if (key == "coefficients") continue;
    if (key == "entries") {
      out << "entries:\n";
      const std::size_t mu = doc.at("basis").size();
      for (std::size_t i = 1; i <= mu; ++i) {
        for (std::size_t j = 1; j <= mu; ++j) {
          const std::string pos = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
          const auto& e = value.at(pos).get_ref<const std::string&>();
          if (e != "0") out << "  " << pos << " = " << e << "\n";
        }
      }
    } else if (value.is_array() && !value.empty() && value[0].is_array()) {
      out << key << ":\n";
      for (const auto& row : value) {
        out << " ";
        for (const auto& e : row) out << " " << (e.is_string() ? e.get<std::string>() : e.dump());
        out << "\n";
      }
    } else if (value.is_string()) {
      out << key << ": " << value.get<std::string>() << "\n";
    } else {
      out << key << ": " << value.dump() << "\n";
    }
  }
  return out.str();
}

json run_milnor(const RunConfig& config, const Input& in) {
  json doc = base_document(config, in);
  doc["mu"] = milnor_number(in.f, in.ord);
  return doc;
}

json run_stdbasis(const RunConfig& config, const Input& in) {
  require_critical_point(in.f);
  auto df = jacobian(in.f, in.ord.num_x());
  auto sb = standard_basis_with_transform(df, in.ord);
  json doc = base_document(config, in);
  json g = json::array(), lead = json::array(), u = json::array();
  for (std::size_t k = 0; k < sb.size(); ++k) {
    g.push_back(poly_json(sb.g[k], in.ord));
    lead.push_back(to_string(sb.staircase[k], in.ord));
  }
  for (const auto& row : sb.U) {
    json r = json::array();
    for (const auto& e : row) r.push_back(poly_json(e, in.ord));
    u.push_back(r);
  }
  doc["generators"] = json::array();
  for (const auto& fi : df) doc["generators"].push_back(poly_json(fi, in.ord));
  doc["g"] = g;
  doc["U"] = u;
  doc["staircase"] = lead;
  return doc;
}

json run_basis(const RunConfig& config, const Input& in) {
  require_critical_point(in.f);
  auto df = jacobian(in.f, in.ord.num_x());
  auto sb = standard_basis_with_transform(df, in.ord);
  auto milnor = monomial_basis(sb, in.ord);
  json doc = base_document(config, in);
  doc["mu"] = milnor.mu;
  doc["basis"] = monomial_names(milnor.m, in.ord);
  return doc;
}

json matrix_document(const RunConfig& config, const Input& in, const FamilyData& fam,
                     const LatticeMatrix& a) {
  json doc = base_document(config, in);
  doc["deg_s"] = to_string(fam.ord.s_weights()[0]);
  doc["mu"] = a.size();
  doc.update(matrix_to_json(a, in.ord));
  if (config.saito) {
    auto [a0, a1] = saito_truncation(a);
    doc["A0"] = rational_matrix_json(a0);
    doc["A1"] = rational_matrix_json(a1);
  }
  return doc;
}

json run_matrix(const RunConfig& config, const Input& in, std::string& diag) {
  FamilyData fam = family_of(config, in);
  const std::uint64_t trunc = resolve_trunc(config, fam, diag);
  LatticeMatrix a = lattice_matrix(fam, trunc, resolve_basis_order(config, in.ord));
  return matrix_document(config, in, fam, a);
}

json run_oracle(const RunConfig& config, const Input& in, std::string& diag) {
  FamilyData fam = family_of(config, in);
  const std::uint64_t trunc = resolve_trunc(config, fam, diag);
  LatticeMatrix a = oracle_matrix(in.f, in.ord, trunc);
  if (auto order = resolve_basis_order(config, in.ord)) a = permute(a, *order);
  return matrix_document(config, in, fam, a);
}

json run_relations(const RunConfig& config, const Input& in) {
  FamilyData fam = family_of(config, in);
  json doc = base_document(config, in);
  doc["K"] = config.level;
  json rel = json::array();
  for (const auto& r : relations(fam, config.level)) rel.push_back(poly_json(r, fam.ord));
  doc["relations"] = rel;
  doc["free"] = rel.empty();
  return doc;
}

OracleOptions oracle_options(double seconds) {
  OracleOptions opts;
  if (seconds > 0) {
    opts.deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(seconds));
  }
  return opts;
}

json run_verify(const RunConfig& config, const Input& in, std::string& diag) {
  FamilyData fam = family_of(config, in);
  const std::uint64_t trunc = resolve_trunc(config, fam, diag);
  json doc = base_document(config, in);
  doc["trunc"] = trunc;

  bool certificates_ok = true;
  json failures = json::array();
  const auto& basis = fam.milnor.m;
  LatticeMatrix a;
  a.basis = basis;
  a.s_trunc = trunc;
  a.entries.resize(basis.size() * basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    SparsePoly p = fam.f_poly->times(basis[j], 1);
    NormalFormResult nf = normal_form(p, fam, trunc);
    SparsePoly check = truncate(p - expand_certificate(fam, nf.certificate) - nf.r - nf.residual,
                                trunc);
    const bool ok = check.is_zero() && vk_contains(nf.residual, -static_cast<std::int64_t>(trunc), fam);
    if (!ok) {
      certificates_ok = false;
      failures.push_back(to_string(Monomial(Exponents{}, basis[j].x), in.ord));
    }
    auto col = basis_coordinates(nf.r, basis);
    for (std::size_t i = 0; i < basis.size(); ++i) a(i, j) = std::move(col[i]);
  }
  doc["certificates"] = certificates_ok;
  if (!failures.empty()) doc["certificate_failures"] = failures;

  bool oracle_ok = false;
  try {
    LatticeMatrix o = oracle_matrix(in.f, in.ord, trunc, oracle_options(config.oracle_timeout));
    oracle_ok = o == a;
    doc["oracle"] = oracle_ok ? "match" : "mismatch";
    if (!oracle_ok) {
      json diff = json::array();
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
          if (a(i, j) != o(i, j)) {
            diff.push_back({{"entry", "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"},
                            {"nf", format_entry(a(i, j))},
                            {"oracle", format_entry(o(i, j))}});
          }
        }
      }
      doc["differences"] = diff;
    }
  } catch (const OracleTimeout&) {
    doc["oracle"] = "timeout";
    oracle_ok = true;
    diag += "warning: oracle did not finish within the time budget; only certificates checked\n";
  }
  if (!certificates_ok || !oracle_ok) {
    doc["verified"] = false;
    throw MismatchFound(doc.dump(2));
  }
  doc["verified"] = true;
  return doc;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

json run_bench(const RunConfig& config, std::string& diag) {
  json doc;
  doc["subcommand"] = "bench";
  json rows = json::array();
  std::vector<std::uint64_t> truncs = config.truncs;
  if (truncs.empty()) truncs = {2};
  for (const auto& text : config.polys) {
    Input in = read_input(config, text);
    const auto start = std::chrono::steady_clock::now();
    FamilyData fam = family_of(config, in);
    const double setup = seconds_since(start);
    for (std::uint64_t n : truncs) {
      json row;
      row["poly"] = text;
      row["mu"] = fam.mu();
      row["trunc"] = n;
      const auto t0 = std::chrono::steady_clock::now();
      LatticeMatrix a = lattice_matrix(fam, n);
      row["nf_seconds"] = setup + seconds_since(t0);
      if (config.bench_oracle) {
        const auto t1 = std::chrono::steady_clock::now();
        try {
          LatticeMatrix o = oracle_matrix(in.f, in.ord, n, oracle_options(config.oracle_timeout));
          row["oracle_seconds"] = seconds_since(t1);
          row["agree"] = o == a;
        } catch (const OracleTimeout&) {
          row["oracle_seconds"] = nullptr;
          diag += "oracle timed out on " + text + " at trunc " + std::to_string(n) + "\n";
        }
      }
      rows.push_back(row);
    }
  }
  doc["rows"] = rows;
  return doc;
}

std::string bench_text(const json& doc) {
  std::ostringstream out;
  out << "poly\tmu\ttrunc\tnf_s\toracle_s\n";
  for (const auto& row : doc["rows"]) {
    out << row["poly"].get<std::string>() << "\t" << row["mu"] << "\t" << row["trunc"] << "\t"
        << row["nf_seconds"] << "\t";
    if (row.contains("oracle_seconds")) {
      out << (row["oracle_seconds"].is_null() ? "inf" : row["oracle_seconds"].dump());
    } else {
      out << "-";
    }
    out << "\n";
  }
  return out.str();
}

std::string caret_line(const std::string& text, std::size_t position) {
  return "  " + text + "\n  " + std::string(std::min(position, text.size()), ' ') + "^\n";
}

}  // namespace

std::optional<std::vector<std::string>> named_basis_order(const std::string& name) {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"paper-t255", {"y^5", "y^4", "y^3", "y^2", "x*y", "y", "x^4", "x^3", "x^2", "x", "1"}},
  };
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

json matrix_to_json(const LatticeMatrix& a, const OrderingSpec& ord) {
  json doc;
  doc["trunc"] = a.s_trunc;
  doc["basis"] = monomial_names(a.basis, ord);
  json entries = json::object();
  json coeffs = json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.size(); ++j) {
      entries["(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"] =
          format_entry(a(i, j));
      json c = json::array();
      for (const auto& q : s_coefficients(a(i, j), a.s_trunc)) c.push_back(to_string(q));
      row.push_back(c);
    }
    coeffs.push_back(row);
  }
  doc["entries"] = entries;
  doc["coefficients"] = coeffs;
  return doc;
}

LatticeMatrix matrix_from_json(const json& doc, const OrderingSpec& ord) {
  LatticeMatrix a;
  a.s_trunc = doc.at("trunc").get<std::uint64_t>();
  for (const auto& name : doc.at("basis")) {
    Monomial m = parse_monomial(name.get<std::string>(), ord.x_vars());
    a.basis.emplace_back(Exponents(1, 0), m.x);
  }
  const std::size_t mu = a.basis.size();
  const auto& coeffs = doc.at("coefficients");
  if (coeffs.size() != mu) throw DimensionMismatch("coefficient rows do not match the basis");
  a.entries.resize(mu * mu);
  for (std::size_t i = 0; i < mu; ++i) {
    if (coeffs[i].size() != mu) throw DimensionMismatch("coefficient row has the wrong length");
    for (std::size_t j = 0; j < mu; ++j) {
      std::uint32_t k = 0;
      for (const auto& c : coeffs[i][j]) {
        a(i, j).add_term(Monomial(Exponents{k}, Exponents{}), parse_rational(c.get<std::string>()));
        ++k;
      }
    }
  }
  return a;
}

RunOutput run(const RunConfig& config) {
  RunOutput out;
  const std::string echo = config.polys.empty() ? std::string() : config.polys.front();
  try {
    json doc;
    if (config.subcommand == "bench") {
      if (config.polys.empty()) throw Error("bench needs at least one --poly");
      doc = run_bench(config, out.diagnostics);
      out.document = config.format == OutputFormat::Json ? doc.dump(2) + "\n" : bench_text(doc);
      return out;
    }
    if (config.polys.size() != 1) throw Error(config.subcommand + " needs exactly one --poly");
    Input in = read_input(config, echo);
    if (config.subcommand == "milnor") {
      doc = run_milnor(config, in);
    } else if (config.subcommand == "stdbasis") {
      doc = run_stdbasis(config, in);
    } else if (config.subcommand == "basis") {
      doc = run_basis(config, in);
    } else if (config.subcommand == "matrix") {
      doc = run_matrix(config, in, out.diagnostics);
    } else if (config.subcommand == "oracle") {
      doc = run_oracle(config, in, out.diagnostics);
    } else if (config.subcommand == "relations") {
      doc = run_relations(config, in);
    } else if (config.subcommand == "verify") {
      doc = run_verify(config, in, out.diagnostics);
    } else {
      throw Error("unknown subcommand '" + config.subcommand + "'");
    }
    out.document = config.format == OutputFormat::Json ? doc.dump(2) + "\n" : render_text(doc);
  } catch (const MismatchFound& e) {
    out.status = kExitMismatch;
    out.document = std::string(e.what()) + "\n";
    out.diagnostics += "verification failed\n";
  } catch (const ParseError& e) {
    out.status = kExitInput;
    out.diagnostics += std::string("parse error: ") + e.what() + "\n" + caret_line(echo, e.position());
  } catch (const NonIsolatedSingularity& e) {
    out.status = kExitInput;
    out.diagnostics += "non-isolated singularity for '" + echo + "': " + e.what() + "\n";
  } catch (const NotACriticalPoint& e) {
    out.status = kExitInput;
    out.diagnostics += "0 is not a critical point of '" + echo + "': " + e.what() + "\n";
  } catch (const Error& e) {
    out.status = kExitInput;
    out.diagnostics += std::string("error: ") + e.what() + "\n";
  }
  return out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Brieskorn lattice engine: t-action matrices by normal forms"};
  app.require_subcommand(1);
  RunConfig config;
  std::string vars, weights, tie = "lex", format = "json", truncs;

  const auto common = [&](CLI::App* sub, bool many_polys) {
    if (many_polys) {
      sub->add_option("--poly", config.polys, "polynomial (repeatable)")->required();
    } else {
      sub->add_option("--poly", config.polys, "polynomial, e.g. x^5+x^2*y^2+y^5")
          ->required()
          ->expected(1);
    }
    sub->add_option("--vars", vars, "comma separated variable order");
    sub->add_option("--weights", weights, "comma separated negative weights");
    sub->add_option("--tie-break", tie, "lex or revlex")->check(CLI::IsMember({"lex", "revlex"}));
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };
  const auto matrix_opts = [&](CLI::App* sub) {
    sub->add_option("--deg-s", config.deg_s, "override deg(s)");
    sub->add_option("--trunc", config.trunc, "s-truncation order N, or 'full'");
    sub->add_option("--basis-order", config.basis_order,
                    "built-in name (paper-t255) or comma separated monomials");
  };

  const std::pair<const char*, const char*> simple[] = {
      {"milnor", "Milnor number of the Jacobian ideal"},
      {"stdbasis", "standard basis of the Jacobian ideal with transformation"},
      {"basis", "monomial basis of the Milnor algebra"}};
  for (const auto& [name, help] : simple) common(app.add_subcommand(name, help), false);
  auto* matrix = app.add_subcommand("matrix", "t-action matrix modulo s^N");
  common(matrix, false);
  matrix_opts(matrix);
  matrix->add_flag("--saito", config.saito, "also emit A0 and A1");

  auto* oracle = app.add_subcommand("oracle", "");
  oracle->group("");
  common(oracle, false);
  matrix_opts(oracle);
  oracle->add_flag("--saito", config.saito, "also emit A0 and A1");

  auto* rel = app.add_subcommand("relations", "relations of H / s^-K H");
  common(rel, false);
  rel->add_option("--deg-s", config.deg_s, "override deg(s)");
  rel->add_option("--K", config.level, "filtration level K < 0");

  auto* verify = app.add_subcommand("verify", "compare against the division oracle");
  common(verify, false);
  verify->add_option("--deg-s", config.deg_s, "override deg(s)");
  verify->add_option("--trunc", config.trunc, "s-truncation order N, or 'full'");
  verify->add_option("--oracle-timeout", config.oracle_timeout, "oracle budget in seconds");

  auto* bench = app.add_subcommand("bench", "timing table");
  common(bench, true);
  bench->add_option("--deg-s", config.deg_s, "override deg(s)");
  bench->add_option("--truncs", truncs, "comma separated truncation orders");
  bench->add_flag("--oracle", config.bench_oracle, "also time the division oracle");
  bench->add_option("--oracle-timeout", config.oracle_timeout, "oracle budget in seconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  config.subcommand = app.get_subcommands().front()->get_name();
  config.vars = split_list(vars);
  config.weights = split_list(weights);
  config.tie_break = tie == "revlex" ? TieBreak::RevLex : TieBreak::Lex;
  config.format = format == "text" ? OutputFormat::Text : OutputFormat::Json;
  try {
    for (const auto& t : split_list(truncs)) config.truncs.push_back(std::stoull(t));
  } catch (const std::exception&) {
    err << "error: --truncs must be a list of positive integers\n";
    return kExitInput;
  }

  RunOutput result = run(config);
  out << result.document;
  err << result.diagnostics;
  return result.status;
}

}  // namespace brieskorn
