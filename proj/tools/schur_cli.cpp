// Command-line surface: inspect groups, compute Schur multipliers and t,
// and run the classification / bounds verification suites.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "schur/bounds.hpp"
#include "schur/catalog.hpp"
#include "schur/fp.hpp"
#include "schur/multiplier.hpp"
#include "schur/pc_io.hpp"
#include "schur/pc_structure.hpp"
#include "schur/verify.hpp"
#include "schur/version.hpp"

namespace {

using namespace schur;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file '" + path + "'", 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw error("cannot write to '" + out_path + "'");
  out << text;
}

long infer_prime_of_order(long long order) {
  for (long q = 2; q <= order; ++q)
    if (order % q == 0) return q;
  throw structural_error("trivial group has no defining prime");
}

// Family grammar for ad-hoc names: tokens joined by 'x', each of
// D<2^k>, Q8, E1|E2|E4 (take p from --p), Z<q^e> or Z<q^e>^<rank>.
std::optional<PcPresentation> parse_family_token(const std::string& tok,
                                                 std::optional<long> p) {
  auto need_p = [&]() -> long {
    if (!p) throw structural_error("family '" + tok + "' needs --p");
    return *p;
  };
  if (tok == "Q8") return pc_quaternion8();
  if (tok == "E1") return pc_e1(need_p());
  if (tok == "E2") return pc_e2(need_p());
  if (tok == "E4") return pc_e4(need_p());
  if (tok.size() > 1 && tok[0] == 'D') {
    long n = std::stol(tok.substr(1));
    return pc_dihedral(n);
  }
  if (tok.size() > 1 && tok[0] == 'Z') {
    std::string body = tok.substr(1);
    long rank = 1;
    auto caret = body.find('^');
    if (caret != std::string::npos) {
      rank = std::stol(body.substr(caret + 1));
      body = body.substr(0, caret);
    }
    if (rank < 0) throw structural_error("negative direct power");
    long m = std::stol(body);
    if (m < 2) throw structural_error("cyclic order must be >= 2");
    long q = infer_prime_of_order(m);
    int e = 0;
    long t = m;
    while (t > 1) {
      if (t % q != 0)
        throw structural_error("'" + tok + "' is not a prime power");
      t /= q;
      ++e;
    }
    if (rank == 0) return pc_trivial(q);
    PcPresentation cyc = pc_cyclic(q, e);
    PcPresentation acc = cyc;
    for (long i = 1; i < rank; ++i) acc = direct_product(acc, cyc);
    return acc;
  }
  return std::nullopt;
}

std::optional<PcPresentation> resolve_family(const std::string& name,
                                             std::optional<long> p) {
  std::vector<std::string> toks;
  std::string cur;
  for (char c : name) {
    if (c == 'x') {
      toks.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  toks.push_back(cur);
  std::optional<PcPresentation> acc;
  for (const std::string& t : toks) {
    auto g = parse_family_token(t, p);
    if (!g) return std::nullopt;
    acc = acc ? direct_product(*acc, *g) : *g;
  }
  if (acc) acc = acc->with_name(name);
  return acc;
}

PcPresentation resolve_group(const std::string& name_or_path,
                             std::optional<long> p, long long max_cosets) {
  if (const CatalogEntry* e = find_entry(name_or_path)) {
    long prime;
    switch (e->primes) {
      case PrimeSpec::two:
        prime = 2;
        break;
      case PrimeSpec::three:
        prime = 3;
        break;
      default:
        if (!p)
          throw structural_error("catalog entry '" + name_or_path +
                                 "' needs --p (admissible: p = " +
                                 prime_spec_str(e->primes) + ")");
        prime = *p;
    }
    return build_entry(*e, prime, max_cosets).pres;
  }
  if (auto fam = resolve_family(name_or_path, p)) return *fam;
  if (name_or_path.size() > 3 &&
      name_or_path.substr(name_or_path.size() - 3) == ".pc")
    return parse_pc(read_file(name_or_path));
  if (name_or_path.size() > 4 &&
      name_or_path.substr(name_or_path.size() - 4) == ".grp") {
    FpPresentation fp = parse_presentation(read_file(name_or_path));
    CosetTable tc = todd_coxeter(fp, max_cosets);
    if (!tc.complete)
      throw capacity_error("coset enumeration exceeded --max-cosets");
    PermGroup rr = regular_rep(tc);
    PermGroupModel pm(rr);
    long prime = infer_prime_of_order(tc.coset_count);
    return pc_realization(pm, prime, name_or_path).pres;
  }
  throw structural_error("'" + name_or_path +
                         "' is neither a catalog name, a family name, nor a "
                         ".pc/.grp file");
}

int cmd_info(const std::string& name, std::optional<long> p, long long cap,
             long long max_cosets) {
  PcPresentation g = resolve_group(name, p, max_cosets);
  require_consistent(g);
  Fingerprint f = pc_fingerprint(g, cap);
  std::cout << "group:          " << (g.name().empty() ? name : g.name())
            << "\n";
  std::cout << "order:          " << pc_order(g) << " = " << g.prime() << "^"
            << g.ngens() << "\n";
  std::cout << "|G'|:           " << f.derived_order << "\n";
  std::cout << "|Z(G)|:         " << f.center_order << "\n";
  std::cout << "exponent:       " << f.exponent << "\n";
  AbelianInvariants ab = abelianization(g);
  std::cout << "abelianization: " << ab.str() << "\n";
  std::cout << "fingerprint:    " << f.str() << "\n";
  return 0;
}

nlohmann::json multiplier_report_json(const MultiplierReport& r) {
  nlohmann::json j;
  j["schema"] = 1;
  j["group"] = r.group;
  j["method"] = r.method;
  j["agreed_methods"] = r.agreed_methods;
  j["invariants"] = nlohmann::json::array();
  for (const Int& d : r.invariants.factors())
    j["invariants"].push_back(d.get_str());
  j["multiplier_order"] = r.invariants.order().get_str();
  j["p_exponent"] = r.p_exponent;
  j["t"] = r.t_value;
  if (r.tails_free_rank) j["tails_free_rank"] = *r.tails_free_rank;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

int cmd_multiplier(const std::string& name, std::optional<long> p,
                   const std::string& method, const std::string& format,
                   const std::string& out, long long oracle_cap,
                   long long max_cosets) {
  PcPresentation g = resolve_group(name, p, max_cosets);
  MultiplierMethod mm = MultiplierMethod::automatic;
  if (method == "tails")
    mm = MultiplierMethod::tails;
  else if (method == "kunneth")
    mm = MultiplierMethod::kunneth;
  else if (method == "oracle")
    mm = MultiplierMethod::oracle;
  else if (method != "auto")
    throw structural_error("unknown --method '" + method + "'");
  MultiplierOptions opts;
  opts.oracle_cap = oracle_cap;
  opts.cross_check = true;
  MultiplierReport r = multiplier(g, mm, opts);
  if (r.group.empty()) r.group = name;
  if (format == "json") {
    write_output(multiplier_report_json(r).dump(2) + "\n", out);
  } else if (format == "csv") {
    std::ostringstream os;
    os << "group,method,invariants,multiplier_order,p_exponent,t\n";
    os << csv_escape(r.group) << "," << r.method << ","
       << csv_escape(r.invariants.str()) << "," << r.invariants.order()
       << "," << r.p_exponent << "," << r.t_value << "\n";
    write_output(os.str(), out);
  } else {
    std::ostringstream os;
    os << "group:       " << r.group << "\n";
    os << "M(G):        " << r.invariants.str() << "  (order "
       << r.invariants.order() << " = " << g.prime() << "^" << r.p_exponent
       << ")\n";
    os << "t(G):        " << r.t_value << "\n";
    os << "method:      " << r.method;
    for (const auto& m : r.agreed_methods) os << " (+" << m << " agreed)";
    os << "\n";
    if (r.tails_free_rank)
      os << "Hopf rank:   " << *r.tails_free_rank << "\n";
    write_output(os.str(), out);
  }
  return 0;
}

int cmd_parse(const std::string& path) {
  std::string text = read_file(path);
  if (path.size() > 3 && path.substr(path.size() - 3) == ".pc") {
    PcPresentation g = parse_pc(text);
    std::cout << "pc presentation '" << g.name() << "': p = " << g.prime()
              << ", n = " << g.ngens() << "\n";
    std::cout << print_pc(g);
    return 0;
  }
  FpPresentation fp = parse_presentation(text);
  std::cout << fp.generators.size() << " generators, " << fp.relators.size()
            << " relators\n";
  std::cout << print_presentation(fp);
  return 0;
}

int emit_report(const VerificationReport& rep, const std::string& format,
                const std::string& out) {
  if (format == "json")
    write_output(report_json_text(rep), out);
  else if (format == "csv")
    write_output(report_csv_text(rep), out);
  else
    write_output(report_table_text(rep), out);
  return rep.all_pass() ? 0 : 1;
}

int cmd_catalog_list() {
  for (const CatalogEntry& e : catalog()) {
    std::cout << e.name;
    if (e.item) std::cout << "  [item " << e.item << "]";
    if (e.control) std::cout << "  [control]";
    std::cout << "  p = " << prime_spec_str(e.primes) << ", order p^"
              << e.n_exponent << ", t = " << e.expected_t;
    if (!e.notes.empty()) std::cout << "  -- " << e.notes;
    std::cout << "\n";
  }
  return 0;
}

std::optional<std::string> entry_grp_source(const CatalogEntry& e, long p) {
  if (e.name == "item6") return item6_source(p);
  if (e.name == "item7") return item7_source(p);
  if (e.name == "item8") return item8_source(p);
  if (e.name == "item9") return item9_source();
  if (e.name == "item10") return item10_source(p);
  if (e.name == "item11") return item11_source();
  if (e.name == "item12") return item12_source();
  if (e.name == "item16" || e.name == "item16inner")
    return item16_inner_source();
  return std::nullopt;
}

int cmd_catalog_export(const std::string& dir, long long max_cosets) {
  nlohmann::json manifest;
  manifest["schema"] = 1;
  manifest["tool_version"] = kVersion;
  manifest["entries"] = nlohmann::json::array();
  for (const CatalogEntry& e : catalog()) {
    for (long p : {2L, 3L, 5L}) {
      if (!admissible_prime(e.primes, p)) continue;
      BuiltEntry built = build_entry(e, p, max_cosets);
      std::string stem = e.name + "_p" + std::to_string(p);
      std::string pc_file = stem + ".pc";
      {
        std::ofstream out(dir + "/" + pc_file);
        if (!out) throw error("cannot write catalog files under " + dir);
        out << print_pc(built.pres);
      }
      nlohmann::json je;
      je["name"] = e.name;
      je["item"] = e.item;
      je["control"] = e.control;
      je["p"] = p;
      je["admissible_primes"] = prime_spec_str(e.primes);
      je["n"] = e.n_exponent;
      je["t"] = e.expected_t;
      je["pc"] = pc_file;
      if (auto src = entry_grp_source(e, p)) {
        std::string grp_file = stem + ".grp";
        std::ofstream out(dir + "/" + grp_file);
        out << print_presentation(parse_presentation(*src));
        je["grp"] = grp_file;
      } else {
        je["grp"] = nullptr;
      }
      je["notes"] = e.notes;
      manifest["entries"].push_back(std::move(je));
    }
  }
  std::ofstream out(dir + "/manifest.json");
  if (!out) throw error("cannot write manifest under " + dir);
  out << manifest.dump(2) << "\n";
  std::cout << "wrote " << manifest["entries"].size() << " catalog entries to "
            << dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur multipliers and the t-invariant of finite p-groups"};
  app.set_version_flag("--version", schur::kVersion);
  app.require_subcommand(1);

  std::string name, format = "table", out, method = "auto", dir = "data/catalog";
  long p_value = 0;
  long long oracle_cap = schur::kOracleCap, max_cosets = 100'000,
            brute_cap = schur::kBruteForceCap, max_order = 1'000'000;
  std::vector<long> primes = {2, 3, 5};
  bool no_oracle = false;

  auto add_p = [&](CLI::App* cmd) {
    cmd->add_option("--p", p_value, "prime for parameterized families");
  };

  CLI::App* info = app.add_subcommand("info", "structure summary of a group");
  info->add_option("group", name, "catalog name, family, or .pc/.grp file")
      ->required();
  add_p(info);
  info->add_option("--brute-cap", brute_cap, "element enumeration cap");
  info->add_option("--max-cosets", max_cosets, "coset enumeration cap");

  CLI::App* mult = app.add_subcommand("multiplier",
                                      "Schur multiplier and t of a group");
  mult->add_option("group", name)->required();
  add_p(mult);
  mult->add_option("--method", method, "auto|tails|kunneth|oracle");
  mult->add_option("--format", format, "table|json|csv");
  mult->add_option("--out", out, "write the report to a file");
  mult->add_option("--oracle-cap", oracle_cap, "bar oracle order cap");
  mult->add_option("--max-cosets", max_cosets);

  CLI::App* parse = app.add_subcommand("parse", "parse a .grp or .pc file");
  parse->add_option("file", name)->required();

  CLI::App* vc = app.add_subcommand(
      "verify-classification",
      "check every catalog item: order, certification, |M(G)|, t = 5");
  vc->add_option("--primes", primes, "primes to instantiate at");
  vc->add_option("--oracle-cap", oracle_cap);
  vc->add_option("--max-cosets", max_cosets);
  vc->add_option("--format", format, "table|json|csv");
  vc->add_option("--out", out);
  vc->add_flag("--no-oracle", no_oracle, "skip the bar oracle cross-check");

  CLI::App* vb = app.add_subcommand(
      "verify-bounds", "bound and inequality checks over the corpus");
  std::vector<std::string> extra_files;
  vb->add_option("--primes", primes);
  vb->add_option("--max-order", max_order, "corpus order cap");
  vb->add_option("--max-cosets", max_cosets);
  vb->add_option("--extra", extra_files,
                 "additional .pc/.grp groups to run the checks on");
  vb->add_option("--format", format, "table|json|csv");
  vb->add_option("--out", out);

  CLI::App* cat = app.add_subcommand("catalog", "list or export the catalog");
  CLI::App* cat_list = cat->add_subcommand("list", "list catalog entries");
  CLI::App* cat_export =
      cat->add_subcommand("export", "write .pc/.grp files and manifest.json");
  cat_export->add_option("--dir", dir, "output directory");
  cat_export->add_option("--max-cosets", max_cosets);
  cat->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::optional<long> p_opt;
  if (p_value) p_opt = p_value;

  try {
    if (*info) return cmd_info(name, p_opt, brute_cap, max_cosets);
    if (*mult)
      return cmd_multiplier(name, p_opt, method, format, out, oracle_cap,
                            max_cosets);
    if (*parse) return cmd_parse(name);
    if (*vc) {
      schur::VerifyOptions o;
      o.primes = primes;
      o.oracle_cap = oracle_cap;
      o.max_cosets = max_cosets;
      o.cross_check_oracle = !no_oracle;
      return emit_report(schur::verify_classification(o), format, out);
    }
    if (*vb) {
      schur::VerifyOptions o;
      o.primes = primes;
      o.max_cosets = max_cosets;
      std::vector<schur::ExtraGroup> extras;
      for (const std::string& path : extra_files)
        extras.push_back({path, resolve_group(path, p_opt, max_cosets)});
      return emit_report(schur::verify_bounds(o, max_order, extras), format,
                         out);
    }
    if (*cat_list) return cmd_catalog_list();
    if (*cat_export) return cmd_catalog_export(dir, max_cosets);
  } catch (const schur::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const schur::structural_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const schur::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
