#include "cli_app.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "nonisog/certificate_json.hpp"
#include "nonisog/certifier.hpp"
#include "nonisog/corpus.hpp"
#include "nonisog/curves.hpp"
#include "nonisog/factorization.hpp"
#include "nonisog/galois.hpp"
#include "nonisog/gf2_module.hpp"
#include "nonisog/number_theory.hpp"
#include "nonisog/parser.hpp"

#ifndef NONISOG_CORPUS_PATH
#define NONISOG_CORPUS_PATH "data/corpus.json"
#endif

namespace nonisog::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  bool json = false;
  std::uint64_t prime_bound = 200;
  std::string poly;
  std::string poly2;
  std::string group;
  int n = 0;
  std::string corpus_file = NONISOG_CORPUS_PATH;
};

void emit(std::ostream& out, json doc) {
  doc["version"] = library_version();
  out << doc.dump(2) << '\n';
}

std::string cycle_type_string(const CycleType& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

std::string factor_string(const FactorList& fl) {
  std::string s = to_string(fl.unit);
  for (const auto& f : fl.factors) {
    s += " * (" + f.factor.to_string() + ")";
    if (f.multiplicity > 1) s += "^" + std::to_string(f.multiplicity);
  }
  return s;
}

int cmd_factor(const Options& o, std::ostream& out) {
  const Polynomial f = parse_polynomial(o.poly);
  const FactorList fl = factor_over_Q(f);
  if (o.json) {
    json factors = json::array();
    for (const auto& fac : fl.factors) {
      factors.push_back({{"factor", coefficients_json(fac.factor)},
                         {"text", fac.factor.to_string()},
                         {"multiplicity", fac.multiplicity}});
    }
    emit(out, {{"input", coefficients_json(f)}, {"unit", to_string(fl.unit)}, {"factors", factors},
               {"irreducible", fl.irreducible()}});
  } else {
    out << factor_string(fl) << '\n';
  }
  return kExitOk;
}

int cmd_disc(const Options& o, std::ostream& out) {
  const Polynomial f = parse_polynomial(o.poly);
  const Rational d = discriminant(f);
  if (d == 0) {
    if (o.json) {
      emit(out, {{"input", coefficients_json(f)}, {"discriminant", "0"}});
    } else {
      out << "discriminant: 0\n";
    }
    return kExitOk;
  }
  const Integer num = d.get_num() * d.get_den();  // same square class as d
  const Integer sqf = squarefree_part(num);
  const auto num_factors = factor_integer(d.get_num());
  const auto den_factors = factor_integer(d.get_den());
  if (o.json) {
    json fac = json::array();
    for (const auto& pp : num_factors) fac.push_back({{"prime", to_string(pp.prime)}, {"exponent", pp.exponent}});
    for (const auto& pp : den_factors) fac.push_back({{"prime", to_string(pp.prime)}, {"exponent", -static_cast<long>(pp.exponent)}});
    emit(out, {{"input", coefficients_json(f)}, {"discriminant", to_string(d)}, {"squarefree_part", to_string(sqf)},
               {"factorization", fac}});
  } else {
    std::string fs = d < 0 ? "-1" : "";
    auto append = [&](const std::vector<PrimePower>& ps, bool neg) {
      for (const auto& pp : ps) {
        if (!fs.empty()) fs += " * ";
        fs += to_string(pp.prime);
        if (neg || pp.exponent > 1) fs += "^" + std::string(neg ? "-" : "") + std::to_string(pp.exponent);
      }
    };
    append(num_factors, false);
    append(den_factors, true);
    if (fs.empty()) fs = "1";
    out << "discriminant: " << to_string(d) << '\n'
        << "factorization: " << fs << '\n'
        << "squarefree part: " << to_string(sqf) << '\n';
  }
  return kExitOk;
}

int cmd_galois(const Options& o, std::ostream& out, std::ostream& err) {
  const Polynomial f = parse_polynomial(o.poly);
  const GaloisGroupId id = galois_group(f);
  std::vector<std::string> warnings;
  std::set<CycleType> seen;
  if (id != GaloisGroupId::Reducible) {
    seen = cycle_type_prefilter(f, o.prime_bound);
    const std::set<CycleType> allowed = cycle_types(id);
    for (const CycleType& c : seen) {
      if (!allowed.count(c)) {
        warnings.push_back("prefilter: Frobenius cycle type " + cycle_type_string(c) + " is not in " +
                           std::string(to_string(id)) + " (arithmetic bug?)");
      }
    }
  }
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  if (o.json) {
    json doc{{"input", coefficients_json(f)}, {"group", std::string(to_string(id))}};
    if (id != GaloisGroupId::Reducible) {
      const GroupProperties p = group_properties(id);
      doc["order"] = to_string(p.order);
      doc["doubly_transitive"] = p.doubly_transitive;
      doc["cyclic_of_order_n"] = p.cyclic_of_order_n;
      json pats = json::array();
      for (const auto& c : seen) pats.push_back(cycle_type_string(c));
      doc["prefilter"] = {{"prime_bound", o.prime_bound}, {"cycle_types", pats}, {"consistent", warnings.empty()}};
    }
    emit(out, doc);
  } else {
    out << to_string(id) << '\n';
  }
  return kExitOk;
}

int cmd_j(const Options& o, std::ostream& out) {
  const Polynomial f = parse_polynomial(o.poly);
  const ShortWeierstrass w = short_weierstrass(f);
  const JInvariant j = j_invariant(f);
  if (o.json) {
    emit(out, {{"input", coefficients_json(f)},
               {"short_model", {{"a", to_string(w.a)}, {"b", to_string(w.b)}}},
               {"j", to_string(j.value)},
               {"in_S", in_S(j)}});
  } else {
    out << "j = " << to_string(j.value) << (in_S(j) ? " (in S)" : " (not in S)") << '\n';
  }
  return kExitOk;
}

int cmd_module(const Options& o, std::ostream& out) {
  const auto gens = standard_generators(o.group, o.n);
  const HeartModule m = heart_module(o.n, gens);
  const ModuleReport r = analyze(m);
  if (o.json) {
    json gj = json::array();
    for (const auto& g : gens) gj.push_back(g.to_string());
    json doc{{"group", o.group}, {"n", o.n}, {"generators", gj}, {"dimension", m.dim}, {"simple", r.simple},
             {"endomorphism_dim", r.endomorphism_dim}, {"absolutely_simple", r.absolutely_simple}};
    if (r.witness) doc["proper_submodule_dimension"] = spin(m, *r.witness).rows();
    emit(out, doc);
  } else {
    out << "dimension: " << m.dim << '\n'
        << "simple: " << (r.simple ? "true" : "false") << '\n'
        << "endomorphism_dim: " << r.endomorphism_dim << '\n'
        << "absolutely_simple: " << (r.absolutely_simple ? "true" : "false") << '\n';
  }
  return kExitOk;
}

void print_certificate(const Certificate& c, std::ostream& out) {
  out << "verdict: " << to_string(c.verdict.tag);
  if (c.verdict.tag == VerdictTag::IsogenyImpliesCM) out << " (cyclotomic degree " << c.verdict.cyclotomic_degree << ")";
  if (c.verdict.tag == VerdictTag::Inconclusive) out << " (" << c.verdict.reason << ")";
  out << '\n';
  for (const auto& h : c.trace) {
    out << "  [" << to_string(h.status) << "] " << h.name << ": " << h.detail << '\n';
  }
  if (!c.char_p_constraints.empty()) {
    out << "  char p (supersingular branch allowed):";
    for (const auto& row : c.char_p_constraints) out << ' ' << to_string(row.p) << (row.allowed ? "+" : "-");
    out << '\n';
  }
}

int cmd_certify(const Options& o, std::ostream& out) {
  const Polynomial f = parse_polynomial(o.poly);
  const Polynomial h = parse_polynomial(o.poly2);
  const Certificate c = certify(f, h);
  if (o.json) {
    out << to_json(c).dump(2) << '\n';
  } else {
    print_certificate(c, out);
  }
  return kExitOk;
}

int cmd_corpus(const Options& o, std::ostream& out, std::ostream& err) {
  const std::vector<CorpusCase> cases = load_corpus(o.corpus_file);
  if (cases.empty()) err << "warning: corpus " << o.corpus_file << " has no cases\n";
  const auto results = run_corpus(cases);
  const auto failed = std::count_if(results.begin(), results.end(), [](const CorpusOutcome& r) { return !r.passed; });
  if (o.json) {
    json arr = json::array();
    for (const auto& r : results) {
      arr.push_back({{"name", r.source->name},
                     {"expected", std::string(to_string(r.source->expected))},
                     {"passed", r.passed},
                     {"citation", r.source->citation},
                     {"certificate", to_json(r.certificate)}});
    }
    emit(out, {{"cases", arr}, {"total", results.size()}, {"failed", failed}});
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.source->name << "  [" << r.source->citation << "]";
      if (!r.passed) out << "  " << r.message;
      out << '\n';
    }
    out << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " cases passed\n";
  }
  for (const auto& r : results) {
    if (!r.passed) err << "corpus mismatch: " << r.source->name << ": " << r.message << '\n';
  }
  return failed == 0 ? kExitOk : kExitUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact non-isogeny certificates for hyperelliptic jacobians y^2 = f(x)", "nonisog"};
  app.require_subcommand(1);
  app.set_version_flag("--version", library_version());
  Options o;
  app.add_flag("--json", o.json, "Structured JSON output");
  app.add_option("--prime-bound", o.prime_bound, "Prime bound for the advisory cycle-type prefilter")
      ->check(CLI::Range(std::uint64_t{3}, std::uint64_t{1} << 24));

  auto* factor = app.add_subcommand("factor", "Factor a polynomial over Q")->fallthrough();
  factor->add_option("poly", o.poly)->required();
  auto* disc = app.add_subcommand("disc", "Discriminant and its squarefree part")->fallthrough();
  disc->add_option("poly", o.poly)->required();
  auto* galois = app.add_subcommand("galois", "Galois group of a cubic or quintic")->fallthrough();
  galois->add_option("poly", o.poly)->required();
  auto* j = app.add_subcommand("j", "j-invariant of y^2 = cubic")->fallthrough();
  j->add_option("poly", o.poly)->required();
  auto* module = app.add_subcommand("module", "F2 heart module of a permutation group")->fallthrough();
  module->add_option("--group", o.group, "C<n>, S3, S5, A5, D5 or F20")->required();
  module->add_option("--n", o.n, "Degree n")->required();
  auto* cert = app.add_subcommand("certify", "Certify a pair of polynomials")->fallthrough();
  cert->add_option("f_poly", o.poly, "First polynomial f")->required();
  cert->add_option("h_poly", o.poly2, "Second polynomial h")->required();
  auto* corpus = app.add_subcommand("corpus", "Run the regression corpus")->fallthrough();
  corpus->add_option("--file", o.corpus_file, "Corpus JSON file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << library_version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*factor) return cmd_factor(o, out);
    if (*disc) return cmd_disc(o, out);
    if (*galois) return cmd_galois(o, out, err);
    if (*j) return cmd_j(o, out);
    if (*module) return cmd_module(o, out);
    if (*cert) return cmd_certify(o, out);
    if (*corpus) return cmd_corpus(o, out, err);
  } catch (const CapabilityError& e) {
    err << "capability error: " << e.what() << '\n';
    return kExitCapability;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DivisionByZero& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace nonisog::cli
