#include "nonisog/certifier.hpp"

#include <algorithm>
#include <functional>

#include "nonisog/curves.hpp"
#include "nonisog/errors.hpp"
#include "nonisog/factorization.hpp"
#include "nonisog/number_field.hpp"
#include "nonisog/number_theory.hpp"

namespace nonisog {

namespace {

namespace cite {
constexpr const char* kEqualDegree = "both curves are y^2 = (polynomial of the same degree n)";
constexpr const char* kSetting = "jacobian criteria for y^2 = f(x) need n an odd prime with 2 a primitive root mod n";
constexpr const char* kSquarefree = "y^2 = f(x) is a smooth hyperelliptic curve only when f has no repeated root";
constexpr const char* kIrreducible = "exact factorization over Q (Zassenhaus over a Hensel lift)";
constexpr const char* kOneReducible =
    "f irreducible and h reducible: an isogeny J(C_f) ~ J(C_h) over Q-bar forces CM by Q(zeta_n) on both";
constexpr const char* kCubicJ =
    "for elliptic curves over Q, irreducible vs reducible cubic with CM by Q(zeta_3) needs j in {0, 54000, -12288000}";
constexpr const char* kGalois = "exact Galois group from stem-field factorization, discriminant class and resolvent cubic";
constexpr const char* kDoublyTransitive =
    "End(J(C_f)) = Z when Gal(f) is doubly transitive and n is an odd prime with 2 primitive mod n";
constexpr const char* kDisjoint = "Hom(J(C_f), J(C_h)) = 0 once the splitting fields of f and h are linearly disjoint";
constexpr const char* kCharZero = "the Hom = 0 criterion is stated over fields of characteristic 0 (here Q)";
constexpr const char* kCyclicCubic =
    "two elliptic curves y^2 = f, y^2 = h with cyclic cubic f, h over Q are isogenous over Q-bar only if Q[x]/f = Q[x]/h";
}  // namespace cite

class TraceBuilder {
 public:
  explicit TraceBuilder(const CertifyOptions& options) : options_(options) {}

  HypothesisStatus record(std::string name, const char* citation, HypothesisStatus status, std::string detail) {
    if (options_.force_fail && *options_.force_fail == name) {
      status = HypothesisStatus::Failed;
      detail += " [forced failure]";
    }
    trace_.push_back({std::move(name), citation, status, std::move(detail)});
    return status;
  }
  HypothesisStatus record(std::string name, const char* citation, bool ok, std::string detail) {
    return record(std::move(name), citation, ok ? HypothesisStatus::Verified : HypothesisStatus::Failed,
                  std::move(detail));
  }

  std::vector<Hypothesis>& trace() { return trace_; }
  std::size_t size() const { return trace_.size(); }
  void truncate(std::size_t n) { trace_.resize(n); }

 private:
  const CertifyOptions& options_;
  std::vector<Hypothesis> trace_;
};

bool ok(HypothesisStatus s) { return s == HypothesisStatus::Verified; }

Verdict inconclusive(std::string reason) { return {VerdictTag::Inconclusive, 0, std::move(reason)}; }

Certificate blank(const Polynomial& f, const Polynomial& h, int n) {
  Certificate c;
  c.f = f;
  c.h = h;
  c.n = n;
  c.verdict = inconclusive("not evaluated");
  return c;
}

// Forces Inconclusive when the chain behind a claim contains anything unverified.
Certificate seal(Certificate cert, std::vector<Hypothesis> trace) {
  cert.trace = std::move(trace);
  if (cert.verdict.tag != VerdictTag::Inconclusive) {
    auto bad = std::find_if(cert.trace.begin(), cert.trace.end(),
                            [](const Hypothesis& h) { return h.status != HypothesisStatus::Verified; });
    if (cert.trace.empty()) {
      cert.verdict = inconclusive("empty hypothesis chain");
    } else if (bad != cert.trace.end()) {
      cert.verdict = inconclusive("hypothesis " + bad->name + " not verified");
    }
  }
  return cert;
}

std::vector<CharPConstraint> char_p_table(int n, std::uint64_t bound) {
  std::vector<CharPConstraint> out;
  for (std::uint64_t p : primes_in_range(3, bound)) {
    const SupersingularConstraint s = supersingular_constraint(Integer(n), Integer(static_cast<unsigned long>(p)));
    out.push_back({Integer(static_cast<unsigned long>(p)), s.f_p, s.allowed});
  }
  return out;
}

std::string first_unverified_reason(const std::vector<Hypothesis>& trace) {
  for (const auto& h : trace) {
    if (h.status != HypothesisStatus::Verified) return "hypothesis " + h.name + " not verified";
  }
  return "no route applies";
}

// Records setting and squarefreeness; returns whether all hold.
bool record_prefix(TraceBuilder& t, const Polynomial& f, const Polynomial& h, int n) {
  const Hypothesis s = check_setting(n);
  bool all = ok(t.record(s.name, s.citation.c_str(), s.status, s.detail));
  for (const auto& [label, p] : {std::pair<const char*, const Polynomial*>{"f", &f}, {"h", &h}}) {
    bool sqf = false;
    std::string detail;
    if (p->degree() < 1) {
      detail = std::string(label) + " is constant";
    } else {
      sqf = is_squarefree(*p);
      detail = std::string(label) + (sqf ? " has no repeated factor" : " has a repeated factor");
    }
    all = ok(t.record(std::string(label) + "_squarefree", cite::kSquarefree, sqf, detail)) && all;
  }
  return all;
}

struct Irreducibility {
  bool f;
  bool h;
};

Irreducibility irreducibility(const Polynomial& f, const Polynomial& h) { return {is_irreducible(f), is_irreducible(h)}; }

DisjointnessResult disjointness(const Polynomial& f, const Polynomial& h, GaloisGroupId gf, GaloisGroupId gh) {
  using Kind = DisjointnessResult::Kind;
  if (f.monic() == h.monic()) return {Kind::NotDisjoint, "R0", "f and h have the same roots"};
  const GroupProperties pf = group_properties(gf);
  const GroupProperties ph = group_properties(gh);
  const std::string groups = "Gal(f) = " + std::string(to_string(gf)) + ", Gal(h) = " + std::string(to_string(gh));
  if (ph.cyclic_of_order_n && pf.doubly_transitive) {
    return {Kind::Disjoint, "R1", groups + ": a doubly transitive group has no quotient of order n, so the intersection is Q"};
  }
  if (pf.cyclic_of_order_n && ph.doubly_transitive) {
    return {Kind::Disjoint, "R2", groups + ": a doubly transitive group has no quotient of order n, so the intersection is Q"};
  }
  const bool s5_f20 = (gf == GaloisGroupId::S5 && gh == GaloisGroupId::F20) ||
                      (gf == GaloisGroupId::F20 && gh == GaloisGroupId::S5);
  if (s5_f20) {
    const Integer df = squarefree_part(discriminant(Polynomial::from_integers(primitive_part(f))).get_num());
    const Integer dh = squarefree_part(discriminant(Polynomial::from_integers(primitive_part(h))).get_num());
    if (df != dh) {
      return {Kind::Disjoint, "R3",
              groups + ": the only possible common subfield is quadratic, and Q(sqrt(" + to_string(df) +
                  ")) != Q(sqrt(" + to_string(dh) + "))"};
    }
    return {Kind::Unknown, "", groups + ": discriminants share the quadratic field Q(sqrt(" + to_string(df) + "))"};
  }
  return {Kind::Unknown, "", groups + ": no disjointness rule applies"};
}

}  // namespace

std::string_view to_string(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::Verified: return "verified";
    case HypothesisStatus::Failed: return "failed";
    case HypothesisStatus::Unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(VerdictTag t) {
  switch (t) {
    case VerdictTag::NotIsogenousOverClosure: return "NotIsogenousOverClosure";
    case VerdictTag::IsogenyImpliesCM: return "IsogenyImpliesCM";
    case VerdictTag::HomZero: return "HomZero";
    case VerdictTag::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::optional<VerdictTag> parse_verdict_tag(std::string_view text) {
  for (VerdictTag t : {VerdictTag::NotIsogenousOverClosure, VerdictTag::IsogenyImpliesCM, VerdictTag::HomZero,
                       VerdictTag::Inconclusive}) {
    if (to_string(t) == text) return t;
  }
  return std::nullopt;
}

Hypothesis check_setting(int n) {
  Hypothesis h{"setting", cite::kSetting, HypothesisStatus::Failed, ""};
  if (n < 3 || n % 2 == 0 || !is_prime_u64(static_cast<std::uint64_t>(n))) {
    h.detail = "n = " + std::to_string(n) + " is not an odd prime";
  } else if (!is_primitive_root(Integer(2), Integer(n))) {
    h.detail = "2 has order " + to_string(multiplicative_order(Integer(2), Integer(n))) + " mod " + std::to_string(n) +
               ", not " + std::to_string(n - 1);
  } else {
    h.status = HypothesisStatus::Verified;
    h.detail = "n = " + std::to_string(n) + " is prime and 2 is a primitive root mod n";
  }
  return h;
}

DisjointnessResult prove_linear_disjointness(const Polynomial& f, const Polynomial& h) {
  if (f.degree() != h.degree()) throw InvalidInput("prove_linear_disjointness needs polynomials of equal degree");
  if (f.degree() != 3 && f.degree() != 5) {
    throw CapabilityError("linear disjointness is only decided for degree 3 and 5, got " + std::to_string(f.degree()));
  }
  if (!is_squarefree(f) || !is_squarefree(h)) throw InvalidInput("prove_linear_disjointness needs squarefree input");
  if (!is_irreducible(f) || !is_irreducible(h)) throw InvalidInput("prove_linear_disjointness needs irreducible input");
  return disjointness(f, h, galois_group(f), galois_group(h));
}

SupersingularConstraint supersingular_constraint(const Integer& n, const Integer& p) {
  if (n < 3 || !is_prime(n) || n % 2 == 0) throw InvalidInput("n must be an odd prime, got " + to_string(n));
  if (p < 2 || !is_prime(p)) throw InvalidInput("p must be prime, got " + to_string(p));
  if (p == n) return {std::nullopt, true};
  const Integer order = multiplicative_order(p, n);
  return {order, order % 2 == 0};
}

Certificate apply_route_one_reducible(const Polynomial& f, const Polynomial& h, int n, const CertifyOptions& options) {
  Certificate cert = blank(f, h, n);
  TraceBuilder t(options);
  bool good = t.record("equal_degree", cite::kEqualDegree, f.degree() == n && h.degree() == n,
                       "deg f = " + std::to_string(f.degree()) + ", deg h = " + std::to_string(h.degree()) +
                           ", n = " + std::to_string(n)) == HypothesisStatus::Verified;
  good = record_prefix(t, f, h, n) && good;
  if (!good) {
    cert.verdict = inconclusive(first_unverified_reason(t.trace()));
    return seal(std::move(cert), std::move(t.trace()));
  }
  const Irreducibility irr = irreducibility(f, h);
  std::string detail = std::string("f ") + (irr.f ? "irreducible" : "reducible") + ", h " +
                       (irr.h ? "irreducible" : "reducible");
  if (!ok(t.record("exactly_one_irreducible", cite::kOneReducible, irr.f != irr.h, detail))) {
    cert.verdict = inconclusive(first_unverified_reason(t.trace()));
    return seal(std::move(cert), std::move(t.trace()));
  }
  cert.verdict = {VerdictTag::IsogenyImpliesCM, n, ""};
  cert.char_p_constraints = char_p_table(n, options.char_p_bound);
  if (n == 3) {
    const JInvariant jf = j_invariant(f);
    const JInvariant jh = j_invariant(h);
    const std::string js = "j(f) = " + to_string(jf.value) + ", j(h) = " + to_string(jh.value);
    if (in_S(jf) && in_S(jh)) {
      t.record("j_both_in_S", cite::kCubicJ, true, js);
      cert.verdict = inconclusive("both j-invariants in S");
      cert.char_p_constraints.clear();
    } else if (ok(t.record("j_not_both_in_S", cite::kCubicJ, true, js))) {
      cert.verdict = {VerdictTag::NotIsogenousOverClosure, 0, ""};
      cert.char_p_constraints.clear();
    }
  }
  return seal(std::move(cert), std::move(t.trace()));
}

Certificate apply_route_both_irreducible(const Polynomial& f, const Polynomial& h, int n, const CertifyOptions& options) {
  Certificate cert = blank(f, h, n);
  TraceBuilder t(options);
  bool good = t.record("equal_degree", cite::kEqualDegree, f.degree() == n && h.degree() == n,
                       "deg f = " + std::to_string(f.degree()) + ", deg h = " + std::to_string(h.degree()) +
                           ", n = " + std::to_string(n)) == HypothesisStatus::Verified;
  good = record_prefix(t, f, h, n) && good;
  if (good) {
    const Irreducibility irr = irreducibility(f, h);
    good = ok(t.record("f_irreducible", cite::kIrreducible, irr.f, irr.f ? "f is irreducible over Q" : "f factors over Q"));
    good = ok(t.record("h_irreducible", cite::kIrreducible, irr.h, irr.h ? "h is irreducible over Q" : "h factors over Q")) &&
           good;
  }
  if (!good) {
    cert.verdict = inconclusive(first_unverified_reason(t.trace()));
    return seal(std::move(cert), std::move(t.trace()));
  }

  GaloisGroupId gf, gh;
  try {
    gf = galois_group(f);
    gh = galois_group(h);
  } catch (const CapabilityError& e) {
    t.record("galois_groups", cite::kGalois, HypothesisStatus::Unknown, e.what());
    cert.verdict = inconclusive(std::string("Galois group not computed: ") + e.what());
    return seal(std::move(cert), std::move(t.trace()));
  }
  const std::string groups = "Gal(f) = " + std::string(to_string(gf)) + ", Gal(h) = " + std::string(to_string(gh));
  const std::size_t prefix = t.size();

  // Hom = 0 route.
  {
    bool chain = ok(t.record("galois_groups", cite::kGalois, true, groups));
    const bool dt_f = group_properties(gf).doubly_transitive;
    const bool dt_h = group_properties(gh).doubly_transitive;
    std::string dt_detail = dt_f ? "Gal(f) = " + std::string(to_string(gf)) + " is doubly transitive"
                            : dt_h ? "Gal(h) = " + std::string(to_string(gh)) + " is doubly transitive (roles swapped)"
                                   : "neither group is doubly transitive";
    chain = ok(t.record("doubly_transitive", cite::kDoublyTransitive, dt_f || dt_h, dt_detail)) && chain;
    const DisjointnessResult d = disjointness(f, h, gf, gh);
    HypothesisStatus ds = d.kind == DisjointnessResult::Kind::Disjoint      ? HypothesisStatus::Verified
                          : d.kind == DisjointnessResult::Kind::NotDisjoint ? HypothesisStatus::Failed
                                                                            : HypothesisStatus::Unknown;
    std::string ddetail = d.rule.empty() ? d.detail : d.rule + ": " + d.detail;
    chain = ok(t.record("linearly_disjoint", cite::kDisjoint, ds, ddetail)) && chain;
    chain = ok(t.record("characteristic_zero", cite::kCharZero, true, "base field Q")) && chain;
    if (chain) {
      cert.verdict = {VerdictTag::HomZero, 0, ""};
      cert.char_p_constraints = char_p_table(n, options.char_p_bound);
      return seal(std::move(cert), std::move(t.trace()));
    }
  }

  // Two cyclic cubics.
  if (n == 3 && gf == GaloisGroupId::C3 && gh == GaloisGroupId::C3) {
    std::vector<Hypothesis> failed_hom(t.trace().begin() + static_cast<std::ptrdiff_t>(prefix), t.trace().end());
    t.truncate(prefix);
    bool chain = ok(t.record("both_cyclic_cubic", cite::kGalois, true, groups));
    const bool iso = fields_isomorphic(NumberField(f.monic()), NumberField(h.monic()));
    chain = ok(t.record("stem_fields_non_isomorphic", cite::kCyclicCubic, !iso,
                        iso ? "Q[x]/f and Q[x]/h are isomorphic" : "h has no root in Q[x]/f")) &&
            chain;
    if (chain) {
      cert.verdict = {VerdictTag::NotIsogenousOverClosure, 0, ""};
      return seal(std::move(cert), std::move(t.trace()));
    }
    cert.verdict = inconclusive(first_unverified_reason(t.trace()));
    return seal(std::move(cert), std::move(t.trace()));
  }

  cert.verdict = inconclusive(first_unverified_reason(t.trace()));
  return seal(std::move(cert), std::move(t.trace()));
}

Certificate certify(const Polynomial& f, const Polynomial& h, const CertifyOptions& options) {
  const int n = f.degree();
  try {
    if (f.degree() != h.degree() || n < 1) {
      Certificate cert = blank(f, h, std::max(n, 0));
      TraceBuilder t(options);
      t.record("equal_degree", cite::kEqualDegree, false,
               "deg f = " + std::to_string(f.degree()) + ", deg h = " + std::to_string(h.degree()));
      cert.verdict = inconclusive("f and h must have the same positive degree");
      return seal(std::move(cert), std::move(t.trace()));
    }
    if (n > kMaxFactorDegree) {
      Certificate cert = blank(f, h, n);
      TraceBuilder t(options);
      t.record("f_irreducible", cite::kIrreducible, HypothesisStatus::Unknown,
               "degree " + std::to_string(n) + " exceeds the factoring cap of " + std::to_string(kMaxFactorDegree));
      cert.verdict = inconclusive("degree beyond factoring capability");
      return seal(std::move(cert), std::move(t.trace()));
    }
    // Reducibility only matters on squarefree input; the route functions record the rest.
    const bool sqf = is_squarefree(f) && is_squarefree(h);
    if (sqf) {
      const Irreducibility irr = irreducibility(f, h);
      if (irr.f != irr.h) return apply_route_one_reducible(f, h, n, options);
      if (!irr.f) {
        Certificate cert = apply_route_one_reducible(f, h, n, options);
        if (cert.verdict.reason.rfind("hypothesis exactly_one_irreducible", 0) == 0) {
          cert.verdict.reason = "both polynomials reducible: no criterion applies";
        }
        return cert;
      }
    }
    return apply_route_both_irreducible(f, h, n, options);
  } catch (const std::exception& e) {
    Certificate cert = blank(f, h, std::max(n, 0));
    cert.trace.push_back({"computation", "exact arithmetic", HypothesisStatus::Unknown, e.what()});
    cert.verdict = inconclusive(std::string("computation failed: ") + e.what());
    return cert;
  }
}

bool chain_is_sound(const Certificate& cert) {
  if (cert.verdict.tag == VerdictTag::Inconclusive) return true;
  if (cert.trace.empty()) return false;
  return std::all_of(cert.trace.begin(), cert.trace.end(),
                     [](const Hypothesis& h) { return h.status == HypothesisStatus::Verified; });
}

}  // namespace nonisog
