#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nonisog/galois.hpp"
#include "nonisog/polynomial.hpp"

namespace nonisog {

enum class HypothesisStatus { Verified, Failed, Unknown };
std::string_view to_string(HypothesisStatus s);

/// One checked hypothesis. `verified` is only ever set from an exact computation.
struct Hypothesis {
  std::string name;      // stable identifier, e.g. "linearly_disjoint"
  std::string citation;  // the mathematical result the check feeds
  HypothesisStatus status = HypothesisStatus::Unknown;
  std::string detail;
};

struct DisjointnessResult {
  enum class Kind { Disjoint, NotDisjoint, Unknown };
  Kind kind = Kind::Unknown;
  std::string rule;    // "R0".."R3" when a rule fired
  std::string detail;  // witness / explanation
};

enum class VerdictTag { NotIsogenousOverClosure, IsogenyImpliesCM, HomZero, Inconclusive };
std::string_view to_string(VerdictTag t);
std::optional<VerdictTag> parse_verdict_tag(std::string_view text);

struct Verdict {
  VerdictTag tag = VerdictTag::Inconclusive;
  int cyclotomic_degree = 0;  // IsogenyImpliesCM only
  std::string reason;         // Inconclusive only
};

struct CharPConstraint {
  Integer p;
  std::optional<Integer> f_p;  // order of p mod n; empty when p = n
  bool allowed = true;         // whether the supersingular branch survives in char p
};

struct Certificate {
  Polynomial f;
  Polynomial h;
  int n = 0;
  Verdict verdict;
  std::vector<CharPConstraint> char_p_constraints;
  std::vector<Hypothesis> trace;
};

struct CertifyOptions {
  /// Fault injection: the hypothesis with this name is recorded as failed.
  std::optional<std::string> force_fail;
  /// Characteristic-p table covers odd primes below this bound.
  std::uint64_t char_p_bound = 50;
};

/// Verified iff n is an odd prime and 2 is a primitive root mod n.
Hypothesis check_setting(int n);

/// Rules, in order: R0 identical monic inputs (NotDisjoint); R1 Gal(h) cyclic
/// of order n and Gal(f) doubly transitive; R2 the same with roles swapped;
/// R3 {S5, F20} with distinct squarefree parts of the two discriminants.
/// Anything else is Unknown. Requires squarefree irreducible inputs of equal
/// degree 3 or 5 (InvalidInput / CapabilityError otherwise).
DisjointnessResult prove_linear_disjointness(const Polynomial& f, const Polynomial& h);

struct SupersingularConstraint {
  std::optional<Integer> f_p;
  bool allowed = true;
};
/// For p != n: f_p = order of p mod n, and the supersingular escape in
/// characteristic p is allowed iff f_p is even. p = n gives (none, true).
/// Throws InvalidInput unless n is an odd prime and p is prime.
SupersingularConstraint supersingular_constraint(const Integer& n, const Integer& p);

/// Exactly one of f, h irreducible: an isogeny forces CM by Q(zeta_n). For
/// n = 3 over Q the verdict is upgraded to non-isogeny unless both
/// j-invariants lie in S.
Certificate apply_route_one_reducible(const Polynomial& f, const Polynomial& h, int n,
                                      const CertifyOptions& options = {});

/// Both irreducible: Hom = 0 from a doubly transitive group plus linear
/// disjointness, or for two cyclic cubics, non-isogeny from non-isomorphic
/// stem fields.
Certificate apply_route_both_irreducible(const Polynomial& f, const Polynomial& h, int n,
                                         const CertifyOptions& options = {});

/// Validates the pair and dispatches on the reducibility pattern. Never
/// throws for mathematically bad input; failures land in the trace with an
/// Inconclusive verdict.
Certificate certify(const Polynomial& f, const Polynomial& h, const CertifyOptions& options = {});

/// A claim (anything but Inconclusive) must rest on a nonempty trace whose
/// hypotheses are all verified.
bool chain_is_sound(const Certificate& cert);

}  // namespace nonisog
