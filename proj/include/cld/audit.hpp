#ifndef CLD_AUDIT_HPP
#define CLD_AUDIT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cld/admissible.hpp"
#include "cld/composite.hpp"
#include "cld/json_io.hpp"
#include "cld/proposition.hpp"

namespace cld {

enum class Verdict { Confirmed, Refuted, ConfirmedWithErratum };

// "CONFIRMED", "REFUTED", "CONFIRMED_WITH_ERRATUM"
std::string_view verdict_name(Verdict v);
Verdict verdict_from_name(std::string_view name);

struct Witness {
  json input;
  json output;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Counterexample {
  json transformation;
  json input;
  json offending;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

// Deterministic, serializable record of one checked claim. Content is fixed
// by enumeration order, so identical runs produce identical reports.
struct AuditReport {
  std::string claim_id;
  Verdict verdict = Verdict::Confirmed;
  std::vector<Witness> witnesses;
  std::vector<Counterexample> counterexamples;
  std::string notes;

  friend bool operator==(const AuditReport&, const AuditReport&) = default;
};

json to_json(const AuditReport& r);
AuditReport report_from_json(const json& j);

// Human-readable summary; truncates long witness/counterexample lists
// deterministically.
std::string to_text(const AuditReport& r);

// Decides, for each of the 256 one-place 4x4 selectors, whether it maps every
// product state to a product state. The image context is a polynomial of
// degree <= 2 in each factor parameter, so vanishing on the 5x5 product grid
// {0,1/3,1/2,2/3,1}^2 is equivalent to vanishing identically. Preserving
// selectors are listed as witnesses; every non-preserving selector gets a
// concrete counterexample.
AuditReport theorem2_audit();

// For one decomposability-preserving selector: searches all 16x16 ordered
// pairs of 2x4 selectors (g1, g2) with
// apply(g, a (x) b) == apply(g1, a (x) b) (x) apply(g2, a (x) b) on the full
// product grid, and reports whether exactly one pair matches. Throws
// NotPreservingError when g is not preserving.
AuditReport pairing_check(const AdmissibleMatrix& g);

// Aggregate pairing check over every preserving selector found by
// theorem2_audit.
AuditReport pairing_audit();

// Closure of decomposable propositions under the basic connectives:
// negation preserves the context of EVERY proposition (checked as a
// polynomial identity on a simplex lattice), and conjunction/disjunction of
// product states have context 0 (grid {0,1/3,1/2,2/3,1}^4, degree <= 2 per
// variable).
AuditReport closure_audit();

// Distance preservation of the swap selector [2,1,3,4] on the symmetric
// family, plus the distance-factor erratum: definitional distances on the
// family are 2|C1-C2| and the distance to the marginal product is 2|C|,
// against the claimed 4|.| values.
AuditReport isometry_audit();

// DP-preserving / DP-breaking classification of all 256 one-place selectors
// plus the built-in two-place selectors (meet, join) and sample_size
// pseudo-random two-place selectors drawn from a seeded generator.
AuditReport connective_dp_classification(int sample_size, std::uint64_t seed);

// The context-recognition demonstration: the symmetric family member with
// context C is pushed through the swap selector; the first projection stays
// uniform while the second becomes [1/2-2C, 1/2+2C].
struct ContextRecognitionRecord {
  Rational C;
  Proposition input;
  Proposition input_first;
  Proposition input_second;
  Proposition image;
  Proposition image_first;
  Proposition image_second;
};

ContextRecognitionRecord context_recognition_demo(const Rational& c);
json to_json(const ContextRecognitionRecord& r);

} // namespace cld

#endif
