// Acceptance suite: runs every release criterion at its stated tolerance
// (all exact) and prints one pass/fail line per criterion.

#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cld/audit.hpp"
#include "cld/composite.hpp"
#include "cld/connectives.hpp"
#include "cld/dsl.hpp"
#include "cld/json_io.hpp"
#include "test_util.hpp"

using cld::AdmissibleMatrix;
using cld::AuditReport;
using cld::Proposition;
using cld::Rational;
using cld::Verdict;

namespace {

int failures = 0;

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

void criterion(int number, const std::string& description,
               const std::function<void(Check&)>& body) {
  Check check;
  try {
    body(check);
  } catch (const std::exception& e) {
    check.ok = false;
    check.detail = std::string("exception: ") + e.what();
  }
  if (check.ok) {
    std::printf("[PASS] criterion %2d: %s\n", number, description.c_str());
  } else {
    ++failures;
    std::printf("[FAIL] criterion %2d: %s -- %s\n", number, description.c_str(),
                check.detail.c_str());
  }
}

const std::vector<Rational>& family_parameters() {
  static const std::vector<Rational> cs = {Rational(-1, 4), Rational(-1, 8),
                                           Rational(0), Rational(1, 8),
                                           Rational(1, 4)};
  return cs;
}

long count_selectors(int rows, int cols) {
  long n = 0;
  for (const auto& g : cld::enumerate_admissible(rows, cols)) {
    (void)g;
    ++n;
  }
  return n;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

} // namespace

int main() {
  criterion(1, "enumeration counts: 2x2 -> 4, 2x4 -> 16, 4x4 -> 256 = 16 * 16",
            [](Check& c) {
              c.require(count_selectors(2, 2) == 4, "2x2 count");
              c.require(count_selectors(2, 4) == 16, "2x4 count");
              c.require(count_selectors(4, 4) == 256, "4x4 count");
              c.require(count_selectors(2, 4) * count_selectors(2, 4) ==
                            count_selectors(4, 4),
                        "pairing count identity");
              c.require(cld::enumerate_admissible(4, 4).count() == 256,
                        "closed-form count");
            });

  criterion(2, "swap pipeline exact for C in {-1/4,-1/8,0,1/8,1/4}", [](Check& c) {
    const AdmissibleMatrix swap(4, {2, 1, 3, 4});
    const cld::BipartiteShape s{2, 2};
    for (const auto& C : family_parameters()) {
      const Proposition a = cld::context_family(C);
      const Rational q(1, 4);
      const Proposition expected_image({q - C, q + C, q - C, q + C});
      c.require(cld::apply(swap, a) == expected_image, "image at C=" + C.str());
      c.require(cld::marginal_first(a, s) == Proposition::uniform(2),
                "input first marginal at C=" + C.str());
      c.require(cld::marginal_second(a, s) == Proposition::uniform(2),
                "input second marginal at C=" + C.str());
      const Rational half(1, 2);
      const Proposition expected_second({half - Rational(2) * C,
                                         half + Rational(2) * C});
      c.require(cld::marginal_second(cld::apply(swap, a), s) == expected_second,
                "output second marginal at C=" + C.str());
      c.require(cld::marginal_first(cld::apply(swap, a), s) ==
                    Proposition::uniform(2),
                "output first marginal at C=" + C.str());
    }
    c.require(cld::marginal_second(cld::apply(swap, cld::context_family(
                                                  Rational(-1, 4))),
                                   s) == Proposition({Rational(1), Rational(0)}),
              "boundary C=-1/4 reads [1, 0]");
    c.require(cld::marginal_second(cld::apply(swap, cld::context_family(
                                                  Rational(1, 4))),
                                   s) == Proposition({Rational(0), Rational(1)}),
              "boundary C=1/4 reads [0, 1]");
  });

  criterion(3, "context of the family equals C; every product state has context 0",
            [](Check& c) {
              for (const auto& C : family_parameters())
                c.require(cld::context(cld::context_family(C)) == C,
                          "family context at C=" + C.str());
              std::mt19937_64 rng(1);
              for (int t = 0; t < 200; ++t) {
                const Rational C(static_cast<long>(rng() % 129) - 64, 256);
                c.require(cld::context(cld::context_family(C)) == C,
                          "family context at C=" + C.str());
              }
              // polynomial-grid identity, bidegree (2,2): 5 points per factor
              const std::vector<Rational> pts = {Rational(0), Rational(1, 3),
                                                 Rational(1, 2), Rational(2, 3),
                                                 Rational(1)};
              for (const auto& x : pts)
                for (const auto& y : pts) {
                  const Proposition prod =
                      cld::tensor(Proposition({x, Rational(1) - x}),
                                  Proposition({y, Rational(1) - y}));
                  c.require(cld::context(prod) == Rational(0),
                            "product context at (" + x.str() + "," + y.str() + ")");
                }
              for (int t = 0; t < 200; ++t) {
                const Proposition a = cld::testutil::random_proposition(rng, 2);
                const Proposition b = cld::testutil::random_proposition(rng, 2);
                c.require(cld::context(cld::tensor(a, b)) == Rational(0),
                          "random product context");
              }
            });

  criterion(4, "connective algebra exact on 1000+ random rational pairs",
            [](Check& c) {
              std::mt19937_64 rng(2);
              const Proposition top(
                  {Rational(1), Rational(0), Rational(0), Rational(0)});
              const Proposition bottom(
                  {Rational(0), Rational(0), Rational(0), Rational(1)});
              for (int t = 0; t < 1000; ++t) {
                const Proposition a = cld::testutil::random_proposition(rng, 4);
                const Proposition b = cld::testutil::random_proposition(rng, 4);
                const Proposition ab = cld::conjunction4(a, b);
                const Proposition ob = cld::disjunction4(a, b);
                c.require(ab == cld::apply(cld::meet_selector(), cld::tensor(a, b)),
                          "meet selector agreement");
                c.require(ob == cld::apply(cld::join_selector(), cld::tensor(a, b)),
                          "join selector agreement");
                c.require(ob == cld::negation4(cld::conjunction4(
                                    cld::negation4(a), cld::negation4(b))),
                          "De Morgan");
                c.require(cld::negation4(cld::negation4(a)) == a, "involution");
                c.require(ab == cld::conjunction4(b, a), "and commutativity");
                c.require(ob == cld::disjunction4(b, a), "or commutativity");
                const Proposition d = cld::testutil::random_proposition(rng, 4);
                c.require(cld::conjunction4(ab, d) ==
                              cld::conjunction4(a, cld::conjunction4(b, d)),
                          "and associativity");
                c.require(cld::disjunction4(ob, d) ==
                              cld::disjunction4(a, cld::disjunction4(b, d)),
                          "or associativity");
                c.require(cld::conjunction4(top, a) == a, "unit of and");
                c.require(cld::disjunction4(bottom, a) == a, "unit of or");
              }
            });

  criterion(5, "projections commute with connectives on 1000+ random inputs",
            [](Check& c) {
              const cld::BipartiteShape s{2, 2};
              std::mt19937_64 rng(3);
              for (int t = 0; t < 1000; ++t) {
                const Proposition a = cld::testutil::random_proposition(rng, 4);
                const Proposition b = cld::testutil::random_proposition(rng, 4);
                c.require(cld::marginal_first(cld::negation4(a), s) ==
                              cld::not2(cld::marginal_first(a, s)),
                          "proj1 of negation");
                c.require(cld::marginal_second(cld::negation4(a), s) ==
                              cld::not2(cld::marginal_second(a, s)),
                          "proj2 of negation");
                c.require(cld::marginal_first(cld::conjunction4(a, b), s) ==
                              cld::and2(cld::marginal_first(a, s),
                                        cld::marginal_first(b, s)),
                          "proj1 of conjunction");
                c.require(cld::marginal_second(cld::conjunction4(a, b), s) ==
                              cld::and2(cld::marginal_second(a, s),
                                        cld::marginal_second(b, s)),
                          "proj2 of conjunction");
                c.require(cld::marginal_first(cld::disjunction4(a, b), s) ==
                              cld::or2(cld::marginal_first(a, s),
                                       cld::marginal_first(b, s)),
                          "proj1 of disjunction");
                c.require(cld::marginal_second(cld::disjunction4(a, b), s) ==
                              cld::or2(cld::marginal_second(a, s),
                                       cld::marginal_second(b, s)),
                          "proj2 of disjunction");
              }
            });

  criterion(6, "theorem2 audit refutes the universal claim deterministically",
            [](Check& c) {
              const AuditReport first = cld::theorem2_audit();
              const AuditReport second = cld::theorem2_audit();
              c.require(cld::to_json(first).dump() == cld::to_json(second).dump(),
                        "byte-identical reruns");
              c.require(first.verdict == Verdict::Refuted, "verdict");
              c.require(first.witnesses.size() == second.witnesses.size() &&
                            !first.witnesses.empty(),
                        "stable preserving count");
              c.require(first.notes.find(std::to_string(first.witnesses.size())) !=
                            std::string::npos,
                        "preserving count reported in notes");
              bool witness_found = false;
              for (const auto& ce : first.counterexamples)
                if (ce.transformation ==
                        cld::to_json(AdmissibleMatrix(4, {1, 4, 3, 2})) &&
                    ce.input == cld::json::parse(
                                    R"({"probs":["1/2","1/2","0","0"]})") &&
                    ce.offending == cld::json("1/4"))
                  witness_found = true;
              c.require(witness_found,
                        "counterexample [1,4,3,2] on [1/2,1/2,0,0] with context 1/4");
            });

  criterion(7, "closure audit confirms negation/conjunction/disjunction laws",
            [](Check& c) {
              const AuditReport r = cld::closure_audit();
              c.require(r.verdict == Verdict::Confirmed, "verdict");
              c.require(r.counterexamples.empty(), "no counterexamples");
            });

  criterion(8, "isometry audit confirms with the distance-factor erratum",
            [](Check& c) {
              const AuditReport r = cld::isometry_audit();
              c.require(r.verdict == Verdict::ConfirmedWithErratum, "verdict");
              const AdmissibleMatrix swap(4, {2, 1, 3, 4});
              for (const auto& c1 : family_parameters())
                for (const auto& c2 : family_parameters()) {
                  const Proposition a1 = cld::context_family(c1);
                  const Proposition a2 = cld::context_family(c2);
                  c.require(cld::distance(a1, a2) ==
                                cld::distance(cld::apply(swap, a1),
                                              cld::apply(swap, a2)),
                            "isometry at (" + c1.str() + "," + c2.str() + ")");
                  c.require(cld::distance(a1, a2) == Rational(2) * (c1 - c2).abs(),
                            "definitional 2|C1-C2|");
                }
              for (const auto& C : family_parameters()) {
                const Proposition a = cld::context_family(C);
                const Proposition prod =
                    cld::tensor(cld::marginal_first(a, {2, 2}),
                                cld::marginal_second(a, {2, 2}));
                c.require(cld::distance(a, prod) == Rational(2) * C.abs(),
                          "nearest-product evidence 2|C|");
              }
              c.require(r.notes.find("Erratum") != std::string::npos,
                        "erratum recorded");
            });

  criterion(9, "dsl golden script evaluates exactly; malformed corpus is positioned",
            [](Check& c) {
              const std::string source = read_file(
                  std::string(CLD_TEST_DATA_DIR) + "/context_recognition.ctx");
              const std::string expected = read_file(
                  std::string(CLD_TEST_DATA_DIR) + "/context_recognition.expected");
              std::string got;
              for (const auto& v : cld::dsl::eval(cld::dsl::parse(source)))
                got += cld::dsl::format_value(v) + "\n";
              c.require(got == expected, "golden output");

              const auto& corpus = cld::testutil::malformed_scripts();
              c.require(corpus.size() >= 10, "corpus size");
              for (const auto& bad : corpus) {
                bool positioned = false;
                try {
                  cld::dsl::eval(cld::dsl::parse(bad));
                } catch (const cld::dsl::ScriptError& e) {
                  positioned = e.pos().line >= 1 && e.pos().col >= 1;
                }
                c.require(positioned, "positioned error for: " + bad);
              }
            });

  criterion(10, "every selector maps 1000+ random propositions onto propositions",
             [](Check& c) {
               std::mt19937_64 rng(4);
               long props_checked = 0;
               for (int n = 1; n <= 4; ++n) {
                 std::vector<Proposition> samples;
                 for (int t = 0; t < 260; ++t)
                   samples.push_back(cld::testutil::random_proposition(rng, n));
                 props_checked += static_cast<long>(samples.size());
                 for (int m = 1; m <= 4; ++m)
                   for (const auto& g : cld::enumerate_admissible(m, n))
                     for (const auto& p : samples) {
                       const Proposition image = cld::apply(g, p);
                       Rational sum;
                       bool nonneg = true;
                       for (int i = 0; i < image.size(); ++i) {
                         if (image[i] < Rational(0)) nonneg = false;
                         sum += image[i];
                       }
                       c.require(nonneg && sum == Rational(1) && image.size() == m,
                                 "image validity");
                     }
               }
               c.require(props_checked >= 1000, "sample size");
             });

  if (failures == 0) {
    std::printf("all criteria passed\n");
  } else {
    std::printf("%d criterion(s) failed\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
