#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlink/operator.hpp"
#include "qlink/report.hpp"

namespace qlink::aw {

// Intermediate Casimir labels; c13t is the second recoupling of factors 1 and 3.
enum class AWIndex { c1, c2, c3, c12, c23, c13, c123, c13t };

inline constexpr AWIndex all_indices[] = {AWIndex::c1,  AWIndex::c2,  AWIndex::c3,   AWIndex::c12,
                                          AWIndex::c23, AWIndex::c13, AWIndex::c123, AWIndex::c13t};

// "1", "2", "3", "12", "23", "13", "123", "13~"
std::string to_string(AWIndex i);
std::optional<AWIndex> parse_index(std::string_view text);

struct TripleShape {
  Spin j1;
  Spin j2;
  Spin j3;

  Shape shape() const { return Shape{j1, j2, j3}; }
  std::string to_string() const;
  // "1/2,1,3/2"
  static TripleShape parse(std::string_view text);
};

// Coproduct route. Q13 and Q13~ conjugate Q12 built on (j1, j3, j2) by the
// braiding of factors 2 and 3.
Operator q_elem(AWIndex i, const TripleShape& s);

// False only for Q3, which has no partial-trace expression.
bool has_trace_formula(AWIndex i);

// Partial-trace route over an auxiliary spin-1/2 factor placed first:
// products of L-matrices on (1/2, j1, j2, j3), traced with weight mu.
// Q3 falls back to q_elem.
Operator q_elem_trace(AWIndex i, const TripleShape& s);

// Tr_a(L+_{a1} ... L+_{an} L-_{an} ... L-_{a1} M_a) on an arbitrary shape;
// equals the Casimir on the full iterated coproduct.
Operator nested_casimir_trace(const Shape& s);

// Operators substituted for C_I in the relations.
struct Generators {
  Operator c1, c2, c3, c12, c23, c13, c123;
};

Generators generators(const TripleShape& s);

// Residuals of the four defining relations for arbitrary operators.
Report check_aw(const Generators& g, const std::string& title);

Report verify_aw(const TripleShape& s);
Report verify_routes(const TripleShape& s);
// Q12 Q23 expansion and its q -> q^-1 mirror for Q23 Q12.
Report verify_expansion(const TripleShape& s);
// Every Q_I commutes with the diagonal action of E, F, q^H.
Report verify_centrality(const TripleShape& s);
// Q1, Q2, Q3, Q123 commute with everything; Q12 and Q23 do not when no spin is 0.
Report verify_commutations(const TripleShape& s);
// Braiding conjugations relating Q13, Q13~ and Q23 to Q12 and Q23.
Report verify_conjugations(const TripleShape& s);
// Trace routes for the Casimir on one and two factors, each twice-spin up to max_twice.
Report verify_casimir_traces(int max_twice = 4);

Report verify_p_identities();
Report verify_tl_iso();

// prod_j (Q_I - chi_j) == 0 over the spins in the relevant decomposition.
// Usage error for Q1, Q2, Q3.
Report spectrum_report(AWIndex i, const TripleShape& s);

enum class Suite { relations, routes, expansion, p_props, tl_iso, spectrum, all };

std::optional<Suite> parse_suite(std::string_view text);
Report run_suite(Suite suite, const TripleShape& s);

}  // namespace qlink::aw
