#pragma once

#include "rmatch/graph.hpp"
#include "rmatch/sets.hpp"

#include <utility>
#include <vector>

namespace rmatch {

// Optimal dual of the squared-weight matching LP on a bipartite graph. The
// dual variable of vertex v is y_v^2 (it is non-negative); ysq holds it
// exactly, y() takes the square roots.
struct MatchingDual {
  std::vector<Quad> ysq;
  std::vector<double> y() const;
};

// Feasible dual of the cardinality-k matching LP whose value is sqrt(2)
// times w(M_k), in units scaled so the cheapest edge of M_k has weight 1.
struct DualCertificate {
  int k = 0;
  double z_star = 0;
  std::vector<double> y_star;  // per vertex, scaled units
  Quad scale;                  // weight of the cheapest edge of M_k
};

struct CertificateCheck {
  bool feasible = false;
  double value = 0;  // k z* + sum_v y*_v, scaled units
  bool bound_holds = false;
};

// Matching maximizing the squared weights together with a complementary-
// slack optimal dual, both exact (one simplex solve; the bipartite degree
// polytope is integral, so the primal vertex is a matching).
std::pair<ElemSet, MatchingDual> squared_matching_dual(const WeightedGraph& g,
                                                       const Weighting& w);

DualCertificate build_certificate(const WeightedGraph& g, const Weighting& w,
                                  const ElemSet& matching,
                                  const MatchingDual& dual, int k);

// Rechecks dual feasibility over all input edges and the value identity
// k z* + sum y* = sqrt(2) w'(M_k); both together certify (after unscaling)
// OPT_k <= sqrt(2) w(M_k).
CertificateCheck verify_certificate(const WeightedGraph& g,
                                    const Weighting& w,
                                    const ElemSet& matching,
                                    const DualCertificate& cert,
                                    double tol = 1e-9);

}  // namespace rmatch
