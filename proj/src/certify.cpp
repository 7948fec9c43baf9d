#include "rmatch/certify.hpp"

#include "rmatch/simplex.hpp"
#include "rmatch/weights.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rmatch {

std::vector<double> MatchingDual::y() const {
  std::vector<double> out;
  out.reserve(ysq.size());
  for (const Quad& q : ysq) out.push_back(std::sqrt(q.to_double()));
  return out;
}

std::pair<ElemSet, MatchingDual> squared_matching_dual(const WeightedGraph& g,
                                                       const Weighting& w) {
  if (w.size() != g.edge_count())
    throw std::invalid_argument("weighting size mismatch");
  if (!g.bipartition()) throw std::invalid_argument("graph is not bipartite");

  lp::Canonical prob;
  prob.A.assign(static_cast<size_t>(g.n_vertices),
                std::vector<Quad>(static_cast<size_t>(g.edge_count())));
  for (int e = 0; e < g.edge_count(); ++e) {
    prob.A[static_cast<size_t>(g.edges[e].first)][static_cast<size_t>(e)] =
        Quad(1);
    prob.A[static_cast<size_t>(g.edges[e].second)][static_cast<size_t>(e)] =
        Quad(1);
  }
  prob.b.assign(static_cast<size_t>(g.n_vertices), Quad(1));
  prob.c.reserve(static_cast<size_t>(g.edge_count()));
  for (const Quad& q : w.values()) prob.c.push_back(q * q);

  const lp::Solution sol = lp::maximize(prob);
  if (sol.status != lp::Solution::Status::optimal)
    throw std::logic_error("matching LP unbounded");

  // The bipartite degree polytope is integral, so the vertex is a matching.
  ElemSet matching;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Quad& xe = sol.x[static_cast<size_t>(e)];
    if (xe == Quad(1)) {
      matching.push_back(e);
    } else if (!xe.is_zero()) {
      throw std::logic_error("fractional vertex in bipartite matching LP");
    }
  }

  MatchingDual dual{sol.y};
  // Complementary slackness, exact: matched edges are tight, covered-by-
  // nothing vertices carry no dual.
  std::vector<char> covered(static_cast<size_t>(g.n_vertices), 0);
  for (int e : matching) {
    const auto& [u, v] = g.edges[e];
    covered[static_cast<size_t>(u)] = covered[static_cast<size_t>(v)] = 1;
    if (dual.ysq[static_cast<size_t>(u)] + dual.ysq[static_cast<size_t>(v)] !=
        w[e] * w[e])
      throw std::logic_error("complementary slackness violated on a matched edge");
  }
  for (int v = 0; v < g.n_vertices; ++v)
    if (!covered[static_cast<size_t>(v)] &&
        dual.ysq[static_cast<size_t>(v)].sign() != 0)
      throw std::logic_error("uncovered vertex carries positive dual");
  return {std::move(matching), std::move(dual)};
}

DualCertificate build_certificate(const WeightedGraph& g, const Weighting& w,
                                  const ElemSet& matching,
                                  const MatchingDual& dual, int k) {
  if (k < 1 || k > static_cast<int>(matching.size()))
    throw std::invalid_argument("k must lie in 1..|M|");
  const ElemSet mk = top_k(matching, w, k);
  Quad scale = w[mk.front()];
  for (int e : mk)
    if (w[e] < scale) scale = w[e];
  if (scale.sign() <= 0)
    throw std::invalid_argument("cheapest edge of M_k has zero weight");

  const double sqrt2 = std::sqrt(2.0);
  DualCertificate cert;
  cert.k = k;
  cert.z_star = sqrt2;
  cert.scale = scale;
  cert.y_star.assign(static_cast<size_t>(g.n_vertices), 0.0);

  // Scaling w by 1/scale scales the squared-LP duals by 1/scale^2, so the
  // scaled y values are sqrt(ysq)/scale.
  const Quad scale_sq = scale * scale;
  for (int e : mk) {
    auto [u, v] = g.edges[e];
    const double wp = (w[e] / scale).to_double();
    double yu =
        std::sqrt((dual.ysq[static_cast<size_t>(u)] / scale_sq).to_double());
    double yv =
        std::sqrt((dual.ysq[static_cast<size_t>(v)] / scale_sq).to_double());
    if (yu < yv) {
      std::swap(u, v);
      std::swap(yu, yv);
    }
    double su, sv;  // y* at the larger / smaller endpoint
    if (yv < 1.0 / sqrt2) {
      sv = 0.0;
      su = sqrt2 * (wp - 1.0);
    } else {
      su = sqrt2 * (wp * yu / (yu + yv) - 0.5);
      sv = sqrt2 * (wp * yv / (yu + yv) - 0.5);
    }
    for (double* s : {&su, &sv}) {
      if (*s < -1e-12)
        throw std::logic_error("certificate construction produced negative y*");
      if (*s < 0) *s = 0.0;
    }
    cert.y_star[static_cast<size_t>(u)] = su;
    cert.y_star[static_cast<size_t>(v)] = sv;
  }
  return cert;
}

CertificateCheck verify_certificate(const WeightedGraph& g,
                                    const Weighting& w,
                                    const ElemSet& matching,
                                    const DualCertificate& cert, double tol) {
  CertificateCheck check;
  check.feasible = true;
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& [u, v] = g.edges[e];
    const double wp = (w[e] / cert.scale).to_double();
    if (cert.z_star + cert.y_star[static_cast<size_t>(u)] +
            cert.y_star[static_cast<size_t>(v)] <
        wp - tol)
      check.feasible = false;
  }

  check.value = cert.k * cert.z_star;
  for (double y : cert.y_star) check.value += y;

  const ElemSet mk = top_k(matching, w, cert.k);
  const double wmk = (w.sum(mk) / cert.scale).to_double();
  const bool value_ok = std::abs(check.value - std::sqrt(2.0) * wmk) <= tol;
  check.bound_holds = check.feasible && value_ok;
  return check;
}

}  // namespace rmatch
