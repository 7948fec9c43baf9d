#include "rmatch/io.hpp"

#include <limits>
#include <stdexcept>

namespace rmatch {

namespace {

Json bigint_to_json(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return Json(v.convert_to<std::int64_t>());
  return Json(v.str());
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected integer or decimal string");
}

}  // namespace

Json rational_to_json(const Rational& r) {
  return Json{{"num", bigint_to_json(numerator(r))},
              {"den", bigint_to_json(denominator(r))}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number_float()) return Rational(j.get<double>());
  if (j.is_object()) {
    const BigInt num = bigint_from_json(j.at("num"));
    const BigInt den = j.contains("den") ? bigint_from_json(j.at("den"))
                                         : BigInt(1);
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  }
  throw std::invalid_argument("expected a rational value");
}

Json quad_to_json(const Quad& q) {
  Json j = rational_to_json(q.rational_part());
  if (q.sqrt2_part() != 0)
    j["sqrt2_coeff"] = rational_to_json(q.sqrt2_part());
  return j;
}

Quad quad_from_json(const Json& j) {
  if (j.is_number()) return Quad(rational_from_json(j));
  if (!j.is_object()) throw std::invalid_argument("expected a weight value");
  Rational a(0);
  if (j.contains("num")) {
    Json base = j;
    base.erase("sqrt2_coeff");
    a = rational_from_json(base);
  }
  Rational b(0);
  if (j.contains("sqrt2_coeff")) b = rational_from_json(j.at("sqrt2_coeff"));
  return Quad(std::move(a), std::move(b));
}

Json instance_to_json(const WeightedGraph& g) {
  Json edges = Json::array();
  for (int e = 0; e < g.edge_count(); ++e) {
    edges.push_back(Json{{"u", g.edges[e].first},
                         {"v", g.edges[e].second},
                         {"w", quad_to_json(g.weights[e])}});
  }
  return Json{{"type", "graph"}, {"n", g.n_vertices}, {"edges", edges}};
}

Json instance_to_json(const ExplicitInstance& inst) {
  Json weights = Json::array();
  for (const Quad& q : inst.weights.values()) weights.push_back(quad_to_json(q));
  return Json{{"type", "explicit"},
              {"ground", inst.ground},
              {"bases", inst.bases},
              {"weights", weights}};
}

Instance parse_instance(const Json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "graph") {
    const int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    std::vector<Quad> weights;
    for (const Json& edge : j.at("edges")) {
      edges.emplace_back(edge.at("u").get<int>(), edge.at("v").get<int>());
      weights.push_back(quad_from_json(edge.at("w")));
    }
    return make_graph(n, std::move(edges), std::move(weights));
  }
  if (type == "explicit") {
    ExplicitInstance inst;
    inst.ground = j.at("ground").get<int>();
    for (const Json& base : j.at("bases"))
      inst.bases.push_back(base.get<ElemSet>());
    std::vector<Quad> weights;
    if (j.contains("weights")) {
      for (const Json& w : j.at("weights")) weights.push_back(quad_from_json(w));
    } else {
      weights.assign(static_cast<size_t>(inst.ground), Quad(1));
    }
    if (static_cast<int>(weights.size()) != inst.ground)
      throw std::invalid_argument("weight count mismatch");
    inst.weights = Weighting(std::move(weights));
    return inst;
  }
  throw std::invalid_argument("unknown instance type: " + type);
}

Rational parse_decimal_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(BigInt(text));
  const std::string head = text.substr(0, dot);
  const std::string tail = text.substr(dot + 1);
  if (tail.empty()) return Rational(BigInt(head));
  const bool negative = !head.empty() && head.front() == '-';
  BigInt scale = 1;
  for (std::size_t i = 0; i < tail.size(); ++i) scale *= 10;
  const BigInt whole(head.empty() || head == "-" ? "0" : head);
  const BigInt frac(tail);
  const BigInt total = whole * scale + (negative ? -frac : frac);
  return Rational(total, scale);
}

}  // namespace rmatch
