#pragma once

#include <cmath>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arcstab/action.hpp"
#include "arcstab/bigint.hpp"
#include "arcstab/bounds.hpp"
#include "arcstab/error.hpp"

namespace arcstab {

// One row of invariants for a graph/group pair, as emitted by the CLI.
struct AnalysisReport {
  std::string construction;
  std::string params;  // semicolon-separated key=value items
  int n = 0;
  int valency = 0;
  BigInt group_order = 0;
  BigInt vertex_stab = 0;
  BigInt arc_stab = 0;
  BigInt local_group_order = 0;
  int bound_p = 0;
  BigInt bound_value = 0;
  bool ok = false;
};

// Computes all reported invariants and cross-checks them against each other;
// `ok` records whether every check (including the shrinking-stabiliser
// certificate) went through.  Non-arc-transitive input yields ok=false
// rather than an exception, so callers can still see the partial numbers.
inline AnalysisReport analyze_pair(const Pair& pair, std::string construction,
                                   std::string params) {
  AnalysisReport rep;
  rep.construction = std::move(construction);
  rep.params = std::move(params);
  rep.n = pair.graph.vertex_count();
  int valency = 0;
  bool regular = pair.graph.regular(&valency);
  rep.valency = regular ? valency : -1;
  rep.group_order = pair.group.order();

  auto [u, v] = pair.first_arc();
  rep.vertex_stab = pair.group.point_stabiliser(u).order();
  rep.arc_stab = arc_stabiliser(pair, u, v).order();
  rep.local_group_order = local_group(pair, u).group.order();

  bool ok = regular && pair.vertex_transitive && pair.arc_transitive;
  ok = ok && rep.vertex_stab * rep.n == rep.group_order;
  ok = ok && rep.arc_stab * BigInt(pair.graph.arc_count()) == rep.group_order;
  ok = ok && rep.local_group_order % rep.valency == 0;
  if (pair.arc_transitive) {
    BoundCertificate cert = exp_bound_certificate(pair, u, v);
    rep.bound_p = cert.p;
    rep.bound_value = cert.bound;
    ok = ok && cert.orders.front() == rep.arc_stab && rep.arc_stab <= rep.bound_value;
  } else {
    ok = false;
  }
  rep.ok = ok;
  return rep;
}

inline std::string csv_header() {
  return "construction,params,n,valency,group_order,vertex_stab,arc_stab,"
         "local_group,bound_p,bound_value,ok";
}

inline std::string csv_row(const AnalysisReport& r) {
  std::ostringstream out;
  out << r.construction << ',' << r.params << ',' << r.n << ',' << r.valency << ','
      << r.group_order << ',' << r.vertex_stab << ',' << r.arc_stab << ','
      << r.local_group_order << ',' << r.bound_p << ',' << r.bound_value << ','
      << (r.ok ? "true" : "false");
  return out.str();
}

// Verdict of the finite-sample growth heuristic over a parameter sweep.
struct GrowthVerdict {
  std::string label;  // "Cons-like", "Pol-like", "Exp-like", "inconclusive"
  std::string note = "finite-sample trend, not a proof";
};

// Heuristic reading of arc-stabiliser growth across increasing graph sizes:
// constant orders are Cons-like; if ln|G_uv|/n keeps rising over the larger
// half of the sample the growth looks exponential; if instead the exponent
// ln|G_uv|/ln n stabilises or rises while ln|G_uv|/n falls, it looks
// polynomial.  The exponential test runs first because a polynomial-looking
// exponent can still climb while the per-vertex rate climbs too.
inline GrowthVerdict classify_growth(const std::vector<long long>& sizes,
                                     const std::vector<BigInt>& arc_stabs) {
  require(sizes.size() == arc_stabs.size(), Errc::precondition,
          "sizes and stabiliser orders must align");
  require(sizes.size() >= 2, Errc::precondition, "need at least two sample points");
  const std::size_t k = sizes.size();
  for (std::size_t i = 1; i < k; ++i)
    require(sizes[i] > sizes[i - 1], Errc::precondition,
            "sample sizes must be strictly increasing");

  bool constant = true;
  for (std::size_t i = 1; i < k; ++i) constant = constant && arc_stabs[i] == arc_stabs[0];
  if (constant) return {"Cons-like"};

  std::vector<double> per_vertex(k), exponent(k);
  for (std::size_t i = 0; i < k; ++i) {
    double lg = std::log(arc_stabs[i].convert_to<double>());
    per_vertex[i] = lg / static_cast<double>(sizes[i]);
    exponent[i] = lg / std::log(static_cast<double>(sizes[i]));
  }
  const std::size_t half = k / 2;
  const double tol = 1e-9;
  bool rate_up = true, rate_down = true, exp_up = true;
  for (std::size_t i = half; i + 1 < k; ++i) {
    rate_up = rate_up && per_vertex[i + 1] >= per_vertex[i] - tol;
    rate_down = rate_down && per_vertex[i + 1] <= per_vertex[i] + tol;
    exp_up = exp_up && exponent[i + 1] >= exponent[i] - tol;
  }
  if (rate_up) return {"Exp-like"};
  if (exp_up && rate_down) return {"Pol-like"};
  return {"inconclusive"};
}

// Human-readable trace of the shrinking-stabiliser certificate: the chain of
// fixed sets, the branch vertices chosen, and the resulting order bound.
inline void print_bound_certificate(std::ostream& out, const BoundCertificate& cert, int n) {
  out << "arc (" << cert.u << ", " << cert.v << "), local point stabiliser order "
      << cert.local_stab_order << ", branching prime p = " << cert.p << "\n";
  for (std::size_t i = 0; i < cert.sets.size(); ++i) {
    out << "  step " << i << ": |S| = " << cert.sets[i].size()
        << ", pointwise stabiliser order " << cert.orders[i];
    if (i < cert.steps.size()) {
      const BoundStep& s = cert.steps[i];
      out << "; attach x = " << s.x << " (neighbour of fixed " << s.w << "), orbit size "
          << s.orbit.size();
    }
    out << "\n";
  }
  out << "steps m = " << cert.step_count() << ", m*p = " << cert.step_count() * cert.p
      << " <= n-2 = " << n - 2 << "\n";
  out << "arc stabiliser order " << cert.orders.front() << " <= bound " << cert.bound
      << "\n";
}

}  // namespace arcstab
