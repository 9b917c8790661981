#include "cutbound/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cutbound/compose.hpp"
#include "cutbound/generators.hpp"
#include "cutbound/partition.hpp"
#include "cutbound/transforms.hpp"

namespace cutbound {

namespace {

// Distinct streams of per-trial seeds derived from the base seed. The
// composition tag is shared by the certificate and dichotomy suites so both
// examine the same instances.
constexpr std::uint64_t kSubdivisionTag = 0x5d3f0aa1c96b4e27ULL;
constexpr std::uint64_t kCompositionTag = 0xc0917e4b8d25fa63ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t trial_seed(std::uint64_t base, std::uint64_t tag, int trial) {
  return mix64((base ^ tag) +
               static_cast<std::uint64_t>(trial) * 0x9e3779b97f4a7c15ULL);
}

double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) / 9007199254740992.0;  // 2^53
}

CheckResult pass_check(std::string name, std::uint64_t seed = 0) {
  return CheckResult{std::move(name), seed, true, ""};
}

CheckResult fail_check(std::string name, std::uint64_t seed,
                       std::string detail) {
  return CheckResult{std::move(name), seed, false, std::move(detail)};
}

// ---- claim2 suite -------------------------------------------------------

std::vector<CheckResult> closed_form_checks(const VerifyOptions& options) {
  std::vector<CheckResult> results;
  for (int x : {2, 4, 6}) {
    for (int y = 1; y <= 9; ++y) {
      std::ostringstream name;
      name << "closed-form x=" << x << " y=" << y;
      const EdgeCount expected = std::min<EdgeCount>(
          (3 * x + 2 * y) / 2, std::max<EdgeCount>(2 * y, x));
      const EdgeCount exact =
          exact_cutwidth(gen_lower_k(x, y), options.budget).value;
      if (exact == expected) {
        results.push_back(pass_check(name.str()));
      } else {
        std::ostringstream detail;
        detail << "exact " << exact << " != closed form " << expected;
        results.push_back(fail_check(name.str(), 0, detail.str()));
      }
    }
  }
  return results;
}

std::vector<CheckResult> tight_composition_checks(
    const VerifyOptions& options) {
  std::vector<CheckResult> results;
  for (auto [x, y] : {std::pair{2, 3}, std::pair{2, 4}, std::pair{4, 6}}) {
    std::ostringstream name;
    name << "tight-composition x=" << x << " y=" << y;
    const GeneratedInstance inst = gen_lower_g(x, y);
    const Ordering quotient_order =
        exact_cutwidth(quotient_multigraph(inst.graph, inst.partition),
                       options.budget)
            .witness;
    const EdgeCount target = (3 * x + 2 * y) / 2;
    std::ostringstream detail;
    try {
      const BoundCertificate cert = compose_theorem_auto(
          inst.graph, inst.partition, quotient_order, options.budget);
      const EdgeCount exact = exact_cutwidth(inst.graph, options.budget).value;
      if (cert.achieved == target && exact == target && cert.x == x &&
          cert.y == y) {
        results.push_back(pass_check(name.str()));
        continue;
      }
      detail << "achieved " << cert.achieved << ", exact " << exact << ", x "
             << cert.x << ", y " << cert.y << "; all should give " << target
             << " with x=" << x << " y=" << y;
    } catch (const InternalConsistencyError& e) {
      detail << "composer aborted: " << e.what();
    }
    results.push_back(fail_check(name.str(), 0, detail.str()));
  }
  return results;
}

CheckResult subdivided_family_check(const VerifyOptions& options) {
  const std::string name = "subdivided-family-values x=2 y=3";
  const Multigraph h = gen_lower_h(2, 3);
  std::ostringstream detail;

  const EdgeCount exact =
      exact_cutwidth(underlying_undirected(h), options.budget).value;
  if (exact != 6) detail << "exact cutwidth " << exact << " != 6; ";

  const Condensation cond = condensation(h);
  int nontrivial = 0;
  EdgeCount max_class_width = 0;
  for (int c = 1; c <= cond.partition.class_count(); ++c) {
    const std::vector<VertexId>& members = cond.partition.members(c);
    if (members.size() > 1) {
      ++nontrivial;
      if (members.size() != 9) {
        detail << "nontrivial component has " << members.size()
               << " vertices, expected 9; ";
      }
    }
    const InducedSubgraph sub = induced_subgraph(h, members);
    max_class_width = std::max(
        max_class_width,
        exact_cutwidth(underlying_undirected(sub.graph), options.budget)
            .value);
  }
  if (nontrivial != 1) {
    detail << nontrivial << " nontrivial components, expected 1; ";
  }
  if (max_class_width != 3) {
    detail << "max component cutwidth " << max_class_width << " != 3; ";
  }

  const EdgeCount cond_width =
      exact_cutwidth(underlying_undirected(cond.graph), options.budget).value;
  if (cond_width != 2) {
    detail << "condensation cutwidth " << cond_width << " != 2; ";
  }

  if (detail.str().empty()) return pass_check(name);
  return fail_check(name, 0, detail.str());
}

// ---- prop1 suite --------------------------------------------------------

CheckResult subdivision_trial(std::uint64_t seed, const VerifyOptions& options) {
  const std::string name = "subdivision-invariant";
  std::mt19937_64 rng(seed);
  const int max_n = std::max(2, options.subdivision_max_n);
  Multigraph g;
  while (true) {
    const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                                   max_n - 1));
    const EdgeCount max_mult = 1 + static_cast<EdgeCount>(rng() % 3);
    const double density = 0.3 + 0.5 * unit_interval(rng);
    g = gen_random(rng(), n, max_mult, density, 1).graph;
    const EdgeCount total = g.total_multiplicity();
    if (total >= 1 && total <= 14) break;
  }
  const Edge& picked =
      g.edges()[rng() % static_cast<std::uint64_t>(g.edges().size())];
  const EdgeCount count =
      1 + static_cast<EdgeCount>(
              rng() % static_cast<std::uint64_t>(picked.multiplicity));

  const EdgeCount before = exact_cutwidth(g, options.budget).value;
  const SubdivisionResult subdivided =
      multiedge_subdivide(g, picked.u, picked.v, count);
  const EdgeCount after =
      exact_cutwidth(subdivided.graph, options.budget).value;
  if (before == after) return pass_check(name, seed);

  std::ostringstream detail;
  detail << "cutwidth changed " << before << " -> " << after
         << " after subdividing " << count << " of {" << picked.u << ","
         << picked.v << "}";
  return fail_check(name, seed, detail.str());
}

// ---- thm1 / claim1 suites ----------------------------------------------

GeneratedInstance composition_instance(std::uint64_t seed, int max_n) {
  std::mt19937_64 rng(seed);
  const int n =
      1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n));
  const int classes =
      1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
  const EdgeCount max_mult = 1 + static_cast<EdgeCount>(rng() % 3);
  const double density = unit_interval(rng);
  return gen_random(rng(), n, max_mult, density, classes);
}

// Solver-optimal class orderings mapped back to original vertex ids.
std::vector<Ordering> optimal_class_orders(const Multigraph& g,
                                           const VertexPartition& p,
                                           int budget) {
  std::vector<Ordering> orders;
  orders.reserve(p.class_count());
  for (int c = 1; c <= p.class_count(); ++c) {
    const InducedSubgraph sub = induced_subgraph(g, p.members(c));
    Ordering order;
    for (VertexId local : exact_cutwidth(sub.graph, budget).witness) {
      order.push_back(sub.to_original[local - 1]);
    }
    orders.push_back(std::move(order));
  }
  return orders;
}

CheckResult certificate_trial(std::uint64_t seed,
                              const VerifyOptions& options) {
  const std::string name = "composition-certificate";
  const GeneratedInstance inst =
      composition_instance(seed, options.composition_max_n);
  const Ordering quotient_order =
      exact_cutwidth(quotient_multigraph(inst.graph, inst.partition),
                     options.budget)
          .witness;
  std::ostringstream detail;
  try {
    const BoundCertificate theorem = compose_theorem_auto(
        inst.graph, inst.partition, quotient_order, options.budget);
    const BoundCertificate simple = compose_simple_auto(
        inst.graph, inst.partition, quotient_order, options.budget);
    const EdgeCount exact =
        exact_cutwidth(inst.graph, options.budget).value;
    if (2 * theorem.achieved > 3 * theorem.x + 2 * theorem.y) {
      detail << "2*" << theorem.achieved << " > 3*" << theorem.x << " + 2*"
             << theorem.y << "; ";
    }
    if (simple.achieved > 2 * simple.x + simple.y) {
      detail << simple.achieved << " > 2*" << simple.x << " + " << simple.y
             << "; ";
    }
    if (theorem.achieved < exact || simple.achieved < exact) {
      detail << "an ordering beat the exact value " << exact
             << " (impossible); ";
    }
  } catch (const InternalConsistencyError& e) {
    detail << "composer aborted: " << e.what();
  }
  if (detail.str().empty()) return pass_check(name, seed);
  return fail_check(name, seed, detail.str());
}

CheckResult dichotomy_trial(std::uint64_t seed, const VerifyOptions& options) {
  const std::string name = "orientation-dichotomy";
  const GeneratedInstance inst =
      composition_instance(seed, options.composition_max_n);
  const Multigraph& g = inst.graph;
  const VertexPartition& p = inst.partition;
  const CutwidthResult quotient_result =
      exact_cutwidth(quotient_multigraph(g, p), options.budget);
  const Ordering& quotient_order = quotient_result.witness;
  const EdgeCount x = quotient_result.value;
  const std::vector<Ordering> class_orders =
      optimal_class_orders(g, p, options.budget);

  std::ostringstream detail;
  for (int c = 1; c <= p.class_count(); ++c) {
    const Ordering& order = class_orders[c - 1];
    const int size = static_cast<int>(order.size());
    bool forward_ok = true;
    bool reverse_ok = true;
    for (int prefix = 0; prefix <= size; ++prefix) {
      const std::vector<VertexId> left(order.begin(), order.begin() + prefix);
      const std::vector<VertexId> right(order.begin() + prefix, order.end());
      const EdgeDecomposition d =
          class_edge_decomposition(g, p, quotient_order, c, left, right);
      if (d.total() != g.total_multiplicity()) {
        detail << "class " << c << " prefix " << prefix
               << ": blocks sum to " << d.total() << " != total "
               << g.total_multiplicity() << "; ";
      }
      if (d.e_m_cm + d.e_m_cp + d.e_m_p > x) {
        detail << "class " << c << " prefix " << prefix
               << ": cut before the class exceeds x=" << x << "; ";
      }
      if (d.e_cm_p + d.e_cp_p + d.e_m_p > x) {
        detail << "class " << c << " prefix " << prefix
               << ": cut after the class exceeds x=" << x << "; ";
      }
      forward_ok = forward_ok && 2 * d.forward_external() <= 3 * x;
      reverse_ok = reverse_ok && 2 * d.reverse_external() <= 3 * x;
    }
    if (!forward_ok && !reverse_ok) {
      detail << "class " << c << ": neither orientation stays within 1.5x; ";
    }
  }
  if (detail.str().empty()) return pass_check(name, seed);
  return fail_check(name, seed, detail.str());
}

// ---- prop3 suite --------------------------------------------------------

CheckResult constant_width_check(int n, const VerifyOptions& options) {
  std::ostringstream name;
  name << "constant-width-family n=" << n;
  const Multigraph gn = gen_nolow_gn(n);
  const Multigraph undirected = underlying_undirected(gn);
  std::ostringstream detail;

  const Condensation cond = condensation(gn);
  const EdgeCount cond_width =
      exact_cutwidth(underlying_undirected(cond.graph), options.budget).value;
  if (cond_width != n) {
    detail << "condensation cutwidth " << cond_width << " != " << n << "; ";
  }
  if (cond.partition.class_count() != 2) {
    detail << cond.partition.class_count() << " components, expected 2; ";
  }
  for (int c = 1; c <= cond.partition.class_count(); ++c) {
    const InducedSubgraph sub =
        induced_subgraph(gn, cond.partition.members(c));
    const EdgeCount width =
        exact_cutwidth(underlying_undirected(sub.graph), options.budget)
            .value;
    if (width != 2) {
      detail << "component " << c << " cutwidth " << width << " != 2; ";
    }
  }

  const EdgeCount interleaved =
      ordering_cutwidth(undirected, nolow_interleaving(n));
  if (interleaved > 5) {
    detail << "interleaved ordering width " << interleaved << " > 5; ";
  }
  const EdgeCount exact = exact_cutwidth(undirected, options.budget).value;
  if (exact > 5) detail << "exact cutwidth " << exact << " > 5; ";

  if (detail.str().empty()) return pass_check(name.str());
  return fail_check(name.str(), 0, detail.str());
}

// ---- suite assembly -----------------------------------------------------

void append(std::vector<CheckResult>& into, std::vector<CheckResult> from) {
  for (CheckResult& r : from) into.push_back(std::move(r));
}

std::vector<CheckResult> suite_checks(const std::string& suite,
                                      const VerifyOptions& options) {
  std::vector<CheckResult> results;
  if (suite == "all") {
    for (const std::string& name : kSuiteNames) {
      if (name != "all") append(results, suite_checks(name, options));
    }
  } else if (suite == "prop1") {
    for (int t = 0; t < options.subdivision_trials; ++t) {
      results.push_back(subdivision_trial(
          trial_seed(options.seed, kSubdivisionTag, t), options));
    }
  } else if (suite == "thm1") {
    for (int t = 0; t < options.composition_trials; ++t) {
      results.push_back(certificate_trial(
          trial_seed(options.seed, kCompositionTag, t), options));
    }
  } else if (suite == "claim1") {
    for (int t = 0; t < options.composition_trials; ++t) {
      results.push_back(dichotomy_trial(
          trial_seed(options.seed, kCompositionTag, t), options));
    }
  } else if (suite == "claim2") {
    append(results, closed_form_checks(options));
    append(results, tight_composition_checks(options));
    results.push_back(subdivided_family_check(options));
  } else if (suite == "prop3") {
    for (int n = 3; n <= 8; ++n) {
      results.push_back(constant_width_check(n, options));
    }
  } else {
    throw std::invalid_argument("unknown verify suite '" + suite + "'");
  }
  return results;
}

}  // namespace

const std::vector<std::string> kSuiteNames = {"prop1",  "thm1",  "claim1",
                                              "claim2", "prop3", "all"};

std::vector<CheckResult> run_suite(const std::string& suite,
                                   const VerifyOptions& options) {
  std::vector<CheckResult> results = suite_checks(suite, options);
  std::stable_sort(results.begin(), results.end(),
                   [](const CheckResult& a, const CheckResult& b) {
                     if (a.name != b.name) return a.name < b.name;
                     return a.seed < b.seed;
                   });
  return results;
}

}  // namespace cutbound
