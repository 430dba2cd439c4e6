#include "dwmds/local_part.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace dwmds {

namespace {

RingElem one_minus_p_inverse_power(int n, int k) {
  return RingElem::one(n) - pow_p(n, -k);
}

}  // namespace

RingElem sigma_entry(int value, bool circled, int n) {
  if (value < 0) throw std::invalid_argument("sigma_entry: negative entry");
  if (value == 0) {
    if (circled) throw std::logic_error("sigma_entry: circled zero (pattern is not strict)");
    return RingElem::one(n);
  }
  if (circled) return gauss_symbol(value, n) * pow_p(n, -1);
  if (value % n == 0) return one_minus_p_inverse_power(n, 1);
  return RingElem::zero(n);
}

RingElem sigma_component(const Component& c, const DecoratedGraph& g, int n) {
  if (c.value == 0) return RingElem::one(n);
  switch (c.cls) {
    case ComponentClass::ordinary: {
      const Vertex& y = g.vertex(c.rightmost);
      return sigma_entry(y.value, y.circled, n);
    }
    case ComponentClass::ml_asymmetric: {
      if (!c.shorter_leg_endpoint) throw std::invalid_argument("asymmetric multiple leaner without leg endpoint");
      const Vertex& y = g.vertex(*c.shorter_leg_endpoint);
      return sigma_entry(y.value, y.circled, n);
    }
    case ComponentClass::ml_symmetric: {
      if (!c.upsilon || c.length < 2) throw std::invalid_argument("symmetric multiple leaner is not classified");
      const Vertex& y = g.vertex(c.rightmost);
      const RingElem sy = sigma_entry(y.value, y.circled, n);
      if (!y.circled) return sy * one_minus_p_inverse_power(n, c.length);
      const Vertex& u = g.vertex(*c.upsilon);
      return sy * sigma_entry(u.value, u.circled, n) * pow_p(n, -(c.length - 1));
    }
  }
  throw std::invalid_argument("unclassified component");
}

std::string sigma_rule(const Component& c, const DecoratedGraph& g) {
  if (c.value == 0) return "zero-component -> 1";
  switch (c.cls) {
    case ComponentClass::ordinary:
      return g.vertex(c.rightmost).circled ? "ordinary, circled rightmost -> g/p"
                                               : "ordinary, uncircled rightmost -> 1-1/p or 0";
    case ComponentClass::ml_asymmetric:
      return "asymmetric multiple leaner -> sigma(shorter-leg endpoint)";
    case ComponentClass::ml_symmetric:
      return g.vertex(c.rightmost).circled ? "symmetric multiple leaner, circled -> sigma(y)sigma(upsilon)/p^(l-1)"
                                               : "symmetric multiple leaner, uncircled -> sigma(y)(1-1/p^l)";
  }
  return "?";
}

namespace {

// Contribution of an already decorated pattern; zero for nonstrict ones.
RingElem contribution_of(const DecoratedGraph& g, const std::vector<Component>& comps, int weight_total, int n) {
  RingElem total = pow_p(n, weight_total);
  for (const Component& c : comps) {
    if (c.value == 0) continue;
    total *= sigma_component(c, g, n);
    if (total.is_zero()) break;
  }
  return total;
}

int total_weight(const WeightVector& w) { return std::accumulate(w.begin(), w.end(), 0); }

}  // namespace

RingElem pattern_contribution(const LittelmannPattern& t, const HighestWeight& hw, int n) {
  const DecoratedGraph g = decorate(t, hw);
  const auto comps = classify_components(g);
  if (!is_strict(g, comps)) throw std::invalid_argument("pattern " + t.to_string() + " is not strict");
  return contribution_of(g, comps, total_weight(weight_vector(t)), n);
}

ContributionBreakdown explain_contribution(const LittelmannPattern& t, const HighestWeight& hw, int n) {
  ContributionBreakdown out(n);
  out.graph = decorate(t, hw);
  out.components = classify_components(out.graph);
  out.weight = weight_vector(t);
  out.strict = is_strict(out.graph, out.components);
  if (!out.strict) return out;
  out.total = pow_p(n, total_weight(out.weight));
  for (const Component& c : out.components) {
    ContributionFactor f{c, sigma_rule(c, out.graph), sigma_component(c, out.graph, n)};
    out.total *= f.value;
    out.factors.push_back(std::move(f));
  }
  return out;
}

LocalPartStats& LocalPartStats::operator+=(const LocalPartStats& o) {
  patterns += o.patterns;
  nonstrict += o.nonstrict;
  nonzero += o.nonzero;
  return *this;
}

namespace {

struct Accumulator {
  LocalPart part;
  LocalPartStats stats;
  const HighestWeight* hw;
  int n;

  void operator()(const LittelmannPattern& t) {
    ++stats.patterns;
    const DecoratedGraph g = decorate_with_mask(t, critical_mask(t, *hw));
    const auto comps = classify_components(g);
    if (!is_strict(g, comps)) {
      ++stats.nonstrict;
      return;
    }
    const WeightVector lambda = weight_vector(t);
    RingElem c = contribution_of(g, comps, total_weight(lambda), n);
    if (c.is_zero()) return;
    ++stats.nonzero;
    part.accumulate(lambda, c);
  }
};

}  // namespace

LocalPart compute_local_part(const RootSystemD& rs, const HighestWeight& hw, int n, const LocalPartOptions& options,
                             LocalPartStats* stats) {
  if (n < 1) throw std::invalid_argument("cover degree n must be >= 1");
  const PatternEnumerator enumerator(rs, hw, options.weight_filter);
  const LocalPart empty(rs.rank(), n, hw.twist());

  if (options.jobs == 0) {
    Accumulator acc{empty, {}, &hw, n};
    enumerator.enumerate([&](const LittelmannPattern& t) { acc(t); });
    if (stats) *stats = acc.stats;
    return std::move(acc.part);
  }

  // Each worker pulls first-row units from a shared counter and reduces into
  // its own accumulator; the final merge is plain addition.
  const std::size_t units = enumerator.work_units().size();
  std::vector<Accumulator> partial(options.jobs, Accumulator{empty, {}, &hw, n});
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    workers.reserve(options.jobs);
    for (unsigned w = 0; w < options.jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (std::size_t u = next++; u < units; u = next++) {
            enumerator.enumerate_unit(u, [&](const LittelmannPattern& t) { partial[w](t); });
          }
        } catch (...) {
          const std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = units;
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  LocalPart result = empty;
  LocalPartStats total;
  for (const Accumulator& a : partial) {
    result.merge(a.part);
    total += a.stats;
  }
  if (stats) *stats = total;
  return result;
}

RingElem coefficient_at(const RootSystemD& rs, const HighestWeight& hw, int n, const WeightVector& lambda,
                        LocalPartStats* stats) {
  LocalPartOptions options;
  options.weight_filter = lambda;
  return compute_local_part(rs, hw, n, options, stats).coefficient_at(lambda);
}

}  // namespace dwmds
