#pragma once

// Standard contributions and assembly of the local part
//
//   a_lambda = p^|lambda| * sum over strict patterns T of weight lambda
//                           of prod over components C of sigma(C).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dwmds/coeff_ring.hpp"
#include "dwmds/decoration.hpp"
#include "dwmds/pattern.hpp"
#include "dwmds/root_data.hpp"
#include "dwmds/series.hpp"

namespace dwmds {

/// sigma(y) for a single entry. A zero entry that is not circled contributes
/// 1; a circled zero is rejected because strict patterns never contain one.
RingElem sigma_entry(int value, bool circled, int n);

RingElem sigma_component(const Component& c, const DecoratedGraph& g, int n);

/// Short label of the rule sigma_component applies to c.
std::string sigma_rule(const Component& c, const DecoratedGraph& g);

/// p^|lambda(T)| times the product of sigma(C). Rejects nonstrict patterns.
RingElem pattern_contribution(const LittelmannPattern& t, const HighestWeight& hw, int n);

struct ContributionFactor {
  Component component;
  std::string rule;
  RingElem value;
};

/// Everything the CLI `explain` command prints for one pattern.
struct ContributionBreakdown {
  DecoratedGraph graph;
  std::vector<Component> components;
  WeightVector weight;
  bool strict = false;
  std::vector<ContributionFactor> factors;  // empty when nonstrict
  RingElem total;

  explicit ContributionBreakdown(int n) : total(n) {}
};

ContributionBreakdown explain_contribution(const LittelmannPattern& t, const HighestWeight& hw, int n);

struct LocalPartOptions {
  std::optional<WeightVector> weight_filter;
  /// 0 runs sequentially in canonical order; k > 0 uses k worker threads.
  unsigned jobs = 0;
};

struct LocalPartStats {
  std::uint64_t patterns = 0;
  std::uint64_t nonstrict = 0;
  std::uint64_t nonzero = 0;  // strict patterns with nonzero contribution

  std::uint64_t strict() const { return patterns - nonstrict; }
  LocalPartStats& operator+=(const LocalPartStats& o);
  friend bool operator==(const LocalPartStats&, const LocalPartStats&) = default;
};

LocalPart compute_local_part(const RootSystemD& rs, const HighestWeight& hw, int n,
                             const LocalPartOptions& options = {}, LocalPartStats* stats = nullptr);

/// a_lambda alone, via the weight-filtered enumeration.
RingElem coefficient_at(const RootSystemD& rs, const HighestWeight& hw, int n, const WeightVector& lambda,
                        LocalPartStats* stats = nullptr);

}  // namespace dwmds
