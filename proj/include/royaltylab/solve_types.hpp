#pragma once

#include <map>
#include <string>
#include <vector>

#include "royaltylab/valuation.hpp"

namespace royaltylab {

// The creator's environment: the end-buyer valuation law and her per-unit
// production/minting cost.
struct MarketParams {
  ValuationDistribution dist;
  double cost = 0.0;
};

// The creator's decision variables: mint price p0 >= 0 and royalty rate
// r in [0, 1].
struct PricingPolicy {
  double p0 = 0.0;
  double r = 0.0;
};

struct SolveResult {
  PricingPolicy policy;
  double objective = 0.0;
  double baseline_no_royalty = 0.0;
  double delta = 0.0;         // objective - baseline_no_royalty
  double relative_gain = 0.0; // delta / baseline, NaN when baseline <= 0
  std::string regime;
  std::map<std::string, double> diagnostics;
};

enum class TradeRegion {
  TradeOnlyWithRoyalties,
  TradeBoth,
  NoTrade,
  TradeOnlyWithoutRoyalties,
};

// Sign-based classification from the creator's payoff with royalties and
// the no-royalty baseline; trade requires a nonnegative payoff.
TradeRegion classify_trade(double u_with, double u_without);

std::string to_string(TradeRegion region);

struct AxisSpec {
  std::string name;
  double lo = 0.0;
  double hi = 1.0;
  int steps = 2;
};

std::vector<double> axis_values(const AxisSpec& axis);

// Row-major grid of trade-region labels: axis1 varies slowest.
struct RegionGrid {
  AxisSpec axis1, axis2;
  std::vector<TradeRegion> cells;
  std::vector<double> u_with;     // same row-major layout as cells
  std::vector<double> u_without;
};

PricingPolicy validate_policy(const PricingPolicy& policy);

}  // namespace royaltylab
