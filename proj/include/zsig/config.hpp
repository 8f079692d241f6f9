#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "zsig/arithmetic.hpp"
#include "zsig/orbit.hpp"

namespace zsig {

enum class OutputFormat { json, csv, text };

struct RunConfig {
  std::size_t digit_budget = 200000;
  std::uint32_t factor_trial_bound = 1000000;
  std::uint64_t factor_rho_budget = 100000000;
  int primality_rounds = 64;
  int workers = 1;
  OutputFormat output_format = OutputFormat::text;
  std::uint64_t seed = 0;

  OrbitOptions orbit_options() const { return OrbitOptions{digit_budget}; }
  FactorOptions factor_options() const {
    return FactorOptions{factor_trial_bound, factor_rho_budget, primality_rounds, seed};
  }
  // Throws DomainError when a budget is not positive.
  void validate() const;
};

}  // namespace zsig
