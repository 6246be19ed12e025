#ifndef ROABP_EXPERIMENTS_HPP
#define ROABP_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "roabp/gadgets.hpp"
#include "roabp/polynomial.hpp"

namespace roabp {

/// Knobs shared by the experiment harness. Caps keep the exhaustive parts at
/// desk scale; force lifts them with a note in the report.
struct ExpOptions {
  std::uint64_t seed = 0;
  int max_exhaustive_vars = 8;
  std::size_t max_nnz = 1000000;
  bool force = false;
  std::optional<int> cut_size;  // overrides the midpoint prefix cut
};

/// Each experiment returns one report:
///   {experiment, field, seed, params, records, verdicts, notes}
/// with verdicts = [{anchor, lhs, rhs, relation, pass}]. Reports re-derive
/// both sides of every verdict from scratch and are byte-reproducible given
/// (params, seed); wall time never enters the JSON.
nlohmann::json exp_factor_nonclosure(const FieldDescriptor& field, const Graph& g, int d,
                                     const ExpOptions& opts = {});
nlohmann::json exp_esym_power(const FieldDescriptor& field, int n, int k, int d,
                              const ExpOptions& opts = {});
nlohmann::json exp_circulant(int n, int k, std::uint64_t p, const ExpOptions& opts = {});
nlohmann::json exp_quadratic_power(const FieldDescriptor& field, const Graph& g, int d,
                                   const ExpOptions& opts = {});
nlohmann::json exp_discriminant(const Polynomial& g, int d, const ExpOptions& opts = {});

/// True iff every verdict in the report passed.
bool report_passed(const nlohmann::json& report);

/// Human-readable table (one line per verdict).
std::string report_table(const nlohmann::json& report);

/// Exact small binomial; 0 outside the Pascal triangle.
long long binomial(int a, int b);

}  // namespace roabp

#endif  // ROABP_EXPERIMENTS_HPP
