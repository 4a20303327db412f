#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace eaqecc {

/// Query for the finite-n Gilbert-Varshamov sufficient condition.
struct GVQuery {
    std::uint64_t q = 2;
    long n = 0;
    long k = 0;
    long delta = 1;
    long c = 0;
};

/// Validates k <= n, 0 <= c <= (n-k)/2, delta >= 1, n >= 1.
void gv_validate(const GVQuery& query);

/// Exact rational value of
///   (q^{n+k} - q^{n-k-2c}) / (q^{2n} - 1) * sum_{i=1}^{delta-1} C(n,i)(q^2-1)^i.
/// delta = 1 gives 0 (empty sum). The fraction is returned as the formula
/// displays it, not reduced; canonicalize a copy before mpq arithmetic.
mpq_class gv_lhs(const GVQuery& query);

/// True iff gv_lhs(query) < 1 exactly.
bool gv_feasible(const GVQuery& query);

struct GVRow {
    long n, k, c, delta;  // delta = maximal feasible value for this (n, k, c)
};

/// Exhaustive table of maximal feasible deltas over the given ranges,
/// sorted by (n, k, c, delta).
std::vector<GVRow> gv_search(std::uint64_t q, long n_min, long n_max,
                             long k_max = -1, long c_max = -1);

/// Asymptotic form: checks h(eps) + eps log_q(q^2 - 1) < 1 - R, with
/// h the q-ary entropy (h(0) = 0). lambda is validated against its range
/// constraint but does not enter the inequality.
bool gv_asymptotic(std::uint64_t q, double R, double eps, double lambda = 0.0,
                   double margin = 0.0);

/// Exact numerator/denominator rendering, e.g. "120960/1048575".
std::string to_fraction_string(const mpq_class& v);

}  // namespace eaqecc
