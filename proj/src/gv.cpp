#include "eaqecc/gv.hpp"

#include <cmath>

#include "eaqecc/errors.hpp"

namespace eaqecc {

void gv_validate(const GVQuery& query) {
    if (query.q < 2) throw InvariantViolation("q must be at least 2");
    if (query.n < 1) throw InvariantViolation("n must be positive");
    if (query.delta < 1) throw InvariantViolation("delta must be positive");
    if (query.k < 0 || query.k > query.n) throw InvariantViolation("k must satisfy 0 <= k <= n");
    if (query.c < 0 || 2 * query.c > query.n - query.k) {
        throw InvariantViolation("c must satisfy 0 <= c <= (n - k) / 2");
    }
}

mpq_class gv_lhs(const GVQuery& query) {
    gv_validate(query);
    const mpz_class q(static_cast<unsigned long>(query.q));

    mpz_class q_nk, q_low, q_2n;
    mpz_pow_ui(q_nk.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(query.n + query.k));
    mpz_pow_ui(q_low.get_mpz_t(), q.get_mpz_t(),
               static_cast<unsigned long>(query.n - query.k - 2 * query.c));
    mpz_pow_ui(q_2n.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(2 * query.n));

    const mpz_class q2m1 = q * q - 1;
    mpz_class sum = 0;
    mpz_class power = 1;
    for (long i = 1; i <= query.delta - 1; ++i) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(query.n),
                     static_cast<unsigned long>(i));
        power *= q2m1;
        sum += binom * power;
    }

    // kept as the formula displays it (not reduced) so logs show the raw
    // numerator and denominator; mpq_cmp handles non-canonical values
    return mpq_class(mpz_class(q_nk - q_low) * sum, q_2n - 1);
}

bool gv_feasible(const GVQuery& query) { return gv_lhs(query) < 1; }

std::vector<GVRow> gv_search(std::uint64_t q, long n_min, long n_max, long k_max, long c_max) {
    std::vector<GVRow> table;
    if (n_min < 1) n_min = 1;
    for (long n = n_min; n <= n_max; ++n) {
        const long k_cap = k_max < 0 ? n : std::min(k_max, n);
        for (long k = 0; k <= k_cap; ++k) {
            const long c_cap = c_max < 0 ? (n - k) / 2 : std::min(c_max, (n - k) / 2);
            for (long c = 0; c <= c_cap; ++c) {
                long best = 0;
                for (long delta = 1; delta <= n; ++delta) {
                    if (!gv_feasible({q, n, k, delta, c})) break;
                    best = delta;
                }
                if (best >= 1) table.push_back({n, k, c, best});
            }
        }
    }
    return table;
}

bool gv_asymptotic(std::uint64_t q, double R, double eps, double lambda, double margin) {
    if (q < 2) throw RangeViolation("q must be at least 2");
    if (R < 0.0 || R > 1.0) throw RangeViolation("R must lie in [0, 1]");
    if (eps < 0.0 || eps >= 0.5) throw RangeViolation("epsilon must lie in [0, 1/2)");
    if (lambda < 0.0 || lambda > (1.0 - R) / 2.0) {
        throw RangeViolation("lambda must lie in [0, (1 - R) / 2]");
    }
    const double lq = std::log(static_cast<double>(q));
    auto log_q = [&](double x) { return std::log(x) / lq; };
    double h = 0.0;
    if (eps > 0.0) h = -eps * log_q(eps) - (1.0 - eps) * log_q(1.0 - eps);
    const double lhs = h + eps * log_q(static_cast<double>(q) * static_cast<double>(q) - 1.0);
    return lhs < 1.0 - R - margin;
}

std::string to_fraction_string(const mpq_class& v) {
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace eaqecc
