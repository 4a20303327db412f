#include "eaqecc/field.hpp"

#include <algorithm>
#include <cstdint>

#include "eaqecc/conway.hpp"

namespace eaqecc {
namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

u64 mulmod_u64(u64 a, u64 b, u64 mod) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % mod);
}

u64 powmod_u64(u64 base, u64 e, u64 mod) {
    u64 r = 1 % mod;
    base %= mod;
    while (e) {
        if (e & 1) r = mulmod_u64(r, base, mod);
        base = mulmod_u64(base, base, mod);
        e >>= 1;
    }
    return r;
}

// ---- polynomials over F_p, coefficient vectors, constant term first ----

using Poly = std::vector<u32>;

void poly_trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly a, const Poly& mod, u32 p) {
    // mod is monic
    poly_trim(a);
    const std::size_t dm = mod.size() - 1;
    while (a.size() > dm) {
        const u32 c = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        if (c != 0) {
            for (std::size_t i = 0; i <= dm; ++i) {
                const u64 v = (a[shift + i] + static_cast<u64>(p) * p -
                               static_cast<u64>(c) * mod[i] % p) % p;
                a[shift + i] = static_cast<u32>(v);
            }
        }
        a.pop_back();
        poly_trim(a);
        if (a.size() <= dm) break;
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, u32 p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = static_cast<u32>((r[i + j] + static_cast<u64>(a[i]) * b[j]) % p);
        }
    }
    return poly_mod(std::move(r), mod, p);
}

Poly poly_powmod(Poly base, u64 e, const Poly& mod, u32 p) {
    Poly r{1};
    base = poly_mod(std::move(base), mod, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, mod, p);
        base = poly_mulmod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

u32 inv_mod_p(u32 a, u32 p) {
    // p prime
    u32 r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = static_cast<u32>((static_cast<u64>(r) * b) % p);
        b = static_cast<u32>((static_cast<u64>(b) * b) % p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, u32 p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        // a mod b, b not necessarily monic
        const u32 lead_inv = inv_mod_p(b.back(), p);
        Poly r = a;
        poly_trim(r);
        while (r.size() >= b.size() && !r.empty()) {
            const u32 c = static_cast<u32>((static_cast<u64>(r.back()) * lead_inv) % p);
            const std::size_t shift = r.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                const u64 v = (r[shift + i] + static_cast<u64>(p) * p -
                               static_cast<u64>(c) * b[i] % p) % p;
                r[shift + i] = static_cast<u32>(v);
            }
            poly_trim(r);
        }
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_irreducible(const Poly& f, u32 p, u32 m) {
    if (m == 1) return true;
    // gcd(x^{p^i} - x, f) = 1 for 1 <= i <= m/2 catches any factor of
    // degree <= m/2; a reducible monic degree-m polynomial always has one.
    Poly x{0, 1};
    Poly xp = x;
    for (u32 i = 1; i <= m / 2; ++i) {
        xp = poly_powmod(std::move(xp), p, f, p);
        Poly diff = xp;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = static_cast<u32>((diff[1] + p - 1) % p);
        poly_trim(diff);
        Poly g = poly_gcd(f, diff, p);
        if (!(g.size() == 1)) return false;
    }
    return true;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> fs;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

bool is_prime_u32(u32 n) {
    if (n < 2) return false;
    for (u32 small : {2u, 3u, 5u, 7u}) {
        if (n == small) return true;
        if (n % small == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // bases exact for n < 3,215,031,751
    for (u64 a : {2ull, 3ull, 5ull, 7ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FieldPtr FieldSpec::make(u32 p, u32 m, std::optional<u64> poly_encoded) {
    if (!is_prime_u32(p)) throw InvariantViolation("p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw InvariantViolation("extension degree must be >= 1");

    u64 q = 1;
    for (u32 i = 0; i < m; ++i) {
        q *= p;
        if (q > 0x7fffffffULL) throw InvariantViolation("q = p^m exceeds the 31-bit budget");
    }

    u64 enc;
    if (poly_encoded) {
        enc = *poly_encoded;
    } else {
        auto def = conway_poly(p, m);
        if (def) {
            enc = *def;
        } else if (m == 1) {
            enc = p;  // modulus x; any monic degree-1 polynomial gives F_p
        } else {
            throw InvariantViolation("no Conway default for p=" + std::to_string(p) +
                                     ", m=" + std::to_string(m) + "; supply a modulus");
        }
    }

    Poly modulus;
    {
        u64 v = enc;
        while (v) {
            modulus.push_back(static_cast<u32>(v % p));
            v /= p;
        }
    }
    if (modulus.size() != m + 1 || modulus.back() != 1) {
        throw InvariantViolation("modulus must be monic of degree m");
    }
    if (!is_irreducible(modulus, p, m)) {
        throw InvariantViolation("modulus is not irreducible over F_p");
    }

    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    spec->p_ = p;
    spec->m_ = m;
    spec->q_ = static_cast<u32>(q);
    spec->modulus_ = std::move(modulus);
    if (q <= 0x10000ULL && m > 1) spec->build_tables();
    return spec;
}

u64 FieldSpec::modulus_encoded() const {
    u64 enc = 0;
    u64 pw = 1;
    for (u32 c : modulus_) {
        enc += c * pw;
        pw *= p_;
    }
    return enc;
}

u32 FieldSpec::add(u32 x, u32 y) const {
    if (m_ == 1) {
        const u32 s = x + y;
        return s >= q_ ? s - q_ : s;
    }
    if (p_ == 2) return x ^ y;
    u32 r = 0, pw = 1;
    while (x || y) {
        u32 d = x % p_ + y % p_;
        if (d >= p_) d -= p_;
        r += d * pw;
        pw *= p_;
        x /= p_;
        y /= p_;
    }
    return r;
}

u32 FieldSpec::neg(u32 x) const {
    if (m_ == 1) return x == 0 ? 0 : q_ - x;
    if (p_ == 2) return x;
    u32 r = 0, pw = 1;
    while (x) {
        const u32 d = x % p_;
        if (d) r += (p_ - d) * pw;
        pw *= p_;
        x /= p_;
    }
    return r;
}

u32 FieldSpec::sub(u32 x, u32 y) const { return add(x, neg(y)); }

u32 FieldSpec::mul_schoolbook(u32 x, u32 y) const {
    Poly a, b;
    for (u32 v = x; v; v /= p_) a.push_back(v % p_);
    for (u32 v = y; v; v /= p_) b.push_back(v % p_);
    Poly r = poly_mulmod(a, b, modulus_, p_);
    u32 out = 0;
    u64 pw = 1;
    for (u32 c : r) {
        out += static_cast<u32>(c * pw);
        pw *= p_;
    }
    return out;
}

u32 FieldSpec::mul(u32 x, u32 y) const {
    if (x == 0 || y == 0) return 0;
    if (m_ == 1) return static_cast<u32>((static_cast<u64>(x) * y) % q_);
    if (!log_.empty()) {
        u64 e = log_[x] + log_[y];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }
    return mul_schoolbook(x, y);
}

u32 FieldSpec::inv(u32 x) const {
    if (x == 0) throw DivisionByZero();
    if (m_ == 1) return static_cast<u32>(powmod_u64(x, q_ - 2, q_));
    if (!log_.empty()) {
        const u32 e = log_[x];
        return exp_[e == 0 ? 0 : q_ - 1 - e];
    }
    return pow(x, static_cast<long long>(q_) - 2);
}

u32 FieldSpec::div(u32 x, u32 y) const { return mul(x, inv(y)); }

u32 FieldSpec::pow(u32 x, long long e) const {
    if (x == 0) {
        if (e == 0) return 1;
        if (e < 0) throw DivisionByZero();
        return 0;
    }
    const long long order = static_cast<long long>(q_) - 1;
    long long r = e % order;
    if (r < 0) r += order;
    if (!log_.empty() && m_ > 1) {
        return exp_[static_cast<u64>(log_[x]) * static_cast<u64>(r) % (q_ - 1)];
    }
    u32 result = 1, base = x;
    u64 ee = static_cast<u64>(r);
    while (ee) {
        if (ee & 1) result = mul(result, base);
        base = mul(base, base);
        ee >>= 1;
    }
    return result;
}

u32 FieldSpec::frobenius(u32 x, u32 s) const {
    s %= m_;
    u32 r = x;
    for (u32 i = 0; i < s; ++i) r = pow(r, p_);
    return r;
}

u32 FieldSpec::trace_to_prime(u32 x) const {
    u32 acc = 0, t = x;
    for (u32 i = 0; i < m_; ++i) {
        acc = add(acc, t);
        t = pow(t, p_);
    }
    // acc lies in the prime subfield: its encoding is its constant digit
    return acc % p_;
}

void FieldSpec::build_tables() {
    const u64 order = q_ - 1;
    const auto factors = prime_factors(order);
    u32 gen = 0;
    for (u32 cand = 2; cand < q_; ++cand) {
        bool primitive = true;
        for (u64 f : factors) {
            // candidate^(order/f) via schoolbook
            u32 r = 1, b = cand;
            u64 e = order / f;
            while (e) {
                if (e & 1) r = mul_schoolbook(r, b);
                b = mul_schoolbook(b, b);
                e >>= 1;
            }
            if (r == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen = cand;
            break;
        }
    }
    if (gen == 0) throw InternalInconsistency("no primitive element found");

    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    u32 acc = 1;
    for (u32 i = 0; i < q_ - 1; ++i) {
        exp_[i] = acc;
        log_[acc] = i;
        acc = mul_schoolbook(acc, gen);
    }
    if (acc != 1) throw InternalInconsistency("generator order mismatch");
}

// ---- trace-orthogonal basis ----

TraceOrthogonalBasis find_trace_orthogonal_basis(const FieldPtr& spec) {
    const auto& F = *spec;
    const u32 m = F.m();
    auto t = [&](u32 x, u32 y) { return F.trace_to_prime(F.mul(x, y)); };

    // working complement basis, starts as the power basis {1, alpha, ...}
    std::vector<u32> work;
    {
        u32 alpha = F.m() == 1 ? 1 : F.p();  // encoding of x
        u32 v = 1;
        for (u32 i = 0; i < m; ++i) {
            work.push_back(v);
            v = F.mul(v, alpha);
        }
    }

    std::vector<u32> out;
    std::vector<std::pair<u32, u32>> pairs;  // char-2 hyperbolic leftovers

    while (!work.empty()) {
        std::size_t pick = work.size();
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (t(work[i], work[i]) != 0) {
                pick = i;
                break;
            }
        }
        if (pick < work.size()) {
            const u32 g = work[pick];
            work.erase(work.begin() + static_cast<long>(pick));
            const u32 tg = t(g, g);
            for (auto& u : work) {
                // trace values are prime scalars, which encode as constants
                const u32 coef = F.div(t(u, g), tg);
                u = F.sub(u, F.mul(coef, g));
            }
            out.push_back(g);
            continue;
        }
        // all diagonal entries vanish on the complement
        if (F.p() != 2) {
            // find u, v with t(u, v) != 0 and replace u by u + v
            bool fixed = false;
            for (std::size_t i = 0; i < work.size() && !fixed; ++i) {
                for (std::size_t j = i + 1; j < work.size() && !fixed; ++j) {
                    if (t(work[i], work[j]) != 0) {
                        work[i] = F.add(work[i], work[j]);
                        fixed = true;
                    }
                }
            }
            if (!fixed) throw SearchExhausted("trace form degenerate on complement");
            continue;
        }
        // char 2: peel a hyperbolic pair and fix it up afterwards
        const u32 u = work[0];
        std::size_t j = 0;
        for (std::size_t i = 1; i < work.size(); ++i) {
            if (t(u, work[i]) != 0) {
                j = i;
                break;
            }
        }
        if (j == 0) throw SearchExhausted("trace form degenerate on complement");
        const u32 v = work[j];
        work.erase(work.begin() + static_cast<long>(j));
        work.erase(work.begin());
        for (auto& w : work) {
            // form values over F_2; the two reductions are independent
            const bool hit_v = t(w, v) != 0;
            const bool hit_u = t(w, u) != 0;
            if (hit_v) w = F.add(w, u);
            if (hit_u) w = F.add(w, v);
        }
        pairs.emplace_back(u, v);
    }

    // resolve char-2 hyperbolic pairs: {g, u, v} -> {g+u, g+v, g+u+v}
    for (const auto& [u, v] : pairs) {
        if (out.empty()) throw SearchExhausted("no non-isotropic vector available for pairing fix");
        const u32 g = out.back();
        out.pop_back();
        out.push_back(spec->add(g, u));
        out.push_back(spec->add(g, v));
        out.push_back(spec->add(spec->add(g, u), v));
    }

    TraceOrthogonalBasis basis;
    basis.spec = spec;
    basis.gamma = out;
    for (u32 g : out) {
        const u32 d = t(g, g);
        if (d == 0) throw InternalInconsistency("isotropic vector in trace-orthogonal basis");
        basis.omega.push_back(inv_mod_p(d, F.p()));
    }
    // verify the Gram matrix is diagonal
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t j = i + 1; j < out.size(); ++j) {
            if (t(out[i], out[j]) != 0) {
                throw InternalInconsistency("trace Gram matrix not diagonal");
            }
        }
    }
    return basis;
}

// ---- subfield embedding ----

namespace {

// tiny Gaussian elimination over F_p for the embedding solve
struct PrimeMat {
    u32 p;
    std::size_t rows, cols;
    std::vector<u32> a;
    u32& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    u32 at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// reduces [A | I] so solutions of A c = x can be read off; returns the
// transform T and pivot bookkeeping
struct SolveData {
    PrimeMat t;                      // rows x rows transform
    std::vector<long> pivot_of_col;  // col -> pivot row, or -1
    std::size_t rank = 0;
};

SolveData make_solver(PrimeMat A) {
    const u32 p = A.p;
    SolveData sd;
    sd.t = PrimeMat{p, A.rows, A.rows, std::vector<u32>(A.rows * A.rows, 0)};
    for (std::size_t i = 0; i < A.rows; ++i) sd.t.at(i, i) = 1;
    sd.pivot_of_col.assign(A.cols, -1);

    std::size_t r = 0;
    for (std::size_t c = 0; c < A.cols && r < A.rows; ++c) {
        std::size_t piv = r;
        while (piv < A.rows && A.at(piv, c) == 0) ++piv;
        if (piv == A.rows) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < A.cols; ++j) std::swap(A.at(piv, j), A.at(r, j));
            for (std::size_t j = 0; j < A.rows; ++j) std::swap(sd.t.at(piv, j), sd.t.at(r, j));
        }
        const u32 s = inv_mod_p(A.at(r, c), p);
        for (std::size_t j = 0; j < A.cols; ++j) {
            A.at(r, j) = static_cast<u32>((static_cast<u64>(A.at(r, j)) * s) % p);
        }
        for (std::size_t j = 0; j < A.rows; ++j) {
            sd.t.at(r, j) = static_cast<u32>((static_cast<u64>(sd.t.at(r, j)) * s) % p);
        }
        for (std::size_t i = 0; i < A.rows; ++i) {
            if (i == r || A.at(i, c) == 0) continue;
            const u32 f = A.at(i, c);
            for (std::size_t j = 0; j < A.cols; ++j) {
                const u64 v = (A.at(i, j) + static_cast<u64>(p) * p -
                               static_cast<u64>(f) * A.at(r, j) % p) % p;
                A.at(i, j) = static_cast<u32>(v);
            }
            for (std::size_t j = 0; j < A.rows; ++j) {
                const u64 v = (sd.t.at(i, j) + static_cast<u64>(p) * p -
                               static_cast<u64>(f) * sd.t.at(r, j) % p) % p;
                sd.t.at(i, j) = static_cast<u32>(v);
            }
        }
        sd.pivot_of_col[c] = static_cast<long>(r);
        ++r;
    }
    sd.rank = r;
    return sd;
}

std::vector<u32> digits_of(u32 v, u32 p, u32 m) {
    std::vector<u32> d(m, 0);
    for (u32 i = 0; i < m && v; ++i) {
        d[i] = v % p;
        v /= p;
    }
    return d;
}

u32 from_digits(const std::vector<u32>& d, u32 p) {
    u32 v = 0;
    u64 pw = 1;
    for (u32 c : d) {
        v += static_cast<u32>(c * pw);
        pw *= p;
    }
    return v;
}

}  // namespace

SubfieldEmbedding::SubfieldEmbedding(FieldPtr base, FieldPtr ext)
    : base_(std::move(base)), ext_(std::move(ext)) {
    if (base_->p() != ext_->p() || ext_->m() != 2 * base_->m()) {
        throw SpecMismatch("extension must be quadratic over the base field");
    }
    const u32 p = base_->p();
    const u32 mb = base_->m();
    const u32 me = ext_->m();

    // the subfield F_q inside GF(q^2) is the fixed space of Frobenius^mb;
    // scan it for the smallest root of the base modulus
    // fixed space: kernel of the F_p-linear map x -> x^q - x
    PrimeMat frob{p, me, me, std::vector<u32>(me * me, 0)};
    for (u32 j = 0; j < me; ++j) {
        // image of the j-th power-basis vector
        u32 pj = 1;
        for (u32 t = 0; t < j; ++t) pj = ext_->mul(pj, ext_->p());
        const u32 img = ext_->sub(ext_->frobenius(pj, mb), pj);
        auto d = digits_of(img, p, me);
        for (u32 i = 0; i < me; ++i) frob.at(i, j) = d[i];
    }
    // kernel basis of frob: free columns
    std::vector<std::vector<u32>> fixed_basis;
    {
        // recompute RREF of frob to extract kernel (re-run elimination on a copy)
        PrimeMat R = frob;
        std::vector<long> pivot_of_col(R.cols, -1);
        std::size_t r = 0;
        for (std::size_t c = 0; c < R.cols && r < R.rows; ++c) {
            std::size_t piv = r;
            while (piv < R.rows && R.at(piv, c) == 0) ++piv;
            if (piv == R.rows) continue;
            for (std::size_t j = 0; j < R.cols; ++j) std::swap(R.at(piv, j), R.at(r, j));
            const u32 s = inv_mod_p(R.at(r, c), p);
            for (std::size_t j = 0; j < R.cols; ++j) {
                R.at(r, j) = static_cast<u32>((static_cast<u64>(R.at(r, j)) * s) % p);
            }
            for (std::size_t i = 0; i < R.rows; ++i) {
                if (i == r || R.at(i, c) == 0) continue;
                const u32 f = R.at(i, c);
                for (std::size_t j = 0; j < R.cols; ++j) {
                    const u64 v = (R.at(i, j) + static_cast<u64>(p) * p -
                                   static_cast<u64>(f) * R.at(r, j) % p) % p;
                    R.at(i, j) = static_cast<u32>(v);
                }
            }
            pivot_of_col[c] = static_cast<long>(r);
            ++r;
        }
        for (std::size_t c = 0; c < R.cols; ++c) {
            if (pivot_of_col[c] >= 0) continue;
            std::vector<u32> v(R.cols, 0);
            v[c] = 1;
            for (std::size_t c2 = 0; c2 < R.cols; ++c2) {
                if (pivot_of_col[c2] >= 0) {
                    const u32 entry = R.at(static_cast<std::size_t>(pivot_of_col[c2]), c);
                    v[c2] = entry == 0 ? 0 : p - entry;
                }
            }
            fixed_basis.push_back(std::move(v));
        }
    }
    if (fixed_basis.size() != mb) {
        throw InternalInconsistency("subfield fixed space has unexpected dimension");
    }

    // enumerate the q subfield elements, smallest encoding first, and find
    // the least root of the base modulus
    std::vector<u32> subfield;
    {
        u64 count = 1;
        for (u32 i = 0; i < mb; ++i) count *= p;
        subfield.reserve(count);
        std::vector<u32> coeffs(mb, 0);
        for (u64 idx = 0; idx < count; ++idx) {
            u64 t = idx;
            u32 val = 0;
            for (u32 i = 0; i < mb; ++i) {
                const u32 ci = static_cast<u32>(t % p);
                t /= p;
                if (ci) {
                    std::vector<u32> scaled(me, 0);
                    for (u32 j = 0; j < me; ++j) {
                        scaled[j] = static_cast<u32>((static_cast<u64>(ci) * fixed_basis[i][j]) % p);
                    }
                    val = ext_->add(val, from_digits(scaled, p));
                }
            }
            subfield.push_back(val);
        }
        std::sort(subfield.begin(), subfield.end());
    }

    const auto& mod = base_->modulus();
    root_ = 0;
    bool found = false;
    for (u32 cand : subfield) {
        // Horner evaluation of the base modulus at cand, inside the extension
        u32 acc = 0;
        for (std::size_t i = mod.size(); i-- > 0;) {
            acc = ext_->add(ext_->mul(acc, cand), mod[i]);  // coefficients are prime scalars
        }
        if (acc == 0) {
            root_ = cand;
            found = true;
            break;
        }
    }
    if (!found) throw InternalInconsistency("base modulus has no root in the extension");

    // embed matrix: column i is the extension encoding of root^i
    embed_matrix_.assign(me, std::vector<u32>(mb, 0));
    u32 pw = 1;
    for (u32 i = 0; i < mb; ++i) {
        auto d = digits_of(pw, p, me);
        for (u32 r = 0; r < me; ++r) embed_matrix_[r][i] = d[r];
        pw = ext_->mul(pw, root_);
    }
    // retraction: solve embed_matrix * c = digits(x)
    PrimeMat E{p, me, mb, {}};
    E.a.resize(me * mb);
    for (u32 i = 0; i < me; ++i) {
        for (u32 j = 0; j < mb; ++j) E.at(i, j) = embed_matrix_[i][j];
    }
    auto sd = make_solver(E);
    if (sd.rank != mb) throw InternalInconsistency("embedding matrix not full rank");
    retract_matrix_.assign(mb, std::vector<u32>(me, 0));
    for (u32 j = 0; j < mb; ++j) {
        const auto r = static_cast<std::size_t>(sd.pivot_of_col[j]);
        for (u32 i = 0; i < me; ++i) retract_matrix_[j][i] = sd.t.at(r, i);
    }
}

u32 SubfieldEmbedding::embed(u32 base_value) const {
    const u32 p = base_->p();
    auto d = digits_of(base_value, p, base_->m());
    std::vector<u32> out(ext_->m(), 0);
    for (u32 i = 0; i < ext_->m(); ++i) {
        u64 acc = 0;
        for (u32 j = 0; j < base_->m(); ++j) acc += static_cast<u64>(embed_matrix_[i][j]) * d[j];
        out[i] = static_cast<u32>(acc % p);
    }
    return from_digits(out, p);
}

bool SubfieldEmbedding::in_subfield(u32 ext_value) const {
    return ext_->frobenius(ext_value, base_->m()) == ext_value;
}

u32 SubfieldEmbedding::retract(u32 ext_value) const {
    if (!in_subfield(ext_value)) {
        throw InvariantViolation("value is not in the subfield image");
    }
    const u32 p = base_->p();
    auto d = digits_of(ext_value, p, ext_->m());
    std::vector<u32> out(base_->m(), 0);
    for (u32 j = 0; j < base_->m(); ++j) {
        u64 acc = 0;
        for (u32 i = 0; i < ext_->m(); ++i) acc += static_cast<u64>(retract_matrix_[j][i]) * d[i];
        out[j] = static_cast<u32>(acc % p);
    }
    return from_digits(out, p);
}

u32 SubfieldEmbedding::trace_relative(u32 x) const {
    return retract(ext_->add(x, conj(x)));
}

NormalPair find_normal_pair(const SubfieldEmbedding& tower) {
    const auto& E = *tower.ext();
    for (u32 w = 1; w < E.q(); ++w) {
        const u32 wq = tower.conj(w);
        // {w, w^q} independent over F_q iff w^q is not an F_q multiple of w,
        // which for nonzero w means w^q / w outside the subfield fix set is
        // wrong; independence fails exactly when w^q = c w with c in F_q.
        const u32 ratio = E.div(wq, w);
        if (tower.in_subfield(ratio)) continue;
        const u32 lambda = E.sub(E.mul(wq, wq), E.mul(w, w));
        if (lambda == 0) throw InternalInconsistency("independent normal pair with zero lambda");
        return NormalPair{tower.ext(), w, wq, lambda};
    }
    throw SearchExhausted("no normal pair found");
}

}  // namespace eaqecc
