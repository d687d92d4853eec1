/*
   Copyright 2026 The drinfeld-euler authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "dre/field.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace dre {

namespace {

// --- dense F_p[x] helpers on raw digit vectors, constant first ---

using FpPoly = std::vector<std::uint8_t>;

int fp_deg(const FpPoly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

void fp_trim(FpPoly& a) { a.resize(static_cast<size_t>(fp_deg(a) + 1)); }

FpPoly fp_add(const FpPoly& a, const FpPoly& b, int p) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        int s = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        r[i] = static_cast<std::uint8_t>(s % p);
    }
    fp_trim(r);
    return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, int p) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        int s = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
        r[i] = static_cast<std::uint8_t>(((s % p) + p) % p);
    }
    fp_trim(r);
    return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, int p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint8_t>((r[i + j] + a[i] * b[j]) % p);
    }
    fp_trim(r);
    return r;
}

int fp_inv_scalar(int a, int p) {
    a %= p;
    if (a < 0) a += p;
    int r = 1;
    for (int e = p - 2; e > 0; e >>= 1) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
    }
    return r;
}

// remainder of a modulo monic-normalizable f
FpPoly fp_mod(FpPoly a, const FpPoly& f, int p) {
    int df = fp_deg(f);
    int lcinv = fp_inv_scalar(f[static_cast<size_t>(df)], p);
    fp_trim(a);
    while (fp_deg(a) >= df) {
        int da = fp_deg(a);
        int c = a[static_cast<size_t>(da)] * lcinv % p;
        for (int i = 0; i <= df; ++i) {
            int s = a[static_cast<size_t>(da - df + i)] - c * f[static_cast<size_t>(i)];
            a[static_cast<size_t>(da - df + i)] =
                static_cast<std::uint8_t>(((s % p) + p) % p);
        }
        fp_trim(a);
    }
    return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, int p) {
    return fp_mod(fp_mul(a, b, p), f, p);
}

FpPoly fp_gcd(FpPoly a, FpPoly b, int p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        int c = fp_inv_scalar(a[static_cast<size_t>(fp_deg(a))], p);
        for (auto& d : a) d = static_cast<std::uint8_t>(d * c % p);
    }
    return a;
}

FpPoly fp_powmod_p(FpPoly a, int p, const FpPoly& f) {
    // a^p mod f by square-and-multiply on the exponent p
    FpPoly r{1};
    int e = p;
    while (e > 0) {
        if (e & 1) r = fp_mulmod(r, a, f, p);
        a = fp_mulmod(a, a, f, p);
        e >>= 1;
    }
    return r;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
    std::vector<std::int64_t> ps;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace

bool is_irreducible_fp(const std::vector<std::uint8_t>& f, int p) {
    int n = fp_deg(f);
    if (n <= 0) return false;
    if (n == 1) return true;
    // x^(p^n) == x mod f, and x^(p^(n/l)) - x coprime to f for prime l | n
    FpPoly x{0, 1};
    FpPoly h = x;
    std::vector<FpPoly> frob_chain(static_cast<size_t>(n + 1));
    frob_chain[0] = x;
    for (int k = 1; k <= n; ++k) {
        h = fp_powmod_p(h, p, f);
        frob_chain[static_cast<size_t>(k)] = h;
    }
    if (fp_deg(fp_sub(frob_chain[static_cast<size_t>(n)], x, p)) >= 0) return false;
    for (std::int64_t l : prime_divisors(n)) {
        FpPoly d = fp_sub(frob_chain[static_cast<size_t>(n / l)], x, p);
        FpPoly g = fp_gcd(d, f, p);
        if (fp_deg(g) != 0) return false;
    }
    return true;
}

std::vector<std::uint8_t> find_irreducible_fp(int p, int n) {
    check(n >= 1, "find_irreducible_fp: degree must be positive");
    if (n == 1) return FpPoly{0, 1};
    // enumerate monic degree-n candidates with the constant digit fastest
    std::uint64_t count = 1;
    for (int i = 0; i < n; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        FpPoly f(static_cast<size_t>(n + 1), 0);
        std::uint64_t t = idx;
        for (int i = 0; i < n; ++i) {
            f[static_cast<size_t>(i)] = static_cast<std::uint8_t>(t % p);
            t /= static_cast<std::uint64_t>(p);
        }
        f[static_cast<size_t>(n)] = 1;
        if (is_irreducible_fp(f, p)) return f;
    }
    throw Error("find_irreducible_fp: exhausted search space");
}

// ---------------------------------------------------------------------------

bool Fq::is_zero() const {
    if (!F) return true;
    return std::all_of(c.begin(), c.end(), [](std::uint8_t d) { return d == 0; });
}

bool operator==(const Fq& a, const Fq& b) {
    if (!a.F || !b.F) return a.is_zero() && b.is_zero();
    check(a.F == b.F, "Fq: comparing elements of different fields");
    return a.c == b.c;
}

Fq operator+(const Fq& a, const Fq& b) {
    if (!a.F) return b;
    if (!b.F) return a;
    return a.F->add(a, b);
}

Fq operator-(const Fq& a, const Fq& b) {
    if (!b.F) return a;
    if (!a.F) return b.F->neg(b);
    return a.F->sub(a, b);
}

Fq operator*(const Fq& a, const Fq& b) {
    if (!a.F || !b.F) return Fq{};
    return a.F->mul(a, b);
}

Fq operator-(const Fq& a) {
    if (!a.F) return a;
    return a.F->neg(a);
}

Fq inv(const Fq& a) {
    check(a.F != nullptr, "Fq: inverse of zero");
    return a.F->inverse(a);
}

Fq pow_q(const Fq& a) {
    if (!a.F) return a;
    return a.F->pow_q(a);
}

FieldPtr Field::make(const FqConfig& cfg, int m) {
    check(cfg.p >= 2, "FqConfig: p must be at least 2");
    for (int d = 2; d * d <= cfg.p; ++d)
        check(cfg.p % d != 0, "FqConfig: p must be prime");
    check(cfg.deg >= 1, "FqConfig: deg must be positive");
    check(m >= 1, "field extension degree must be positive");

    auto f = std::shared_ptr<Field>(new Field());
    f->cfg_ = cfg;
    if (f->cfg_.modulus.empty()) {
        f->cfg_.modulus = find_irreducible_fp(cfg.p, cfg.deg);
    } else {
        check(fp_deg(f->cfg_.modulus) == cfg.deg,
              "FqConfig: modulus degree does not match deg");
        check(f->cfg_.modulus.back() == 1, "FqConfig: modulus must be monic");
        if (!is_irreducible_fp(f->cfg_.modulus, cfg.p))
            throw ConfigError("FqConfig: modulus is not irreducible over F_p");
    }
    f->m_ = m;
    f->q_ = 1;
    for (int i = 0; i < cfg.deg; ++i) f->q_ *= cfg.p;
    f->modulus_ = (m == 1) ? f->cfg_.modulus
                           : find_irreducible_fp(cfg.p, cfg.deg * m);
    f->init();
    return f;
}

void Field::init() {
    const int p = cfg_.p;
    const int n = fp_degree();

    // column j of the p-power matrix is x^(j*p) mod modulus
    frob_p_.assign(static_cast<size_t>(n), FpPoly(static_cast<size_t>(n), 0));
    FpPoly xp = fp_mod(FpPoly{0, 1}, modulus_, p);
    xp = fp_powmod_p(xp, p, modulus_);
    FpPoly cur{1};
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i)
            frob_p_[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                (static_cast<size_t>(i) < cur.size()) ? cur[static_cast<size_t>(i)] : 0;
        cur = fp_mulmod(cur, xp, modulus_, p);
    }

    auto apply_cols = [&](const std::vector<FpPoly>& M, const FpPoly& v) {
        FpPoly r(static_cast<size_t>(n), 0);
        for (int j = 0; j < n; ++j) {
            if (static_cast<size_t>(j) >= v.size() || v[static_cast<size_t>(j)] == 0)
                continue;
            int c = v[static_cast<size_t>(j)];
            for (int i = 0; i < n; ++i)
                r[static_cast<size_t>(i)] = static_cast<std::uint8_t>(
                    (r[static_cast<size_t>(i)] + c * M[static_cast<size_t>(j)][static_cast<size_t>(i)]) % p);
        }
        return r;
    };

    // q-power = s-fold p-power
    frob_q_.assign(static_cast<size_t>(n), FpPoly(static_cast<size_t>(n), 0));
    for (int j = 0; j < n; ++j) {
        FpPoly v(static_cast<size_t>(n), 0);
        v[static_cast<size_t>(j)] = 1;
        for (int k = 0; k < cfg_.deg; ++k) v = apply_cols(frob_p_, v);
        frob_q_[static_cast<size_t>(j)] = v;
    }

    // embed the base field: find the lexicographically smallest root of the
    // base modulus among the fixed points of x -> x^q
    if (m_ == 1) {
        // the base field is this field; its generator embeds as x itself
        // (for F_p the basis is {1} and the generator is never consulted)
        base_gen_image_.assign(static_cast<size_t>(n), 0);
        if (n > 1) base_gen_image_[1] = 1;
    } else {
        // kernel of (frob_q - id) over F_p gives the subfield F_q; enumerate
        // it and evaluate the base modulus
        std::vector<FpPoly> M(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) {
            M[static_cast<size_t>(j)] = frob_q_[static_cast<size_t>(j)];
            int d = M[static_cast<size_t>(j)][static_cast<size_t>(j)] - 1;
            M[static_cast<size_t>(j)][static_cast<size_t>(j)] =
                static_cast<std::uint8_t>(((d % p) + p) % p);
        }
        // Gaussian elimination for a kernel basis (columns are basis vectors)
        // build row-major copy
        std::vector<std::vector<int>> A(static_cast<size_t>(n),
                                        std::vector<int>(static_cast<size_t>(n), 0));
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                A[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    M[static_cast<size_t>(j)][static_cast<size_t>(i)];
        std::vector<int> pivot_col;
        int row = 0;
        for (int col = 0; col < n && row < n; ++col) {
            int pr = -1;
            for (int r2 = row; r2 < n; ++r2)
                if (A[static_cast<size_t>(r2)][static_cast<size_t>(col)] != 0) {
                    pr = r2;
                    break;
                }
            if (pr < 0) continue;
            std::swap(A[static_cast<size_t>(pr)], A[static_cast<size_t>(row)]);
            int piv = A[static_cast<size_t>(row)][static_cast<size_t>(col)];
            int pinv = fp_inv_scalar(piv, p);
            for (int c2 = 0; c2 < n; ++c2)
                A[static_cast<size_t>(row)][static_cast<size_t>(c2)] =
                    A[static_cast<size_t>(row)][static_cast<size_t>(c2)] * pinv % p;
            for (int r2 = 0; r2 < n; ++r2) {
                if (r2 == row) continue;
                int c = A[static_cast<size_t>(r2)][static_cast<size_t>(col)];
                if (c == 0) continue;
                for (int c2 = 0; c2 < n; ++c2) {
                    int s = A[static_cast<size_t>(r2)][static_cast<size_t>(c2)] -
                            c * A[static_cast<size_t>(row)][static_cast<size_t>(c2)];
                    A[static_cast<size_t>(r2)][static_cast<size_t>(c2)] = ((s % p) + p) % p;
                }
            }
            pivot_col.push_back(col);
            ++row;
        }
        std::vector<bool> is_pivot(static_cast<size_t>(n), false);
        for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
        std::vector<FpPoly> kernel;
        for (int col = 0; col < n; ++col) {
            if (is_pivot[static_cast<size_t>(col)]) continue;
            FpPoly v(static_cast<size_t>(n), 0);
            v[static_cast<size_t>(col)] = 1;
            for (size_t r2 = 0; r2 < pivot_col.size(); ++r2) {
                int val = A[r2][static_cast<size_t>(col)];
                v[static_cast<size_t>(pivot_col[r2])] =
                    static_cast<std::uint8_t>(((-val) % p + p) % p);
            }
            kernel.push_back(v);
        }
        check(static_cast<int>(kernel.size()) == cfg_.deg,
              "field tower: subfield dimension mismatch");

        // enumerate the q^1 subfield in lex order of combination digits and
        // take the smallest root of the base modulus
        std::uint64_t combos = 1;
        for (int i = 0; i < cfg_.deg; ++i) combos *= static_cast<std::uint64_t>(p);
        std::optional<FpPoly> best;
        for (std::uint64_t idx = 0; idx < combos; ++idx) {
            FpPoly v(static_cast<size_t>(n), 0);
            std::uint64_t t = idx;
            for (int k = 0; k < cfg_.deg; ++k) {
                int d = static_cast<int>(t % static_cast<std::uint64_t>(p));
                t /= static_cast<std::uint64_t>(p);
                if (d == 0) continue;
                for (int i = 0; i < n; ++i)
                    v[static_cast<size_t>(i)] = static_cast<std::uint8_t>(
                        (v[static_cast<size_t>(i)] + d * kernel[static_cast<size_t>(k)][static_cast<size_t>(i)]) % p);
            }
            // evaluate base modulus at v
            FpPoly acc{};  // zero
            FpPoly power{1};
            for (size_t i = 0; i < cfg_.modulus.size(); ++i) {
                if (cfg_.modulus[i] != 0) {
                    FpPoly term = power;
                    for (auto& d : term)
                        d = static_cast<std::uint8_t>(d * cfg_.modulus[i] % p);
                    acc = fp_add(acc, term, p);
                }
                if (i + 1 < cfg_.modulus.size()) power = fp_mulmod(power, v, modulus_, p);
            }
            if (fp_deg(acc) < 0) {
                FpPoly padded = v;
                padded.resize(static_cast<size_t>(n), 0);
                if (!best || std::lexicographical_compare(padded.begin(), padded.end(),
                                                          best->begin(), best->end()))
                    best = padded;
            }
        }
        check(best.has_value(), "field tower: base modulus has no root in extension");
        base_gen_image_ = *best;
    }

    // change of basis {x^j g^l} -> {x^i}: needed to read off F_q-coordinates
    const int s = cfg_.deg;
    mixed_to_fp_.assign(static_cast<size_t>(n), FpPoly(static_cast<size_t>(n), 0));
    FpPoly g = base_gen_image_;
    g.resize(static_cast<size_t>(n), 0);
    FpPoly xv(static_cast<size_t>(n), 0);
    if (n > 1) xv[1] = 1;  // for F_p only x^0 enters the basis
    std::vector<FpPoly> gpow(static_cast<size_t>(s));
    gpow[0] = FpPoly{1};
    gpow[0].resize(static_cast<size_t>(n), 0);
    for (int l = 1; l < s; ++l) gpow[static_cast<size_t>(l)] = fp_mulmod(gpow[static_cast<size_t>(l - 1)], g, modulus_, p);
    std::vector<FpPoly> xpow(static_cast<size_t>(m_));
    xpow[0] = FpPoly{1};
    xpow[0].resize(static_cast<size_t>(n), 0);
    for (int j = 1; j < m_; ++j) xpow[static_cast<size_t>(j)] = fp_mulmod(xpow[static_cast<size_t>(j - 1)], xv, modulus_, p);
    for (int j = 0; j < m_; ++j)
        for (int l = 0; l < s; ++l) {
            FpPoly col = fp_mulmod(xpow[static_cast<size_t>(j)], gpow[static_cast<size_t>(l)], modulus_, p);
            col.resize(static_cast<size_t>(n), 0);
            mixed_to_fp_[static_cast<size_t>(j * s + l)] = col;
        }

    // invert mixed_to_fp_ over F_p
    {
        std::vector<std::vector<int>> A(static_cast<size_t>(n),
                                        std::vector<int>(static_cast<size_t>(2 * n), 0));
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                A[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    mixed_to_fp_[static_cast<size_t>(j)][static_cast<size_t>(i)];
        for (int i = 0; i < n; ++i) A[static_cast<size_t>(i)][static_cast<size_t>(n + i)] = 1;
        for (int col = 0; col < n; ++col) {
            int pr = -1;
            for (int r2 = col; r2 < n; ++r2)
                if (A[static_cast<size_t>(r2)][static_cast<size_t>(col)] != 0) {
                    pr = r2;
                    break;
                }
            check(pr >= 0, "field: mixed basis is singular");
            std::swap(A[static_cast<size_t>(pr)], A[static_cast<size_t>(col)]);
            int pinv = fp_inv_scalar(A[static_cast<size_t>(col)][static_cast<size_t>(col)], p);
            for (int c2 = 0; c2 < 2 * n; ++c2)
                A[static_cast<size_t>(col)][static_cast<size_t>(c2)] =
                    A[static_cast<size_t>(col)][static_cast<size_t>(c2)] * pinv % p;
            for (int r2 = 0; r2 < n; ++r2) {
                if (r2 == col) continue;
                int c = A[static_cast<size_t>(r2)][static_cast<size_t>(col)];
                if (c == 0) continue;
                for (int c2 = 0; c2 < 2 * n; ++c2) {
                    int v = A[static_cast<size_t>(r2)][static_cast<size_t>(c2)] -
                            c * A[static_cast<size_t>(col)][static_cast<size_t>(c2)];
                    A[static_cast<size_t>(r2)][static_cast<size_t>(c2)] = ((v % p) + p) % p;
                }
            }
        }
        fp_to_mixed_.assign(static_cast<size_t>(n), FpPoly(static_cast<size_t>(n), 0));
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                fp_to_mixed_[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                    static_cast<std::uint8_t>(A[static_cast<size_t>(i)][static_cast<size_t>(n + j)]);
    }
}

Fq Field::one() const {
    Fq r;
    r.F = this;
    r.c.assign(static_cast<size_t>(fp_degree()), 0);
    r.c[0] = 1;
    return r;
}

Fq Field::gen() const {
    Fq r;
    r.F = this;
    r.c.assign(static_cast<size_t>(fp_degree()), 0);
    if (fp_degree() > 1) r.c[1] = 1;
    return r;  // for F_p the polynomial basis is {1}; gen degenerates to 0
}

Fq Field::from_fp_coords(std::vector<std::uint8_t> digits) const {
    check(static_cast<int>(digits.size()) == fp_degree(),
          "Fq: wrong number of F_p digits");
    for (auto d : digits) check(d < cfg_.p, "Fq: digit out of range");
    Fq r;
    r.F = this;
    r.c = std::move(digits);
    return r;
}

Fq Field::from_int(std::int64_t k) const {
    k %= cfg_.p;
    if (k < 0) k += cfg_.p;
    Fq r;
    r.F = this;
    r.c.assign(static_cast<size_t>(fp_degree()), 0);
    r.c[0] = static_cast<std::uint8_t>(k);
    return r;
}

Fq Field::embed_base(const std::vector<std::uint8_t>& base_digits) const {
    check(static_cast<int>(base_digits.size()) == cfg_.deg,
          "embed_base: wrong digit count");
    const int p = cfg_.p;
    const int n = fp_degree();
    FpPoly acc(static_cast<size_t>(n), 0);
    FpPoly power{1};
    power.resize(static_cast<size_t>(n), 0);
    FpPoly g = base_gen_image_;
    g.resize(static_cast<size_t>(n), 0);
    for (int l = 0; l < cfg_.deg; ++l) {
        int d = base_digits[static_cast<size_t>(l)];
        if (d != 0)
            for (int i = 0; i < n; ++i)
                acc[static_cast<size_t>(i)] = static_cast<std::uint8_t>(
                    (acc[static_cast<size_t>(i)] + d * power[static_cast<size_t>(i)]) % p);
        if (l + 1 < cfg_.deg) power = fp_mulmod(power, g, modulus_, p);
    }
    acc.resize(static_cast<size_t>(n), 0);
    Fq r;
    r.F = this;
    r.c = std::move(acc);
    return r;
}

std::optional<std::vector<std::uint8_t>> Field::project_base(const Fq& a) const {
    std::vector<Fq> coords = fq_coords(a);
    for (int j = 1; j < m_; ++j)
        if (!coords[static_cast<size_t>(j)].is_zero()) return std::nullopt;
    Fq c0 = coords[0];
    if (!c0.attached()) return std::vector<std::uint8_t>(static_cast<size_t>(cfg_.deg), 0);
    return c0.c;
}

Fq Field::add(const Fq& a, const Fq& b) const {
    check(a.F == this && b.F == this, "Fq: field mismatch in add");
    Fq r;
    r.F = this;
    r.c.resize(a.c.size());
    for (size_t i = 0; i < a.c.size(); ++i)
        r.c[i] = static_cast<std::uint8_t>((a.c[i] + b.c[i]) % cfg_.p);
    return r;
}

Fq Field::sub(const Fq& a, const Fq& b) const {
    check(a.F == this && b.F == this, "Fq: field mismatch in sub");
    Fq r;
    r.F = this;
    r.c.resize(a.c.size());
    for (size_t i = 0; i < a.c.size(); ++i) {
        int v = a.c[i] - b.c[i];
        r.c[i] = static_cast<std::uint8_t>(((v % cfg_.p) + cfg_.p) % cfg_.p);
    }
    return r;
}

Fq Field::mul(const Fq& a, const Fq& b) const {
    check(a.F == this && b.F == this, "Fq: field mismatch in mul");
    FpPoly prod = fp_mulmod(a.c, b.c, modulus_, cfg_.p);
    prod.resize(static_cast<size_t>(fp_degree()), 0);
    Fq r;
    r.F = this;
    r.c = std::move(prod);
    return r;
}

Fq Field::neg(const Fq& a) const {
    check(a.F == this, "Fq: field mismatch in neg");
    Fq r;
    r.F = this;
    r.c.resize(a.c.size());
    for (size_t i = 0; i < a.c.size(); ++i)
        r.c[i] = static_cast<std::uint8_t>((cfg_.p - a.c[i]) % cfg_.p);
    return r;
}

Fq Field::inverse(const Fq& a) const {
    check(a.F == this, "Fq: field mismatch in inverse");
    check(!a.is_zero(), "Fq: inverse of zero");
    // extended Euclid in F_p[x] against the modulus
    const int p = cfg_.p;
    FpPoly r0 = modulus_, r1 = a.c;
    fp_trim(r1);
    FpPoly s0{}, s1{1};
    while (fp_deg(r1) >= 0) {
        // divide r0 by r1
        FpPoly q;
        FpPoly rem = r0;
        int d1 = fp_deg(r1);
        int lcinv = fp_inv_scalar(r1[static_cast<size_t>(d1)], p);
        fp_trim(rem);
        q.assign(static_cast<size_t>(std::max(0, fp_deg(rem) - d1 + 1)), 0);
        while (fp_deg(rem) >= d1) {
            int dr = fp_deg(rem);
            int c = rem[static_cast<size_t>(dr)] * lcinv % p;
            q[static_cast<size_t>(dr - d1)] = static_cast<std::uint8_t>(c);
            for (int i = 0; i <= d1; ++i) {
                int v = rem[static_cast<size_t>(dr - d1 + i)] - c * r1[static_cast<size_t>(i)];
                rem[static_cast<size_t>(dr - d1 + i)] =
                    static_cast<std::uint8_t>(((v % p) + p) % p);
            }
            fp_trim(rem);
        }
        FpPoly s2 = fp_sub(s0, fp_mul(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    check(fp_deg(r0) == 0, "Fq: element not invertible (modulus not irreducible?)");
    int c = fp_inv_scalar(r0[0], p);
    for (auto& d : s0) d = static_cast<std::uint8_t>(d * c % p);
    s0.resize(static_cast<size_t>(fp_degree()), 0);
    Fq r;
    r.F = this;
    r.c = std::move(s0);
    return r;
}

Fq Field::pow(const Fq& a, std::int64_t e) const {
    if (e < 0) return pow(inverse(a), -e);
    Fq r = one();
    Fq b = a;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

namespace {
Fq apply_fp_matrix(const Field* F, const std::vector<std::vector<std::uint8_t>>& M,
                   const Fq& a, int p) {
    std::vector<std::uint8_t> r(a.c.size(), 0);
    for (size_t j = 0; j < a.c.size(); ++j) {
        if (a.c[j] == 0) continue;
        int c = a.c[j];
        for (size_t i = 0; i < r.size(); ++i)
            r[i] = static_cast<std::uint8_t>((r[i] + c * M[j][i]) % p);
    }
    Fq out;
    out.F = F;
    out.c = std::move(r);
    return out;
}
}  // namespace

Fq Field::pow_p(const Fq& a) const {
    check(a.F == this, "Fq: field mismatch in pow_p");
    return apply_fp_matrix(this, frob_p_, a, cfg_.p);
}

Fq Field::pow_q(const Fq& a) const {
    check(a.F == this, "Fq: field mismatch in pow_q");
    return apply_fp_matrix(this, frob_q_, a, cfg_.p);
}

Fq Field::frobenius(const Fq& a, int k) const {
    // x -> x^q has order m on F_{q^m}
    Fq r = a;
    int steps = k % m_;
    if (steps < 0) steps += m_;
    for (int i = 0; i < steps; ++i) r = pow_q(r);
    return r;
}

std::vector<Fq> Field::fq_coords(const Fq& a) const {
    const int n = fp_degree();
    const int s = cfg_.deg;
    FpPoly v = a.attached() ? a.c : FpPoly(static_cast<size_t>(n), 0);
    if (a.attached()) check(a.F == this, "Fq: field mismatch in fq_coords");
    // mixed coordinates
    FpPoly mixed(static_cast<size_t>(n), 0);
    for (int j = 0; j < n; ++j) {
        if (v[static_cast<size_t>(j)] == 0) continue;
        int c = v[static_cast<size_t>(j)];
        for (int i = 0; i < n; ++i)
            mixed[static_cast<size_t>(i)] = static_cast<std::uint8_t>(
                (mixed[static_cast<size_t>(i)] + c * fp_to_mixed_[static_cast<size_t>(j)][static_cast<size_t>(i)]) % cfg_.p);
    }
    FieldPtr base = base_field();
    std::vector<Fq> out(static_cast<size_t>(m_));
    for (int j = 0; j < m_; ++j) {
        std::vector<std::uint8_t> digits(static_cast<size_t>(s));
        for (int l = 0; l < s; ++l) digits[static_cast<size_t>(l)] = mixed[static_cast<size_t>(j * s + l)];
        out[static_cast<size_t>(j)] = base->from_fp_coords(std::move(digits));
    }
    return out;
}

Fq Field::from_fq_coords(const std::vector<Fq>& coords) const {
    check(static_cast<int>(coords.size()) == m_, "from_fq_coords: wrong length");
    const int n = fp_degree();
    const int s = cfg_.deg;
    FpPoly acc(static_cast<size_t>(n), 0);
    for (int j = 0; j < m_; ++j) {
        const Fq& c = coords[static_cast<size_t>(j)];
        std::vector<std::uint8_t> digits =
            c.attached() ? c.c : std::vector<std::uint8_t>(static_cast<size_t>(s), 0);
        for (int l = 0; l < s; ++l) {
            int d = digits[static_cast<size_t>(l)];
            if (d == 0) continue;
            for (int i = 0; i < n; ++i)
                acc[static_cast<size_t>(i)] = static_cast<std::uint8_t>(
                    (acc[static_cast<size_t>(i)] + d * mixed_to_fp_[static_cast<size_t>(j * s + l)][static_cast<size_t>(i)]) % cfg_.p);
        }
    }
    Fq r;
    r.F = this;
    r.c = std::move(acc);
    return r;
}

FieldPtr Field::base_field() const {
    if (m_ == 1)
        return std::const_pointer_cast<const Field>(
            const_cast<Field*>(this)->shared_from_this());
    if (!base_cache_) base_cache_ = Field::make(cfg_, 1);
    return base_cache_;
}

Fq Field::element_at(std::uint64_t idx) const {
    const int n = fp_degree();
    Fq r;
    r.F = this;
    r.c.assign(static_cast<size_t>(n), 0);
    for (int i = 0; i < n && idx > 0; ++i) {
        r.c[static_cast<size_t>(i)] = static_cast<std::uint8_t>(idx % cfg_.p);
        idx /= static_cast<std::uint64_t>(cfg_.p);
    }
    return r;
}

std::uint64_t Field::element_count() const {
    std::uint64_t c = 1;
    for (int i = 0; i < fp_degree(); ++i) {
        check(c <= (std::uint64_t{1} << 40), "field too large to enumerate");
        c *= static_cast<std::uint64_t>(cfg_.p);
    }
    return c;
}

std::uint64_t Field::element_index(const Fq& a) const {
    std::uint64_t idx = 0;
    std::uint64_t mult = 1;
    for (int i = 0; i < fp_degree(); ++i) {
        std::uint8_t digit = (a.attached() && static_cast<size_t>(i) < a.c.size())
                                 ? a.c[static_cast<size_t>(i)]
                                 : 0;
        idx += mult * digit;
        mult *= static_cast<std::uint64_t>(cfg_.p);
    }
    return idx;
}

std::vector<Fq> Field::subfield_elements(int a) const {
    check(a >= 1 && m_ % a == 0, "subfield_elements: a must divide m");
    const int p = cfg_.p;
    const int n = fp_degree();
    // fixed points of x -> x^(q^a)
    std::vector<std::vector<int>> A(static_cast<size_t>(n),
                                    std::vector<int>(static_cast<size_t>(n), 0));
    for (int j = 0; j < n; ++j) {
        Fq e;
        e.F = this;
        e.c.assign(static_cast<size_t>(n), 0);
        e.c[static_cast<size_t>(j)] = 1;
        Fq img = frobenius(e, a);
        for (int i = 0; i < n; ++i) A[static_cast<size_t>(i)][static_cast<size_t>(j)] = img.c[static_cast<size_t>(i)];
        A[static_cast<size_t>(j)][static_cast<size_t>(j)] =
            ((A[static_cast<size_t>(j)][static_cast<size_t>(j)] - 1) % p + p) % p;
    }
    // kernel basis
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int pr = -1;
        for (int r2 = row; r2 < n; ++r2)
            if (A[static_cast<size_t>(r2)][static_cast<size_t>(col)] != 0) {
                pr = r2;
                break;
            }
        if (pr < 0) continue;
        std::swap(A[static_cast<size_t>(pr)], A[static_cast<size_t>(row)]);
        int pinv = fp_inv_scalar(A[static_cast<size_t>(row)][static_cast<size_t>(col)], p);
        for (int c2 = 0; c2 < n; ++c2)
            A[static_cast<size_t>(row)][static_cast<size_t>(c2)] =
                A[static_cast<size_t>(row)][static_cast<size_t>(c2)] * pinv % p;
        for (int r2 = 0; r2 < n; ++r2) {
            if (r2 == row) continue;
            int c = A[static_cast<size_t>(r2)][static_cast<size_t>(col)];
            if (c == 0) continue;
            for (int c2 = 0; c2 < n; ++c2) {
                int v = A[static_cast<size_t>(r2)][static_cast<size_t>(c2)] -
                        c * A[static_cast<size_t>(row)][static_cast<size_t>(c2)];
                A[static_cast<size_t>(r2)][static_cast<size_t>(c2)] = ((v % p) + p) % p;
            }
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<std::uint8_t>> kernel;
    for (int col = 0; col < n; ++col) {
        if (is_pivot[static_cast<size_t>(col)]) continue;
        std::vector<std::uint8_t> v(static_cast<size_t>(n), 0);
        v[static_cast<size_t>(col)] = 1;
        for (size_t r2 = 0; r2 < pivot_col.size(); ++r2) {
            int val = A[r2][static_cast<size_t>(col)];
            v[static_cast<size_t>(pivot_col[r2])] =
                static_cast<std::uint8_t>(((-val) % p + p) % p);
        }
        kernel.push_back(std::move(v));
    }
    int dim = static_cast<int>(kernel.size());
    check(dim == cfg_.deg * a, "subfield_elements: unexpected dimension");
    std::uint64_t combos = 1;
    for (int i = 0; i < dim; ++i) {
        check(combos <= (std::uint64_t{1} << 20), "subfield too large to enumerate");
        combos *= static_cast<std::uint64_t>(p);
    }
    std::vector<Fq> out;
    out.reserve(static_cast<size_t>(combos));
    for (std::uint64_t idx = 0; idx < combos; ++idx) {
        std::vector<std::uint8_t> v(static_cast<size_t>(n), 0);
        std::uint64_t t = idx;
        for (int k = 0; k < dim; ++k) {
            int d = static_cast<int>(t % static_cast<std::uint64_t>(p));
            t /= static_cast<std::uint64_t>(p);
            if (d == 0) continue;
            for (int i = 0; i < n; ++i)
                v[static_cast<size_t>(i)] = static_cast<std::uint8_t>(
                    (v[static_cast<size_t>(i)] + d * kernel[static_cast<size_t>(k)][static_cast<size_t>(i)]) % p);
        }
        Fq e;
        e.F = this;
        e.c = std::move(v);
        out.push_back(std::move(e));
    }
    // lexicographic order on digit vectors
    std::sort(out.begin(), out.end(), [](const Fq& x, const Fq& y) {
        return std::lexicographical_compare(x.c.begin(), x.c.end(), y.c.begin(),
                                            y.c.end());
    });
    return out;
}

std::int64_t Field::mult_order(const Fq& a) const {
    check(!a.is_zero(), "mult_order of zero");
    std::int64_t full = 1;
    for (int i = 0; i < fp_degree(); ++i) {
        check(full < (std::int64_t{1} << 40), "field too large for mult_order");
        full *= cfg_.p;
    }
    full -= 1;
    std::int64_t ord = full;
    for (std::int64_t l : prime_divisors(full)) {
        while (ord % l == 0 && pow(a, ord / l) == one()) ord /= l;
    }
    return ord;
}

Fq Field::canonical_generator() const {
    std::uint64_t count = element_count();
    std::int64_t full = static_cast<std::int64_t>(count) - 1;
    for (std::uint64_t idx = 1; idx < count; ++idx) {
        Fq a = element_at(idx);
        if (a.is_zero()) continue;
        if (mult_order(a) == full) return a;
    }
    throw Error("canonical_generator: none found");
}

FieldEmbedding::FieldEmbedding(FieldPtr from, FieldPtr to)
    : from_(std::move(from)), to_(std::move(to)) {
    check(from_->p() == to_->p() && from_->base_degree() == to_->base_degree(),
          "FieldEmbedding: incompatible towers");
    check(to_->ext_degree() % from_->ext_degree() == 0,
          "FieldEmbedding: small degree must divide large degree");
    // roots of the small modulus among the elements of the subfield of
    // matching size; smallest coordinate vector wins
    std::vector<Fq> sub = to_->subfield_elements(from_->ext_degree());
    std::optional<Fq> root;
    const auto& mod = from_->modulus();
    for (const Fq& cand : sub) {
        Fq acc = to_->zero();
        Fq power = to_->one();
        for (size_t i = 0; i < mod.size(); ++i) {
            if (mod[i] != 0) acc = acc + to_->from_int(mod[i]) * power;
            if (i + 1 < mod.size()) power = power * cand;
        }
        if (acc.is_zero()) {
            root = cand;
            break;  // sub is sorted lexicographically
        }
    }
    check(root.has_value(), "FieldEmbedding: no root of small modulus found");
    const int nf = from_->fp_degree();
    cols_.resize(static_cast<size_t>(nf));
    Fq power = to_->one();
    for (int j = 0; j < nf; ++j) {
        cols_[static_cast<size_t>(j)] = power.c;
        if (j + 1 < nf) power = power * *root;
    }
}

Fq FieldEmbedding::apply(const Fq& a) const {
    if (!a.attached()) return Fq{};
    check(a.F == from_.get(), "FieldEmbedding: element not in source field");
    const int p = to_->p();
    std::vector<std::uint8_t> acc(static_cast<size_t>(to_->fp_degree()), 0);
    for (size_t j = 0; j < a.c.size(); ++j) {
        int d = a.c[j];
        if (d == 0) continue;
        for (size_t i = 0; i < acc.size(); ++i)
            acc[i] = static_cast<std::uint8_t>((acc[i] + d * cols_[j][i]) % p);
    }
    Fq r;
    r.F = to_.get();
    r.c = std::move(acc);
    return r;
}

std::optional<Fq> FieldEmbedding::project(const Fq& b) const {
    if (!b.attached() || b.is_zero()) return from_->zero();
    check(b.F == to_.get(), "FieldEmbedding: element not in target field");
    // solve cols * x = b over F_p
    const int p = to_->p();
    const int rows = to_->fp_degree();
    const int colsn = from_->fp_degree();
    std::vector<std::vector<int>> A(static_cast<size_t>(rows),
                                    std::vector<int>(static_cast<size_t>(colsn + 1), 0));
    for (int j = 0; j < colsn; ++j)
        for (int i = 0; i < rows; ++i)
            A[static_cast<size_t>(i)][static_cast<size_t>(j)] = cols_[static_cast<size_t>(j)][static_cast<size_t>(i)];
    for (int i = 0; i < rows; ++i) A[static_cast<size_t>(i)][static_cast<size_t>(colsn)] = b.c[static_cast<size_t>(i)];
    int row = 0;
    std::vector<int> pivot_of_col(static_cast<size_t>(colsn), -1);
    for (int col = 0; col < colsn && row < rows; ++col) {
        int pr = -1;
        for (int r2 = row; r2 < rows; ++r2)
            if (A[static_cast<size_t>(r2)][static_cast<size_t>(col)] != 0) {
                pr = r2;
                break;
            }
        if (pr < 0) continue;
        std::swap(A[static_cast<size_t>(pr)], A[static_cast<size_t>(row)]);
        int pinv = fp_inv_scalar(A[static_cast<size_t>(row)][static_cast<size_t>(col)], p);
        for (int c2 = 0; c2 <= colsn; ++c2)
            A[static_cast<size_t>(row)][static_cast<size_t>(c2)] =
                A[static_cast<size_t>(row)][static_cast<size_t>(c2)] * pinv % p;
        for (int r2 = 0; r2 < rows; ++r2) {
            if (r2 == row) continue;
            int c = A[static_cast<size_t>(r2)][static_cast<size_t>(col)];
            if (c == 0) continue;
            for (int c2 = 0; c2 <= colsn; ++c2) {
                int v = A[static_cast<size_t>(r2)][static_cast<size_t>(c2)] -
                        c * A[static_cast<size_t>(row)][static_cast<size_t>(c2)];
                A[static_cast<size_t>(r2)][static_cast<size_t>(c2)] = ((v % p) + p) % p;
            }
        }
        pivot_of_col[static_cast<size_t>(col)] = row;
        ++row;
    }
    for (int r2 = row; r2 < rows; ++r2)
        if (A[static_cast<size_t>(r2)][static_cast<size_t>(colsn)] != 0) return std::nullopt;
    std::vector<std::uint8_t> x(static_cast<size_t>(colsn), 0);
    for (int col = 0; col < colsn; ++col)
        if (pivot_of_col[static_cast<size_t>(col)] >= 0)
            x[static_cast<size_t>(col)] = static_cast<std::uint8_t>(
                A[static_cast<size_t>(pivot_of_col[static_cast<size_t>(col)])][static_cast<size_t>(colsn)]);
    return from_->from_fp_coords(std::move(x));
}

}  // namespace dre
