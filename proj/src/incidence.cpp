/* Copyright (C) 2026 The kzn authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#include "kzn/incidence.hpp"

#include <random>
#include <sstream>

#include "kzn/errors.hpp"

namespace kzn {

uint64_t vec_to_index(const Vec& v, uint64_t q) {
    uint64_t idx = 0;
    for (uint64_t x : v) idx = idx * q + x % q;
    return idx;
}

Vec index_to_vec(uint64_t idx, uint64_t q, uint32_t n) {
    Vec v(n);
    for (uint32_t i = n; i-- > 0;) {
        v[i] = idx % q;
        idx /= q;
    }
    return v;
}

namespace {

uint64_t checked_pow(uint64_t base, uint32_t e, uint64_t cap, const char* what) {
    unsigned __int128 v = 1;
    for (uint32_t i = 0; i < e; ++i) {
        v *= base;
        if (v > cap) throw BudgetExceeded(std::string(what) + ": size budget exceeded");
    }
    return static_cast<uint64_t>(v);
}

} // namespace

MMatrix build_m(uint32_t p, uint32_t ell, uint32_t n) {
    uint64_t q = checked_pow(p, ell, 10'000, "build_m");
    uint64_t rows = checked_pow(q, n, 10'000, "build_m");
    // dense storage is rows^2 polynomials of length q
    if (static_cast<unsigned __int128>(rows) * rows * q > 100'000'000)
        throw BudgetExceeded("build_m: matrix storage exceeds budget");
    FpQuotient ring = FpQuotient::make_cyclic(p, q);
    MMatrix m{p, ell, n, q, Matrix<FpQuotient>(ring, rows, rows)};
    for (uint64_t r = 0; r < rows; ++r) {
        Vec u = index_to_vec(r, q, n);
        for (uint64_t c = 0; c < rows; ++c) {
            Vec v = index_to_vec(c, q, n);
            uint64_t dot = 0;
            for (uint32_t i = 0; i < n; ++i) dot = (dot + u[i] * v[i]) % q;
            m.mat.at(r, c) = ring.monomial(dot);
        }
    }
    return m;
}

Matrix<FpQuotient> restrict_m(const MMatrix& m, const std::vector<uint64_t>& row_indices) {
    if (row_indices.empty())
        throw std::invalid_argument("restrict_m: empty row selection");
    Matrix<FpQuotient> out(m.mat.ring(), row_indices.size(), m.mat.cols());
    for (size_t r = 0; r < row_indices.size(); ++r) {
        if (row_indices[r] >= m.mat.rows())
            throw std::invalid_argument("restrict_m: row index out of range");
        for (size_t c = 0; c < m.mat.cols(); ++c)
            out.at(r, c) = m.mat.at(row_indices[r], c);
    }
    return out;
}

Matrix<FpQuotient> restrict_m_vectors(const MMatrix& m, const std::vector<Vec>& rows) {
    std::vector<uint64_t> idx;
    idx.reserve(rows.size());
    for (const auto& v : rows) idx.push_back(vec_to_index(v, m.q));
    return restrict_m(m, idx);
}

uint64_t diag_valuation(uint64_t j, uint64_t p) {
    uint64_t total = 0;
    for (uint64_t l = 1; l <= j; ++l) {
        uint64_t term = 1, x = l;
        while (x % p == 0) {
            x /= p;
            term *= p;
        }
        total += term;
    }
    return total;
}

Rat diag_valuation_relaxed(uint64_t j, uint64_t p, uint32_t ell) {
    Rat v = Rat(Int(static_cast<unsigned long>(j))) *
            (Rat(static_cast<unsigned long>(ell)) -
             Rat(Int(static_cast<unsigned long>(ell - 1)), Int(static_cast<unsigned long>(p))));
    v.canonicalize();
    return v;
}

Int diag_rank_bound(uint32_t p, uint32_t ell, uint32_t n) {
    uint64_t q = checked_pow(p, ell, 10'000, "diag_rank_bound");
    uint64_t threshold = q - 1;
    // histogram of valuations, then n-fold convolution capped at the threshold
    std::vector<Int> ways(threshold + 1, Int(0));
    uint64_t running = 0; // diag_valuation(j) accumulated incrementally
    for (uint64_t j = 0; j < q; ++j) {
        if (j > 0) {
            uint64_t term = 1, x = j;
            while (x % p == 0) {
                x /= p;
                term *= p;
            }
            running += term;
        }
        if (running <= threshold) ways[running] += 1;
    }
    std::vector<Int> dp(threshold + 1, Int(0));
    dp[0] = 1;
    for (uint32_t step = 0; step < n; ++step) {
        std::vector<Int> next(threshold + 1, Int(0));
        for (uint64_t t = 0; t <= threshold; ++t) {
            if (dp[t] == 0) continue;
            for (uint64_t v = 0; v + t <= threshold; ++v) {
                if (ways[v] == 0) continue;
                next[t + v] += dp[t] * ways[v];
            }
        }
        dp = std::move(next);
    }
    Int total = 0;
    for (const auto& x : dp) total += x;
    return total;
}

Int binom_rank_bound(uint32_t p, uint32_t ell, uint32_t n) {
    uint64_t q = checked_pow(p, ell, 1'000'000'000ULL, "binom_rank_bound");
    Rat x(Int(static_cast<unsigned long>(q)), Int(static_cast<unsigned long>(ell)));
    x.canonicalize();
    return rat_ceil(binom_real(x + Rat(static_cast<unsigned long>(n)), n));
}

bool verify_restricted_rank(uint32_t p, uint32_t ell, uint32_t n) {
    uint64_t q = checked_pow(p, ell, 1'000, "verify_restricted_rank");
    checked_pow(q, n, 1'000, "verify_restricted_rank");
    MMatrix m = build_m(p, ell, n);
    size_t full = rank_fp_quot(m.mat);
    std::vector<Vec> reps;
    for (const auto& d : enumerate_projective(q, n)) reps.push_back(d.rep);
    size_t restricted = rank_fp_quot(restrict_m_vectors(m, reps));
    return restricted == full;
}

LiftedDirectionSet lift_directions(const std::vector<Direction>& d, uint32_t ell) {
    if (d.empty()) throw std::invalid_argument("lift_directions: empty direction set");
    Factorization f = factorize(d[0].modulus);
    if (f.factors.size() != 1)
        throw std::invalid_argument("lift_directions: modulus must be a prime power");
    uint64_t p = f.factors[0].p;
    uint32_t k = f.factors[0].k;
    if (ell < k) throw std::invalid_argument("lift_directions: ell must be >= k");
    uint64_t pk = f.factors[0].value();
    uint64_t lift_span = checked_pow(p, ell - k, 100'000'000, "lift_directions");
    LiftedDirectionSet out{p, k, ell, d, {}};
    uint32_t n = static_cast<uint32_t>(d[0].rep.size());
    checked_pow(lift_span, n, 100'000'000, "lift_directions");
    for (const auto& dir : d) {
        if (dir.modulus != pk)
            throw std::invalid_argument("lift_directions: mixed moduli in direction set");
        // odometer over the lift offsets, each coordinate stepping by p^k
        uint64_t count = 1;
        for (uint32_t i = 0; i < n; ++i) count *= lift_span;
        for (uint64_t t = 0; t < count; ++t) {
            Vec v = dir.rep;
            uint64_t rest = t;
            for (uint32_t i = n; i-- > 0;) {
                v[i] += pk * (rest % lift_span);
                rest /= lift_span;
            }
            out.lifted.push_back(std::move(v));
        }
    }
    return out;
}

Int gl_order(uint64_t p, uint32_t k, uint32_t n) {
    Int order = int_pow(Int(static_cast<unsigned long>(p)),
                        static_cast<unsigned long>(k - 1) * n * n);
    Int pn = int_pow(Int(static_cast<unsigned long>(p)), n);
    Int pi = 1;
    for (uint32_t i = 0; i < n; ++i) {
        order *= pn - pi;
        pi *= static_cast<unsigned long>(p);
    }
    return order;
}

namespace {

// determinant-is-a-unit test via rank over F_p
bool is_gl(const std::vector<uint64_t>& w, uint32_t p, uint32_t n) {
    Fp f{p};
    Matrix<Fp> m(f, n, n);
    for (uint32_t r = 0; r < n; ++r)
        for (uint32_t c = 0; c < n; ++c) m.at(r, c) = static_cast<uint32_t>(w[r * n + c] % p);
    return matrix_rank(m) == n;
}

size_t rotated_rank(const MMatrix& m, const std::vector<Direction>& d,
                    const std::vector<uint64_t>& w, uint64_t pk, uint32_t ell, uint32_t n) {
    // W*D as exact vectors, then the representative-vector lift
    std::vector<Direction> rotated;
    rotated.reserve(d.size());
    for (const auto& dir : d) {
        Vec v(n, 0);
        for (uint32_t r = 0; r < n; ++r) {
            uint64_t acc = 0;
            for (uint32_t c = 0; c < n; ++c)
                acc = (acc + w[r * n + c] * dir.rep[c]) % pk;
            v[r] = acc;
        }
        rotated.push_back(Direction{std::move(v), pk});
    }
    auto lifted = lift_directions(rotated, ell);
    return rank_fp_quot(restrict_m_vectors(m, lifted.lifted));
}

} // namespace

RotationSearch best_rotation_rank(uint32_t p, uint32_t k, uint32_t ell, uint32_t n,
                                  const std::vector<Direction>& d, uint64_t budget,
                                  uint64_t seed) {
    if (d.empty()) throw std::invalid_argument("best_rotation_rank: empty direction set");
    uint64_t pk = checked_pow(p, k, 1'000'000, "best_rotation_rank");
    MMatrix m = build_m(p, ell, n);
    Int order = gl_order(p, k, n);
    RotationSearch best;
    best.exhaustive = order <= Int(static_cast<unsigned long>(budget));

    // argmax with ties broken toward the lexicographically least W
    auto consider = [&](const std::vector<uint64_t>& w) {
        size_t r = rotated_rank(m, d, w, pk, ell, n);
        ++best.candidates;
        if (best.w.empty() || r > best.rank) {
            best.rank = r;
            best.w = w;
        } else if (r == best.rank && w < best.w) {
            best.w = w;
        }
    };

    if (best.exhaustive) {
        // lexicographic odometer over all n x n matrices mod p^k, GL filter
        std::vector<uint64_t> w(static_cast<size_t>(n) * n, 0);
        while (true) {
            if (is_gl(w, p, n)) consider(w);
            size_t pos = w.size();
            while (pos-- > 0) {
                if (++w[pos] < pk) break;
                w[pos] = 0;
            }
            if (pos == static_cast<size_t>(-1)) break;
        }
    } else {
        std::mt19937_64 rng(seed);
        uint64_t samples = budget;
        while (samples > 0) {
            std::vector<uint64_t> w(static_cast<size_t>(n) * n);
            for (auto& x : w) x = rng() % pk;
            if (!is_gl(w, p, n)) continue; // rejection on the determinant
            consider(w);
            --samples;
        }
    }
    return best;
}

RichLineReport rich_line_rank_inequality(const PointSet& s, uint64_t m, uint32_t ell,
                                         const KakeyaWitness& witnesses) {
    Factorization f = factorize(s.modulus);
    if (f.factors.size() != 1)
        throw std::invalid_argument("rich_line_rank_inequality: modulus must be a prime power");
    uint64_t p = f.factors[0].p;
    uint32_t k = f.factors[0].k;
    uint32_t n = s.dim;
    uint64_t q = checked_pow(p, ell, 1'000'000, "rich_line_rank_inequality");
    if (q < m)
        throw std::invalid_argument("rich_line_rank_inequality: need ell >= log_p(m)");
    checked_pow(q, n, 1'000, "rich_line_rank_inequality");
    if (ell < k)
        throw std::invalid_argument("rich_line_rank_inequality: need ell >= k");

    RichLineReport rep;
    rep.b = (q + m - 1) / m;
    rep.lhs = Int(static_cast<unsigned long>(s.size())) *
              binom_exact(rep.b + n - 1, n);

    std::vector<Direction> valid;
    for (const auto& [dir, line] : witnesses.lines) {
        if (!(line.dir == dir))
            throw std::invalid_argument("rich_line_rank_inequality: witness keyed by wrong direction");
        if (richness(s, line) >= m) {
            valid.push_back(dir);
        } else {
            std::ostringstream os;
            os << "direction (";
            for (size_t i = 0; i < dir.rep.size(); ++i)
                os << (i ? "," : "") << dir.rep[i];
            os << "): witness line is not " << m << "-rich";
            rep.violations.push_back(os.str());
        }
    }
    if (valid.empty()) {
        rep.rhs = 0;
        rep.pass = rep.lhs >= 0;
        return rep;
    }
    auto lifted = lift_directions(valid, ell);
    MMatrix mm = build_m(static_cast<uint32_t>(p), ell, n);
    rep.rhs = rank_fp_quot(restrict_m_vectors(mm, lifted.lifted));
    rep.pass = rep.lhs >= Int(static_cast<unsigned long>(rep.rhs));
    return rep;
}

} // namespace kzn
