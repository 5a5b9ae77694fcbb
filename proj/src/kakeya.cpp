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
#include "kzn/kakeya.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>

#include <json.hpp>

#include "kzn/errors.hpp"
#include "kzn/parallel.hpp"

namespace kzn {

namespace {

constexpr uint64_t kGridBudget = 100'000'000; // cells for grid-backed scans

// N^n with a budget cap; throws BudgetExceeded past the cap.
uint64_t grid_size_checked(uint64_t modulus, uint32_t n, uint64_t cap = kGridBudget) {
    unsigned __int128 g = 1;
    for (uint32_t i = 0; i < n; ++i) {
        g *= modulus;
        if (g > cap)
            throw BudgetExceeded("grid of size N^n exceeds budget (N=" +
                                 std::to_string(modulus) + ", n=" + std::to_string(n) + ")");
    }
    return static_cast<uint64_t>(g);
}

// Big-endian cell index: coordinate 1 most significant.
uint64_t encode_point(const Vec& p, uint64_t modulus) {
    uint64_t idx = 0;
    for (uint64_t x : p) idx = idx * modulus + x;
    return idx;
}

Vec decode_point(uint64_t idx, uint64_t modulus, uint32_t n) {
    Vec p(n);
    for (uint32_t i = n; i-- > 0;) {
        p[i] = idx % modulus;
        idx /= modulus;
    }
    return p;
}

} // namespace

bool PointSet::contains(const Vec& p) const {
    return std::binary_search(points.begin(), points.end(), p);
}

PointSet PointSet::make(uint64_t modulus, uint32_t dim, std::vector<Vec> pts) {
    if (modulus < 2) throw std::invalid_argument("PointSet: modulus must be >= 2");
    if (dim < 1) throw std::invalid_argument("PointSet: dimension must be >= 1");
    for (const auto& p : pts) {
        if (p.size() != dim) throw std::invalid_argument("PointSet: wrong point arity");
        for (uint64_t x : p)
            if (x >= modulus) throw std::invalid_argument("PointSet: coordinate out of range");
    }
    std::sort(pts.begin(), pts.end());
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
        throw std::invalid_argument("PointSet: duplicate point");
    PointSet s;
    s.modulus = modulus;
    s.dim = dim;
    s.points = std::move(pts);
    return s;
}

void KakeyaWitness::insert(Line line) {
    Direction key = line.dir;
    lines.insert_or_assign(std::move(key), std::move(line));
}

uint64_t richness(const PointSet& s, const Line& line) {
    uint64_t count = 0;
    for (const auto& p : line_points(line))
        if (s.contains(p)) ++count;
    return count;
}

namespace {

struct DirScan {
    uint64_t best = 0;           // max richness over lines in this direction
    std::optional<Line> witness; // first line reaching m
};

// Scans every line in direction `dir` against the grid.  When the direction
// has a unit coordinate j, bases with a_j = 0 hit each line exactly once;
// otherwise all N^n bases are scanned (redundantly but correctly).
DirScan scan_direction(const std::vector<uint8_t>& grid, uint64_t modulus, uint32_t n,
                       const Direction& dir, uint64_t m) {
    DirScan out;
    int unit_at = -1;
    for (size_t i = 0; i < dir.rep.size(); ++i) {
        if (is_unit(dir.rep[i], modulus)) {
            unit_at = static_cast<int>(i);
            break;
        }
    }
    uint64_t base_count = 1;
    uint32_t free_coords = (unit_at >= 0) ? n - 1 : n;
    for (uint32_t i = 0; i < free_coords; ++i) base_count *= modulus;

    Vec a(n, 0), pt(n);
    for (uint64_t bi = 0; bi < base_count; ++bi) {
        uint64_t rest = bi;
        for (uint32_t i = n; i-- > 0;) {
            if (static_cast<int>(i) == unit_at) {
                a[i] = 0;
                continue;
            }
            a[i] = rest % modulus;
            rest /= modulus;
        }
        pt = a;
        uint64_t rich = 0;
        for (uint64_t lam = 0; lam < modulus; ++lam) {
            if (lam > 0)
                for (uint32_t i = 0; i < n; ++i) {
                    pt[i] += dir.rep[i];
                    if (pt[i] >= modulus) pt[i] -= modulus;
                }
            if (grid[encode_point(pt, modulus)]) ++rich;
        }
        if (rich > out.best) out.best = rich;
        if (rich >= m && !out.witness) out.witness = Line{a, dir};
        if (out.best == modulus && out.witness) break;
    }
    return out;
}

} // namespace

VerifyReport verify_kakeya(const PointSet& s, uint64_t m, const KakeyaWitness* witnesses) {
    uint64_t modulus = s.modulus;
    uint32_t n = s.dim;
    if (m < 1 || m > modulus)
        throw std::invalid_argument("verify_kakeya: need 1 <= m <= N");
    auto dirs = enumerate_projective(modulus, n);

    std::vector<DirScan> results(dirs.size());
    if (witnesses != nullptr) {
        for (size_t i = 0; i < dirs.size(); ++i) {
            auto it = witnesses->lines.find(dirs[i]);
            if (it == witnesses->lines.end()) continue;
            if (!(it->second.dir == dirs[i]))
                throw std::invalid_argument("verify_kakeya: witness keyed by wrong direction");
            uint64_t rich = richness(s, it->second);
            results[i].best = rich;
            if (rich >= m) results[i].witness = it->second;
        }
    } else {
        uint64_t cells = grid_size_checked(modulus, n);
        std::vector<uint8_t> grid(cells, 0);
        for (const auto& p : s.points) grid[encode_point(p, modulus)] = 1;
        parallel_for(dirs.size(), [&](size_t i) {
            results[i] = scan_direction(grid, modulus, n, dirs[i], m);
        });
    }

    VerifyReport rep;
    rep.m = m;
    rep.total_directions = dirs.size();
    for (size_t i = 0; i < dirs.size(); ++i) {
        if (results[i].witness) {
            ++rep.satisfied;
            rep.witnesses.insert(*results[i].witness);
        }
        if (!rep.worst || results[i].best < rep.worst_richness) {
            rep.worst = dirs[i];
            rep.worst_richness = results[i].best;
        }
    }
    rep.fraction = Rat(static_cast<unsigned long>(rep.satisfied),
                       static_cast<unsigned long>(rep.total_directions));
    rep.fraction.canonicalize();
    rep.kakeya = (m == modulus) && (rep.satisfied == rep.total_directions);
    return rep;
}

bool meets_fraction(const VerifyReport& r, const Rat& eps) {
    Rat target = eps * Rat(static_cast<unsigned long>(r.total_directions));
    return Int(static_cast<unsigned long>(r.satisfied)) >= rat_ceil(target);
}

uint64_t CSequence::pk() const {
    uint64_t v = 1;
    for (uint64_t i = 0; i < k; ++i) v *= p;
    return v;
}

CSequence build_c_sequence(uint32_t p, uint32_t s) {
    CSequence c;
    c.p = p;
    c.s = s;
    uint64_t ps1 = 1;
    for (uint32_t i = 0; i <= s; ++i) ps1 *= p;
    c.k = (ps1 - 1) / (p - 1);
    if (s == 0) {
        c.values.assign(1, 0);
        return c;
    }
    uint64_t ps = ps1 / p;
    c.values.push_back(ps - 1);
    while (c.values.size() < c.k) {
        uint64_t cur = c.values.back();
        if (cur == 0) {
            c.values.push_back(0);
            continue;
        }
        auto d = p_digits(cur, p, s);
        if (d[s - 1] > 0) {
            --d[s - 1];
            c.values.push_back(from_p_digits(d, p));
            continue;
        }
        // maximal run of zero top digits: positions alpha..s-1
        uint32_t z = 0;
        for (uint32_t i = s; i-- > 0 && d[i] == 0;) ++z;
        uint32_t alpha = s - z;
        for (uint32_t r = 0; r < z && c.values.size() < c.k; ++r) c.values.push_back(cur);
        --d[alpha - 1];
        for (uint32_t i = alpha; i < s; ++i) d[i] = p - 1;
        if (c.values.size() < c.k) c.values.push_back(from_p_digits(d, p));
    }
    return c;
}

uint64_t g_eval(uint64_t u, const CSequence& c) {
    uint64_t modulus = c.pk();
    if (u >= modulus) throw std::invalid_argument("g_eval: argument out of range");
    unsigned __int128 total = 0;
    uint64_t rest = u, pj = 1;
    for (uint64_t j = 0; j < c.k; ++j) {
        uint64_t digit = rest % c.p;
        rest /= c.p;
        total += static_cast<unsigned __int128>(digit) * c.values[j] % modulus * pj;
        pj *= c.p;
    }
    return static_cast<uint64_t>(total % modulus);
}

namespace {

uint64_t image_size_for_t(uint64_t t, const std::vector<uint32_t>& g_table, uint64_t modulus,
                          std::vector<uint8_t>& scratch) {
    std::fill(scratch.begin(), scratch.end(), 0);
    uint64_t count = 0;
    for (uint64_t u = 0; u < modulus; ++u) {
        uint64_t v = mul_mod(t, u, modulus);
        uint64_t g = g_table[u];
        uint64_t w = v >= g ? v - g : v + modulus - g;
        if (!scratch[w]) {
            scratch[w] = 1;
            ++count;
        }
    }
    return count;
}

std::vector<uint32_t> g_table_of(const CSequence& c, uint64_t cap = 10'000'000) {
    uint64_t modulus = c.pk();
    if (modulus > cap)
        throw BudgetExceeded("g table of size p^k = " + std::to_string(modulus) +
                             " exceeds budget");
    std::vector<uint32_t> table(modulus);
    for (uint64_t u = 0; u < modulus; ++u) table[u] = static_cast<uint32_t>(g_eval(u, c));
    return table;
}

} // namespace

uint64_t g_image_size(const CSequence& c, uint64_t t) {
    uint64_t modulus = c.pk();
    auto g_table = g_table_of(c);
    std::vector<uint8_t> scratch(modulus, 0);
    return image_size_for_t(t % modulus, g_table, modulus, scratch);
}

GImageReport g_image_check(uint32_t p, uint32_t s, GImageMode mode, uint64_t seed) {
    CSequence c = build_c_sequence(p, s);
    uint64_t modulus = c.pk();
    GImageReport rep;
    rep.exhaustive = (mode == GImageMode::Exhaustive);
    if (rep.exhaustive && modulus > 10'000)
        throw BudgetExceeded("g_image_check: exhaustive mode requires p^k <= 10^4");
    auto g_table = g_table_of(c);
    std::vector<uint8_t> scratch(modulus, 0);

    uint64_t sharp = 1;
    for (uint64_t i = 0; i < c.k - s; ++i) sharp *= p;
    rep.sharp = sharp;
    // p^k / (k (1 - 1/p)) = p^{k+1} / (k (p - 1))
    Rat bound(Int(static_cast<unsigned long>(modulus)) * p,
              Int(static_cast<unsigned long>(c.k)) * (p - 1));
    bound.canonicalize();
    rep.bound_floor = rat_floor(bound);

    std::vector<uint64_t> ts;
    if (rep.exhaustive) {
        ts.resize(modulus);
        for (uint64_t t = 0; t < modulus; ++t) ts[t] = t;
    } else {
        std::mt19937_64 rng(seed);
        std::set<uint64_t> picked;
        while (picked.size() < std::min<uint64_t>(64, modulus)) picked.insert(rng() % modulus);
        ts.assign(picked.begin(), picked.end());
    }
    rep.sampled_t = ts.size();
    for (uint64_t t : ts) {
        uint64_t sz = image_size_for_t(t, g_table, modulus, scratch);
        if (sz > rep.max_image) {
            rep.max_image = sz;
            rep.argmax_t = t;
        }
    }
    rep.pass = Int(static_cast<unsigned long>(rep.max_image)) <= rep.bound_floor;
    return rep;
}

Construction construct_unit_first(uint32_t p, uint32_t s, uint32_t n) {
    if (n < 1) throw std::invalid_argument("construct_unit_first: n must be >= 1");
    CSequence c = build_c_sequence(p, s);
    uint64_t modulus = c.pk();
    grid_size_checked(modulus, n); // enumeration cost is p^{kn}
    auto g_table = g_table_of(c);

    Construction out;
    std::set<Vec> pts;
    if (n == 1) {
        for (uint64_t t = 0; t < modulus; ++t) pts.insert(Vec{t});
        Direction d{Vec{1}, modulus};
        out.witness.insert(Line{Vec{0}, d});
    } else {
        uint64_t tuples = 1;
        for (uint32_t i = 0; i + 1 < n; ++i) tuples *= modulus;
        Vec u(n - 1, 0);
        for (uint64_t ti = 0; ti < tuples; ++ti) {
            uint64_t rest = ti;
            for (uint32_t i = n - 1; i-- > 0;) {
                u[i] = rest % modulus;
                rest /= modulus;
            }
            Vec dir_rep(n), base(n);
            dir_rep[0] = 1;
            base[0] = 0;
            for (uint32_t i = 0; i + 1 < n; ++i) {
                dir_rep[i + 1] = u[i];
                base[i + 1] = (modulus - g_table[u[i]]) % modulus;
            }
            out.witness.insert(Line{base, Direction{dir_rep, modulus}});
            Vec pt(n);
            for (uint64_t t = 0; t < modulus; ++t) {
                pt[0] = t;
                for (uint32_t i = 0; i + 1 < n; ++i) {
                    uint64_t v = mul_mod(t, u[i], modulus);
                    uint64_t g = g_table[u[i]];
                    pt[i + 1] = v >= g ? v - g : v + modulus - g;
                }
                pts.insert(pt);
            }
        }
    }
    out.points = PointSet::make(modulus, n, std::vector<Vec>(pts.begin(), pts.end()));
    return out;
}

Construction construct_kakeya_pk(uint32_t p, uint32_t s, uint32_t n) {
    Construction slice = construct_unit_first(p, s, n);
    uint64_t modulus = slice.points.modulus;
    CSequence c = build_c_sequence(p, s);
    auto g_table = g_table_of(c);

    std::set<Vec> pts;
    for (uint32_t j = 0; j < n; ++j) {
        for (const auto& pt : slice.points.points) {
            Vec q(pt.begin() + 1, pt.end());
            q.insert(q.begin() + j, pt[0]);
            pts.insert(std::move(q));
        }
    }

    Construction out;
    out.points = PointSet::make(modulus, n, std::vector<Vec>(pts.begin(), pts.end()));
    for (const auto& dir : enumerate_projective(modulus, n)) {
        size_t j = 0;
        while (j < dir.rep.size() && !is_unit(dir.rep[j], modulus)) ++j;
        // canonical representatives over a prime power carry a 1 there
        Vec base(n);
        for (uint32_t i = 0; i < n; ++i)
            base[i] = (i == j) ? 0 : (modulus - g_table[dir.rep[i]]) % modulus;
        out.witness.insert(Line{std::move(base), dir});
    }
    auto rep = verify_kakeya(out.points, modulus, &out.witness);
    if (!rep.kakeya)
        throw std::logic_error("construct_kakeya_pk: certification failed");
    return out;
}

Construction construct_kakeya_n(const std::vector<std::pair<uint32_t, uint32_t>>& spec,
                                uint32_t n) {
    if (spec.empty()) throw std::invalid_argument("construct_kakeya_n: empty spec");
    for (size_t i = 0; i < spec.size(); ++i)
        for (size_t j = i + 1; j < spec.size(); ++j)
            if (spec[i].first == spec[j].first)
                throw std::invalid_argument("construct_kakeya_n: primes must be distinct");

    std::vector<Construction> parts;
    unsigned __int128 big_n = 1;
    for (const auto& [p, s] : spec) {
        parts.push_back(construct_kakeya_pk(p, s, n));
        big_n *= parts.back().points.modulus;
        if (big_n > kGridBudget)
            throw BudgetExceeded("construct_kakeya_n: modulus exceeds budget");
    }
    uint64_t modulus = static_cast<uint64_t>(big_n);
    Factorization f = factorize(modulus);

    unsigned __int128 total = 1;
    for (const auto& part : parts) {
        total *= part.points.size();
        if (total > 10'000'000)
            throw BudgetExceeded("construct_kakeya_n: product point set exceeds budget");
    }

    auto combine_vec = [&](const std::vector<const Vec*>& slices) {
        Vec out(n);
        std::vector<Zmod> slots(parts.size());
        for (uint32_t coord = 0; coord < n; ++coord) {
            for (size_t i = 0; i < parts.size(); ++i)
                slots[i] = Zmod{(*slices[i])[coord], parts[i].points.modulus};
            out[coord] = crt_combine(slots, f).value;
        }
        return out;
    };

    // Cartesian product of the component point sets, combined coordinatewise.
    std::vector<Vec> pts;
    pts.reserve(static_cast<size_t>(total));
    std::vector<size_t> idx(parts.size(), 0);
    std::vector<const Vec*> slices(parts.size());
    while (true) {
        for (size_t i = 0; i < parts.size(); ++i)
            slices[i] = &parts[i].points.points[idx[i]];
        pts.push_back(combine_vec(slices));
        size_t pos = parts.size();
        while (pos-- > 0) {
            if (++idx[pos] < parts[pos].points.size()) break;
            idx[pos] = 0;
        }
        if (pos == static_cast<size_t>(-1)) break;
    }

    Construction out;
    out.points = PointSet::make(modulus, n, std::move(pts));

    // witness lines: CRT products of the component witnesses, re-keyed by
    // the canonical representative of the combined direction
    std::vector<std::vector<const Line*>> part_lines(parts.size());
    for (size_t i = 0; i < parts.size(); ++i)
        for (const auto& [d, line] : parts[i].witness.lines) part_lines[i].push_back(&line);
    std::vector<size_t> widx(parts.size(), 0);
    while (true) {
        std::vector<const Vec*> dirs(parts.size()), bases(parts.size());
        for (size_t i = 0; i < parts.size(); ++i) {
            dirs[i] = &part_lines[i][widx[i]]->dir.rep;
            bases[i] = &part_lines[i][widx[i]]->base;
        }
        Vec dir_vec = combine_vec(dirs);
        Vec base_vec = combine_vec(bases);
        auto canon = canonicalize(dir_vec, f);
        if (!canon) throw std::logic_error("construct_kakeya_n: combined direction not projective");
        out.witness.insert(Line{std::move(base_vec), std::move(*canon)});
        size_t pos = parts.size();
        while (pos-- > 0) {
            if (++widx[pos] < part_lines[pos].size()) break;
            widx[pos] = 0;
        }
        if (pos == static_cast<size_t>(-1)) break;
    }

    auto rep = verify_kakeya(out.points, modulus, &out.witness);
    if (!rep.kakeya)
        throw std::logic_error("construct_kakeya_n: certification failed");
    return out;
}

namespace {

// Distinct line point-masks per direction over a tiny grid.
std::vector<std::vector<uint32_t>> direction_line_masks(uint64_t modulus, uint32_t n,
                                                        const std::vector<Direction>& dirs) {
    std::vector<std::vector<uint32_t>> masks(dirs.size());
    uint64_t cells = 1;
    for (uint32_t i = 0; i < n; ++i) cells *= modulus;
    for (size_t di = 0; di < dirs.size(); ++di) {
        std::set<uint32_t> seen;
        for (uint64_t bi = 0; bi < cells; ++bi) {
            Line line{decode_point(bi, modulus, n), dirs[di]};
            uint32_t mask = 0;
            for (const auto& pt : line_points(line))
                mask |= uint32_t{1} << encode_point(pt, modulus);
            seen.insert(mask);
        }
        masks[di].assign(seen.begin(), seen.end());
    }
    return masks;
}

} // namespace

MinSearchResult min_kakeya_bruteforce(uint64_t modulus, uint32_t n) {
    uint64_t cells = grid_size_checked(modulus, n, 20);
    auto dirs = enumerate_projective(modulus, n);
    auto masks = direction_line_masks(modulus, n, dirs);

    auto covers = [&](uint32_t sel) {
        for (const auto& dir_masks : masks) {
            bool ok = false;
            for (uint32_t m : dir_masks)
                if ((m & sel) == m) {
                    ok = true;
                    break;
                }
            if (!ok) return false;
        }
        return true;
    };

    // any Kakeya set contains a full line, so sizes below N need no scan
    for (uint64_t m = modulus; m <= cells; ++m) {
        std::vector<uint32_t> comb(m);
        for (uint64_t i = 0; i < m; ++i) comb[i] = static_cast<uint32_t>(i);
        while (true) {
            uint32_t sel = 0;
            for (uint32_t c : comb) sel |= uint32_t{1} << c;
            if (covers(sel)) {
                std::vector<Vec> pts;
                for (uint32_t c : comb) pts.push_back(decode_point(c, modulus, n));
                MinSearchResult res;
                res.size = m;
                res.witness_set = PointSet::make(modulus, n, std::move(pts));
                return res;
            }
            // next lexicographic combination
            int64_t pos = static_cast<int64_t>(m) - 1;
            while (pos >= 0 && comb[pos] == cells - m + pos) --pos;
            if (pos < 0) break;
            ++comb[pos];
            for (uint64_t j = pos + 1; j < m; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    throw std::logic_error("min_kakeya_bruteforce: no Kakeya subset found"); // unreachable
}

Construction greedy_kakeya(uint64_t modulus, uint32_t n, uint64_t seed) {
    uint64_t cells = grid_size_checked(modulus, n, 1'000'000);
    auto dirs = enumerate_projective(modulus, n);
    // Fisher-Yates on the direction order; plain modulo keeps the shuffle
    // reproducible across standard libraries
    std::mt19937_64 rng(seed);
    for (size_t i = dirs.size(); i > 1; --i)
        std::swap(dirs[i - 1], dirs[rng() % i]);

    std::vector<uint8_t> grid(cells, 0);
    Construction out;
    for (const auto& dir : dirs) {
        int unit_at = -1;
        for (size_t i = 0; i < dir.rep.size(); ++i)
            if (is_unit(dir.rep[i], modulus)) {
                unit_at = static_cast<int>(i);
                break;
            }
        uint64_t base_count = 1;
        uint32_t free_coords = (unit_at >= 0) ? n - 1 : n;
        for (uint32_t i = 0; i < free_coords; ++i) base_count *= modulus;

        uint64_t best_overlap = 0;
        std::optional<Line> best;
        Vec a(n), pt(n);
        for (uint64_t bi = 0; bi < base_count; ++bi) {
            uint64_t rest = bi;
            for (uint32_t i = n; i-- > 0;) {
                if (static_cast<int>(i) == unit_at) {
                    a[i] = 0;
                    continue;
                }
                a[i] = rest % modulus;
                rest /= modulus;
            }
            pt = a;
            uint64_t overlap = 0;
            for (uint64_t lam = 0; lam < modulus; ++lam) {
                if (lam > 0)
                    for (uint32_t i = 0; i < n; ++i) {
                        pt[i] += dir.rep[i];
                        if (pt[i] >= modulus) pt[i] -= modulus;
                    }
                if (grid[encode_point(pt, modulus)]) ++overlap;
            }
            if (!best || overlap > best_overlap) {
                best_overlap = overlap;
                best = Line{a, dir};
            }
        }
        for (const auto& lp : line_points(*best)) grid[encode_point(lp, modulus)] = 1;
        out.witness.insert(*best);
    }

    std::vector<Vec> pts;
    for (uint64_t i = 0; i < cells; ++i)
        if (grid[i]) pts.push_back(decode_point(i, modulus, n));
    out.points = PointSet::make(modulus, n, std::move(pts));
    auto rep = verify_kakeya(out.points, modulus, &out.witness);
    if (!rep.kakeya) throw std::logic_error("greedy_kakeya: certification failed");
    return out;
}

std::string point_set_to_json(const PointSet& s) {
    nlohmann::json j;
    j["schema"] = "kzn/1";
    j["N"] = s.modulus;
    j["n"] = s.dim;
    j["points"] = nlohmann::json::array();
    for (const auto& p : s.points) j["points"].push_back(p);
    return j.dump(2);
}

PointSet point_set_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("point set: bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("N") || !j.contains("n") || !j.contains("points"))
        throw std::invalid_argument("point set: expected {N, n, points}");
    if (j.contains("schema") && j["schema"] != "kzn/1")
        throw std::invalid_argument("point set: unsupported schema");
    uint64_t modulus = j["N"].get<uint64_t>();
    uint32_t dim = j["n"].get<uint32_t>();
    std::vector<Vec> pts;
    for (const auto& row : j["points"]) {
        if (!row.is_array()) throw std::invalid_argument("point set: point must be an array");
        pts.push_back(row.get<Vec>());
    }
    return PointSet::make(modulus, dim, std::move(pts));
}

std::string witness_to_json(const KakeyaWitness& w) {
    nlohmann::json j;
    j["schema"] = "kzn/1";
    j["witnesses"] = nlohmann::json::array();
    for (const auto& [dir, line] : w.lines) {
        nlohmann::json item;
        item["dir"] = dir.rep;
        item["base"] = line.base;
        j["witnesses"].push_back(std::move(item));
    }
    return j.dump(2);
}

KakeyaWitness witness_from_json(const std::string& text, uint64_t modulus, uint32_t dim) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("witness: bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("witnesses"))
        throw std::invalid_argument("witness: expected {witnesses}");
    Factorization f = factorize(modulus);
    KakeyaWitness w;
    for (const auto& item : j["witnesses"]) {
        Vec dir_vec = item.at("dir").get<Vec>();
        Vec base = item.at("base").get<Vec>();
        if (dir_vec.size() != dim || base.size() != dim)
            throw std::invalid_argument("witness: wrong arity");
        for (auto& x : base) x %= modulus;
        auto canon = canonicalize(dir_vec, f);
        if (!canon) throw std::invalid_argument("witness: direction not projective");
        w.insert(Line{std::move(base), std::move(*canon)});
    }
    return w;
}

} // namespace kzn
