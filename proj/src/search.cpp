#include "kaplansky/search.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <exception>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "kaplansky/units.hpp"

namespace kaplansky {

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0)
        return 0;
    return a > UINT64_MAX / b ? UINT64_MAX : a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t e) {
    std::uint64_t out = 1;
    for (std::uint64_t k = 0; k < e; ++k)
        out = sat_mul(out, base);
    return out;
}

std::uint64_t hash_mix(std::uint64_t seed, std::uint64_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

std::uint64_t key_hash(const std::pair<Laurent, Laurent>& k) {
    return hash_mix(k.first.hash(), k.second.hash());
}

// Hash table materialized as a sorted vector: built single-writer, then
// probed read-only (binary search on the hash) by the worker threads.
struct TableEntry {
    std::uint64_t h;
    std::uint32_t a, b;
};

void sort_table(std::vector<TableEntry>& table) {
    std::sort(table.begin(), table.end(), [](const TableEntry& l, const TableEntry& r) {
        return l.h < r.h ? true : l.h > r.h ? false : std::pair(l.a, l.b) < std::pair(r.a, r.b);
    });
}

std::pair<const TableEntry*, const TableEntry*> bucket(const std::vector<TableEntry>& table,
                                                       std::uint64_t h) {
    const auto lo = static_cast<std::size_t>(
        std::lower_bound(table.begin(), table.end(), h,
                         [](const TableEntry& e, std::uint64_t v) { return e.h < v; }) -
        table.begin());
    std::size_t hi = lo;
    while (hi < table.size() && table[hi].h == h)
        ++hi;
    return {table.data() + lo, table.data() + hi};
}

struct Cell {
    std::int32_t i, j;
};

// Orbit partner of an xy-cell under the role's symmetry constraint, read off
// from p_xy = x^-1 y^-1 p, q_xy = y q, r_xy = x^-1 r, s_xy = s: the
// coefficient at (i, j) must equal the one at the partner cell.
Cell role_partner(ComponentRole role, Cell c) {
    switch (role) {
    case ComponentRole::p:
        return {1 - c.i, 1 - c.j};
    case ComponentRole::q:
        return {-c.i, -1 - c.j};
    case ComponentRole::r:
        return {1 - c.i, -c.j};
    case ComponentRole::s:
        return {-c.i, -c.j};
    }
    throw std::invalid_argument("unknown component role");
}

struct OrbitSlot {
    Cell a, b;   // b == a when the cell is a fixed point
    bool paired; // true when the orbit has two distinct cells
};

bool in_xy_box(const SearchBox& box, Cell c) {
    return c.i >= box.xmin && c.i <= box.xmax && c.j >= box.ymin && c.j <= box.ymax;
}

// One slot per orbit that lies entirely inside the box; a cell whose partner
// escapes the box is forced to zero and yields no slot.
std::vector<OrbitSlot> orbit_slots(ComponentRole role, const SearchBox& box) {
    std::vector<OrbitSlot> slots;
    for (std::int32_t i = box.xmin; i <= box.xmax; ++i)
        for (std::int32_t j = box.ymin; j <= box.ymax; ++j) {
            const Cell c{i, j};
            const Cell pc = role_partner(role, c);
            if (!in_xy_box(box, pc))
                continue;
            if (std::pair(pc.i, pc.j) < std::pair(c.i, c.j))
                continue; // orbit already emitted at its smaller cell
            slots.push_back({c, pc, pc.i != c.i || pc.j != c.j});
        }
    return slots;
}

std::uint64_t z_levels(const SearchBox& box) {
    return static_cast<std::uint64_t>(static_cast<std::int64_t>(box.zmax) -
                                      static_cast<std::int64_t>(box.zmin) + 1);
}

// Cached per-candidate pieces of the join keys, shared by both pair sides.
struct KeyPiece {
    Laurent inv; // candidate inverted in {y, z}
    Laurent sq;  // p*p_yz | x*(s*s_yz) | x*(q*q_yz) + x | r*r_yz
};

} // namespace

void SearchBox::validate() const {
    if (xmin > xmax || ymin > ymax || zmin > zmax)
        throw std::invalid_argument("search box has an empty exponent range (lo > hi)");
}

BoxTooLarge::BoxTooLarge(std::uint64_t estimated_pairs, std::uint64_t ceiling)
    : std::runtime_error("search box too large: estimated " + std::to_string(estimated_pairs) +
                         " candidate evaluations exceeds the ceiling " + std::to_string(ceiling)),
      estimated_(estimated_pairs), ceiling_(ceiling) {}

std::uint64_t symmetric_candidate_count(ComponentRole role, const SearchBox& box) {
    box.validate();
    const std::uint64_t slots = sat_mul(orbit_slots(role, box).size(), z_levels(box));
    return sat_pow(box.characteristic.value(), slots);
}

std::vector<Laurent> enumerate_symmetric(ComponentRole role, const SearchBox& box) {
    box.validate();
    const PrimeChar d = box.characteristic;
    const std::uint64_t base = d.value();
    const auto slots = orbit_slots(role, box);
    const std::uint64_t levels = z_levels(box);
    const std::uint64_t nslots = sat_mul(slots.size(), levels);
    const std::uint64_t count = sat_pow(base, nslots);
    if (count > box.pair_ceiling)
        throw BoxTooLarge(count, box.pair_ceiling);

    std::vector<Laurent> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<std::pair<ExpVec, std::int64_t>> entries;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        entries.clear();
        std::uint64_t rest = idx;
        for (std::uint64_t slot = 0; slot < nslots; ++slot) {
            const auto v = static_cast<std::int64_t>(rest % base);
            rest /= base;
            if (v == 0)
                continue;
            const OrbitSlot& orb = slots[static_cast<std::size_t>(slot / levels)];
            const auto k = static_cast<std::int32_t>(box.zmin +
                                                     static_cast<std::int32_t>(slot % levels));
            entries.emplace_back(ExpVec{orb.a.i, orb.a.j, k}, v);
            if (orb.paired)
                entries.emplace_back(ExpVec{orb.b.i, orb.b.j, k}, v);
        }
        out.push_back(Laurent::make(d, entries));
    }
    return out;
}

GroupRingElem canonicalize(const GroupRingElem& u) {
    const Laurent* comps[4] = {&u.p(), &u.q(), &u.r(), &u.s()};
    for (const Laurent* c : comps) {
        if (c->is_zero())
            continue;
        const Coeff lead(static_cast<std::int64_t>(c->terms().front().coeff),
                         u.characteristic());
        if (lead.value() == 1)
            return u;
        return scaled(u, lead.inverse());
    }
    return u;
}

SearchHit canonicalize(SearchHit hit) {
    hit.element = canonicalize(hit.element);
    hit.canonical = true;
    return hit;
}

namespace {

// Worker count actually used for a workload of n probe rows.
unsigned effective_threads(unsigned threads, std::uint64_t n) {
    const std::uint64_t capped = std::min<std::uint64_t>(std::max(threads, 1u), 64);
    return static_cast<unsigned>(std::min(capped, std::max<std::uint64_t>(n, 1)));
}

// Partition [0, n) into `threads` contiguous chunks and run `work` on each in
// its own thread; worker exceptions are rethrown on the calling thread.
template <typename Work>
void run_chunks(std::uint64_t n, unsigned threads, const Work& work) {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::uint64_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::uint64_t lo = std::min<std::uint64_t>(n, t * chunk);
        const std::uint64_t hi = std::min<std::uint64_t>(n, lo + chunk);
        pool.emplace_back([&, t, lo, hi] {
            try {
                work(t, lo, hi);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool)
        th.join();
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

void finalize(SearchResult& result) {
    for (auto& hit : result.hits)
        hit = canonicalize(std::move(hit));
    std::sort(result.hits.begin(), result.hits.end(),
              [](const SearchHit& a, const SearchHit& b) { return a.element < b.element; });
    result.hits.erase(std::unique(result.hits.begin(), result.hits.end(),
                                  [](const SearchHit& a, const SearchHit& b) {
                                      return a.element == b.element;
                                  }),
                      result.hits.end());
}

struct LocalTally {
    SearchStats stats;
    std::vector<SearchHit> hits;
};

} // namespace

SearchResult search_units(const SearchBox& box, unsigned threads) {
    box.validate();
    if (box.strategy != SearchStrategy::full)
        throw std::invalid_argument("search_units requires a box with strategy = full");
    const PrimeChar d = box.characteristic;

    const std::uint64_t np = symmetric_candidate_count(ComponentRole::p, box);
    const std::uint64_t nq = symmetric_candidate_count(ComponentRole::q, box);
    const std::uint64_t nr = symmetric_candidate_count(ComponentRole::r, box);
    const std::uint64_t ns = symmetric_candidate_count(ComponentRole::s, box);
    const std::uint64_t ps_pairs = sat_mul(np, ns);
    const std::uint64_t qr_pairs = sat_mul(nq, nr);
    const std::uint64_t estimated = sat_add(ps_pairs, qr_pairs);
    if (estimated > box.pair_ceiling)
        throw BoxTooLarge(estimated, box.pair_ceiling);
    // The join table stores one entry per pair on its side; keep it bounded
    // independently of the probe volume.
    constexpr std::uint64_t table_cap = 8'000'000;
    if (std::min(ps_pairs, qr_pairs) > table_cap)
        throw BoxTooLarge(std::min(ps_pairs, qr_pairs), table_cap);

    const std::vector<Laurent> P = enumerate_symmetric(ComponentRole::p, box);
    const std::vector<Laurent> Q = enumerate_symmetric(ComponentRole::q, box);
    const std::vector<Laurent> R = enumerate_symmetric(ComponentRole::r, box);
    const std::vector<Laurent> S = enumerate_symmetric(ComponentRole::s, box);

    const bool build_qr = qr_pairs <= ps_pairs;
    const Laurent xm = Laurent::monomial(d, ExpVec{1, 0, 0});
    const Laurent yzm = Laurent::monomial(d, ExpVec{0, 1, 1});
    const VarSet yz = VarSet::yz();

    // Exact key pieces; the assembled keys below match reduced_pair_keys and
    // reduced_pair_keys_qr term for term.
    const auto p_piece = [&](const Laurent& p) {
        KeyPiece kp{p.inverted(yz), Laurent(d)};
        kp.sq = p * kp.inv;
        return kp;
    };
    const auto s_piece = [&](const Laurent& s) {
        KeyPiece kp{s.inverted(yz), Laurent(d)};
        kp.sq = xm * (s * kp.inv);
        return kp;
    };
    const auto q_piece = [&](const Laurent& q) {
        KeyPiece kp{q.inverted(yz), Laurent(d)};
        kp.sq = xm * (q * kp.inv) + xm;
        return kp;
    };
    const auto r_piece = [&](const Laurent& r) {
        KeyPiece kp{r.inverted(yz), Laurent(d)};
        kp.sq = r * kp.inv;
        return kp;
    };
    const auto ps_key = [&](const Laurent& p, const KeyPiece& pp, const Laurent& s,
                            const KeyPiece& sp) {
        return std::pair<Laurent, Laurent>{pp.sq + sp.sq, p * sp.inv + yzm * (pp.inv * s)};
    };
    const auto qr_key = [&](const Laurent& q, const KeyPiece& qp, const Laurent& r,
                            const KeyPiece& rp) {
        return std::pair<Laurent, Laurent>{rp.sq + qp.sq, r * qp.inv + yzm * (q * rp.inv)};
    };

    // Build the hash table from the smaller pair side.
    std::vector<TableEntry> table;
    table.reserve(static_cast<std::size_t>(build_qr ? qr_pairs : ps_pairs));
    if (build_qr) {
        for (std::uint32_t qi = 0; qi < Q.size(); ++qi)
            for (std::uint32_t ri = 0; ri < R.size(); ++ri)
                table.push_back({key_hash(reduced_pair_keys_qr(Q[qi], R[ri])), qi, ri});
    } else {
        for (std::uint32_t pi = 0; pi < P.size(); ++pi)
            for (std::uint32_t si = 0; si < S.size(); ++si)
                table.push_back({key_hash(reduced_pair_keys(P[pi], S[si])), pi, si});
    }
    sort_table(table);

    // Probe the larger side: outer loop over its longer component list (one
    // piece computation per outer candidate), inner loop over precomputed
    // pieces of the shorter list.
    const std::vector<Laurent>& probe1 = build_qr ? P : Q; // pair's first component
    const std::vector<Laurent>& probe2 = build_qr ? S : R; // pair's second component
    const bool outer_is_second = probe2.size() >= probe1.size();
    const std::vector<Laurent>& outer_list = outer_is_second ? probe2 : probe1;
    const std::vector<Laurent>& inner_list = outer_is_second ? probe1 : probe2;

    std::vector<KeyPiece> inner_pieces;
    inner_pieces.reserve(inner_list.size());
    for (const Laurent& f : inner_list)
        inner_pieces.push_back(build_qr ? (outer_is_second ? p_piece(f) : s_piece(f))
                                        : (outer_is_second ? q_piece(f) : r_piece(f)));

    const unsigned workers = effective_threads(threads, outer_list.size());
    std::vector<LocalTally> tallies(workers);

    run_chunks(outer_list.size(), workers, [&](unsigned tid, std::uint64_t lo, std::uint64_t hi) {
        LocalTally& tally = tallies[tid];
        for (std::uint64_t oi = lo; oi < hi; ++oi) {
            const Laurent& of = outer_list[oi];
            const KeyPiece op = build_qr ? (outer_is_second ? s_piece(of) : p_piece(of))
                                         : (outer_is_second ? r_piece(of) : q_piece(of));
            for (std::uint64_t ii = 0; ii < inner_list.size(); ++ii) {
                const Laurent& inf = inner_list[ii];
                const KeyPiece& ip = inner_pieces[ii];
                const Laurent& first = outer_is_second ? inf : of;   // p resp. q
                const KeyPiece& firstp = outer_is_second ? ip : op;
                const Laurent& second = outer_is_second ? of : inf;  // s resp. r
                const KeyPiece& secondp = outer_is_second ? op : ip;
                const auto key = build_qr ? ps_key(first, firstp, second, secondp)
                                          : qr_key(first, firstp, second, secondp);
                const auto [b, e] = bucket(table, key_hash(key));
                for (const TableEntry* it = b; it != e; ++it) {
                    const auto other = build_qr ? reduced_pair_keys_qr(Q[it->a], R[it->b])
                                                : reduced_pair_keys(P[it->a], S[it->b]);
                    if (other != key)
                        continue;
                    ++tally.stats.key_matches;
                    const Laurent& p = build_qr ? first : P[it->a];
                    const Laurent& s = build_qr ? second : S[it->b];
                    const Laurent& q = build_qr ? Q[it->a] : first;
                    const Laurent& r = build_qr ? R[it->b] : second;
                    GroupRingElem u(p, q, r, s);
                    if (is_trivial(u)) {
                        ++tally.stats.trivial_discarded;
                        continue;
                    }
                    if (!verify_unit(u).verified()) {
                        ++tally.stats.unverified_matches;
                        continue;
                    }
                    ++tally.stats.verified_hits;
                    tally.hits.push_back(SearchHit{std::move(u),
                                                   build_qr ? key : other,
                                                   build_qr ? other : key, false});
                }
            }
        }
    });

    SearchResult result;
    result.stats.left_candidates = ps_pairs;
    result.stats.right_candidates = qr_pairs;
    for (auto& tally : tallies) {
        result.stats.key_matches += tally.stats.key_matches;
        result.stats.trivial_discarded += tally.stats.trivial_discarded;
        result.stats.unverified_matches += tally.stats.unverified_matches;
        result.stats.verified_hits += tally.stats.verified_hits;
        result.hits.insert(result.hits.end(), std::make_move_iterator(tally.hits.begin()),
                           std::make_move_iterator(tally.hits.end()));
    }
    finalize(result);
    return result;
}

SearchResult ansatz_search(const SearchBox& box, unsigned threads) {
    box.validate();
    if (box.strategy != SearchStrategy::ansatz)
        throw std::invalid_argument("ansatz_search requires a box with strategy = ansatz");
    const PrimeChar d = box.characteristic;
    const std::uint64_t base = d.value();
    const std::uint64_t levels = z_levels(box);
    const std::uint64_t nz = sat_pow(base, levels);
    const std::uint64_t left_tuples = sat_pow(nz, 3);  // (f1, f6, f7)
    const std::uint64_t right_tuples = sat_pow(nz, 4); // (f2, f3, f4, f5)
    const std::uint64_t estimated = sat_add(left_tuples, right_tuples);
    if (estimated > box.pair_ceiling)
        throw BoxTooLarge(estimated, box.pair_ceiling);
    constexpr std::uint64_t table_cap = 8'000'000;
    if (left_tuples > table_cap)
        throw BoxTooLarge(left_tuples, table_cap);

    // All z-only polynomials with exponents in [zmin, zmax].
    std::vector<Laurent> zp;
    zp.reserve(static_cast<std::size_t>(nz));
    std::vector<std::pair<ExpVec, std::int64_t>> entries;
    for (std::uint64_t idx = 0; idx < nz; ++idx) {
        entries.clear();
        std::uint64_t rest = idx;
        for (std::uint64_t lev = 0; lev < levels; ++lev) {
            const auto v = static_cast<std::int64_t>(rest % base);
            rest /= base;
            if (v != 0)
                entries.emplace_back(
                    ExpVec{0, 0, box.zmin + static_cast<std::int32_t>(lev)}, v);
        }
        zp.push_back(Laurent::make(d, entries));
    }

    // prod(i, j) = zp[i]* . zp[j] with * the z-inversion; every residual of
    // the f-system is a short combination of these.
    const std::uint64_t nz2 = sat_mul(nz, nz);
    std::vector<Laurent> prod_table;
    const bool cache_products = nz <= 1024;
    if (cache_products) {
        prod_table.reserve(static_cast<std::size_t>(nz2));
        for (std::uint64_t i = 0; i < nz; ++i) {
            const Laurent star = zp[static_cast<std::size_t>(i)].inverted(VarSet::z());
            for (std::uint64_t j = 0; j < nz; ++j)
                prod_table.push_back(star * zp[static_cast<std::size_t>(j)]);
        }
    }
    const auto prod = [&](std::uint64_t i, std::uint64_t j) -> Laurent {
        if (cache_products)
            return prod_table[static_cast<std::size_t>(i * nz + j)];
        return zp[static_cast<std::size_t>(i)].inverted(VarSet::z()) *
               zp[static_cast<std::size_t>(j)];
    };

    const Laurent one = Laurent::constant(d, 1);
    const Laurent zm = Laurent::monomial(d, ExpVec{0, 0, 1});
    const Laurent four = Laurent::constant(d, 4);

    // Key shared by the two sides: equality of the five coupled residuals
    //   f3*f3 = (f7*f6 + f6*f7) + 4 f6*f6
    //   f2*f2 = f6*f6
    //   f1*f1 = f2*f3 + f4*f5
    //   f2*f5 + (f2*f4 + z f4*f2) = f6*f1 + z f1*f6
    //   f3*f5 + z f5*f3 - 4 (f2*f4 + z f4*f2) = f7*f1 + z f1*f7.
    const auto left_key = [&](std::uint64_t i1, std::uint64_t i6, std::uint64_t i7) {
        return std::array<Laurent, 5>{
            prod(i7, i6) + prod(i6, i7) + four * prod(i6, i6),
            prod(i6, i6),
            prod(i1, i1),
            prod(i6, i1) + zm * prod(i1, i6),
            prod(i7, i1) + zm * prod(i1, i7),
        };
    };
    const auto right_key = [&](std::uint64_t i2, std::uint64_t i3, std::uint64_t i4,
                               std::uint64_t i5) {
        const Laurent cross24 = prod(i2, i4) + zm * prod(i4, i2);
        return std::array<Laurent, 5>{
            prod(i3, i3),
            prod(i2, i2),
            prod(i2, i3) + prod(i4, i5),
            prod(i2, i5) + cross24,
            prod(i3, i5) + zm * prod(i5, i3) - four * cross24,
        };
    };
    const auto array_hash = [&](const std::array<Laurent, 5>& k) {
        std::uint64_t h = 0x428a2f98d728ae22ull;
        for (const Laurent& f : k)
            h = hash_mix(h, f.hash());
        return h;
    };

    // Build from the (f1, f6, f7) side, filtered by the local residual
    // f7*f7 = 1; table payload is the flat tuple index.
    std::vector<TableEntry> table;
    for (std::uint64_t flat = 0; flat < left_tuples; ++flat) {
        const std::uint64_t i1 = flat % nz, i6 = (flat / nz) % nz, i7 = flat / (nz * nz);
        if (prod(i7, i7) != one)
            continue;
        table.push_back({array_hash(left_key(i1, i6, i7)),
                         static_cast<std::uint32_t>(flat & 0xffffffffu),
                         static_cast<std::uint32_t>(flat >> 32)});
    }
    sort_table(table);

    const unsigned workers = effective_threads(threads, right_tuples);
    std::vector<LocalTally> tallies(workers);

    run_chunks(right_tuples, workers, [&](unsigned tid, std::uint64_t lo, std::uint64_t hi) {
        LocalTally& tally = tallies[tid];
        for (std::uint64_t flat = lo; flat < hi; ++flat) {
            const std::uint64_t i2 = flat % nz, i3 = (flat / nz) % nz,
                                i4 = (flat / (nz * nz)) % nz, i5 = flat / (nz * nz * nz);
            // Local residuals: f2*f2 = f4*f4, f3*f3 = f5*f5, and the chain
            // f2*f5 = z f5*f2 = f3*f4 = z f4*f3.
            if (prod(i2, i2) != prod(i4, i4) || prod(i3, i3) != prod(i5, i5))
                continue;
            const Laurent f2s_f5 = prod(i2, i5);
            if (f2s_f5 != zm * prod(i5, i2) || f2s_f5 != prod(i3, i4) ||
                f2s_f5 != zm * prod(i4, i3))
                continue;
            const auto rkey = right_key(i2, i3, i4, i5);
            const auto [b, e] = bucket(table, array_hash(rkey));
            for (const TableEntry* it = b; it != e; ++it) {
                const std::uint64_t lflat =
                    static_cast<std::uint64_t>(it->a) | (static_cast<std::uint64_t>(it->b) << 32);
                const std::uint64_t i1 = lflat % nz, i6 = (lflat / nz) % nz,
                                    i7 = lflat / (nz * nz);
                if (left_key(i1, i6, i7) != rkey)
                    continue;
                ++tally.stats.key_matches;
                const FTable ft({zp[i1], zp[i2], zp[i3], zp[i4], zp[i5], zp[i6], zp[i7]});
                if (!check_f_system(ft).all_zero()) {
                    ++tally.stats.unverified_matches;
                    continue;
                }
                GroupRingElem u = assemble_from_f(ft);
                if (is_trivial(u)) {
                    ++tally.stats.trivial_discarded;
                    continue;
                }
                if (!verify_unit(u).verified()) {
                    ++tally.stats.unverified_matches;
                    continue;
                }
                ++tally.stats.verified_hits;
                auto ps = reduced_pair_keys(u.p(), u.s());
                auto qr = reduced_pair_keys_qr(u.q(), u.r());
                tally.hits.push_back(
                    SearchHit{std::move(u), std::move(ps), std::move(qr), false});
            }
        }
    });

    SearchResult result;
    result.stats.left_candidates = left_tuples;
    result.stats.right_candidates = right_tuples;
    for (auto& tally : tallies) {
        result.stats.key_matches += tally.stats.key_matches;
        result.stats.trivial_discarded += tally.stats.trivial_discarded;
        result.stats.unverified_matches += tally.stats.unverified_matches;
        result.stats.verified_hits += tally.stats.verified_hits;
        result.hits.insert(result.hits.end(), std::make_move_iterator(tally.hits.begin()),
                           std::make_move_iterator(tally.hits.end()));
    }
    finalize(result);
    return result;
}

} // namespace kaplansky
