#pragma once

// Orbits, growth constants, escape criteria, exact preperiodic-point
// enumeration over Q, and the desk-scale dependence searches over orbits.

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "multdep/cdisk.hpp"
#include "multdep/errors.hpp"
#include "multdep/numberfield.hpp"
#include "multdep/rational_function.hpp"
#include "multdep/relations.hpp"
#include "multdep/report.hpp"

namespace multdep {

// ----- orbits ---------------------------------------------------------------

enum class OrbitTermination { cap, pole, cycle };

struct Orbit {
    QFunc function;
    Rational start;
    std::vector<Rational> points;  // u_0 = start, u_k = phi(u_{k-1})
    OrbitTermination termination = OrbitTermination::cap;
    long pole_index = -1;   // index of the point sitting on a pole
    long cycle_entry = -1;  // first index of the detected cycle
    long cycle_period = 0;
};

// Exact orbit to depth N.  A pole is data, not an error: iteration stops at
// the offending index.  On an exact repeat the remaining points are filled
// from the cycle.
inline Orbit orbit(const QFunc& phi, const Rational& alpha, long depth) {
    if (depth < 0) throw input_error("orbit: depth must be >= 0");
    Orbit o;
    o.function = phi;
    o.start = alpha;
    std::map<Rational, long> seen;
    Rational u = alpha;
    for (long k = 0; k <= depth; ++k) {
        auto it = seen.find(u);
        if (it != seen.end()) {
            o.termination = OrbitTermination::cycle;
            o.cycle_entry = it->second;
            o.cycle_period = k - it->second;
            while (static_cast<long>(o.points.size()) <= depth) {
                long idx = o.cycle_entry +
                           (static_cast<long>(o.points.size()) - o.cycle_entry) % o.cycle_period;
                o.points.push_back(o.points[static_cast<std::size_t>(idx)]);
            }
            return o;
        }
        seen.emplace(u, k);
        o.points.push_back(u);
        if (k == depth) break;
        std::optional<Rational> next = phi.eval(u);
        if (!next) {
            o.termination = OrbitTermination::pole;
            o.pole_index = k;
            return o;
        }
        u = *next;
    }
    o.termination = OrbitTermination::cap;
    return o;
}

inline Orbit orbit(const QPoly& f, const Rational& alpha, long depth) {
    return orbit(QFunc::from_poly(f), alpha, depth);
}

// ----- growth ---------------------------------------------------------------

// L = 1 + |1/a_d| + sum |a_i/a_d|; exact over Q.
inline Rational growth_constant_L(const QPoly& f) {
    if (f.degree() < 2) throw input_error("growth_constant_L: degree must be >= 2");
    const Rational& ad = f.lead();
    Rational sum = Rational(1) + abs(Rational(1) / ad);
    for (int i = 0; i < f.degree(); ++i) sum += abs(f.coeff(static_cast<std::size_t>(i)) / ad);
    return sum;
}

// enclosure of |sigma(a)| for the embedding given by a root disk of the modulus
inline Disk embed(const FieldElement& a, const Disk& root) {
    Disk acc = exact_disk(Rational(0));
    if (a.is_zero_elem()) return acc;
    const auto& c = a.coords();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * root + exact_disk(c[i]);
    return acc;
}

// Certified upper evaluation of the growth constant over a number field.
inline CertReal growth_constant_L_field(const Polynomial<FieldElement>& f, const NumberField& k,
                                        long prec_bits = 128) {
    if (f.degree() < 2) throw input_error("growth_constant_L: degree must be >= 2");
    FieldElement ad = f.lead();
    FieldElement inv = ad.inverse();
    std::vector<FieldElement> terms{inv};
    for (int i = 0; i < f.degree(); ++i) terms.push_back(f.coeff(static_cast<std::size_t>(i)) * inv);
    CertReal best{Rational(0), Rational(0)};
    bool first = true;
    for (const Disk& root : k.embeddings(prec_bits)) {
        Rational lo(1), hi(1);
        for (const FieldElement& t : terms) {
            Disk image = embed(t, root);
            lo += image.abs_lower(prec_bits);
            hi += image.abs_upper(prec_bits);
        }
        if (first) {
            best = {lo, hi};
            first = false;
        } else {
            best.lo = std::max(best.lo, lo);
            best.hi = std::max(best.hi, hi);
        }
    }
    return best;
}

struct GrowthCheck {
    bool increasing = false;
    long depth = 0;
    std::size_t embeddings = 1;
    std::vector<bool> per_embedding;  // monotonicity record, one per embedding
    std::vector<Rational> orbit_abs;  // |u_n| over Q; empty for field runs
};

// |f^{(n)}(alpha)| strictly increasing for n <= depth, exact over Q.
// Precondition |alpha| > L is checked.
inline GrowthCheck check_archimedean_growth(const QPoly& f, const Rational& alpha, long depth) {
    Rational L = growth_constant_L(f);
    if (!(abs(alpha) > L))
        throw input_error("check_archimedean_growth: |alpha| <= L, precondition fails");
    GrowthCheck out;
    out.depth = depth;
    Orbit o = orbit(f, alpha, depth);
    Rational prev = abs(o.points[0]);
    out.orbit_abs.push_back(prev);
    out.increasing = true;
    for (std::size_t i = 1; i < o.points.size(); ++i) {
        Rational cur = abs(o.points[i]);
        out.orbit_abs.push_back(cur);
        if (!(cur > prev)) out.increasing = false;
        prev = cur;
    }
    out.per_embedding = {out.increasing};
    return out;
}

// Field version: exact orbit in K, per-embedding comparisons with certified
// intervals; precision escalates on overlap and fails loudly past the cap.
inline GrowthCheck check_archimedean_growth_field(const Polynomial<FieldElement>& f,
                                                  const NumberField& k, const FieldElement& alpha,
                                                  long depth, long prec_bits = 128) {
    CertReal L = growth_constant_L_field(f, k, prec_bits);
    std::vector<FieldElement> orb{alpha};
    for (long n = 0; n < depth; ++n) orb.push_back(f.eval(orb.back()));

    // root-disk precision must absorb the coordinate growth along the orbit:
    // an absolute root radius of 2^-b turns into ~ |coords| * 2^-b after
    // embedding, so b scales with the largest coordinate
    long coord_bits = 0;
    for (const FieldElement& u : orb) {
        if (u.is_zero_elem()) continue;
        for (const Rational& c : u.coords()) {
            long sz = static_cast<long>(mpz_sizeinbase(num(c).get_mpz_t(), 2)) +
                      static_cast<long>(mpz_sizeinbase(den(c).get_mpz_t(), 2));
            coord_bits = std::max(coord_bits, sz);
        }
    }

    for (int attempt = 0; attempt < 5; ++attempt) {
        long bits = (prec_bits + coord_bits + 64) << attempt;
        const auto& roots = k.embeddings(bits);
        // precondition at every embedding
        bool precondition = true;
        for (const Disk& root : roots)
            if (!(embed(alpha, root).abs_lower(bits) > L.hi)) precondition = false;
        if (!precondition && attempt < 4) continue;
        if (!precondition)
            throw input_error("check_archimedean_growth: |alpha| <= L at some embedding");

        bool overlap = false;
        GrowthCheck out;
        out.depth = depth;
        out.embeddings = roots.size();
        for (const Disk& root : roots) {
            bool monotone = true;
            Rational prev_hi = embed(orb[0], root).abs_upper(bits);
            Rational prev_lo = embed(orb[0], root).abs_lower(bits);
            for (std::size_t i = 1; i < orb.size() && !overlap; ++i) {
                Disk image = embed(orb[i], root);
                Rational lo = image.abs_lower(bits);
                if (lo > prev_hi) {
                    prev_hi = image.abs_upper(bits);
                } else if (image.abs_upper(bits) <= prev_lo) {
                    monotone = false;  // certified violation at this embedding
                    prev_hi = image.abs_upper(bits);
                } else {
                    overlap = true;
                }
                prev_lo = lo;
            }
            if (overlap) break;
            out.per_embedding.push_back(monotone);
        }
        if (!overlap) {
            out.increasing = true;
            for (bool m : out.per_embedding) out.increasing = out.increasing && m;
            return out;
        }
    }
    throw precision_error("check_archimedean_growth: intervals still overlap at the precision cap");
}

// Lemma-style prefix bound: if |u_n| <= A then |u_r| <= max(A, L) for r < n.
inline bool orbit_prefix_bound_holds(const QPoly& f, const Orbit& o) {
    Rational L = growth_constant_L(f);
    for (std::size_t n = 1; n < o.points.size(); ++n) {
        Rational a = abs(o.points[n]);
        Rational bound = std::max(a, L);
        for (std::size_t r = 0; r < n; ++r)
            if (abs(o.points[r]) > bound) return false;
    }
    return true;
}

// ----- places and valuations ------------------------------------------------

struct PlaceSet {
    std::vector<Integer> primes;  // finite places, ascending
    bool contains(const Integer& p) const {
        return std::binary_search(primes.begin(), primes.end(), p);
    }
};

// S_f = {infinity} U {p | D} U {p | lc(G)} for f = (1/D) G with D minimal.
inline PlaceSet places_S_f(const QPoly& f) {
    if (f.is_zero_poly()) throw input_error("places_S_f: zero polynomial");
    Integer d(1);
    for (const Rational& c : f.coefficients()) d = lcm(d, den(c));
    Integer lead = num(f.lead()) * (d / den(f.lead()));
    PlaceSet s;
    auto add_primes = [&](const Integer& n) {
        if (abs(n) <= 1) return;
        for (const auto& [p, e] : factor_integer(n).exponents) s.primes.push_back(p);
    };
    add_primes(d);
    add_primes(lead);
    std::sort(s.primes.begin(), s.primes.end());
    s.primes.erase(std::unique(s.primes.begin(), s.primes.end()), s.primes.end());
    return s;
}

struct ValuationTrace {
    std::vector<long> valuations;  // v_p(f^{(m)}(alpha)) for m = 0..M
    bool identity_holds = false;
};

// Verifies v_p(f^{(m)}(alpha)) = d^m v_p(alpha) exactly for 1 <= m <= M,
// under p not in S_f and v_p(alpha) < 0.
inline ValuationTrace valuation_escape_check(const QPoly& f, const Rational& alpha, const Integer& p,
                                             long depth) {
    if (f.degree() < 2) throw input_error("valuation_escape_check: degree must be >= 2");
    if (!is_prime(p)) throw input_error("valuation_escape_check: p is not prime");
    if (places_S_f(f).contains(p))
        throw input_error("valuation_escape_check: precondition p not in S_f fails for p = " + to_string(p));
    if (is_zero(alpha) || valuation(alpha, p) >= 0)
        throw input_error("valuation_escape_check: precondition v_p(alpha) < 0 fails");
    ValuationTrace out;
    long v0 = valuation(alpha, p);
    out.valuations.push_back(v0);
    Rational u = alpha;
    long dm = 1;
    for (long m = 1; m <= depth; ++m) {
        u = f.eval(u);
        dm *= f.degree();
        if (is_zero(u)) throw internal_error("orbit hit zero under negative valuation");
        long v = valuation(u, p);
        out.valuations.push_back(v);
        if (v != dm * v0) return out;  // identity_holds stays false
    }
    out.identity_holds = true;
    return out;
}

// ----- preperiodicity ---------------------------------------------------------

struct PreperiodicResult {
    bool preperiodic = false;
    std::vector<Rational> trace;
    std::string certificate;
};

namespace detail {

// v_p thresholds tau_p at the finite places of S_f: escape fires as soon as
// v_p(u) < tau_p  (equivalently |u|_p exceeds the growth threshold).
inline std::vector<std::pair<Integer, long>> nonarch_thresholds(const QPoly& f, const PlaceSet& s) {
    std::vector<std::pair<Integer, long>> out;
    const Rational& ad = f.lead();
    for (const Integer& p : s.primes) {
        long vad = valuation(ad, p);
        long tau = std::min(0l, -vad);
        for (int j = 0; j < f.degree(); ++j) {
            Rational aj = f.coeff(static_cast<std::size_t>(j));
            if (is_zero(aj)) continue;
            tau = std::min(tau, valuation(aj, p) - vad);
        }
        out.emplace_back(p, tau);
    }
    return out;
}

}  // namespace detail

// Exact decision.  Escapes are certified by the growth lemmas: Archimedean
// once |u| > L, non-Archimedean once |u|_p exceeds the place threshold
// (threshold 1 outside S_f, so any denominator prime outside S_f fires).
// Without escape the orbit lives in a finite exact set, so an exact repeat
// must occur.
inline PreperiodicResult is_preperiodic(const QPoly& f, const Rational& alpha) {
    if (f.degree() < 2) throw input_error("is_preperiodic: degree must be >= 2");
    Rational L = growth_constant_L(f);
    PlaceSet s = places_S_f(f);
    auto thresholds = detail::nonarch_thresholds(f, s);

    PreperiodicResult out;
    std::map<Rational, long> seen;
    Rational u = alpha;
    for (long step = 0; step < (1l << 22); ++step) {
        auto it = seen.find(u);
        if (it != seen.end()) {
            out.preperiodic = true;
            out.certificate = "exact repetition: u_" + std::to_string(step) + " = u_" +
                              std::to_string(it->second);
            return out;
        }
        seen.emplace(u, step);
        out.trace.push_back(u);
        if (abs(u) > L) {
            out.certificate = "Archimedean escape at index " + std::to_string(step) +
                              ": |u| > L, strictly increasing from here";
            return out;
        }
        if (!is_zero(u)) {
            Integer rest = den(u);
            for (const Integer& p : s.primes) {
                Integer tmp;
                mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
            }
            if (rest > 1) {
                out.certificate = "non-Archimedean escape at index " + std::to_string(step) +
                                  ": denominator prime outside S_f";
                return out;
            }
            for (const auto& [p, tau] : thresholds) {
                if (valuation(u, p) < tau) {
                    out.certificate = "non-Archimedean escape at index " + std::to_string(step) +
                                      ": |u|_p above threshold at p = " + to_string(p);
                    return out;
                }
            }
        }
        u = f.eval(u);
    }
    throw internal_error("is_preperiodic: no escape and no repetition within the step cap");
}

// Complete list over Q: finite candidate grid from the Archimedean bound L
// and the non-Archimedean thresholds, each candidate decided exactly.
inline std::vector<Rational> preperiodic_points(const QPoly& f) {
    if (f.degree() < 2) throw input_error("preperiodic_points: degree must be >= 2");
    Rational L = growth_constant_L(f);
    PlaceSet s = places_S_f(f);
    auto thresholds = detail::nonarch_thresholds(f, s);

    // admissible denominators divide prod p^{-tau_p}
    std::vector<Integer> dens{Integer(1)};
    for (const auto& [p, tau] : thresholds) {
        if (tau >= 0) continue;
        std::vector<Integer> next;
        for (const Integer& q : dens) {
            Integer pe(1);
            for (long e = 0; e <= -tau; ++e) {
                next.push_back(q * pe);
                pe *= p;
            }
        }
        dens = std::move(next);
    }
    std::sort(dens.begin(), dens.end());
    dens.erase(std::unique(dens.begin(), dens.end()), dens.end());

    std::vector<Rational> points;
    for (const Integer& q : dens) {
        Integer bmax;
        mpz_fdiv_q(bmax.get_mpz_t(), Integer(num(L) * q).get_mpz_t(), den(L).get_mpz_t());
        for (Integer b = -bmax; b <= bmax; ++b) {
            if (gcd(b, q) != 1) continue;
            Rational alpha = make_rational(b, q);
            if (is_preperiodic(f, alpha).preperiodic) points.push_back(alpha);
        }
    }
    std::sort(points.begin(), points.end());
    return points;
}

// ----- searches ---------------------------------------------------------------

// Deterministic height-grid enumeration: rationals ordered by
// max(|num|, den), then numerator, then denominator.
inline std::vector<Rational> height_grid(long bound) {
    std::vector<Rational> grid;
    for (long t = 1; t <= bound; ++t) {
        std::vector<Rational> shell;
        for (long q = 1; q <= t; ++q) {
            if (q == t) {
                for (long b = -t; b <= t; ++b)
                    if (Integer(gcd(Integer(b), Integer(q))) == 1 || (b == 0 && q == 1))
                        shell.push_back(make_rational(Integer(b), Integer(q)));
            } else {
                for (long b : {-t, t})
                    if (gcd(Integer(b), Integer(q)) == 1) shell.push_back(make_rational(Integer(b), Integer(q)));
            }
        }
        std::sort(shell.begin(), shell.end(), [](const Rational& a, const Rational& b) {
            if (num(a) != num(b)) return num(a) < num(b);
            return den(a) < den(b);
        });
        grid.insert(grid.end(), shell.begin(), shell.end());
    }
    return grid;
}

struct SearchBudget {
    long max_candidates = -1;      // per run; -1 = unlimited
    long memory_soft_bytes = -1;   // -1 = unlimited
    long start_cursor = 0;
    int workers = 1;
    std::function<void(long)> on_checkpoint;  // called with the completed cursor
};

namespace detail {

inline long resident_bytes() {
    std::ifstream statm("/proc/self/statm");
    long pages = 0;
    if (statm) statm >> pages;
    return pages * 4096;
}

// Shared driver: map a worker function over the grid with deterministic
// merging, budget accounting and checkpoint callbacks.
inline SearchReport grid_search(const std::vector<Rational>& grid, const SearchBudget& budget,
                                const std::function<std::vector<Hit>(const Rational&)>& scan_alpha) {
    SearchReport report;
    long cursor = std::min<long>(budget.start_cursor, static_cast<long>(grid.size()));
    long processed = 0;
    const long chunk = std::max(1, 64 * std::max(1, budget.workers));
    while (cursor < static_cast<long>(grid.size())) {
        if (budget.max_candidates >= 0 && processed >= budget.max_candidates) {
            report.partial = true;
            break;
        }
        if (budget.memory_soft_bytes > 0 && resident_bytes() > budget.memory_soft_bytes) {
            report.partial = true;
            break;
        }
        long take = std::min<long>(chunk, static_cast<long>(grid.size()) - cursor);
        if (budget.max_candidates >= 0) take = std::min(take, budget.max_candidates - processed);
        const int workers = std::max(1, budget.workers);
        std::vector<std::vector<Hit>> results(static_cast<std::size_t>(take));
        if (workers == 1) {
            for (long i = 0; i < take; ++i)
                results[static_cast<std::size_t>(i)] = scan_alpha(grid[static_cast<std::size_t>(cursor + i)]);
        } else {
            std::atomic<long> next{0};
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w)
                pool.emplace_back([&] {
                    while (true) {
                        long i = next.fetch_add(1);
                        if (i >= take) return;
                        results[static_cast<std::size_t>(i)] =
                            scan_alpha(grid[static_cast<std::size_t>(cursor + i)]);
                    }
                });
            for (auto& th : pool) th.join();
        }
        for (auto& r : results)
            report.hits.insert(report.hits.end(), r.begin(), r.end());
        cursor += take;
        processed += take;
        if (budget.on_checkpoint) budget.on_checkpoint(cursor);
    }
    report.cursor = cursor;
    report.scanned_count = static_cast<unsigned long>(processed);
    sort_hits(report.hits);
    return report;
}

}  // namespace detail

struct PairSearchHypotheses {
    bool f_has_multiple_roots = false;
    bool f2_has_multiple_roots = false;  // checked when deg f = 2
    bool f2_checked = false;
};

inline PairSearchHypotheses pair_search_hypotheses(const QPoly& f) {
    PairSearchHypotheses h;
    h.f_has_multiple_roots = has_multiple_roots(f);
    if (f.degree() == 2) {
        h.f2_checked = true;
        h.f2_has_multiple_roots = has_multiple_roots(iterate_poly(f, 2));
    }
    return h;
}

// One hit per alpha with a multiplicatively dependent pair f^{(m)}(alpha),
// f^{(n)}(alpha), 0 <= n < m <= depth, witnessed by the first dependent pair
// in (n, m) order.  Zeros are skipped.  Invariant: the hit list is monotone
// and stable under raised depth or grid budgets (an orbit through a root of
// unity yields dependent pairs at every later m, so per-pair listing would
// not be).
inline SearchReport search_dependent_pairs(const QPoly& f, long grid_bound, long depth, long exp_bound,
                                           const SearchBudget& budget = {}) {
    if (f.degree() < 2) throw input_error("search_dependent_pairs: degree must be >= 2");
    std::vector<Rational> grid = height_grid(grid_bound);
    auto scan = [&](const Rational& alpha) {
        std::vector<Hit> hits;
        Orbit o = orbit(f, alpha, depth);
        for (long n = 0; n < static_cast<long>(o.points.size()); ++n) {
            if (is_zero(o.points[static_cast<std::size_t>(n)])) continue;
            for (long m = n + 1; m < static_cast<long>(o.points.size()); ++m) {
                if (is_zero(o.points[static_cast<std::size_t>(m)])) continue;
                // exponents ordered (f^{(m)}, f^{(n)})
                IndependenceVerdict v = rational_dependence(
                    {o.points[static_cast<std::size_t>(m)], o.points[static_cast<std::size_t>(n)]});
                if (v.dependent) {
                    hits.push_back(Hit{alpha, m, n, *v.relation});
                    return hits;
                }
            }
        }
        return hits;
    };
    SearchReport r = detail::grid_search(grid, budget, scan);
    r.parameters["command"] = "search-pairs";
    r.parameters["f"] = poly_to_string(f);
    r.parameters["grid"] = grid_bound;
    r.parameters["depth"] = depth;
    r.parameters["bound"] = exp_bound;
    return r;
}

// Tuples of s consecutive iterates (f^{(n+1)}, ..., f^{(n+s)})(alpha) for
// 0 <= n <= depth; hit records (m, n) = (n + s, n).
inline SearchReport consecutive_dependence_search(const QPoly& f, long s, long grid_bound, long depth,
                                                  long exp_bound, const SearchBudget& budget = {}) {
    if (f.degree() < 2) throw input_error("consecutive_dependence_search: degree must be >= 2");
    if (s < 1) throw input_error("consecutive_dependence_search: s must be >= 1");
    std::vector<Rational> grid = height_grid(grid_bound);
    auto scan = [&](const Rational& alpha) {
        std::vector<Hit> hits;
        Orbit o = orbit(f, alpha, depth + s);
        for (long n = 0; n <= depth; ++n) {
            if (n + s >= static_cast<long>(o.points.size())) break;
            std::vector<Rational> tuple;
            bool has_zero = false;
            for (long i = 1; i <= s; ++i) {
                const Rational& v = o.points[static_cast<std::size_t>(n + i)];
                if (is_zero(v)) {
                    has_zero = true;
                    break;
                }
                tuple.push_back(v);
            }
            if (has_zero) continue;
            IndependenceVerdict v = rational_dependence(tuple);
            if (v.dependent) hits.push_back(Hit{alpha, n + s, n, *v.relation});
        }
        return hits;
    };
    SearchReport r = detail::grid_search(grid, budget, scan);
    r.parameters["command"] = "consecutive";
    r.parameters["f"] = poly_to_string(f);
    r.parameters["s"] = s;
    r.parameters["grid"] = grid_bound;
    r.parameters["depth"] = depth;
    r.parameters["bound"] = exp_bound;
    return r;
}

// beta X^{+-d} detection for the scan hypothesis flag.
inline std::optional<long> excluded_power_form(const QFunc& phi) {
    const QPoly& n = phi.num();
    const QPoly& d = phi.den();
    if (d.degree() == 0 && n.term_count() == 1 && n.degree() >= 1) return n.degree();
    if (n.degree() == 0 && d.term_count() == 1 && d.degree() >= 1) return -d.degree();
    return std::nullopt;
}

struct ScanFlags {
    bool alpha_torsion = false;   // alpha in {+-1}: theorem requires alpha outside U
    std::optional<long> excluded_form;  // phi = beta X^{+-d}
};

// All 1 <= n <= depth with (alpha, phi^{(n)}(alpha)) multiplicatively
// dependent; orbit pole termination respected.
inline SearchReport scan_fixed_alpha(const QFunc& phi, const Rational& alpha, long depth,
                                     long exp_bound, ScanFlags* flags = nullptr) {
    if (is_zero(alpha)) throw input_error("scan_fixed_alpha: alpha must be nonzero");
    ScanFlags local;
    local.alpha_torsion = alpha == 1 || alpha == -1;
    local.excluded_form = excluded_power_form(phi);
    if (flags) *flags = local;

    SearchReport r;
    Orbit o = orbit(phi, alpha, depth);
    for (long n = 1; n < static_cast<long>(o.points.size()); ++n) {
        const Rational& v = o.points[static_cast<std::size_t>(n)];
        if (is_zero(v)) continue;
        IndependenceVerdict verdict = rational_dependence({alpha, v});
        if (verdict.dependent) r.hits.push_back(Hit{alpha, n, 0, *verdict.relation});
    }
    r.scanned_count = static_cast<unsigned long>(o.points.size());
    sort_hits(r.hits);
    r.parameters["command"] = "scan";
    r.parameters["phi"] = func_to_string(phi);
    r.parameters["alpha"] = to_string(alpha);
    r.parameters["depth"] = depth;
    r.parameters["bound"] = exp_bound;
    r.parameters["alpha_torsion_flag"] = local.alpha_torsion;
    r.parameters["excluded_form_flag"] = local.excluded_form.has_value();
    return r;
}

}  // namespace multdep
