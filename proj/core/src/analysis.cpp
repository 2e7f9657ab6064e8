#include "toruscount/analysis.hpp"

#include <algorithm>
#include <map>

#include "toruscount/errors.hpp"
#include "toruscount/numutil.hpp"

namespace toruscount {

namespace {

void validate_input(const std::vector<LaurentPolynomial>& polynomials) {
    if (polynomials.empty()) throw InputError("no polynomials given");
    std::size_t rank = polynomials[0].rank();
    for (const auto& f : polynomials) {
        if (f.rank() != rank) throw InputError("polynomials live in different ambient ranks");
        if (f.is_zero()) throw InputError("zero polynomial has no torsion analysis");
        if (f.support_size() < 2)
            throw InputError("monomial input: the admissible partition set is empty");
    }
}

}  // namespace

Decomposition decompose(const std::vector<LaurentPolynomial>& polynomials, const Limits& limits) {
    validate_input(polynomials);
    Decomposition dec;
    dec.polynomials = polynomials;
    dec.ambient_rank = polynomials[0].rank();

    // Per-polynomial partitions and solution sets.
    std::vector<std::vector<Partition>> parts(polynomials.size());
    std::vector<std::vector<SolutionSet>> sols(polynomials.size());
    for (std::size_t i = 0; i < polynomials.size(); ++i) {
        parts[i] = admissible_partitions(polynomials[i], limits);
        sols[i].reserve(parts[i].size());
        for (const Partition& p : parts[i])
            sols[i].push_back(partition_solutions(polynomials[i], p, limits));
    }

    // Product over the per-polynomial partition lists.
    std::vector<std::size_t> pick(polynomials.size(), 0);
    while (true) {
        PiRecord rec;
        rec.tuple.reserve(polynomials.size());
        for (std::size_t i = 0; i < polynomials.size(); ++i)
            rec.tuple.push_back(parts[i][pick[i]]);
        rec.difference = difference_lattice(polynomials, rec.tuple);
        rec.saturated = rec.difference.saturation();
        rec.rank = rec.difference.rank();
        rec.realizable = false;

        bool product_empty = false;
        Integer order_acc = 1;
        std::uint64_t mu_count = 1;
        for (std::size_t i = 0; i < polynomials.size(); ++i) {
            const SolutionSet& s = sols[i][pick[i]];
            if (s.empty()) {
                product_empty = true;
                break;
            }
            order_acc = lcm(order_acc, lcm_solution_order(s));
            for (const auto& b : s.blocks) {
                mu_count *= b.solutions.size();
                if (mu_count > limits.subset_budget)
                    throw CapError("solution tuple enumeration too large",
                                   "subset_budget=" + std::to_string(limits.subset_budget));
            }
        }
        rec.order_lcm = product_empty ? Integer(1) : order_acc;
        std::size_t pi_index = dec.tuples.size();

        if (!product_empty) {
            // Enumerate solution choices across all blocks of all polynomials.
            std::vector<std::pair<std::size_t, std::size_t>> slots;  // (poly, block)
            for (std::size_t i = 0; i < polynomials.size(); ++i)
                for (std::size_t b = 0; b < sols[i][pick[i]].blocks.size(); ++b)
                    slots.emplace_back(i, b);
            std::vector<std::size_t> choice(slots.size(), 0);
            while (true) {
                std::vector<CongruenceSystem> per_poly;
                std::vector<Angle> flat;
                std::size_t slot = 0;
                for (std::size_t i = 0; i < polynomials.size(); ++i) {
                    const SolutionSet& s = sols[i][pick[i]];
                    std::vector<std::size_t> block_choice(s.blocks.size());
                    for (std::size_t b = 0; b < s.blocks.size(); ++b, ++slot) {
                        block_choice[b] = choice[slot];
                        const auto& mu = s.blocks[b].solutions[choice[slot]];
                        flat.insert(flat.end(), mu.angles.begin(), mu.angles.end());
                    }
                    per_poly.push_back(fiber_system(polynomials[i], s, block_choice));
                }
                CongruenceSystem joint = intersect_all(per_poly);
                bool ok = joint.consistent();
                rec.realizable = rec.realizable || ok;
                dec.fibers.push_back({pi_index, std::move(flat), std::move(joint), ok});

                std::size_t t = 0;
                while (t < slots.size()) {
                    auto [i, b] = slots[t];
                    if (++choice[t] < sols[i][pick[i]].blocks[b].solutions.size()) break;
                    choice[t++] = 0;
                }
                if (t == slots.size()) break;
            }
        }
        dec.tuples.push_back(std::move(rec));

        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == parts[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }

    // Counting systems: consistent fibers, deduplicated and pruned when one
    // solution set swallows another.  Systems sharing a row matrix have
    // disjoint solution sets once deduplicated, so containment only needs
    // checking across row buckets whose row lattices nest.
    using RowsKey = std::vector<std::vector<Integer>>;
    std::map<RowsKey, std::map<std::vector<Angle>, CongruenceSystem>> buckets;
    for (const auto& fiber : dec.fibers) {
        if (!fiber.consistent) continue;
        buckets[fiber.system.rows().to_rows()].emplace(fiber.system.rhs(), fiber.system);
    }
    std::vector<CongruenceSystem> systems;
    for (const auto& [rows, by_rhs] : buckets)
        for (const auto& [rhs, sys] : by_rhs) systems.push_back(sys);
    std::sort(systems.begin(), systems.end(),
              [](const CongruenceSystem& a, const CongruenceSystem& b) { return a.before(b); });
    auto bucket_may_contain = [&](const CongruenceSystem& inner, const RowsKey& outer_rows) {
        for (const auto& row : outer_rows) {
            if (!inner.row_lattice().contains(row)) return false;
        }
        return true;
    };
    for (std::size_t i = 0; i < systems.size(); ++i) {
        bool keep = true;
        for (const auto& [rows, by_rhs] : buckets) {
            if (rows == systems[i].rows().to_rows()) continue;
            if (!bucket_may_contain(systems[i], rows)) continue;
            for (const auto& [rhs, sys] : by_rhs) {
                if (systems[i].solutions_subset_of(sys) &&
                    !(sys.solutions_subset_of(systems[i]) && !sys.before(systems[i]))) {
                    keep = false;
                    break;
                }
            }
            if (!keep) break;
        }
        if (keep) dec.counting_systems.push_back(systems[i]);
    }

    // Maximal planes across all consistent fibers.  A plane is determined by
    // its lattice together with the pairing of the representative against the
    // lattice basis, which makes a dedup key.
    using LatticeKey = std::vector<std::vector<Integer>>;
    auto pairings_of = [](const Lattice& lat, const std::vector<Angle>& rep) {
        std::vector<Angle> out;
        for (std::size_t i = 0; i < lat.basis().rows(); ++i) {
            Rational acc(0);
            for (std::size_t j = 0; j < rep.size(); ++j)
                acc += Rational(lat.basis().at(i, j)) * rep[j].value();
            out.push_back(Angle(acc));
        }
        return out;
    };
    std::map<LatticeKey, std::map<std::vector<Angle>, RationalPlane>> plane_buckets;
    for (const auto& fiber : dec.fibers) {
        if (!fiber.consistent) continue;
        for (RationalPlane& q : fiber.system.components()) {
            auto key = pairings_of(q.lattice, q.representative);
            auto& bucket = plane_buckets[q.lattice.basis().to_rows()];
            auto it = bucket.find(key);
            if (it == bucket.end()) {
                bucket.emplace(std::move(key), std::move(q));
            } else if (q.representative < it->second.representative) {
                it->second.representative = q.representative;
            }
        }
    }
    // Precompute nesting among the few distinct lattices.
    std::vector<const LatticeKey*> keys;
    std::vector<const Lattice*> lattices;
    for (const auto& [key, bucket] : plane_buckets) {
        keys.push_back(&key);
        lattices.push_back(&bucket.begin()->second.lattice);
    }
    std::vector<std::vector<bool>> nested(keys.size(), std::vector<bool>(keys.size(), false));
    for (std::size_t a = 0; a < keys.size(); ++a)
        for (std::size_t b = 0; b < keys.size(); ++b)
            nested[a][b] = a != b && lattices[a]->subset_of(*lattices[b]);
    std::size_t bi = 0;
    for (auto& [key, bucket] : plane_buckets) {
        for (auto& [pair_key, plane] : bucket) {
            bool maximal = true;
            for (std::size_t a = 0; a < keys.size() && maximal; ++a) {
                if (!nested[a][bi]) continue;
                // A plane with the smaller lattice contains this one exactly
                // when its basis pairings agree on our representative.
                auto probe = pairings_of(*lattices[a], plane.representative);
                auto it = plane_buckets[*keys[a]].find(probe);
                if (it != plane_buckets[*keys[a]].end()) maximal = false;
            }
            if (maximal) dec.maximal_planes.push_back(plane);
        }
        ++bi;
    }
    std::sort(dec.maximal_planes.begin(), dec.maximal_planes.end(), plane_before);
    return dec;
}

AnalysisReport analyze(const Decomposition& dec) {
    AnalysisReport rep;
    const std::size_t r = dec.ambient_rank;

    int degree = 0;
    int bound = 0;
    for (const PiRecord& rec : dec.tuples) {
        int dim = static_cast<int>(r - rec.saturated.rank());
        if (rec.realizable) degree = std::max(degree, dim);
        bound = std::max(bound, dim);
    }
    rep.degree = degree;
    rep.degree_bound = bound;

    rep.M = 1;
    for (const PiRecord& rec : dec.tuples) rep.M = lcm(rep.M, rec.order_lcm);

    rep.R = 0;
    for (const auto& f : dec.polynomials)
        rep.R = std::max(rep.R, Integer(static_cast<unsigned long>(f.support_size())));
    rep.N_R = prime_product_up_to(rep.R);

    // D: lcm of the largest element order of saturation/lattice over subsets
    // of the partition tuples; all subsets when few, a generating chain with
    // the result labeled inexact otherwise.
    const std::size_t t = dec.tuples.size();
    rep.D = 1;
    if (t <= 12) {
        rep.D_exact = true;
        for (std::uint64_t mask = 1; mask < (1ull << t); ++mask) {
            Lattice acc(dec.ambient_rank);
            for (std::size_t i = 0; i < t; ++i) {
                if (mask & (1ull << i)) acc = acc.sum(dec.tuples[i].difference);
            }
            rep.D = lcm(rep.D, acc.quotient_invariants().largest_order);
        }
    } else {
        rep.D_exact = false;
        Lattice acc(dec.ambient_rank);
        for (std::size_t i = 0; i < t; ++i) {
            rep.D = lcm(rep.D, dec.tuples[i].difference.quotient_invariants().largest_order);
            acc = acc.sum(dec.tuples[i].difference);
            rep.D = lcm(rep.D, acc.quotient_invariants().largest_order);
        }
    }

    rep.period_bound_MD = rep.M * rep.D;
    rep.period_bound_NR = rep.N_R * rep.D;
    return rep;
}

TorsionCounter::TorsionCounter(const Decomposition& dec, const Limits& limits) {
    const auto& systems = dec.counting_systems;
    std::map<std::vector<std::string>, std::pair<Integer, CongruenceSystem>> merged;
    std::uint64_t visited = 0;

    auto key_of = [](const CongruenceSystem& s) {
        std::vector<std::string> key;
        for (std::size_t i = 0; i < s.rows().rows(); ++i) {
            std::string row;
            for (std::size_t j = 0; j < s.rows().cols(); ++j)
                row += s.rows().at(i, j).get_str() + ",";
            row += "=" + s.rhs()[i].to_string();
            key.push_back(std::move(row));
        }
        return key;
    };

    // Depth-first inclusion-exclusion; a branch dies as soon as the running
    // intersection has no torsion points.
    auto rec = [&](auto&& self, std::size_t start, const CongruenceSystem& current,
                   int sign) -> void {
        for (std::size_t i = start; i < systems.size(); ++i) {
            CongruenceSystem next = current.intersect(systems[i]);
            if (++visited > limits.subset_budget)
                throw CapError("inclusion-exclusion over too many system subsets",
                               "subset_budget=" + std::to_string(limits.subset_budget));
            if (!next.consistent()) continue;
            auto key = key_of(next);
            auto it = merged.find(key);
            if (it == merged.end()) {
                merged.emplace(std::move(key), std::make_pair(Integer(sign), next));
            } else {
                it->second.first += sign;
            }
            self(self, i + 1, next, -sign);
        }
    };
    if (!systems.empty()) {
        CongruenceSystem everything(dec.ambient_rank);
        rec(rec, 0, everything, +1);
    }
    for (auto& [key, entry] : merged) {
        if (entry.first != 0) atoms_.push_back(std::move(entry));
    }
}

Integer TorsionCounter::count_dividing(const Integer& n) const {
    Integer total = 0;
    for (const auto& [coeff, system] : atoms_) total += coeff * system.count_leq(n);
    return total;
}

Integer TorsionCounter::count_exact_order(const Integer& n) const {
    Integer total = 0;
    for (const Integer& d : divisors(n)) total += moebius(n / d) * count_dividing(d);
    return total;
}

Rational PolynomialPeriodicFunction::evaluate(const Integer& n) const {
    std::size_t residue = fmod(n, period).get_ui();
    Rational acc(0);
    Rational power(1);
    for (int i = 0; i <= degree; ++i) {
        acc += coeffs[i][residue] * power;
        power *= Rational(n);
    }
    return acc;
}

namespace {

// Exact interpolation through d+1 points, coefficients in the power basis.
std::vector<Rational> lagrange(const std::vector<std::pair<Integer, Integer>>& pts) {
    const std::size_t k = pts.size();
    std::vector<Rational> result(k, Rational(0));
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Rational> basis = {Rational(1)};
        Rational denom(1);
        for (std::size_t j = 0; j < k; ++j) {
            if (j == i) continue;
            // multiply by (x - x_j)
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            for (std::size_t c = 0; c < basis.size(); ++c) {
                next[c + 1] += basis[c];
                next[c] += basis[c] * Rational(-pts[j].first);
            }
            basis = std::move(next);
            denom *= Rational(pts[i].first - pts[j].first);
        }
        Rational scale = Rational(pts[i].second) / denom;
        for (std::size_t c = 0; c < basis.size(); ++c) result[c] += scale * basis[c];
    }
    return result;
}

}  // namespace

PolynomialPeriodicFunction fit_counting_function(const Decomposition& dec,
                                                 const AnalysisReport& report,
                                                 const Limits& limits) {
    TorsionCounter counter(dec, limits);
    const Integer bound = report.period_bound_MD;
    const int d = report.degree;
    const Integer range = bound * (d + 2);

    std::vector<Integer> samples;  // samples[i] = count at n = i+1
    for (Integer n = 1; n <= range; ++n) samples.push_back(counter.count_dividing(n));

    for (const Integer& q : divisors(bound)) {
        std::vector<std::vector<Rational>> table(
            static_cast<std::size_t>(d) + 1,
            std::vector<Rational>(q.get_ui(), Rational(0)));
        bool ok = true;
        for (Integer c = 0; c < q && ok; ++c) {
            std::vector<std::pair<Integer, Integer>> pts;
            for (Integer n = (c == 0 ? q : c); n <= range; n += q)
                pts.emplace_back(n, samples[n.get_ui() - 1]);
            std::vector<std::pair<Integer, Integer>> head(pts.begin(), pts.begin() + d + 1);
            std::vector<Rational> poly = lagrange(head);
            for (const auto& [x, y] : pts) {
                Rational acc(0);
                Rational power(1);
                for (const Rational& coeff : poly) {
                    acc += coeff * power;
                    power *= Rational(x);
                }
                if (acc != Rational(y)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
            for (std::size_t i = 0; i < poly.size(); ++i) table[i][c.get_ui()] = poly[i];
        }
        if (!ok) continue;

        PolynomialPeriodicFunction fitted;
        fitted.period = q;
        int deg = 0;
        for (int i = d; i >= 1; --i) {
            bool nonzero = std::any_of(table[i].begin(), table[i].end(),
                                       [](const Rational& x) { return !x.is_zero(); });
            if (nonzero) {
                deg = i;
                break;
            }
        }
        fitted.degree = deg;
        table.resize(static_cast<std::size_t>(deg) + 1);
        fitted.coeffs = std::move(table);

        for (Integer n = range + 1; n <= range + d + 2; ++n) {
            if (fitted.evaluate(n) != Rational(counter.count_dividing(n)))
                throw InternalError("fitted function fails cross-validation");
        }
        return fitted;
    }
    throw InternalError("no divisor of the period bound fits the counting function");
}

}  // namespace toruscount
