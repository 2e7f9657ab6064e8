#include "toruscount/prp.hpp"

#include <algorithm>
#include <map>

#include "toruscount/errors.hpp"
#include "toruscount/numutil.hpp"

namespace toruscount {

Prp Prp::normalize(const std::vector<std::pair<Rational, Angle>>& terms) {
    std::map<Angle, Rational> folded;
    const Angle half(1, 2);
    for (const auto& [coeff, angle] : terms) {
        if (coeff.is_zero()) continue;
        if (angle.value() >= half.value()) {
            folded[angle - half] += -coeff;
        } else {
            folded[angle] += coeff;
        }
    }
    Prp out;
    for (const auto& [angle, coeff] : folded) {
        if (!coeff.is_zero()) out.sides_.push_back({coeff, angle});
    }
    return out;
}

Prp Prp::generator(const Integer& n, const Integer& p) {
    if (!is_prime(p)) throw std::invalid_argument("generator index must be prime");
    if (n % p != 0) throw std::invalid_argument("level must be divisible by the prime");
    Integer m = n / p;
    if (m % p == 0) throw std::invalid_argument("level must not be divisible by the prime twice");
    Integer a = 0;
    if (m > 1) {
        if (mpz_invert(a.get_mpz_t(), p.get_mpz_t(), m.get_mpz_t()) == 0)
            throw InternalError("prime invertible modulo cofactor expected");
    }
    std::vector<std::pair<Rational, Angle>> terms;
    for (Integer i = 0; i < p; ++i) {
        Integer exponent = a * p * (p - 1 - i) + i;
        terms.push_back({Rational(1), Angle(Rational(exponent, n))});
    }
    return normalize(terms);
}

Integer Prp::order() const {
    if (sides_.empty()) return 1;
    auto dirs = directed_sides();
    Integer n = 1;
    for (const auto& [dir, len] : dirs) n = lcm(n, (dir - dirs[0].first).order());
    return n;
}

std::vector<std::pair<Angle, Rational>> Prp::directed_sides() const {
    std::vector<std::pair<Angle, Rational>> out;
    out.reserve(sides_.size());
    for (const auto& side : sides_) {
        if (side.coeff.sign() > 0) {
            out.emplace_back(side.angle, side.coeff);
        } else {
            out.emplace_back(side.angle + Angle(1, 2), -side.coeff);
        }
    }
    return out;
}

Cyclotomic Prp::evaluate() const {
    std::vector<std::pair<Rational, Angle>> terms;
    terms.reserve(sides_.size());
    for (const auto& side : sides_) terms.emplace_back(side.coeff, side.angle);
    return eval_root_sum(terms);
}

Prp operator+(const Prp& a, const Prp& b) {
    std::vector<std::pair<Rational, Angle>> terms;
    for (const auto& side : a.sides_) terms.emplace_back(side.coeff, side.angle);
    for (const auto& side : b.sides_) terms.emplace_back(side.coeff, side.angle);
    return Prp::normalize(terms);
}

Prp Prp::scaled(const Rational& q, const Angle& rotation) const {
    std::vector<std::pair<Rational, Angle>> terms;
    terms.reserve(sides_.size());
    for (const auto& side : sides_) terms.emplace_back(q * side.coeff, side.angle + rotation);
    return normalize(terms);
}

namespace {

// Scaled integer side vectors at the common level, for subset sums.
struct SubsetContext {
    long level;
    std::vector<std::vector<Integer>> side_vectors;
};

SubsetContext subset_context(const std::vector<PrpSide>& sides) {
    Integer level = 1;
    Integer denom = 1;
    for (const auto& s : sides) {
        level = lcm(level, s.angle.order());
        denom = lcm(denom, s.coeff.den());
    }
    SubsetContext ctx;
    ctx.level = level.get_si();
    const auto& table = zeta_power_table(static_cast<unsigned long>(ctx.level));
    for (const auto& s : sides) {
        Integer scaled = s.coeff.num() * (denom / s.coeff.den());
        Integer exponent = s.angle.value().num() * (level / s.angle.order());
        const auto& row = table[exponent.get_ui()];
        std::vector<Integer> vec(row.size());
        for (std::size_t j = 0; j < row.size(); ++j) vec[j] = scaled * row[j];
        ctx.side_vectors.push_back(std::move(vec));
    }
    return ctx;
}

bool subset_sums_to_zero(const SubsetContext& ctx, const std::vector<std::size_t>& pick) {
    std::vector<Integer> acc(ctx.side_vectors[0].size(), Integer(0));
    for (std::size_t i : pick)
        for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += ctx.side_vectors[i][j];
    for (const Integer& c : acc) {
        if (c != 0) return false;
    }
    return true;
}

// Smallest vanishing subset of the sides, sizes ascending with lexicographic
// combinations; the full set is allowed.  Requires a vanishing total.
std::vector<std::size_t> minimal_vanishing_subset(const std::vector<PrpSide>& sides) {
    SubsetContext ctx = subset_context(sides);
    const std::size_t n = sides.size();
    for (std::size_t k = 2; k < n; ++k) {
        std::vector<std::size_t> pick(k);
        for (std::size_t i = 0; i < k; ++i) pick[i] = i;
        while (true) {
            if (subset_sums_to_zero(ctx, pick)) return pick;
            std::size_t i = k;
            while (i-- > 0) {
                if (pick[i] != i + n - k) break;
                if (i == 0) {
                    i = n;
                    break;
                }
            }
            if (i >= n) break;
            ++pick[i];
            for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return all;
}

}  // namespace

bool Prp::is_primitive(const Limits& limits) const {
    if (sides_.size() < 2) return true;
    if (sides_.size() > static_cast<std::size_t>(limits.primitivity_length_cap))
        throw CapError("polygon of length " + std::to_string(sides_.size()) +
                           " exceeds the primitivity subset search cap",
                       "primitivity_length_cap=" +
                           std::to_string(limits.primitivity_length_cap));
    SubsetContext ctx = subset_context(sides_);
    const std::size_t n = sides_.size();
    // Proper nonempty subsets; singletons never vanish.
    for (std::size_t k = 2; k < n; ++k) {
        std::vector<std::size_t> pick(k);
        for (std::size_t i = 0; i < k; ++i) pick[i] = i;
        while (true) {
            if (subset_sums_to_zero(ctx, pick)) return false;
            std::size_t i = k;
            while (i-- > 0) {
                if (pick[i] != i + n - k) break;
                if (i == 0) {
                    i = n;
                    break;
                }
            }
            if (i >= n) break;
            ++pick[i];
            for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return true;
}

namespace {

using Term = std::pair<Rational, Angle>;

void decompose_into(const Prp& poly, const Limits& limits,
                    std::vector<Prp::SchoenbergTerm>& out);

// One peeling step for a primitive vanishing polygon.
void decompose_primitive(const Prp& poly, const Limits& limits,
                         std::vector<Prp::SchoenbergTerm>& out) {
    Integer n = poly.order();
    if (!is_squarefree(n))
        throw InternalError("primitive vanishing polygon with non-square-free order " +
                            n.get_str());
    if (n <= 2) throw InternalError("vanishing polygon of order one or two cannot be nonempty");

    // Rotate so every side direction becomes n-torsion.
    auto dirs = poly.directed_sides();
    Angle beta = -dirs[0].first;

    Integer p = 0;
    for (const Integer& q : prime_factors(n)) {
        if (q > 2) {
            p = q;
            break;
        }
    }
    if (p == 0) throw InternalError("no odd prime available at order " + n.get_str());
    Integer m = n / p;

    // Group the rotated sides zeta_n^k by the residue of k modulo p.
    std::vector<std::vector<Term>> groups(p.get_ui());
    for (const auto& [dir, len] : dirs) {
        Angle rotated = dir + beta;
        Rational scaled = rotated.value() * Rational(n);
        if (!scaled.is_integer())
            throw InternalError("rotation failed to normalize side orders");
        Integer k = scaled.num();
        Integer alpha = fmod(k, p);
        Integer u = fmod((k - alpha) / p, m);
        groups[alpha.get_ui()].emplace_back(len, Angle(Rational(u, m)));
    }

    // The top group evaluates to the invertible scale of the whole peel.
    Cyclotomic top = eval_root_sum(groups[p.get_ui() - 1]).promoted(m.get_ui());
    if (top.is_zero())
        throw InternalError("primitive polygon with vanishing top residue group");

    // Emit top * zeta_n^(p-1) * T_p over the power basis of the scale, and
    // expand the very same object into formal terms so the residues below
    // cancel it side for side.
    const Angle gen_rotation = Angle(Rational(p - 1, n));
    const std::vector<Rational>& coeffs = top.coefficients();
    std::vector<std::vector<Term>> emitted(p.get_ui());
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j].is_zero()) continue;
        Angle base = Angle(Rational(Integer(static_cast<unsigned long>(j)), m)) + gen_rotation;
        out.push_back({coeffs[j], base - beta, p});
        for (Integer i = 0; i < p; ++i) {
            Angle term_angle = base + Angle(Rational(i, p));
            Integer k = (term_angle.value() * Rational(n)).num();
            Integer alpha = fmod(k, p);
            Integer u = fmod((k - alpha) / p, m);
            emitted[alpha.get_ui()].emplace_back(coeffs[j], Angle(Rational(u, m)));
        }
    }

    // Residues: what remains of each group after removing its share of the
    // emitted prime-gons; they vanish and have strictly smaller order.
    for (Integer alpha = 0; alpha < p; ++alpha) {
        std::vector<Term> residue = groups[alpha.get_ui()];
        for (const auto& [c, angle] : emitted[alpha.get_ui()]) residue.emplace_back(-c, angle);
        Prp leftover = Prp::normalize(residue);
        if (leftover.empty()) continue;
        if (!leftover.vanishes())
            throw InternalError("peel residue fails to vanish");
        std::vector<Prp::SchoenbergTerm> sub;
        decompose_into(leftover, limits, sub);
        Angle shift = Angle(Rational(alpha, n)) - beta;
        for (auto& t : sub) out.push_back({t.scale, t.rotation + shift, t.prime});
    }
}

void decompose_into(const Prp& poly, const Limits& limits,
                    std::vector<Prp::SchoenbergTerm>& out) {
    std::vector<PrpSide> remaining = poly.sides();
    if (remaining.size() > static_cast<std::size_t>(limits.primitivity_length_cap))
        throw CapError("polygon of length " + std::to_string(remaining.size()) +
                           " exceeds the primitive splitting subset search cap",
                       "primitivity_length_cap=" +
                           std::to_string(limits.primitivity_length_cap));
    while (!remaining.empty()) {
        std::vector<std::size_t> pick = minimal_vanishing_subset(remaining);
        std::vector<std::pair<Rational, Angle>> part_terms;
        for (std::size_t i : pick) part_terms.emplace_back(remaining[i].coeff, remaining[i].angle);
        decompose_primitive(Prp::normalize(part_terms), limits, out);
        std::vector<PrpSide> rest;
        std::size_t pi = 0;
        for (std::size_t i = 0; i < remaining.size(); ++i) {
            if (pi < pick.size() && pick[pi] == i) {
                ++pi;
                continue;
            }
            rest.push_back(remaining[i]);
        }
        remaining = std::move(rest);
    }
}

}  // namespace

std::vector<Prp::SchoenbergTerm> Prp::schoenberg_decompose(const Limits& limits) const {
    if (sides_.empty()) return {};
    if (!vanishes())
        throw std::domain_error("only vanishing polygons (closed polygons) decompose");

    std::vector<SchoenbergTerm> raw;
    decompose_into(*this, limits, raw);

    // Canonical form: rotations reduced modulo the prime-gon symmetry, equal
    // terms merged, zero scales dropped.
    std::map<std::pair<Integer, Angle>, Rational> merged;
    for (const auto& t : raw) {
        Rational turns = t.rotation.value() * Rational(t.prime);
        Angle canonical = t.rotation - Angle(Rational(fdiv(turns.num(), turns.den()), t.prime));
        merged[{t.prime, canonical}] += t.scale;
    }
    std::vector<SchoenbergTerm> out;
    for (const auto& [key, scale] : merged) {
        if (!scale.is_zero()) out.push_back({scale, key.second, key.first});
    }
    return out;
}

Prp recombine(const std::vector<Prp::SchoenbergTerm>& terms) {
    Prp acc;
    for (const auto& t : terms) {
        acc = acc + Prp::generator(t.prime, t.prime).scaled(t.scale, t.rotation);
    }
    return acc;
}

}  // namespace toruscount
