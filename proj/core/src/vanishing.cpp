#include "toruscount/vanishing.hpp"

#include <algorithm>
#include <set>

#include "toruscount/cyclotomic.hpp"
#include "toruscount/errors.hpp"
#include "toruscount/numutil.hpp"

namespace toruscount {

std::vector<Integer> mann_orders(int block_size) {
    if (block_size < 2) throw std::invalid_argument("block size must be at least 2");
    return divisors(prime_product_up_to(Integer(block_size)));
}

namespace {

// Enumeration state for one candidate level n.
struct LevelSearch {
    long n;
    std::size_t unknowns;
    const std::vector<std::vector<Integer>>* table;  // zeta powers mod the level polynomial
    std::vector<Integer> scaled;                     // integer coefficients A_i
    Integer constant;                                // the scaled -1 side
    std::vector<int> class_of;                       // coefficient class per coordinate
    std::vector<int> prev_in_class;                  // previous coordinate of same class, -1 if none
    std::vector<long> exponents;                     // current candidate
    std::vector<Integer> sum;                        // running partial sum
    std::vector<std::vector<long>> found;            // canonical exponent tuples
    // Value of A_last * zeta^k per k, inverted: the innermost coordinate is
    // a lookup instead of a scan.
    std::map<std::vector<Integer>, std::vector<long>> last_value_index;
};

void record_candidate(LevelSearch& st) {
    // Exact-order filter: tuples of smaller order belong to lower levels.
    Integer ord = 1;
    for (long k : st.exponents) ord = lcm(ord, Integer(st.n) / gcd(Integer(k), Integer(st.n)));
    if (ord == st.n) st.found.push_back(st.exponents);
}

void search(LevelSearch& st, std::size_t i) {
    long lo = st.prev_in_class[i] >= 0 ? st.exponents[st.prev_in_class[i]] : 0;
    const auto& table = *st.table;
    if (i + 1 == st.unknowns) {
        std::vector<Integer> target(st.sum.size());
        for (std::size_t j = 0; j < target.size(); ++j) target[j] = -st.sum[j];
        auto it = st.last_value_index.find(target);
        if (it == st.last_value_index.end()) return;
        for (long k : it->second) {
            if (k < lo) continue;
            st.exponents[i] = k;
            record_candidate(st);
        }
        return;
    }
    for (long k = lo; k < st.n; ++k) {
        st.exponents[i] = k;
        const auto& row = table[static_cast<std::size_t>(k)];
        for (std::size_t j = 0; j < row.size(); ++j) st.sum[j] += st.scaled[i] * row[j];
        search(st, i + 1);
        for (std::size_t j = 0; j < row.size(); ++j) st.sum[j] -= st.scaled[i] * row[j];
    }
}

// No proper nonempty sub-collection of the s relation terms (the constant
// included) may vanish; such solutions belong to a finer partition.
bool non_degenerate(const LevelSearch& st, const std::vector<long>& exps) {
    const std::size_t s = st.unknowns + 1;
    const auto& table = *st.table;
    std::vector<std::vector<Integer>> term(s);
    for (std::size_t i = 0; i < st.unknowns; ++i) {
        const auto& row = table[static_cast<std::size_t>(exps[i])];
        term[i].assign(row.size(), 0);
        for (std::size_t j = 0; j < row.size(); ++j) term[i][j] = st.scaled[i] * row[j];
    }
    term[s - 1].assign(table[0].size(), 0);
    term[s - 1][0] = -st.constant;

    const unsigned full = (1u << s) - 1;
    std::vector<Integer> acc(table[0].size());
    for (unsigned mask = 1; mask < full; ++mask) {
        for (Integer& c : acc) c = 0;
        for (std::size_t i = 0; i < s; ++i) {
            if (!(mask & (1u << i))) continue;
            for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += term[i][j];
        }
        bool zero = true;
        for (const Integer& c : acc) {
            if (c != 0) {
                zero = false;
                break;
            }
        }
        if (zero) return false;
    }
    return true;
}

// All assignments reachable by permuting coordinates within coefficient
// classes; distinct tuples only.
std::set<std::vector<long>> class_orbit(const std::vector<int>& class_of, int classes,
                                        const std::vector<long>& exps) {
    std::vector<std::vector<std::size_t>> positions(classes);
    for (std::size_t i = 0; i < class_of.size(); ++i) positions[class_of[i]].push_back(i);
    std::vector<std::vector<long>> values(classes);
    for (int c = 0; c < classes; ++c) {
        for (std::size_t pos : positions[c]) values[c].push_back(exps[pos]);
        std::sort(values[c].begin(), values[c].end());
    }
    std::set<std::vector<long>> orbit;
    std::vector<long> cur(exps.size(), 0);
    auto rec = [&](auto&& self, int c) -> void {
        if (c == classes) {
            orbit.insert(cur);
            return;
        }
        std::vector<long> perm = values[c];
        do {
            for (std::size_t t = 0; t < perm.size(); ++t) cur[positions[c][t]] = perm[t];
            self(self, c + 1);
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    rec(rec, 0);
    return orbit;
}

}  // namespace

std::vector<TorsionSolution> solve_unit_equation(const UnitEquation& eq, const Limits& limits) {
    const std::size_t unknowns = eq.coefficients.size();
    const int s = static_cast<int>(unknowns) + 1;
    if (s > limits.solver_block_cap)
        throw CapError(
            "unit equation in " + std::to_string(unknowns) + " unknowns: search too large",
            "solver_block_cap=" + std::to_string(limits.solver_block_cap));
    for (const Rational& c : eq.coefficients) {
        if (c.is_zero()) throw std::invalid_argument("unit equation with zero coefficient");
    }

    // Scale to integers: sum A_i e_i - D = 0 with D the common denominator.
    Integer denom = 1;
    for (const Rational& c : eq.coefficients) denom = lcm(denom, c.den());
    std::vector<Integer> scaled(unknowns);
    for (std::size_t i = 0; i < unknowns; ++i)
        scaled[i] = eq.coefficients[i].num() * (denom / eq.coefficients[i].den());

    // Coefficient classes: permuting equal-coefficient coordinates preserves
    // solutions, so enumerate class-sorted representatives and expand.
    std::vector<int> class_of(unknowns, -1);
    std::vector<int> prev_in_class(unknowns, -1);
    std::vector<Rational> class_value;
    for (std::size_t i = 0; i < unknowns; ++i) {
        for (std::size_t c = 0; c < class_value.size(); ++c) {
            if (class_value[c] == eq.coefficients[i]) {
                class_of[i] = static_cast<int>(c);
                break;
            }
        }
        if (class_of[i] < 0) {
            class_of[i] = static_cast<int>(class_value.size());
            class_value.push_back(eq.coefficients[i]);
        }
        for (std::size_t k = i; k-- > 0;) {
            if (class_of[k] == class_of[i]) {
                prev_in_class[i] = static_cast<int>(k);
                break;
            }
        }
    }

    std::set<std::vector<Angle>> result_set;
    for (const Integer& level : mann_orders(s)) {
        LevelSearch st;
        st.n = level.get_si();
        st.unknowns = unknowns;
        st.table = &zeta_power_table(static_cast<unsigned long>(st.n));
        st.scaled = scaled;
        st.constant = denom;
        st.class_of = class_of;
        st.prev_in_class = prev_in_class;
        st.exponents.assign(unknowns, 0);
        st.sum.assign((*st.table)[0].size(), Integer(0));
        st.sum[0] = -denom;
        const Integer& last_scale = scaled[unknowns - 1];
        for (long k = 0; k < st.n; ++k) {
            const auto& row = (*st.table)[static_cast<std::size_t>(k)];
            std::vector<Integer> value(row.size());
            for (std::size_t j = 0; j < row.size(); ++j) value[j] = last_scale * row[j];
            st.last_value_index[std::move(value)].push_back(k);
        }
        search(st, 0);

        for (const auto& exps : st.found) {
            if (!non_degenerate(st, exps)) continue;
            for (const auto& tuple :
                 class_orbit(class_of, static_cast<int>(class_value.size()), exps)) {
                std::vector<Angle> angles;
                angles.reserve(unknowns);
                for (long k : tuple) angles.emplace_back(k, st.n);
                result_set.insert(std::move(angles));
            }
        }
    }

    std::vector<TorsionSolution> out;
    out.reserve(result_set.size());
    for (const auto& angles : result_set) out.push_back({angles, tuple_order(angles)});
    return out;
}

bool SolutionSet::empty() const {
    if (blocks.empty()) return true;
    for (const auto& b : blocks) {
        if (b.solutions.empty()) return true;
    }
    return false;
}

Integer SolutionSet::tuple_count() const {
    Integer n = blocks.empty() ? 0 : 1;
    for (const auto& b : blocks) n *= Integer(static_cast<unsigned long>(b.solutions.size()));
    return n;
}

SolutionSet partition_solutions(const LaurentPolynomial& f, const Partition& p,
                                const Limits& limits) {
    std::vector<Exponent> sup = f.support();
    SolutionSet out;
    for (const auto& block : p.blocks) {
        if (block.size() < 2) throw std::invalid_argument("partition block below size two");
        BlockSolutions bs;
        bs.base = block[0];  // lexicographically smallest exponent in the block
        bs.members.assign(block.begin() + 1, block.end());
        Rational base_coeff = f.coefficient(sup[bs.base]);
        for (std::size_t idx : bs.members)
            bs.equation.coefficients.push_back(-f.coefficient(sup[idx]) / base_coeff);
        bs.solutions = solve_unit_equation(bs.equation, limits);
        out.blocks.push_back(std::move(bs));
    }
    return out;
}

namespace {

// Aggregates over the product set using the distinct per-block orders.
template <typename Fold>
Integer fold_orders(const SolutionSet& s, Fold fold) {
    if (s.empty()) return 1;
    std::vector<std::vector<Integer>> orders(s.blocks.size());
    for (std::size_t b = 0; b < s.blocks.size(); ++b) {
        std::set<Integer> distinct;
        for (const auto& sol : s.blocks[b].solutions) distinct.insert(sol.order);
        orders[b].assign(distinct.begin(), distinct.end());
    }
    Integer acc = 1;
    std::vector<std::size_t> pick(orders.size(), 0);
    while (true) {
        Integer tuple = 1;
        for (std::size_t b = 0; b < orders.size(); ++b) tuple = lcm(tuple, orders[b][pick[b]]);
        acc = fold(acc, tuple);
        std::size_t b = 0;
        while (b < pick.size() && ++pick[b] == orders[b].size()) pick[b++] = 0;
        if (b == pick.size()) break;
    }
    return acc;
}

}  // namespace

Integer max_solution_order(const SolutionSet& s) {
    return fold_orders(s, [](const Integer& a, const Integer& b) { return a > b ? a : b; });
}

Integer lcm_solution_order(const SolutionSet& s) {
    return fold_orders(s, [](const Integer& a, const Integer& b) { return lcm(a, b); });
}

Integer polynomial_order_lcm(const LaurentPolynomial& f, const Limits& limits) {
    Integer m = 1;
    for (const Partition& p : admissible_partitions(f, limits))
        m = lcm(m, max_solution_order(partition_solutions(f, p, limits)));
    return m;
}

}  // namespace toruscount
