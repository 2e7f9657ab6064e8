// Acceptance suite: end-to-end checks of the published counting laws, the
// solver tables and the polygon algebra, each with an explicit runtime
// budget.  Prints one PASS/FAIL line per criterion and exits nonzero on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "toruscount/analysis.hpp"
#include "toruscount/cyclotomic.hpp"
#include "toruscount/numutil.hpp"
#include "toruscount/oracle.hpp"
#include "toruscount/prp.hpp"

using namespace toruscount;

namespace {

int failures = 0;

struct DivisibilityWitness {
    std::string name;
    Integer fitted_period;
    Integer m_value, d_value, n_r;
    int degree, degree_bound;
};
std::vector<DivisibilityWitness> witnesses;

void run_criterion(int index, const std::string& name, double budget_seconds,
                   const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("runtime ") +
                  std::to_string(elapsed) + "s exceeds " + std::to_string(budget_seconds) + "s";
    }
    std::printf("%s criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", index, name.c_str(),
                elapsed, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::vector<LaurentPolynomial> parse_all(std::initializer_list<std::string> texts,
                                         std::size_t rank) {
    std::vector<LaurentPolynomial> out;
    for (const auto& t : texts) out.push_back(LaurentPolynomial::parse(t, rank));
    return out;
}

std::string fermat(long m) {
    return "t1^" + std::to_string(m) + " + t2^" + std::to_string(m) + " - 1";
}

std::vector<LaurentPolynomial> quadrinomial_pair(int alpha, int beta) {
    std::string f1 = std::string("t1*t3 + t4 ") + (alpha > 0 ? "+ 1" : "- 1");
    std::string f2 = std::string("t1 + t2 ") + (beta > 0 ? "+ t3" : "- t3");
    return parse_all({f1, f2}, 4);
}

std::vector<Angle> avec(std::initializer_list<std::pair<long, long>> fracs) {
    std::vector<Angle> out;
    for (auto [n, d] : fracs) out.emplace_back(n, d);
    return out;
}

void record_witness(const std::string& name, const std::vector<LaurentPolynomial>& polys) {
    Decomposition dec = decompose(polys);
    AnalysisReport rep = analyze(dec);
    PolynomialPeriodicFunction fitted = fit_counting_function(dec, rep);
    witnesses.push_back({name, fitted.period, rep.M, rep.D, rep.N_R, fitted.degree,
                         rep.degree_bound});
}

bool criterion1(std::string& detail) {
    auto polys = parse_all({"t1 + t2 + t3"}, 3);
    Decomposition dec = decompose(polys);
    TorsionCounter counter(dec);
    for (long n = 1; n <= 30; ++n) {
        Integer expected = (n % 3 == 0) ? Integer(2 * n) : Integer(0);
        if (counter.count_dividing(n) != expected) {
            detail = "count mismatch at n=" + std::to_string(n);
            return false;
        }
    }
    for (long n = 1; n <= 12; ++n) {
        if (counter.count_dividing(n) != brute_count_dividing(polys, n)) {
            detail = "oracle mismatch at n=" + std::to_string(n);
            return false;
        }
    }
    record_witness("trinomial", polys);
    return true;
}

bool criterion2(std::string& detail) {
    using Set = std::set<std::vector<Angle>>;
    auto sols_of = [](const Rational& a, const Rational& b) {
        Set out;
        for (const auto& s : solve_unit_equation({{a, b}})) out.insert(s.angles);
        return out;
    };
    struct Row {
        Rational a, b;
        Set expected;
    };
    std::vector<Row> table = {
        {Rational(1), Rational(1), Set{avec({{1, 6}, {5, 6}}), avec({{5, 6}, {1, 6}})}},
        {Rational(1), Rational(-1), Set{avec({{1, 6}, {1, 3}}), avec({{5, 6}, {2, 3}})}},
        {Rational(-1), Rational(1), Set{avec({{1, 3}, {1, 6}}), avec({{2, 3}, {5, 6}})}},
        {Rational(-1), Rational(-1), Set{avec({{1, 3}, {2, 3}}), avec({{2, 3}, {1, 3}})}},
        {Rational(1, 2), Rational(1, 2), Set{avec({{0, 1}, {0, 1}})}},
        {Rational(1, 2), Rational(-1, 2), Set{avec({{0, 1}, {1, 2}})}},
        {Rational(-1, 2), Rational(1, 2), Set{avec({{1, 2}, {0, 1}})}},
        {Rational(-1, 2), Rational(-1, 2), Set{avec({{1, 2}, {1, 2}})}},
    };
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (sols_of(table[i].a, table[i].b) != table[i].expected) {
            detail = "row " + std::to_string(i + 1) + " differs";
            return false;
        }
    }
    return true;
}

bool criterion3(std::string& detail) {
    std::vector<std::vector<Angle>> t11 = {
        avec({{1, 3}, {2, 3}, {0, 1}, {2, 3}}), avec({{5, 6}, {1, 6}, {1, 2}, {2, 3}}),
        avec({{0, 1}, {2, 3}, {1, 3}, {2, 3}}), avec({{1, 2}, {1, 6}, {5, 6}, {2, 3}}),
        avec({{0, 1}, {1, 3}, {2, 3}, {1, 3}}), avec({{1, 2}, {5, 6}, {1, 6}, {1, 3}}),
        avec({{2, 3}, {1, 3}, {0, 1}, {1, 3}}), avec({{1, 6}, {5, 6}, {1, 2}, {1, 3}})};
    std::vector<std::vector<Angle>> t1m1 = {
        avec({{1, 4}, {11, 12}, {1, 12}, {2, 3}}), avec({{3, 4}, {5, 12}, {7, 12}, {2, 3}}),
        avec({{1, 12}, {5, 12}, {1, 4}, {2, 3}}),  avec({{7, 12}, {11, 12}, {3, 4}, {2, 3}}),
        avec({{11, 12}, {7, 12}, {3, 4}, {1, 3}}), avec({{5, 12}, {1, 12}, {1, 4}, {1, 3}}),
        avec({{3, 4}, {1, 12}, {11, 12}, {1, 3}}), avec({{1, 4}, {7, 12}, {5, 12}, {1, 3}})};
    std::vector<std::vector<Angle>> tm11 = {
        avec({{1, 4}, {7, 12}, {11, 12}, {5, 6}}), avec({{3, 4}, {1, 12}, {5, 12}, {5, 6}}),
        avec({{5, 12}, {1, 12}, {3, 4}, {5, 6}}),  avec({{11, 12}, {7, 12}, {1, 4}, {5, 6}}),
        avec({{7, 12}, {11, 12}, {1, 4}, {1, 6}}), avec({{1, 12}, {5, 12}, {3, 4}, {1, 6}}),
        avec({{3, 4}, {5, 12}, {1, 12}, {1, 6}}),  avec({{1, 4}, {11, 12}, {7, 12}, {1, 6}})};
    std::vector<std::vector<Angle>> tm1m1 = {
        avec({{1, 6}, {5, 6}, {0, 1}, {5, 6}}), avec({{2, 3}, {1, 3}, {1, 2}, {5, 6}}),
        avec({{0, 1}, {1, 3}, {1, 6}, {5, 6}}), avec({{1, 2}, {5, 6}, {2, 3}, {5, 6}}),
        avec({{0, 1}, {2, 3}, {5, 6}, {1, 6}}), avec({{1, 2}, {1, 6}, {1, 3}, {1, 6}}),
        avec({{5, 6}, {1, 6}, {0, 1}, {1, 6}}), avec({{1, 3}, {2, 3}, {1, 2}, {1, 6}})};

    struct Case {
        int alpha, beta;
        long m_value;
        long period;
        std::vector<std::vector<Angle>>* table;
        std::function<Integer(long)> law;
    };
    std::vector<Case> cases = {
        {1, 1, 3, 6, &t11,
         [](long n) { return Integer(4 * (n % 3 == 0) + 4 * (n % 6 == 0)); }},
        {1, -1, 6, 12, &t1m1, [](long n) { return Integer(8 * (n % 12 == 0)); }},
        {-1, 1, 6, 12, &tm11, [](long n) { return Integer(8 * (n % 12 == 0)); }},
        {-1, -1, 6, 6, &tm1m1, [](long n) { return Integer(8 * (n % 6 == 0)); }},
    };
    for (const Case& c : cases) {
        std::string tag = "(" + std::to_string(c.alpha) + "," + std::to_string(c.beta) + ")";
        auto polys = quadrinomial_pair(c.alpha, c.beta);
        Decomposition dec = decompose(polys);
        AnalysisReport rep = analyze(dec);
        if (rep.M != c.m_value) {
            detail = tag + ": M differs";
            return false;
        }
        TorsionCounter counter(dec);
        for (long n = 1; n <= 36; ++n) {
            if (counter.count_dividing(n) != c.law(n)) {
                detail = tag + ": count mismatch at n=" + std::to_string(n);
                return false;
            }
        }
        PolynomialPeriodicFunction fitted = fit_counting_function(dec, rep);
        if (fitted.period != c.period) {
            detail = tag + ": fitted period differs";
            return false;
        }
        std::set<std::vector<Angle>> reps;
        for (const auto& q : dec.maximal_planes) {
            if (q.dim() != 0) {
                detail = tag + ": non-point plane";
                return false;
            }
            reps.insert(q.representative);
        }
        if (reps != std::set<std::vector<Angle>>(c.table->begin(), c.table->end())) {
            detail = tag + ": solution table differs";
            return false;
        }
        record_witness("pair" + tag, polys);
    }
    return true;
}

bool criterion4(std::string& detail) {
    for (long m = 1; m <= 6; ++m) {
        auto polys = parse_all({fermat(m)}, 2);
        Decomposition dec = decompose(polys);
        AnalysisReport rep = analyze(dec);
        if (rep.degree != 0 || rep.M != 6 || rep.D != m) {
            detail = "analysis differs at m=" + std::to_string(m);
            return false;
        }
        TorsionCounter counter(dec);
        for (long n = 1; n <= 60; ++n) {
            long g = std::gcd(m, n);
            Integer expected = ((n / g) % 6 == 0) ? Integer(2 * g * g) : Integer(0);
            if (counter.count_dividing(n) != expected) {
                detail = "count mismatch at m=" + std::to_string(m) + " n=" + std::to_string(n);
                return false;
            }
        }
        PolynomialPeriodicFunction fitted = fit_counting_function(dec, rep);
        if (fitted.period != 6 * m) {
            detail = "fitted period differs at m=" + std::to_string(m);
            return false;
        }
        if (m <= 3) {
            for (long n = 1; n <= 12; ++n) {
                if (counter.count_dividing(n) != brute_count_dividing(polys, n)) {
                    detail = "oracle mismatch at m=" + std::to_string(m) +
                             " n=" + std::to_string(n);
                    return false;
                }
            }
        }
        record_witness("fermat m=" + std::to_string(m), polys);
    }
    return true;
}

bool criterion5(std::string& detail) {
    for (std::size_t k = 1; k <= 3; ++k) {
        std::size_t r = 2 * k;
        std::string text;
        for (std::size_t i = 1; i <= r; ++i) {
            text += (i % 2 == 1) ? (i == 1 ? "-" : " - ") : " + ";
            text += "t" + std::to_string(i);
        }
        AnalysisReport rep = analyze(decompose(parse_all({text}, r)));
        if (rep.degree != static_cast<int>(k)) {
            detail = "degree " + std::to_string(rep.degree) + " at k=" + std::to_string(k);
            return false;
        }
    }
    return true;
}

bool criterion6(std::string& detail) {
    std::mt19937 rng(20260810);
    const Rational coeff_pool[] = {Rational(1),   Rational(-1),   Rational(2),
                                   Rational(-2),  Rational(1, 2), Rational(-1, 2)};
    int built = 0;
    while (built < 20) {
        std::uniform_int_distribution<std::size_t> rank_dist(1, 3);
        std::size_t r = rank_dist(rng);
        std::uniform_int_distribution<int> count_dist(1, 2);
        int npolys = count_dist(rng);
        std::vector<LaurentPolynomial> polys;
        bool valid = true;
        for (int i = 0; i < npolys && valid; ++i) {
            LaurentPolynomial f(r);
            std::uniform_int_distribution<int> sup_dist(2, 4);
            std::uniform_int_distribution<std::int64_t> exp_dist(-2, 2);
            int sup = sup_dist(rng);
            std::set<Exponent> seen;
            for (int t = 0; t < sup; ++t) {
                Exponent e(r);
                for (auto& x : e) x = exp_dist(rng);
                if (!seen.insert(e).second) continue;
                f.add_term(e, coeff_pool[rng() % 6]);
            }
            if (f.support_size() < 2) valid = false;
            polys.push_back(std::move(f));
        }
        if (!valid) continue;
        ++built;
        Decomposition dec = decompose(polys);
        TorsionCounter counter(dec);
        for (long n = 1; n <= 12; ++n) {
            if (counter.count_dividing(n) != brute_count_dividing(polys, n)) {
                detail = "mismatch on random system " + std::to_string(built) +
                         " at n=" + std::to_string(n);
                return false;
            }
        }
        record_witness("random " + std::to_string(built), polys);
    }
    return true;
}

bool criterion7(std::string& detail) {
    std::vector<UnitEquation> eqs = {
        {{Rational(1), Rational(1)}},
        {{Rational(-1), Rational(-1)}},
        {{Rational(1, 2), Rational(-1, 2)}},
        {{Rational(1), Rational(1), Rational(1)}},
        {{Rational(1), Rational(-1), Rational(1)}},
        {{Rational(2), Rational(1, 2), Rational(-1)}},
        {{Rational(1), Rational(1), Rational(1), Rational(1)}},
        {{Rational(1), Rational(-1), Rational(1), Rational(-1)}},
    };
    for (const auto& eq : eqs) {
        const int s = static_cast<int>(eq.coefficients.size()) + 1;
        for (const auto& sol : solve_unit_equation(eq)) {
            if (!is_squarefree(sol.order)) {
                detail = "non-squarefree order";
                return false;
            }
            for (const Integer& p : prime_factors(sol.order)) {
                if (p > s) {
                    detail = "prime factor above the block size";
                    return false;
                }
            }
            std::vector<std::pair<Rational, Angle>> terms;
            for (std::size_t i = 0; i < eq.coefficients.size(); ++i)
                terms.push_back({eq.coefficients[i], sol.angles[i]});
            terms.push_back({Rational(-1), Angle(0, 1)});
            if (!eval_root_sum(terms).is_zero()) {
                detail = "solution fails exact verification";
                return false;
            }
            for (unsigned mask = 1; mask + 1 < (1u << terms.size()); ++mask) {
                std::vector<std::pair<Rational, Angle>> sub;
                for (std::size_t i = 0; i < terms.size(); ++i) {
                    if (mask & (1u << i)) sub.push_back(terms[i]);
                }
                if (eval_root_sum(sub).is_zero()) {
                    detail = "degenerate solution escaped the filter";
                    return false;
                }
            }
        }
    }
    return true;
}

bool criterion8(std::string& detail) {
    // Rotation identity for the prime-gon relations at square-free levels.
    for (long n = 2; n <= 30; ++n) {
        if (!is_squarefree(Integer(n))) continue;
        for (const Integer& p : prime_factors(Integer(n))) {
            Prp direct = Prp::generator(Integer(n), p);
            Prp rotated =
                Prp::generator(p, p).scaled(Rational(1), Angle(Rational(p - 1, Integer(n))));
            if (!(direct == rotated)) {
                detail = "rotation identity fails at n=" + std::to_string(n);
                return false;
            }
        }
    }

    // Length bounds on random sum pairs without exact side cancellation.
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long> den(1, 12);
    std::uniform_int_distribution<int> coeff_pick(0, 4);
    const Rational coeffs[] = {Rational(1), Rational(-1), Rational(2), Rational(1, 2),
                               Rational(3)};
    int checked = 0;
    while (checked < 100) {
        auto random_prp = [&]() {
            std::vector<std::pair<Rational, Angle>> terms;
            std::uniform_int_distribution<int> nsides(1, 5);
            int k = nsides(rng);
            for (int i = 0; i < k; ++i) {
                long d = den(rng);
                std::uniform_int_distribution<long> num(0, d - 1);
                terms.push_back({coeffs[coeff_pick(rng)], Angle(num(rng), d)});
            }
            return Prp::normalize(terms);
        };
        Prp a = random_prp();
        Prp b = random_prp();
        bool cancel = false;
        for (const auto& sa : a.sides())
            for (const auto& sb : b.sides()) {
                if (sa.angle == sb.angle && sa.coeff == -sb.coeff) cancel = true;
            }
        if (cancel) continue;
        ++checked;
        Prp sum = a + b;
        if (sum.length() > a.length() + b.length() ||
            sum.length() < std::max(a.length(), b.length())) {
            detail = "length bound violated";
            return false;
        }
    }

    // The worked six-sided sum.
    Prp a6 = Prp::normalize(
        {{Rational(1), Angle(1, 6)}, {Rational(1), Angle(5, 6)}, {Rational(-1), Angle(0, 1)}});
    Prp fig6 = a6.scaled(Rational(1), Angle(1, 5)) + Prp::generator(5, 5);
    Prp expected = Prp::normalize({{Rational(1), Angle(0, 1)},
                                   {Rational(1), Angle(1, 30)},
                                   {Rational(1), Angle(11, 30)},
                                   {Rational(1), Angle(12, 30)},
                                   {Rational(1), Angle(18, 30)},
                                   {Rational(1), Angle(24, 30)}});
    if (!(fig6 == expected) || fig6.length() != 6) {
        detail = "six-sided sum differs";
        return false;
    }

    // Decomposition round trip of the fifteen-sided product polygon.
    std::vector<std::pair<Rational, Angle>> terms;
    for (long i = 0; i < 3; ++i)
        for (long j = 0; j < 5; ++j)
            terms.push_back({Rational(1), Angle(Rational(i, 3) + Rational(j, 5))});
    Prp fifteen = Prp::normalize(terms);
    if (!(recombine(fifteen.schoenberg_decompose()) == fifteen)) {
        detail = "fifteen-gon round trip differs";
        return false;
    }
    if (!(recombine(fig6.schoenberg_decompose()) == fig6)) {
        detail = "six-sided round trip differs";
        return false;
    }
    return true;
}

bool criterion9(std::string& detail) {
    if (witnesses.empty()) {
        detail = "no witnesses were collected";
        return false;
    }
    for (const auto& w : witnesses) {
        if ((w.m_value * w.d_value) % w.fitted_period != 0) {
            detail = w.name + ": fitted period does not divide M*D";
            return false;
        }
        if (w.n_r % w.m_value != 0) {
            detail = w.name + ": M does not divide N[R]";
            return false;
        }
        if (w.degree > w.degree_bound) {
            detail = w.name + ": degree above the bound";
            return false;
        }
    }
    detail = std::to_string(witnesses.size()) + " systems checked";
    return true;
}

}  // namespace

int main() {
    run_criterion(1, "trinomial counting law", 5.0, criterion1);
    run_criterion(2, "unit-equation solution table", 5.0, criterion2);
    run_criterion(3, "quadrinomial pairs", 30.0, criterion3);
    run_criterion(4, "fermat curves", 60.0, criterion4);
    run_criterion(5, "alternating-sum degree equality", 30.0, criterion5);
    run_criterion(6, "oracle equivalence on random systems", 300.0, criterion6);
    run_criterion(7, "solver order bound and non-degeneracy", 60.0, criterion7);
    run_criterion(8, "polygon algebra", 60.0, criterion8);
    run_criterion(9, "degree and period divisibility", 60.0, criterion9);
    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria failed\n", failures);
    return 1;
}
