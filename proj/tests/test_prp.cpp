#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "toruscount/errors.hpp"
#include "toruscount/numutil.hpp"
#include "toruscount/prp.hpp"

using namespace toruscount;

namespace {

using Term = std::pair<Rational, Angle>;

Prp fifteen_gon() {
    // Expansion of the triangle relation times the pentagon relation.
    std::vector<Term> terms;
    for (long i = 0; i < 3; ++i)
        for (long j = 0; j < 5; ++j)
            terms.push_back({Rational(1), Angle(Rational(i, 3) + Rational(j, 5))});
    return Prp::normalize(terms);
}

Prp figure6() {
    Prp a = Prp::normalize(
        {{Rational(1), Angle(1, 6)}, {Rational(1), Angle(5, 6)}, {Rational(-1), Angle(0, 1)}});
    return a.scaled(Rational(1), Angle(1, 5)) + Prp::generator(5, 5);
}

Prp random_prp(std::mt19937& rng, int max_sides) {
    std::uniform_int_distribution<int> nsides(1, max_sides);
    std::uniform_int_distribution<long> den(1, 12);
    std::uniform_int_distribution<int> coeff_pick(0, 5);
    const Rational coeffs[] = {Rational(1),    Rational(-1),    Rational(2),
                               Rational(-2),   Rational(1, 2),  Rational(3)};
    std::vector<Term> terms;
    int k = nsides(rng);
    for (int i = 0; i < k; ++i) {
        long d = den(rng);
        std::uniform_int_distribution<long> num(0, d - 1);
        terms.push_back({coeffs[coeff_pick(rng)], Angle(num(rng), d)});
    }
    return Prp::normalize(terms);
}

bool has_full_cancellation(const Prp& a, const Prp& b) {
    for (const auto& sa : a.sides())
        for (const auto& sb : b.sides()) {
            if (sa.angle == sb.angle && sa.coeff == -sb.coeff) return true;
        }
    return false;
}

std::set<Angle> side_angles(const Prp& p) {
    std::set<Angle> out;
    for (const auto& s : p.sides()) out.insert(s.angle);
    return out;
}

}  // namespace

TEST_CASE("normalization examples") {
    SUBCASE("half turn cancels the unit") {
        Prp p = Prp::normalize({{Rational(1), Angle(1, 2)}, {Rational(1), Angle(0, 1)}});
        CHECK(p.empty());
        CHECK(p.length() == 0);
        CHECK(p.order() == 1);
    }
    SUBCASE("fifteen sided polygon") {
        Prp p = fifteen_gon();
        CHECK(p.length() == 15);
        CHECK(p.vanishes());
        CHECK(p.order() == 15);
    }
    SUBCASE("pentagon after folding") {
        Prp p = Prp::normalize({{Rational(1), Angle(0, 1)},
                                {Rational(1), Angle(1, 5)},
                                {Rational(1), Angle(2, 5)},
                                {Rational(1), Angle(3, 5)},
                                {Rational(1), Angle(4, 5)}});
        CHECK(p.length() == 5);
        for (const auto& s : p.sides()) CHECK(s.angle.value() < Rational(1, 2));
        CHECK(p == Prp::generator(5, 5));
    }
}

TEST_CASE("normalize is idempotent and preserves evaluation") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Term> terms;
        std::uniform_int_distribution<long> den(1, 10);
        std::uniform_int_distribution<long> num(-10, 10);
        std::uniform_int_distribution<int> n_terms(0, 6);
        int k = n_terms(rng);
        for (int i = 0; i < k; ++i) {
            long d = den(rng);
            terms.push_back({Rational(num(rng), 3), Angle(num(rng), d)});
        }
        Prp p = Prp::normalize(terms);
        std::vector<Term> roundtrip;
        for (const auto& s : p.sides()) roundtrip.push_back({s.coeff, s.angle});
        CHECK(Prp::normalize(roundtrip) == p);
        CHECK(p.evaluate() == eval_root_sum(terms));
        for (std::size_t i = 1; i < p.sides().size(); ++i)
            CHECK(p.sides()[i - 1].angle < p.sides()[i].angle);
    }
}

TEST_CASE("algebra examples") {
    SUBCASE("figure six sum") {
        Prp expected = Prp::normalize({{Rational(1), Angle(0, 1)},
                                       {Rational(1), Angle(1, 30)},
                                       {Rational(1), Angle(11, 30)},
                                       {Rational(1), Angle(12, 30)},
                                       {Rational(1), Angle(18, 30)},
                                       {Rational(1), Angle(24, 30)}});
        Prp got = figure6();
        CHECK(got == expected);
        CHECK(got.length() == 6);
        CHECK(got.order() == 30);
        CHECK(got.vanishes());
    }
    SUBCASE("additive inverse") {
        Prp t = fifteen_gon();
        CHECK((t + t.scaled(Rational(-1), Angle(0, 1))).empty());
    }
    SUBCASE("rotation by a half turn") {
        Prp t3 = Prp::generator(3, 3);
        Prp rotated = t3.scaled(Rational(1), Angle(1, 2));
        CHECK(rotated.length() == 3);
        CHECK(rotated.order() == 3);
        CHECK_FALSE(rotated == t3);
    }
}

TEST_CASE("measures") {
    Prp t5 = Prp::generator(5, 5);
    CHECK(t5.length() == 5);
    CHECK(t5.order() == 5);

    CHECK(figure6().length() == 6);

    // The order is rotation invariant, so the level-15 pentagon relation has
    // the pentagon's order.
    Prp t15_5 = Prp::generator(15, 5);
    CHECK(t15_5.order() == 5);
    CHECK(t15_5.length() == 5);

    Prp empty;
    CHECK(empty.length() == 0);
    CHECK(empty.order() == 1);
}

TEST_CASE("generators") {
    SUBCASE("regular pentagon relation") {
        Prp t5 = Prp::generator(5, 5);
        CHECK(t5.vanishes());
        CHECK(side_angles(t5) ==
              std::set<Angle>{Angle(0, 1), Angle(1, 5), Angle(2, 5), Angle(1, 10), Angle(3, 10)});
    }
    SUBCASE("level fifteen pentagon relation") {
        Prp t = Prp::generator(15, 5);
        CHECK(t.vanishes());
        CHECK(t == Prp::generator(5, 5).scaled(Rational(1), Angle(4, 15)));
    }
    SUBCASE("level six digon relation collapses") {
        CHECK(Prp::generator(6, 2) ==
              Prp::generator(2, 2).scaled(Rational(1), Angle(1, 6)));
        CHECK(Prp::generator(2, 2).empty());
    }
    SUBCASE("invalid parameters") {
        CHECK_THROWS_AS(Prp::generator(8, 4), std::invalid_argument);
        CHECK_THROWS_AS(Prp::generator(10, 3), std::invalid_argument);
        CHECK_THROWS_AS(Prp::generator(20, 2), std::invalid_argument);
    }
}

TEST_CASE("level identity for square-free levels") {
    for (long n = 2; n <= 30; ++n) {
        if (!is_squarefree(Integer(n))) continue;
        for (const Integer& p : prime_factors(Integer(n))) {
            Prp direct = Prp::generator(Integer(n), p);
            Prp rotated = Prp::generator(p, p).scaled(
                Rational(1), Angle(Rational(p - 1, Integer(n))));
            CHECK(direct == rotated);
        }
    }
}

TEST_CASE("length bounds for sums") {
    std::mt19937 rng(777);
    int checked = 0;
    while (checked < 100) {
        Prp a = random_prp(rng, 5);
        Prp b = random_prp(rng, 5);
        if (has_full_cancellation(a, b)) continue;
        ++checked;
        Prp sum = a + b;
        CHECK(sum.length() <= a.length() + b.length());
        CHECK(sum.length() >= std::max(a.length(), b.length()));
        std::set<Angle> angles_a = side_angles(a);
        std::set<Angle> angles_b = side_angles(b);
        std::set<Angle> common;
        std::set_intersection(angles_a.begin(), angles_a.end(), angles_b.begin(), angles_b.end(),
                              std::inserter(common, common.begin()));
        if (common.empty()) CHECK(sum.length() == a.length() + b.length());
        bool contained = std::includes(angles_a.begin(), angles_a.end(), angles_b.begin(),
                                       angles_b.end()) ||
                         std::includes(angles_b.begin(), angles_b.end(), angles_a.begin(),
                                       angles_a.end());
        if (contained) CHECK(sum.length() == std::max(a.length(), b.length()));
    }
}

TEST_CASE("scaling preserves measures") {
    std::mt19937 rng(31);
    const Rational scales[] = {Rational(2), Rational(1, 3), Rational(5, 2)};
    const Angle rotations[] = {Angle(0, 1), Angle(1, 7), Angle(3, 4), Angle(1, 2)};
    for (int trial = 0; trial < 20; ++trial) {
        Prp p = random_prp(rng, 4);
        for (const Rational& q : scales)
            for (const Angle& rot : rotations) {
                Prp s = p.scaled(q, rot);
                CHECK(s.length() == p.length());
                CHECK(s.order() == p.order());
            }
    }
}

TEST_CASE("primitivity") {
    CHECK(Prp().is_primitive());
    CHECK(Prp::generator(5, 5).is_primitive());
    CHECK(Prp::generator(7, 7).is_primitive());
    CHECK_FALSE(fifteen_gon().is_primitive());
    CHECK(figure6().is_primitive());

    std::vector<Term> many;
    for (long i = 0; i < 17; ++i) many.push_back({Rational(1), Angle(i, 37)});
    CHECK_THROWS_AS(Prp::normalize(many).is_primitive(), CapError);
}

TEST_CASE("schoenberg decomposition") {
    SUBCASE("empty polygon") {
        CHECK(Prp().schoenberg_decompose().empty());
    }
    SUBCASE("non-vanishing input is rejected") {
        Prp open = Prp::normalize({{Rational(1), Angle(0, 1)}, {Rational(1), Angle(1, 5)}});
        CHECK_THROWS_AS(open.schoenberg_decompose(), std::domain_error);
    }
    SUBCASE("fifteen sided polygon round trip") {
        Prp t = fifteen_gon();
        auto terms = t.schoenberg_decompose();
        CHECK_FALSE(terms.empty());
        for (const auto& term : terms) CHECK((term.prime == 3 || term.prime == 5));
        CHECK(recombine(terms) == t);
    }
    SUBCASE("level fifteen pentagon relation peels to one pentagon") {
        Prp t = Prp::generator(15, 5);
        auto terms = t.schoenberg_decompose();
        REQUIRE(terms.size() == 1);
        CHECK(terms[0].prime == 5);
        CHECK(terms[0].scale == Rational(1));
        CHECK(recombine(terms) == t);
    }
    SUBCASE("figure six round trip exercises the residue recursion") {
        Prp t = figure6();
        auto terms = t.schoenberg_decompose();
        CHECK(recombine(terms) == t);
        std::set<Integer> primes;
        for (const auto& term : terms) primes.insert(term.prime);
        CHECK(primes == std::set<Integer>{3, 5});
    }
}

TEST_CASE("decomposition round trips on prime-gon products and sums") {
    // Products of distinct prime-gon relations, with rotations, and random
    // rational combinations of rotated prime-gons: all vanish and must
    // recombine exactly.
    std::vector<Prp> inputs;
    auto product = [](std::vector<long> primes, const Angle& rot) {
        std::vector<Term> terms = {{Rational(1), rot}};
        for (long p : primes) {
            std::vector<Term> next;
            for (const auto& [c, a] : terms)
                for (long j = 0; j < p; ++j) next.push_back({c, a + Angle(j, p)});
            terms = std::move(next);
        }
        return Prp::normalize(terms);
    };
    inputs.push_back(product({3, 5}, Angle(0, 1)));
    inputs.push_back(product({3, 5}, Angle(1, 2)));
    inputs.push_back(product({2, 3}, Angle(0, 1)));
    inputs.push_back(product({2, 5}, Angle(1, 3)));
    inputs.push_back(product({2, 3, 5}, Angle(0, 1)));

    std::mt19937 rng(999);
    std::uniform_int_distribution<long> numer(-3, 3);
    for (int trial = 0; trial < 12; ++trial) {
        Prp acc;
        std::uniform_int_distribution<int> count(1, 3);
        int k = count(rng);
        const long primes[] = {2, 3, 5};
        for (int i = 0; i < k; ++i) {
            long p = primes[static_cast<std::size_t>(rng() % 3)];
            long num = numer(rng);
            if (num == 0) num = 1;
            std::uniform_int_distribution<long> rot_den(1, 30 / p);
            long d = rot_den(rng);
            std::uniform_int_distribution<long> rot_num(0, d - 1);
            acc = acc + Prp::generator(p, p).scaled(Rational(num, 2), Angle(rot_num(rng), d));
        }
        inputs.push_back(acc);
    }

    for (const Prp& t : inputs) {
        REQUIRE(t.vanishes());
        auto terms = t.schoenberg_decompose();
        CHECK(recombine(terms) == t);
        if (t.empty()) CHECK(terms.empty());
    }
}

TEST_CASE("decomposition splitting respects the length cap") {
    // Four side-disjoint rotated pentagons: 20 sides, vanishing.
    Prp big;
    for (long j = 0; j < 4; ++j)
        big = big + Prp::generator(5, 5).scaled(Rational(1), Angle(1, 7 + j));
    REQUIRE(big.vanishes());
    REQUIRE(big.length() == 20);
    CHECK_THROWS_AS(big.schoenberg_decompose(), CapError);
    Limits wide;
    wide.primitivity_length_cap = 24;
    CHECK(recombine(big.schoenberg_decompose(wide)) == big);
}
