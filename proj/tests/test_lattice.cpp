#include <doctest.h>

#include <random>
#include <vector>

#include "toruscount/lattice.hpp"
#include "toruscount/matrix.hpp"

using namespace toruscount;

namespace {

Integer det(const IntMatrix& m) {
    REQUIRE(m.rows() == m.cols());
    std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    Integer sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Integer term = m.at(0, j) * det(minor);
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int span) {
    std::uniform_int_distribution<int> dist(-span, span);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
    return m;
}

// Exhaustive count of solutions of A*a = n*c (mod n), the test oracle.
Integer brute_congruence_count(const IntMatrix& a, const std::vector<Angle>& c, long n) {
    std::size_t r = a.cols();
    std::vector<long> x(r, 0);
    Integer count = 0;
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i < a.rows() && ok; ++i) {
            Rational lhs(0);
            for (std::size_t j = 0; j < r; ++j)
                lhs += Rational(a.at(i, j)) * Rational(x[j], n);
            ok = Angle(lhs) == c[i];
        }
        if (ok) ++count;
        std::size_t k = 0;
        while (k < r && ++x[k] == n) x[k++] = 0;
        if (k == r) break;
    }
    return count;
}

}  // namespace

TEST_CASE("smith normal form examples") {
    SUBCASE("identity") {
        auto snf = smith_normal_form(IntMatrix::identity(2));
        CHECK(snf.d == IntMatrix::identity(2));
        CHECK(snf.rank == 2);
    }
    SUBCASE("diagonal m") {
        for (long m : {2L, 3L, 5L}) {
            IntMatrix a(2, 2);
            a.at(0, 0) = m;
            a.at(1, 1) = m;
            auto snf = smith_normal_form(a);
            CHECK(snf.diag == std::vector<Integer>{m, m});
        }
    }
    SUBCASE("single row gcd") {
        IntMatrix a(1, 2);
        a.at(0, 0) = 2;
        a.at(0, 1) = 4;
        auto snf = smith_normal_form(a);
        IntMatrix expected(1, 2);
        expected.at(0, 0) = 2;
        CHECK(snf.d == expected);
    }
}

TEST_CASE("smith decomposition properties on random matrices") {
    std::mt19937 rng(20240901);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + trial % 4;
        std::size_t cols = 1 + (trial / 4) % 4;
        IntMatrix m = random_matrix(rng, rows, cols, 9);
        auto snf = smith_normal_form(m);
        CHECK(snf.u * m * snf.v == snf.d);
        CHECK(abs(det(snf.u)) == 1);
        CHECK(abs(det(snf.v)) == 1);
        CHECK(snf.v * snf.v_inverse == IntMatrix::identity(cols));
        for (std::size_t i = 0; i + 1 < snf.diag.size(); ++i)
            CHECK(snf.diag[i + 1] % snf.diag[i] == 0);
        for (std::size_t i = 0; i < snf.d.rows(); ++i)
            for (std::size_t j = 0; j < snf.d.cols(); ++j) {
                if (i != j) CHECK(snf.d.at(i, j) == 0);
            }
    }
}

TEST_CASE("hermite form is a canonical basis") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix m = random_matrix(rng, 3, 3, 6);
        auto hr = hermite_form(m);
        CHECK(hr.transform * m == hr.h);
        CHECK(abs(det(hr.transform)) == 1);
        for (std::size_t i = 0; i < hr.rank; ++i) {
            const Integer& pivot = hr.h.at(i, hr.pivot_cols[i]);
            CHECK(pivot > 0);
            for (std::size_t k = 0; k < i; ++k) {
                CHECK(hr.h.at(k, hr.pivot_cols[i]) >= 0);
                CHECK(hr.h.at(k, hr.pivot_cols[i]) < pivot);
            }
        }
    }
}

TEST_CASE("saturation examples") {
    SUBCASE("scaled full lattice") {
        for (long m : {2L, 3L, 7L}) {
            Lattice l(2, {{Integer(m), Integer(0)}, {Integer(0), Integer(m)}});
            CHECK(l.saturation() == Lattice::full(2));
        }
    }
    SUBCASE("single generator") {
        Lattice l(2, {{Integer(2), Integer(4)}});
        CHECK(l.saturation() == Lattice(2, {{Integer(1), Integer(2)}}));
    }
    SUBCASE("already saturated") {
        CHECK(Lattice::full(3).saturation() == Lattice::full(3));
        Lattice zero(3);
        CHECK(zero.saturation() == zero);
    }
}

TEST_CASE("saturation properties") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 2 + trial % 3;
        Lattice l(r, random_matrix(rng, 1 + trial % 3, r, 5));
        Lattice sat = l.saturation();
        CHECK(sat.rank() == l.rank());
        CHECK(l.subset_of(sat));
        CHECK(sat.saturation() == sat);
        for (std::size_t i = 0; i < l.basis().rows(); ++i) CHECK(sat.contains(l.basis().row(i)));
    }
}

TEST_CASE("quotient invariants") {
    SUBCASE("diag(3,3)") {
        Lattice l(2, {{Integer(3), Integer(0)}, {Integer(0), Integer(3)}});
        auto qi = l.quotient_invariants();
        CHECK(qi.invariant_factors == std::vector<Integer>{3, 3});
        CHECK(qi.largest_order == 3);
    }
    SUBCASE("paired quadrinomial lattice") {
        Lattice l(4, {{Integer(1), Integer(0), Integer(1), Integer(0)},
                      {Integer(0), Integer(0), Integer(0), Integer(1)},
                      {Integer(1), Integer(0), Integer(-1), Integer(0)},
                      {Integer(0), Integer(1), Integer(-1), Integer(0)}});
        auto qi = l.quotient_invariants();
        CHECK(qi.largest_order == 2);
        CHECK(qi.invariant_factors == std::vector<Integer>{2});
    }
    SUBCASE("unimodular full rank") {
        Lattice l(2, {{Integer(1), Integer(1)}, {Integer(0), Integer(1)}});
        auto qi = l.quotient_invariants();
        CHECK(qi.invariant_factors.empty());
        CHECK(qi.largest_order == 1);
    }
}

TEST_CASE("lattice sum") {
    Lattice l1(4, {{Integer(1), Integer(0), Integer(1), Integer(0)},
                   {Integer(0), Integer(0), Integer(0), Integer(1)}});
    Lattice l2(4, {{Integer(1), Integer(0), Integer(-1), Integer(0)},
                   {Integer(0), Integer(1), Integer(-1), Integer(0)}});
    Lattice s = l1.sum(l2);
    CHECK(s.rank() == 4);
    CHECK(s.quotient_invariants().largest_order == 2);

    Lattice zero(4);
    CHECK(l1.sum(zero) == l1);

    Lattice a(2, {{Integer(2), Integer(0)}});
    Lattice b(2, {{Integer(0), Integer(3)}});
    CHECK(a.sum(b) == Lattice(2, {{Integer(2), Integer(0)}, {Integer(0), Integer(3)}}));

    CHECK_THROWS_AS(a.sum(l1), std::invalid_argument);
}

TEST_CASE("membership and coordinates") {
    Lattice l(3, {{Integer(2), Integer(0), Integer(2)}, {Integer(0), Integer(3), Integer(1)}});
    CHECK(l.contains({Integer(2), Integer(3), Integer(3)}));
    CHECK_FALSE(l.contains({Integer(1), Integer(0), Integer(1)}));
    auto coords = l.express_in_generators({Integer(4), Integer(-3), Integer(3)});
    REQUIRE(coords.has_value());
    CHECK((*coords)[0] * 2 + (*coords)[1] * 0 == 4);
    CHECK((*coords)[1] * 3 == -3);
}

TEST_CASE("count_congruences examples") {
    SUBCASE("one fiber of the fermat curve, m=1, n=6") {
        IntMatrix a(2, 2);
        a.at(0, 0) = 1;
        a.at(1, 1) = 1;
        auto res = count_congruences(a, {Angle(1, 6), Angle(5, 6)}, 6);
        CHECK(res.count == 1);
        REQUIRE(res.particular.has_value());
        CHECK(*res.particular == std::vector<Integer>{1, 5});
    }
    SUBCASE("fermat m=3 fibers at n=18") {
        IntMatrix a(2, 2);
        a.at(0, 0) = 3;
        a.at(1, 1) = 3;
        CHECK(count_congruences(a, {Angle(1, 6), Angle(5, 6)}, 18).count == 9);
        CHECK(count_congruences(a, {Angle(5, 6), Angle(1, 6)}, 18).count == 9);
        CHECK(count_congruences(a, {Angle(1, 6), Angle(5, 6)}, 6).count == 0);
    }
    SUBCASE("unconstrained system") {
        IntMatrix a(1, 3);
        for (long n : {1L, 2L, 5L}) {
            auto res = count_congruences(a, {Angle(0, 1)}, n);
            CHECK(res.count == Integer(n) * n * n);
        }
    }
    SUBCASE("non-integral scaled right-hand side") {
        IntMatrix a(1, 1);
        a.at(0, 0) = 1;
        CHECK(count_congruences(a, {Angle(1, 4)}, 6).count == 0);
    }
}

TEST_CASE("count_congruences agrees with exhaustive enumeration") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t r = 1 + trial % 3;
        std::size_t rows = 1 + trial % 2;
        IntMatrix a = random_matrix(rng, rows, r, 3);
        std::uniform_int_distribution<long> den_dist(1, 4);
        std::vector<Angle> c;
        for (std::size_t i = 0; i < rows; ++i) {
            long den = den_dist(rng);
            std::uniform_int_distribution<long> num_dist(0, den - 1);
            c.emplace_back(num_dist(rng), den);
        }
        for (long n = 1; n <= 12; ++n) {
            auto res = count_congruences(a, c, n);
            CHECK(res.count == brute_congruence_count(a, c, n));
            if (res.count > 0) {
                // The particular solution solves the system.
                for (std::size_t i = 0; i < rows; ++i) {
                    Rational lhs(0);
                    for (std::size_t j = 0; j < r; ++j)
                        lhs += Rational(a.at(i, j)) * Rational((*res.particular)[j], Integer(n));
                    CHECK(Angle(lhs) == c[i]);
                }
                // The kernel enumerates exactly count solutions.
                Integer prod = 1;
                for (const auto& g : res.kernel) prod *= g.order;
                CHECK(prod == res.count);
            }
        }
    }
}

TEST_CASE("nonmembers are separated by torsion solutions of the dual system") {
    // For lambda outside the lattice there is a torsion point theta of the
    // homogeneous system with lambda . theta nonzero mod 1.
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t r = 2 + trial % 2;
        IntMatrix gens = random_matrix(rng, 2, r, 3);
        Lattice l(r, gens);
        IntMatrix lam_m = random_matrix(rng, 1, r, 4);
        std::vector<Integer> lambda = lam_m.row(0);
        if (l.contains(lambda)) continue;
        Integer exponent = 1;
        for (const Integer& f : l.quotient_invariants().invariant_factors) exponent *= f;
        bool separated = false;
        for (long n0 = 1; n0 <= 8 && !separated; ++n0) {
            Integer n = exponent * n0;
            if (n == 1) continue;
            std::vector<Angle> rhs(l.basis().rows(), Angle(0, 1));
            auto res = count_congruences(l.basis(), rhs, n);
            // Walk every solution via the kernel parametrization.
            std::vector<Integer> counters(res.kernel.size(), 0);
            while (true) {
                std::vector<Integer> theta = *res.particular;
                for (std::size_t g = 0; g < res.kernel.size(); ++g)
                    for (std::size_t j = 0; j < r; ++j)
                        theta[j] += counters[g] * res.kernel[g].vec[j];
                Rational pairing(0);
                for (std::size_t j = 0; j < r; ++j)
                    pairing += Rational(lambda[j]) * Rational(theta[j], n);
                if (!Angle(pairing).is_zero()) {
                    separated = true;
                    break;
                }
                std::size_t g = 0;
                while (g < counters.size() && ++counters[g] == res.kernel[g].order)
                    counters[g++] = 0;
                if (g == counters.size()) break;
            }
        }
        CHECK(separated);
    }
}
