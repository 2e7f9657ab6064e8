#include "toruscount/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "toruscount/errors.hpp"

namespace toruscount {

HermiteResult hermite_form(const IntMatrix& m) {
    HermiteResult res{m, IntMatrix::identity(m.rows()), 0, {}};
    IntMatrix& h = res.h;
    IntMatrix& t = res.transform;
    std::size_t pr = 0;  // next pivot row

    for (std::size_t c = 0; c < h.cols() && pr < h.rows(); ++c) {
        // Euclid on the column until a single nonzero entry remains at pr.
        while (true) {
            std::size_t best = h.rows();
            for (std::size_t i = pr; i < h.rows(); ++i) {
                if (h.at(i, c) == 0) continue;
                if (best == h.rows() ||
                    cmp(abs(h.at(i, c)), abs(h.at(best, c))) < 0) best = i;
            }
            if (best == h.rows()) break;  // column is zero below pr
            h.swap_rows(pr, best);
            t.swap_rows(pr, best);
            bool cleared = true;
            for (std::size_t i = pr + 1; i < h.rows(); ++i) {
                if (h.at(i, c) == 0) continue;
                Integer q = fdiv(h.at(i, c), h.at(pr, c));
                h.add_row_multiple(i, pr, -q);
                t.add_row_multiple(i, pr, -q);
                if (h.at(i, c) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (h.at(pr, c) == 0) continue;
        if (h.at(pr, c) < 0) {
            h.negate_row(pr);
            t.negate_row(pr);
        }
        for (std::size_t i = 0; i < pr; ++i) {
            Integer q = fdiv(h.at(i, c), h.at(pr, c));
            h.add_row_multiple(i, pr, -q);
            t.add_row_multiple(i, pr, -q);
        }
        res.pivot_cols.push_back(c);
        ++pr;
    }
    res.rank = pr;
    return res;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    SmithDecomposition res{IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), m,
                           IntMatrix::identity(m.cols()), 0, {}};
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;
    IntMatrix& d = res.d;
    IntMatrix& vinv = res.v_inverse;

    auto col_add = [&](std::size_t j, std::size_t k, const Integer& c) {
        d.add_col_multiple(j, k, c);
        v.add_col_multiple(j, k, c);
        vinv.add_row_multiple(k, j, -c);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        d.swap_cols(i, j);
        v.swap_cols(i, j);
        vinv.swap_rows(i, j);
    };

    std::size_t steps = std::min(m.rows(), m.cols());
    for (std::size_t s = 0; s < steps; ++s) {
        // Smallest-magnitude nonzero pivot, lexicographic tie-break.
        std::size_t pi = d.rows(), pj = d.cols();
        for (std::size_t i = s; i < d.rows(); ++i)
            for (std::size_t j = s; j < d.cols(); ++j) {
                if (d.at(i, j) == 0) continue;
                if (pi == d.rows() || cmp(abs(d.at(i, j)), abs(d.at(pi, pj))) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == d.rows()) break;  // remainder is zero
        d.swap_rows(s, pi);
        u.swap_rows(s, pi);
        col_swap(s, pj);
        if (d.at(s, s) < 0) {
            d.negate_row(s);
            u.negate_row(s);
        }

        while (true) {
            bool swapped = false;
            for (std::size_t i = s + 1; i < d.rows(); ++i) {
                if (d.at(i, s) == 0) continue;
                Integer q = fdiv(d.at(i, s), d.at(s, s));
                d.add_row_multiple(i, s, -q);
                u.add_row_multiple(i, s, -q);
                if (d.at(i, s) != 0) {
                    d.swap_rows(s, i);
                    u.swap_rows(s, i);
                    swapped = true;
                }
            }
            if (swapped) continue;
            for (std::size_t j = s + 1; j < d.cols(); ++j) {
                if (d.at(s, j) == 0) continue;
                Integer q = fdiv(d.at(s, j), d.at(s, s));
                col_add(j, s, -q);
                if (d.at(s, j) != 0) {
                    col_swap(s, j);
                    swapped = true;
                }
            }
            if (swapped) continue;
            if (d.at(s, s) < 0) {
                d.negate_row(s);
                u.negate_row(s);
            }

            // Enforce the divisibility chain: fold in any entry the pivot
            // does not divide, which shrinks the pivot on the next pass.
            bool fixed = true;
            for (std::size_t i = s + 1; i < d.rows() && fixed; ++i)
                for (std::size_t j = s + 1; j < d.cols() && fixed; ++j) {
                    if (d.at(i, j) % d.at(s, s) != 0) {
                        d.add_row_multiple(s, i, 1);
                        u.add_row_multiple(s, i, 1);
                        fixed = false;
                    }
                }
            if (fixed) break;
        }
    }

    for (std::size_t s = 0; s < steps; ++s) {
        if (d.at(s, s) != 0) {
            res.diag.push_back(d.at(s, s));
            ++res.rank;
        }
    }
    return res;
}

Lattice::Lattice(std::size_t ambient_rank) : Lattice(ambient_rank, IntMatrix(0, ambient_rank)) {}

Lattice::Lattice(std::size_t ambient_rank, const std::vector<std::vector<Integer>>& generators)
    : Lattice(ambient_rank, IntMatrix(generators)) {}

Lattice::Lattice(std::size_t ambient_rank, const IntMatrix& generators)
    : ambient_(ambient_rank), gens_(generators) {
    if (gens_.rows() == 0) gens_ = IntMatrix(0, ambient_);
    if (gens_.cols() != ambient_)
        throw std::invalid_argument("generator width does not match ambient rank");
    HermiteResult hr = hermite_form(gens_);
    basis_ = IntMatrix(hr.rank, ambient_);
    basis_transform_ = IntMatrix(hr.rank, gens_.rows());
    for (std::size_t i = 0; i < hr.rank; ++i) {
        for (std::size_t j = 0; j < ambient_; ++j) basis_.at(i, j) = hr.h.at(i, j);
        for (std::size_t j = 0; j < gens_.rows(); ++j)
            basis_transform_.at(i, j) = hr.transform.at(i, j);
    }
    pivot_cols_ = hr.pivot_cols;
}

Lattice Lattice::full(std::size_t ambient_rank) {
    return Lattice(ambient_rank, IntMatrix::identity(ambient_rank));
}

namespace {
std::optional<std::vector<Integer>> reduce_against_basis(const IntMatrix& basis,
                                                         const std::vector<std::size_t>& pivots,
                                                         std::vector<Integer> w) {
    std::vector<Integer> coeffs(basis.rows(), Integer(0));
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        const Integer& p = basis.at(i, pivots[i]);
        Integer q = w[pivots[i]] / p;
        if (w[pivots[i]] % p != 0) return std::nullopt;
        coeffs[i] = q;
        for (std::size_t j = 0; j < basis.cols(); ++j) w[j] -= q * basis.at(i, j);
    }
    for (const Integer& x : w) {
        if (x != 0) return std::nullopt;
    }
    return coeffs;
}
}  // namespace

bool Lattice::contains(const std::vector<Integer>& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector size mismatch");
    return reduce_against_basis(basis_, pivot_cols_, v).has_value();
}

std::optional<std::vector<Integer>> Lattice::express_in_generators(
    const std::vector<Integer>& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector size mismatch");
    auto b = reduce_against_basis(basis_, pivot_cols_, v);
    if (!b) return std::nullopt;
    std::vector<Integer> out(gens_.rows(), Integer(0));
    for (std::size_t i = 0; i < basis_transform_.rows(); ++i)
        for (std::size_t j = 0; j < gens_.rows(); ++j)
            out[j] += (*b)[i] * basis_transform_.at(i, j);
    return out;
}

Lattice Lattice::sum(const Lattice& other) const {
    if (ambient_ != other.ambient_)
        throw std::invalid_argument("lattice sum with mismatched ambient rank");
    return Lattice(ambient_, IntMatrix::vstack(basis_, other.basis_));
}

Lattice Lattice::saturation() const {
    if (rank() == 0) return *this;
    SmithDecomposition snf = smith_normal_form(basis_);
    // Row space of basis equals that of D * V^-1; clearing the invariant
    // factors leaves the first rank rows of V^-1.
    IntMatrix sat(rank(), ambient_);
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j) sat.at(i, j) = snf.v_inverse.at(i, j);
    return Lattice(ambient_, sat);
}

QuotientInvariants Lattice::quotient_invariants() const {
    QuotientInvariants qi{{}, Integer(1)};
    if (rank() == 0) return qi;
    SmithDecomposition snf = smith_normal_form(basis_);
    for (const Integer& d : snf.diag) {
        if (d > 1) qi.invariant_factors.push_back(d);
    }
    if (!qi.invariant_factors.empty()) qi.largest_order = qi.invariant_factors.back();
    return qi;
}

bool Lattice::subset_of(const Lattice& other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("ambient rank mismatch");
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        if (!other.contains(basis_.row(i))) return false;
    }
    return true;
}

CongruenceCount count_congruences(const IntMatrix& a, const std::vector<Angle>& c,
                                  const Integer& n) {
    return count_congruences(smith_normal_form(a), a.cols(), c, n);
}

CongruenceCount count_congruences(const SmithDecomposition& snf, std::size_t unknowns,
                                  const std::vector<Angle>& c, const Integer& n) {
    if (n < 1) throw std::domain_error("modulus must be positive");
    if (snf.u.rows() != c.size()) throw std::invalid_argument("one angle per row required");
    CongruenceCount out{Integer(0), std::nullopt, {}};

    // Right-hand sides n*c must be integral for solutions with denominator
    // dividing n to exist at all.
    std::vector<Integer> b(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        Rational scaled = Rational(n) * c[i].value();
        if (!scaled.is_integer()) return out;
        b[i] = scaled.num();
    }

    std::vector<Integer> ub = snf.u * b;
    for (std::size_t i = snf.rank; i < ub.size(); ++i) {
        if (fmod(ub[i], n) != 0) return out;
    }

    std::vector<Integer> y(unknowns, Integer(0));
    Integer count = 1;
    for (std::size_t i = 0; i < snf.rank; ++i) {
        Integer g = gcd(snf.diag[i], n);
        if (fmod(ub[i], g) != 0) return out;
        count *= g;
        Integer reduced_mod = n / g;
        if (reduced_mod > 1) {
            Integer dg = fmod(snf.diag[i] / g, reduced_mod);
            Integer inv;
            if (mpz_invert(inv.get_mpz_t(), dg.get_mpz_t(), reduced_mod.get_mpz_t()) == 0)
                throw InternalError("expected invertible reduced pivot");
            y[i] = fmod(inv * fdiv(ub[i], g), reduced_mod);
        }
    }
    std::size_t free_coords = unknowns - snf.rank;
    Integer n_pow;
    mpz_pow_ui(n_pow.get_mpz_t(), n.get_mpz_t(), free_coords);
    count *= n_pow;
    out.count = count;

    std::vector<Integer> part = snf.v * y;
    for (Integer& x : part) x = fmod(x, n);
    out.particular = std::move(part);

    for (std::size_t i = 0; i < snf.rank; ++i) {
        Integer g = gcd(snf.diag[i], n);
        if (g == 1) continue;
        std::vector<Integer> e(unknowns, Integer(0));
        e[i] = n / g;
        std::vector<Integer> vec = snf.v * e;
        for (Integer& x : vec) x = fmod(x, n);
        out.kernel.push_back({std::move(vec), g});
    }
    for (std::size_t i = snf.rank; i < unknowns; ++i) {
        if (n == 1) break;
        std::vector<Integer> e(unknowns, Integer(0));
        e[i] = 1;
        std::vector<Integer> vec = snf.v * e;
        for (Integer& x : vec) x = fmod(x, n);
        out.kernel.push_back({std::move(vec), n});
    }
    return out;
}

}  // namespace toruscount
