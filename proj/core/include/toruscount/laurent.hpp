#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "toruscount/lattice.hpp"
#include "toruscount/limits.hpp"
#include "toruscount/rational.hpp"

namespace toruscount {

using Exponent = std::vector<std::int64_t>;

/// Laurent polynomial over Q in variables t1..tr: a finite map from exponent
/// vectors to nonzero rational coefficients.
class LaurentPolynomial {
public:
    explicit LaurentPolynomial(std::size_t rank) : rank_(rank) {}

    /// Grammar:
    ///   expression := ['+'|'-'] term (('+'|'-') term)*
    ///   term       := rational ['*'] monomial | rational | monomial
    ///   monomial   := factor ('*' factor)*
    ///   factor     := 't' INDEX ['^' INTEGER]
    ///   rational   := INTEGER ['/' POSINTEGER]
    /// with INDEX in 1..rank and whitespace ignored.  Terms with equal
    /// exponents combine; zero terms drop.  The zero polynomial parses but is
    /// rejected by analysis entry points.
    static LaurentPolynomial parse(std::string_view text, std::size_t rank);

    std::size_t rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }

    /// Exponent vectors, ascending lexicographic.
    std::vector<Exponent> support() const;
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    Rational coefficient(const Exponent& e) const;

    void add_term(const Exponent& e, const Rational& c);

    std::string to_string() const;

    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

private:
    std::size_t rank_;
    std::map<Exponent, Rational> terms_;
};

/// Partition of a polynomial's support into blocks of size >= 2, stored as
/// ascending indices into the lexicographically sorted support.  Blocks are
/// ordered by their smallest member.
struct Partition {
    std::vector<std::vector<std::size_t>> blocks;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// All partitions of the support with no singleton blocks, in ascending
/// lexicographic order of their block lists.  Empty when the support has
/// fewer than two points.
std::vector<Partition> admissible_partitions(const LaurentPolynomial& f,
                                             const Limits& limits = {});

/// Subgroup of Z^r generated by all within-block differences of support
/// exponents.
Lattice difference_lattice(const LaurentPolynomial& f, const Partition& p);

/// Sum of the per-polynomial difference lattices of a partition tuple.
Lattice difference_lattice(const std::vector<LaurentPolynomial>& fs,
                           const std::vector<Partition>& tuple);

}  // namespace toruscount
