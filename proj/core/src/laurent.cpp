#include "toruscount/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "toruscount/errors.hpp"

namespace toruscount {

namespace {

class Scanner {
public:
    Scanner(std::string_view text, std::size_t rank) : text_(text), rank_(rank) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

    Integer integer(bool allow_sign) {
        skip_ws();
        std::size_t start = pos_;
        if (allow_sign && pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) fail("expected integer");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    Rational rational() {
        Integer num = integer(true);
        if (consume('/')) {
            Integer den = integer(false);
            if (den == 0) fail("zero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }

    // factor := 't' INDEX ['^' INTEGER]
    std::pair<std::size_t, Integer> factor() {
        skip_ws();
        if (peek() != 't') fail("expected variable");
        ++pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected variable index");
        Integer idx = integer(false);
        if (idx < 1 || idx > static_cast<long>(rank_))
            fail("variable index out of range 1.." + std::to_string(rank_));
        Integer exp = 1;
        if (consume('^')) exp = integer(true);
        return {idx.get_ui() - 1, exp};
    }

    bool at_variable() { return peek() == 't'; }
    bool at_number() {
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) != 0;
    }

private:
    std::string_view text_;
    std::size_t rank_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPolynomial LaurentPolynomial::parse(std::string_view text, std::size_t rank) {
    LaurentPolynomial poly(rank);
    Scanner s(text, rank);
    if (s.done()) s.fail("empty polynomial");

    bool first = true;
    while (!s.done()) {
        int sign = 1;
        if (s.consume('+')) {
            sign = 1;
        } else if (s.consume('-')) {
            sign = -1;
        } else if (!first) {
            s.fail("expected '+' or '-'");
        }
        first = false;

        Rational coeff(1);
        bool have_coeff = false;
        if (s.at_number()) {
            coeff = s.rational();
            have_coeff = true;
            s.consume('*');
        }
        Exponent e(rank, 0);
        if (s.at_variable()) {
            do {
                auto [idx, exp] = s.factor();
                e[idx] += exp.get_si();
            } while (s.consume('*'));
        } else if (!have_coeff) {
            s.fail("expected term");
        }
        if (sign < 0) coeff = -coeff;
        poly.add_term(e, coeff);
    }
    return poly;
}

std::vector<Exponent> LaurentPolynomial::support() const {
    std::vector<Exponent> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back(e);
    return out;
}

Rational LaurentPolynomial::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::add_term(const Exponent& e, const Rational& c) {
    if (e.size() != rank_) throw std::invalid_argument("exponent width mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

std::string LaurentPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            a = a.abs();
        }
        first = false;
        bool monomial = std::any_of(e.begin(), e.end(), [](std::int64_t x) { return x != 0; });
        if (!monomial) {
            os << a.to_string();
            continue;
        }
        bool printed = false;
        if (a != Rational(1)) {
            os << a.to_string() << "*";
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            printed = true;
            os << "t" << (i + 1);
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

std::vector<Partition> admissible_partitions(const LaurentPolynomial& f, const Limits& limits) {
    const std::size_t s = f.support_size();
    if (s < 2) return {};
    if (s > static_cast<std::size_t>(limits.partition_support_cap))
        throw CapError("support of size " + std::to_string(s) + " exceeds the partition cap",
                       "partition_support_cap=" + std::to_string(limits.partition_support_cap));

    // Restricted-growth enumeration; a branch dies when the elements left
    // cannot fill every singleton block.
    std::vector<Partition> out;
    std::vector<std::size_t> assign(s, 0);
    auto emit = [&]() {
        std::size_t nblocks = *std::max_element(assign.begin(), assign.end()) + 1;
        Partition p;
        p.blocks.assign(nblocks, {});
        for (std::size_t i = 0; i < s; ++i) p.blocks[assign[i]].push_back(i);
        for (const auto& b : p.blocks) {
            if (b.size() < 2) return;
        }
        out.push_back(std::move(p));
    };
    auto rec = [&](auto&& self, std::size_t i, std::size_t used) -> void {
        if (i == s) {
            emit();
            return;
        }
        std::size_t singletons = 0;
        std::vector<std::size_t> size(used, 0);
        for (std::size_t k = 0; k < i; ++k) ++size[assign[k]];
        for (std::size_t b = 0; b < used; ++b) singletons += (size[b] == 1);
        if (s - i < singletons) return;
        for (std::size_t b = 0; b <= used && b < s; ++b) {
            assign[i] = b;
            self(self, i + 1, std::max(used, b + 1));
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

Lattice difference_lattice(const LaurentPolynomial& f, const Partition& p) {
    std::vector<Exponent> sup = f.support();
    std::vector<std::vector<Integer>> gens;
    for (const auto& block : p.blocks) {
        for (std::size_t a = 0; a < block.size(); ++a)
            for (std::size_t b = a + 1; b < block.size(); ++b) {
                const Exponent& x = sup[block[a]];
                const Exponent& y = sup[block[b]];
                std::vector<Integer> diff(f.rank());
                for (std::size_t j = 0; j < f.rank(); ++j)
                    diff[j] = Integer(static_cast<long>(x[j] - y[j]));
                gens.push_back(std::move(diff));
            }
    }
    if (gens.empty()) return Lattice(f.rank());
    return Lattice(f.rank(), gens);
}

Lattice difference_lattice(const std::vector<LaurentPolynomial>& fs,
                           const std::vector<Partition>& tuple) {
    if (fs.size() != tuple.size()) throw std::invalid_argument("one partition per polynomial");
    if (fs.empty()) throw std::invalid_argument("empty polynomial system");
    Lattice acc(fs[0].rank());
    for (std::size_t i = 0; i < fs.size(); ++i) acc = acc.sum(difference_lattice(fs[i], tuple[i]));
    return acc;
}

}  // namespace toruscount
