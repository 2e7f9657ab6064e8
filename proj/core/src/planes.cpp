#include "toruscount/planes.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>

#include "toruscount/errors.hpp"

namespace toruscount {

struct CongruenceSystem::RowData {
    SmithDecomposition snf;
    Lattice lattice;
    mutable std::once_flag saturation_once;
    mutable std::optional<Lattice> saturation;
    mutable std::optional<QuotientInvariants> invariants;

    const Lattice& saturated() const {
        std::call_once(saturation_once, [this] {
            saturation = lattice.saturation();
            invariants = lattice.quotient_invariants();
        });
        return *saturation;
    }
    const QuotientInvariants& quotient() const {
        saturated();
        return *invariants;
    }
};

namespace {

// Systems produced while decomposing one variety share row matrices across
// many right-hand sides; their normal-form data is memoized.
std::shared_ptr<const CongruenceSystem::RowData> row_data_for(const IntMatrix& rows) {
    using Key = std::vector<std::vector<Integer>>;
    static std::mutex mu;
    static std::map<Key, std::shared_ptr<const CongruenceSystem::RowData>> cache;
    Key key = rows.to_rows();
    {
        std::scoped_lock lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto data = std::make_shared<CongruenceSystem::RowData>();
    data->snf = smith_normal_form(rows);
    data->lattice = Lattice(rows.cols(), rows);
    std::scoped_lock lock(mu);
    if (cache.size() < 8192) cache.emplace(std::move(key), data);
    return data;
}

Angle pairing(const std::vector<Integer>& lambda, const std::vector<Angle>& theta) {
    Rational acc(0);
    for (std::size_t j = 0; j < lambda.size(); ++j)
        acc += Rational(lambda[j]) * theta[j].value();
    return Angle(acc);
}

}  // namespace

CongruenceSystem::CongruenceSystem(std::size_t ambient_rank)
    : CongruenceSystem(ambient_rank, {}, {}) {}

CongruenceSystem::CongruenceSystem(std::size_t ambient_rank,
                                   const std::vector<std::vector<Integer>>& rows,
                                   const std::vector<Angle>& rhs)
    : ambient_(ambient_rank) {
    if (rows.size() != rhs.size())
        throw std::invalid_argument("one right-hand side per row required");
    std::vector<std::pair<std::vector<Integer>, Angle>> entries;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != ambient_)
            throw std::invalid_argument("row width does not match ambient rank");
        bool zero = std::all_of(rows[i].begin(), rows[i].end(),
                                [](const Integer& x) { return x == 0; });
        if (zero) {
            if (!rhs[i].is_zero()) marked_inconsistent_ = true;
            continue;
        }
        entries.emplace_back(rows[i], rhs[i]);
    }
    std::sort(entries.begin(), entries.end());
    entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
    for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
        if (entries[i].first == entries[i + 1].first) marked_inconsistent_ = true;
    }
    rows_ = IntMatrix(entries.size(), ambient_);
    if (entries.empty()) rows_ = IntMatrix(0, ambient_);
    rhs_.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (std::size_t j = 0; j < ambient_; ++j) rows_.at(i, j) = entries[i].first[j];
        rhs_.push_back(entries[i].second);
    }
    rows_data_ = row_data_for(rows_);
}

const Lattice& CongruenceSystem::row_lattice() const { return rows_data_->lattice; }

bool CongruenceSystem::consistent() const {
    if (marked_inconsistent_) return false;
    // Rows beyond the rank must pair the right-hand side into Z.
    std::vector<Rational> b(rhs_.size());
    for (std::size_t i = 0; i < rhs_.size(); ++i) b[i] = rhs_[i].value();
    for (std::size_t i = rows_data_->snf.rank; i < rhs_.size(); ++i) {
        Rational acc(0);
        for (std::size_t j = 0; j < rhs_.size(); ++j)
            acc += Rational(rows_data_->snf.u.at(i, j)) * b[j];
        if (!acc.is_integer()) return false;
    }
    return true;
}

Integer CongruenceSystem::count_leq(const Integer& n) const {
    if (marked_inconsistent_) return 0;
    return count_congruences(rows_data_->snf, ambient_, rhs_, n).count;
}

CongruenceSystem CongruenceSystem::intersect(const CongruenceSystem& other) const {
    if (ambient_ != other.ambient_)
        throw std::invalid_argument("intersection requires equal ambient rank");
    std::vector<std::vector<Integer>> rows = rows_.to_rows();
    std::vector<Angle> rhs = rhs_;
    auto orows = other.rows_.to_rows();
    rows.insert(rows.end(), orows.begin(), orows.end());
    rhs.insert(rhs.end(), other.rhs_.begin(), other.rhs_.end());
    CongruenceSystem out(ambient_, rows, rhs);
    out.marked_inconsistent_ =
        out.marked_inconsistent_ || marked_inconsistent_ || other.marked_inconsistent_;
    return out;
}

CongruenceSystem intersect_all(const std::vector<CongruenceSystem>& systems) {
    if (systems.empty()) throw std::invalid_argument("empty intersection");
    CongruenceSystem acc = systems[0];
    for (std::size_t i = 1; i < systems.size(); ++i) acc = acc.intersect(systems[i]);
    return acc;
}

std::vector<RationalPlane> CongruenceSystem::components() const {
    if (!consistent()) return {};
    const Lattice& sat = rows_data_->saturated();
    const QuotientInvariants& qi = rows_data_->quotient();

    Integer rhs_den = 1;
    for (const Angle& c : rhs_) rhs_den = lcm(rhs_den, c.order());
    Integer n0 = qi.largest_order * rhs_den;

    CongruenceCount cc = count_congruences(rows_data_->snf, ambient_, rhs_, n0);
    if (cc.count == 0 || !cc.particular)
        throw InternalError("consistent system without solutions at its natural level");

    // Kernel generators that pair to zero with the saturation move within a
    // component; the rest enumerate the finite translates.
    std::vector<const CongruenceCount::KernelGenerator*> finite;
    for (const auto& gen : cc.kernel) {
        bool internal = true;
        for (std::size_t i = 0; i < sat.basis().rows() && internal; ++i) {
            Rational acc(0);
            for (std::size_t j = 0; j < ambient_; ++j)
                acc += Rational(sat.basis().at(i, j)) * Rational(gen.vec[j], n0);
            internal = Angle(acc).is_zero();
        }
        if (!internal) finite.push_back(&gen);
    }

    std::vector<std::vector<Angle>> group_reps;  // lex-least representative per component
    std::vector<Integer> counters(finite.size(), 0);
    while (true) {
        std::vector<Integer> numer = *cc.particular;
        for (std::size_t g = 0; g < finite.size(); ++g)
            for (std::size_t j = 0; j < ambient_; ++j)
                numer[j] += counters[g] * finite[g]->vec[j];
        std::vector<Angle> theta(ambient_);
        for (std::size_t j = 0; j < ambient_; ++j) theta[j] = Angle(Rational(numer[j], n0));

        bool placed = false;
        for (auto& rep : group_reps) {
            bool same = true;
            for (std::size_t i = 0; i < sat.basis().rows() && same; ++i) {
                std::vector<Angle> diff(ambient_);
                for (std::size_t j = 0; j < ambient_; ++j) diff[j] = theta[j] - rep[j];
                same = pairing(sat.basis().row(i), diff).is_zero();
            }
            if (same) {
                if (theta < rep) rep = theta;
                placed = true;
                break;
            }
        }
        if (!placed) group_reps.push_back(theta);

        std::size_t g = 0;
        while (g < finite.size() && ++counters[g] == finite[g]->order) counters[g++] = 0;
        if (g == finite.size()) break;
    }

    std::vector<RationalPlane> out;
    out.reserve(group_reps.size());
    for (auto& rep : group_reps) out.push_back({std::move(rep), sat});
    std::sort(out.begin(), out.end(), plane_before);
    return out;
}

bool CongruenceSystem::solutions_subset_of(const CongruenceSystem& other) const {
    if (ambient_ != other.ambient_)
        throw std::invalid_argument("containment requires equal ambient rank");
    if (!consistent()) return true;
    // Every row of `other` must be an integer combination of these rows with
    // the matching combined right-hand side.
    for (std::size_t i = 0; i < other.rows_.rows(); ++i) {
        auto coeffs = rows_data_->lattice.express_in_generators(other.rows_.row(i));
        if (!coeffs) return false;
        Rational acc(0);
        for (std::size_t k = 0; k < coeffs->size(); ++k)
            acc += Rational((*coeffs)[k]) * rhs_[k].value();
        if (Angle(acc) != other.rhs_[i]) return false;
    }
    return true;
}

bool CongruenceSystem::before(const CongruenceSystem& other) const {
    if (ambient_ != other.ambient_) return ambient_ < other.ambient_;
    if (marked_inconsistent_ != other.marked_inconsistent_)
        return marked_inconsistent_ < other.marked_inconsistent_;
    auto a = rows_.to_rows();
    auto b = other.rows_.to_rows();
    if (a != b) return a < b;
    return rhs_ < other.rhs_;
}

Integer RationalPlane::order() const {
    Integer n = 1;
    for (std::size_t i = 0; i < lattice.basis().rows(); ++i)
        n = lcm(n, pairing(lattice.basis().row(i), representative).order());
    return n;
}

bool RationalPlane::contains(const RationalPlane& other) const {
    if (ambient_rank() != other.ambient_rank())
        throw std::invalid_argument("containment requires equal ambient rank");
    if (!lattice.subset_of(other.lattice)) return false;
    for (std::size_t i = 0; i < lattice.basis().rows(); ++i) {
        std::vector<Angle> diff(representative.size());
        for (std::size_t j = 0; j < diff.size(); ++j)
            diff[j] = other.representative[j] - representative[j];
        if (!pairing(lattice.basis().row(i), diff).is_zero()) return false;
    }
    return true;
}

bool RationalPlane::same_plane(const RationalPlane& other) const {
    return lattice == other.lattice && contains(other);
}

bool plane_before(const RationalPlane& a, const RationalPlane& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    Integer oa = a.order(), ob = b.order();
    if (oa != ob) return oa < ob;
    if (a.representative != b.representative) return a.representative < b.representative;
    return a.lattice.basis().to_rows() < b.lattice.basis().to_rows();
}

CongruenceSystem fiber_system(const LaurentPolynomial& f, const SolutionSet& sols,
                              const std::vector<std::size_t>& choice) {
    if (choice.size() != sols.blocks.size())
        throw std::invalid_argument("one solution choice per block required");
    std::vector<Exponent> sup = f.support();
    std::vector<std::vector<Integer>> rows;
    std::vector<Angle> rhs;
    for (std::size_t b = 0; b < sols.blocks.size(); ++b) {
        const BlockSolutions& block = sols.blocks[b];
        if (choice[b] >= block.solutions.size())
            throw std::invalid_argument("solution choice out of range");
        const TorsionSolution& mu = block.solutions[choice[b]];
        const Exponent& base = sup[block.base];
        for (std::size_t k = 0; k < block.members.size(); ++k) {
            const Exponent& lambda = sup[block.members[k]];
            std::vector<Integer> row(f.rank());
            for (std::size_t j = 0; j < f.rank(); ++j)
                row[j] = Integer(static_cast<long>(lambda[j] - base[j]));
            rows.push_back(std::move(row));
            rhs.push_back(mu.angles[k]);
        }
    }
    return CongruenceSystem(f.rank(), rows, rhs);
}

}  // namespace toruscount
