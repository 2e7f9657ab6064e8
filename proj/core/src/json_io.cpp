#include "toruscount/json_io.hpp"

namespace toruscount {

using nlohmann::json;

json to_json(const Rational& q) { return q.to_string(); }
json to_json(const Angle& a) { return a.to_string(); }
json to_json(const Integer& n) { return n.get_str(); }

json to_json(const Cyclotomic& c) {
    json coeffs = json::array();
    for (const Rational& q : c.coefficients()) coeffs.push_back(to_json(q));
    return json{{"level", std::to_string(c.level())}, {"coefficients", coeffs}};
}

namespace {
json rows_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}
}  // namespace

json to_json(const Lattice& l) { return rows_to_json(l.basis()); }

json to_json(const TorsionSolution& s) {
    json angles = json::array();
    for (const Angle& a : s.angles) angles.push_back(to_json(a));
    return json{{"angles", angles}, {"order", to_json(s.order)}};
}

json to_json(const CongruenceSystem& s) {
    json rhs = json::array();
    for (const Angle& a : s.rhs()) rhs.push_back(to_json(a));
    return json{{"rows", rows_to_json(s.rows())}, {"rhs", rhs}};
}

json to_json(const RationalPlane& p) {
    json rep = json::array();
    for (const Angle& a : p.representative) rep.push_back(to_json(a));
    return json{{"representative", rep},
                {"lattice", to_json(p.lattice)},
                {"dim", std::to_string(p.dim())},
                {"order", to_json(p.order())}};
}

json to_json(const Prp& p) {
    json sides = json::array();
    for (const PrpSide& s : p.sides()) {
        sides.push_back(json{{"length", to_json(s.coeff.abs())},
                             {"angle", to_json(s.angle)},
                             {"negated", s.coeff.sign() < 0}});
    }
    return json{{"sides", sides},
                {"length", std::to_string(p.length())},
                {"order", to_json(p.order())}};
}

json to_json(const Prp::SchoenbergTerm& t) {
    return json{{"scale", to_json(t.scale)},
                {"rotation", to_json(t.rotation)},
                {"prime", to_json(t.prime)}};
}

json to_json(const AnalysisReport& r) {
    return json{{"degree", std::to_string(r.degree)},
                {"degree_bound", std::to_string(r.degree_bound)},
                {"M", to_json(r.M)},
                {"D", to_json(r.D)},
                {"D_exact", r.D_exact},
                {"R", to_json(r.R)},
                {"N_R", to_json(r.N_R)},
                {"period_bound_MD", to_json(r.period_bound_MD)},
                {"period_bound_NR", to_json(r.period_bound_NR)}};
}

json to_json(const Decomposition& d) {
    json planes = json::array();
    for (const RationalPlane& q : d.maximal_planes) planes.push_back(to_json(q));
    json systems = json::array();
    for (const CongruenceSystem& s : d.counting_systems) systems.push_back(to_json(s));
    json tuples = json::array();
    for (const PiRecord& rec : d.tuples) {
        json blocks = json::array();
        for (const Partition& p : rec.tuple) {
            json pb = json::array();
            for (const auto& b : p.blocks) {
                json members = json::array();
                for (std::size_t m : b) members.push_back(std::to_string(m));
                pb.push_back(std::move(members));
            }
            blocks.push_back(std::move(pb));
        }
        tuples.push_back(json{{"partitions", blocks},
                              {"difference_lattice", to_json(rec.difference)},
                              {"saturation", to_json(rec.saturated)},
                              {"rank", std::to_string(rec.rank)},
                              {"realizable", rec.realizable},
                              {"order_lcm", to_json(rec.order_lcm)}});
    }
    return json{{"maximal_planes", planes},
                {"counting_systems", systems},
                {"partition_tuples", tuples}};
}

json to_json(const PolynomialPeriodicFunction& f) {
    json table = json::array();
    for (const auto& row : f.coeffs) {
        json r = json::array();
        for (const Rational& q : row) r.push_back(to_json(q));
        table.push_back(std::move(r));
    }
    return json{{"period", to_json(f.period)},
                {"degree", std::to_string(f.degree)},
                {"coefficients", table}};
}

CongruenceSystem system_from_json(const json& j) {
    std::vector<std::vector<Integer>> rows;
    for (const auto& row : j.at("rows")) {
        std::vector<Integer> r;
        for (const auto& entry : row) r.emplace_back(entry.get<std::string>());
        rows.push_back(std::move(r));
    }
    std::vector<Angle> rhs;
    for (const auto& entry : j.at("rhs"))
        rhs.push_back(Angle::from_string(entry.get<std::string>()));
    std::size_t rank = rows.empty() ? 0 : rows[0].size();
    return CongruenceSystem(rank, rows, rhs);
}

}  // namespace toruscount
