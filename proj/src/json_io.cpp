#include "gdiff/json_io.hpp"

#include <fstream>
#include <sstream>

namespace gdiff {

namespace {

std::string join_indices(const std::vector<unsigned>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

std::vector<unsigned> split_indices(const std::string& s, int rank) {
    std::vector<unsigned> v;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        long x = std::stol(part);
        if (x < 0) throw std::invalid_argument("negative exponent in key '" + s + "'");
        v.push_back(static_cast<unsigned>(x));
    }
    if (v.size() != static_cast<size_t>(rank))
        throw std::invalid_argument("exponent key '" + s + "' has wrong length");
    return v;
}

}  // namespace

Json to_json(const GroupSpec& g) {
    Json j;
    switch (g.kind) {
        case GroupKind::FreeAbelian:
            j["kind"] = "free_abelian";
            j["rank"] = g.rank;
            break;
        case GroupKind::FinGenAbelian:
            j["kind"] = "fin_gen_abelian";
            j["rank"] = g.rank;
            j["torsion"] = g.torsion;
            break;
        case GroupKind::HeisenbergZ:
            j["kind"] = "heisenberg_z";
            break;
    }
    return j;
}

GroupSpec group_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "free_abelian") return GroupSpec::free_abelian(j.at("rank").get<int>());
    if (kind == "fin_gen_abelian")
        return GroupSpec::fin_gen_abelian(j.at("rank").get<int>(),
                                          j.at("torsion").get<std::vector<long>>());
    if (kind == "heisenberg_z") return GroupSpec::heisenberg();
    throw std::invalid_argument("unknown group kind '" + kind + "'");
}

Json to_json(const FloquetElement& e) {
    Json j = Json::array();
    for (const auto& [key, c] : e.terms()) {
        Json t;
        t["k"] = key.k;
        t["nu"] = key.nu;
        t["re"] = format_rational(c.re);
        t["im"] = format_rational(c.im);
        j.push_back(std::move(t));
    }
    return j;
}

FloquetElement floquet_from_json(const Json& j, int rank) {
    if (!j.is_array()) throw std::invalid_argument("element must be a list of terms");
    FloquetElement e(rank);
    for (const auto& t : j) {
        std::vector<long> k = t.at("k").get<std::vector<long>>();
        std::vector<long> nu_raw = t.at("nu").get<std::vector<long>>();
        if (k.size() != static_cast<size_t>(rank) || nu_raw.size() != static_cast<size_t>(rank))
            throw std::invalid_argument("term index length does not match the rank");
        std::vector<unsigned> nu;
        for (long x : nu_raw) {
            if (x < 0) throw std::invalid_argument("negative exponent in element term");
            nu.push_back(static_cast<unsigned>(x));
        }
        GaussRat c{parse_rational(t.at("re").get<std::string>()),
                   parse_rational(t.at("im").get<std::string>())};
        e.add_term(std::move(k), std::move(nu), c);
    }
    return e;
}

Json to_json(const Polymorphism<FloquetElement>& L) {
    Json j;
    j["arity"] = L.arity();
    j["rank"] = L.rank();
    Json values = Json::object();
    std::vector<int> idx(static_cast<size_t>(L.arity()), 0);
    const int r = L.rank();
    std::function<void(int)> walk = [&](int slot) {
        if (slot == L.arity()) {
            const FloquetElement& b = L.at(idx);
            if (b.is_zero()) return;
            std::string key;
            for (size_t i = 0; i < idx.size(); ++i) {
                if (i) key += ",";
                key += std::to_string(idx[i] + 1);
            }
            values[key] = to_json(b);
            return;
        }
        for (int i = 0; i < r; ++i) {
            idx[static_cast<size_t>(slot)] = i;
            walk(slot + 1);
        }
    };
    walk(0);
    j["values"] = std::move(values);
    return j;
}

Json to_json(const FloquetDecomposition& d) {
    Json j = Json::object();
    for (const auto& [nu, a] : d.coeff) j[join_indices(nu)] = to_json(a);
    return j;
}

FloquetDecomposition decomposition_from_json(const Json& j, int rank) {
    if (!j.is_object()) throw std::invalid_argument("decomposition must be an object keyed by nu");
    FloquetDecomposition d;
    d.rank = rank;
    for (const auto& [key, val] : j.items())
        d.coeff.emplace(split_indices(key, rank), floquet_from_json(val, rank));
    return d;
}

Json to_json(const StencilOperator& D) {
    Json j;
    j["rank"] = D.rank;
    j["period"] = D.period;
    Json st = Json::array();
    for (const auto& [offset, table] : D.stencil) {
        Json entry;
        entry["offset"] = offset;
        Json coeffs = Json::array();
        for (const auto& q : table) coeffs.push_back(format_rational(q));
        entry["coeffs"] = std::move(coeffs);
        st.push_back(std::move(entry));
    }
    j["stencil"] = std::move(st);
    return j;
}

StencilOperator stencil_from_json(const Json& j) {
    StencilOperator D;
    D.rank = j.at("rank").get<int>();
    D.period = j.value("period", 1L);
    for (const auto& entry : j.at("stencil")) {
        std::vector<long> offset = entry.at("offset").get<std::vector<long>>();
        std::vector<Rational> table;
        for (const auto& c : entry.at("coeffs")) table.push_back(parse_rational(c.get<std::string>()));
        auto [it, inserted] = D.stencil.emplace(std::move(offset), std::move(table));
        if (!inserted) throw std::invalid_argument("duplicate stencil offset");
    }
    D.validate();
    return D;
}

Json to_json(const PolyAnsatz& u) {
    Json j;
    j["rank"] = u.rank;
    j["period"] = u.period;
    Json terms = Json::array();
    for (const auto& [nu, table] : u.coeff) {
        Json t;
        t["nu"] = join_indices(nu);
        Json coeffs = Json::array();
        for (const auto& q : table) coeffs.push_back(format_rational(q));
        t["coeffs"] = std::move(coeffs);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    Json j;
    in >> j;
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

}  // namespace gdiff
