#include "arimat/input_spec.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "arimat/errors.hpp"

namespace arimat {

using nlohmann::json;

Matroid InputSpec::matroid() const {
    if (representation) return representation->matroid();
    return *matroid_input;
}

Multiplicity InputSpec::multiplicity() const {
    if (representation) return total_multiplicity(*representation);
    return *multiplicity_input;
}

namespace {

mpz_class to_mpz(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw ParseError(std::string(what) + " must be an integer");
    return mpz_class(static_cast<long>(j.get<std::int64_t>()));
}

InputSpec parse_representation(const json& j) {
    if (!j.contains("free_rank") || !j.contains("torsion") || !j.contains("columns"))
        throw ParseError("representation needs free_rank, torsion, columns");
    int free_rank = static_cast<int>(to_mpz(j.at("free_rank"), "free_rank").get_si());
    std::vector<mpz_class> torsion;
    for (const json& q : j.at("torsion")) torsion.push_back(to_mpz(q, "torsion factor"));
    AmbientGroup ambient;
    try {
        ambient = AmbientGroup(free_rank, torsion);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    const json& cols = j.at("columns");
    std::vector<std::vector<mpz_class>> columns;
    for (const json& col : cols) {
        std::vector<mpz_class> c;
        for (const json& v : col) c.push_back(to_mpz(v, "column entry"));
        if (static_cast<int>(c.size()) != ambient.dim())
            throw ParseError("column length must equal free_rank + #torsion");
        columns.push_back(std::move(c));
    }
    InputSpec spec;
    spec.representation = Representation(
        ambient, IntMatrix::from_columns(static_cast<std::size_t>(ambient.dim()), columns));
    return spec;
}

InputSpec parse_abstract(const json& j) {
    if (!j.contains("ground_size") || !j.contains("independent_sets") ||
        !j.contains("multiplicity"))
        throw ParseError("abstract input needs ground_size, independent_sets, multiplicity");
    int n = static_cast<int>(to_mpz(j.at("ground_size"), "ground_size").get_si());
    if (n < 0 || n > 24) throw ParseError("ground_size out of range");
    std::vector<Subset> family;
    for (const json& set : j.at("independent_sets")) {
        std::vector<int> elems;
        for (const json& v : set) {
            long e = to_mpz(v, "set element").get_si();
            if (e < 1 || e > n) throw ParseError("set element out of range");
            elems.push_back(static_cast<int>(e));
        }
        if (!std::is_sorted(elems.begin(), elems.end()) ||
            std::adjacent_find(elems.begin(), elems.end()) != elems.end())
            throw ParseError("sets must be strictly sorted");
        family.push_back(subset_from_elements(elems));
    }
    InputSpec spec;
    try {
        spec.matroid_input = Matroid::from_family(n, family);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    Multiplicity mult;
    for (const json& entry : j.at("multiplicity")) {
        if (!entry.contains("set") || !entry.contains("m"))
            throw ParseError("multiplicity entries need set and m");
        std::vector<int> elems;
        for (const json& v : entry.at("set")) {
            long e = to_mpz(v, "set element").get_si();
            if (e < 1 || e > n) throw ParseError("set element out of range");
            elems.push_back(static_cast<int>(e));
        }
        if (!std::is_sorted(elems.begin(), elems.end()) ||
            std::adjacent_find(elems.begin(), elems.end()) != elems.end())
            throw ParseError("sets must be strictly sorted");
        mpz_class m = to_mpz(entry.at("m"), "multiplicity value");
        if (m < 1) throw ParseError("multiplicity values must be >= 1");
        Subset s = subset_from_elements(elems);
        if (mult.values.count(s)) throw ParseError("duplicate multiplicity entry");
        mult.values[s] = m;
    }
    mult.total = mult.values.size() == (std::size_t{1} << n);
    if (!mult.total) {
        for (Subset s : spec.matroid_input->complex().faces)
            if (!mult.values.count(s))
                throw ParseError("multiplicity must cover every independent set");
        for (const auto& [s, m] : mult.values)
            if (!spec.matroid_input->is_independent(s))
                throw ParseError(
                    "partial multiplicity may only name independent sets (or cover all "
                    "of 2^E)");
    }
    spec.multiplicity_input = std::move(mult);
    return spec;
}

} // namespace

InputSpec parse_input(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (j.contains("representation")) return parse_representation(j.at("representation"));
    if (j.contains("abstract")) return parse_abstract(j.at("abstract"));
    throw ParseError("input must contain a 'representation' or 'abstract' object");
}

InputSpec load_input_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_input(ss.str());
}

std::string serialize_input(const InputSpec& spec) {
    json j;
    if (spec.representation) {
        const Representation& rep = *spec.representation;
        json cols = json::array();
        for (std::size_t c = 0; c < rep.columns.cols(); ++c) {
            json col = json::array();
            for (std::size_t r = 0; r < rep.columns.rows(); ++r)
                col.push_back(rep.columns(r, c).get_si());
            cols.push_back(std::move(col));
        }
        json tor = json::array();
        for (const auto& q : rep.ambient.torsion) tor.push_back(q.get_si());
        j["representation"] = {{"columns", std::move(cols)},
                               {"free_rank", rep.ambient.free_rank},
                               {"torsion", std::move(tor)}};
    } else {
        json sets = json::array();
        for (Subset s : spec.matroid_input->complex().faces) {
            json set = json::array();
            for (int e : subset_elements(s)) set.push_back(e);
            sets.push_back(std::move(set));
        }
        json mult = json::array();
        std::vector<Subset> keys;
        for (const auto& [s, m] : spec.multiplicity_input->values) keys.push_back(s);
        std::sort(keys.begin(), keys.end(), subset_less);
        for (Subset s : keys) {
            json set = json::array();
            for (int e : subset_elements(s)) set.push_back(e);
            mult.push_back({{"m", spec.multiplicity_input->values.at(s).get_si()},
                            {"set", std::move(set)}});
        }
        j["abstract"] = {{"ground_size", spec.matroid_input->ground_size()},
                         {"independent_sets", std::move(sets)},
                         {"multiplicity", std::move(mult)}};
    }
    return j.dump(2) + "\n";
}

} // namespace arimat
