#include "mwlat/json_io.hpp"

#include <sstream>

namespace mwlat {

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return static_cast<long>(v.get_si());
    return v.get_str();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw Error("parse", "not an integer: '" + j.get<std::string>() + "'");
        }
    }
    throw Error("parse", "expected an integer, got " + std::string(j.type_name()));
}

json vector_to_json(const std::vector<Int>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(int_to_json(x));
    return out;
}

std::vector<Int> vector_from_json(const json& j) {
    if (!j.is_array()) throw Error("parse", "expected an array of integers");
    std::vector<Int> out;
    for (const auto& x : j) out.push_back(int_from_json(x));
    return out;
}

json matrix_to_json(const IntegerMatrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t jx = 0; jx < m.cols(); ++jx) row.push_back(int_to_json(m.at(i, jx)));
        out.push_back(row);
    }
    return out;
}

IntegerMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw Error("parse", "expected a nonempty array of rows");
    std::size_t rows = j.size();
    if (!j[0].is_array()) throw Error("parse", "expected rows to be arrays");
    std::size_t cols = j[0].size();
    IntegerMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw Error("parse", "ragged matrix rows");
        for (std::size_t jx = 0; jx < cols; ++jx) m.at(i, jx) = int_from_json(j[i][jx]);
    }
    return m;
}

json group_to_json(const FgAbelianGroup& g) {
    json out;
    out["rank"] = g.free_rank;
    out["torsion"] = vector_to_json(g.torsion);
    return out;
}

json lattice_to_json(const Lattice& l) {
    json out;
    out["rank"] = l.rank();
    out["gram"] = matrix_to_json(l.gram);
    if (l.marked_e) out["marked"] = json{{"e", vector_to_json(*l.marked_e)}};
    return out;
}

Lattice lattice_from_json(const json& j) {
    if (!j.is_object() || !j.contains("gram")) throw Error("parse", "lattice JSON needs a \"gram\" field");
    Lattice l;
    l.gram = matrix_from_json(j.at("gram"));
    if (l.gram.rows() != l.gram.cols()) throw Error("validation", "gram matrix must be square");
    if (!l.gram.is_symmetric()) throw Error("validation", "gram matrix must be symmetric");
    if (j.contains("rank") && j.at("rank").get<std::size_t>() != l.gram.rows())
        throw Error("validation", "declared rank does not match the gram matrix");
    if (j.contains("marked")) {
        const json& m = j.at("marked");
        if (!m.is_object() || !m.contains("e")) throw Error("parse", "\"marked\" needs an \"e\" vector");
        LatticeVector e = vector_from_json(m.at("e"));
        if (e.size() != l.rank()) throw Error("validation", "marked vector length does not match the rank");
        l.marked_e = e;
    }
    return l;
}

json cycles_to_json(const CycleTuple& t) {
    json out = json::array();
    for (const auto& d : t) out.push_back(json::array({int_to_json(d.x), int_to_json(d.y)}));
    return out;
}

CycleTuple cycles_from_json(const json& j) {
    if (!j.is_array()) throw Error("parse", "expected an array of [x, y] pairs");
    CycleTuple t;
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2) throw Error("parse", "each cycle must be a pair [x, y]");
        t.push_back({int_from_json(p[0]), int_from_json(p[1])});
    }
    return t;
}

json fibration_to_json(const FibrationDescription& f) {
    json out;
    out["base"] = f.base == BaseSurface::disk ? "disk" : "sphere";
    out["cycles"] = cycles_to_json(f.cycles);
    return out;
}

FibrationDescription fibration_from_json(const json& j) {
    if (!j.is_object() || !j.contains("base") || !j.contains("cycles"))
        throw Error("parse", "fibration JSON needs \"base\" and \"cycles\" fields");
    FibrationDescription f;
    std::string base = j.at("base").get<std::string>();
    if (base == "disk")
        f.base = BaseSurface::disk;
    else if (base == "sphere")
        f.base = BaseSurface::sphere;
    else
        throw Error("parse", "base must be \"disk\" or \"sphere\"");
    f.cycles = cycles_from_json(j.at("cycles"));
    return f;
}

std::vector<Int> parse_int_list(const std::string& text) {
    std::vector<Int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        std::size_t a = item.find_first_not_of(" \t");
        std::size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos) throw Error("parse", "empty entry in integer list '" + text + "'");
        try {
            out.emplace_back(item.substr(a, b - a + 1));
        } catch (const std::invalid_argument&) {
            throw Error("parse", "not an integer: '" + item + "'");
        }
    }
    if (out.empty()) throw Error("parse", "empty integer list");
    return out;
}

} // namespace mwlat
