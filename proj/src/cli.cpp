#include "mwlat/cli.hpp"

#include "mwlat/acceptance.hpp"
#include "mwlat/json_io.hpp"
#include "mwlat/mapclass.hpp"
#include "mwlat/unipotent.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace mwlat::cli {

namespace {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("io", "cannot open '" + path + "'");
    try {
        json j;
        in >> j;
        return j;
    } catch (const nlohmann::json::exception& e) {
        throw Error("parse", "invalid JSON in '" + path + "': " + e.what());
    }
}

FibrationDescription load_fibration(const std::string& path, BaseSurface default_base) {
    json j = read_json_file(path);
    if (j.is_array()) {
        FibrationDescription f;
        f.base = default_base;
        f.cycles = cycles_from_json(j);
        return f;
    }
    return fibration_from_json(j);
}

CycleTuple load_cycles(const std::string& path) {
    json j = read_json_file(path);
    if (j.is_array()) return cycles_from_json(j);
    if (j.is_object() && j.contains("cycles")) return cycles_from_json(j.at("cycles"));
    throw Error("parse", "expected a cycle list or a fibration description");
}

json violations_json(const std::vector<Violation>& v) {
    json list = json::array();
    for (const auto& x : v) {
        json item;
        item["code"] = x.code;
        item["message"] = x.message;
        list.push_back(item);
    }
    json e;
    e["kind"] = "validation";
    e["message"] = "description failed validation";
    e["violations"] = list;
    return e;
}

json classification_json(const Sl2Class& k) {
    json out;
    out["kind"] = k.name();
    if (k.order > 0) out["order"] = k.order;
    return out;
}

LatticeVector resolve_e(const Lattice& l, const std::string& e_flag) {
    if (!e_flag.empty()) return parse_int_list(e_flag);
    if (l.marked_e) return *l.marked_e;
    throw Error("validation", "no --e given and the lattice has no marked vector");
}

// Word over E(c1,...,cn) (Eichler with the marked e) and R(v1,...,vn)
// (reflection); applied as a matrix product in reading order.
Isometry parse_generator_word(const Lattice& l, const std::string& word) {
    std::string cleaned = word;
    for (char& ch : cleaned)
        if (ch == '*') ch = ' ';
    IntegerMatrix m = IntegerMatrix::identity(l.rank());
    std::istringstream in(cleaned);
    std::string tok;
    while (in >> tok) {
        if (tok.size() < 4 || tok[1] != '(' || tok.back() != ')')
            throw Error("parse", "bad generator token '" + tok + "' (expected E(...) or R(...))");
        std::vector<Int> v = parse_int_list(tok.substr(2, tok.size() - 3));
        if (v.size() != l.rank())
            throw Error("validation", "generator vector length does not match the rank");
        if (tok[0] == 'E') {
            if (!l.marked_e) throw Error("validation", "lattice has no marked e for E(...)");
            m = m * eichler(l, *l.marked_e, v).matrix;
        } else if (tok[0] == 'R') {
            m = m * reflection(l, v).matrix;
        } else {
            throw Error("parse", "unknown generator '" + tok.substr(0, 1) + "' (expected E or R)");
        }
    }
    return make_isometry(l, m);
}

std::string join_words(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += " ";
        out += p;
    }
    return out;
}

bool all_primitive(const json& a) {
    for (const auto& x : a)
        if (x.is_structured()) return false;
    return true;
}

bool is_matrix(const json& a) {
    for (const auto& x : a)
        if (!x.is_array() || !all_primitive(x)) return false;
    return !a.empty();
}

void pretty_print(const json& j, std::ostream& out, const std::string& prefix) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            pretty_print(it.value(), out, prefix.empty() ? it.key() : prefix + "." + it.key());
    } else if (j.is_array()) {
        if (j.empty() || all_primitive(j)) {
            out << prefix << ": " << j.dump() << "\n";
        } else if (is_matrix(j)) {
            out << prefix << ":\n";
            for (const auto& row : j) out << "  " << row.dump() << "\n";
        } else {
            std::size_t i = 0;
            for (const auto& x : j) pretty_print(x, out, prefix + "[" + std::to_string(i++) + "]");
        }
    } else if (j.is_string()) {
        out << prefix << ": " << j.get<std::string>() << "\n";
    } else {
        out << prefix << ": " << j.dump() << "\n";
    }
}

void pretty_reproduce(const json& doc, std::ostream& out) {
    for (const auto& c : doc.at("criteria")) {
        out << (c.at("pass").get<bool>() ? "PASS" : "FAIL") << "  " << c.at("id").get<int>()
            << "  " << c.at("name").get<std::string>() << "\n";
        std::string details = c.at("details").get<std::string>();
        if (!details.empty()) out << "      " << details << "\n";
    }
    out << (doc.at("all_pass").get<bool>() ? "all criteria passed" : "some criteria FAILED") << "\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Mordell-Weil and lattice computations for nodal genus-one fibrations"};
    app.name("mwlat");
    bool pretty = false;
    app.add_flag("--pretty", pretty, "human-readable output instead of JSON");
    app.require_subcommand(1);

    json doc;
    int code = 0;

    // mw
    auto* mw = app.add_subcommand("mw", "Mordell-Weil groups of fibration descriptions");
    mw->require_subcommand(1);
    std::string mw_file, glue_file2;

    auto* mw_disk_cmd = mw->add_subcommand("disk", "full MW report over the disk");
    mw_disk_cmd->add_option("file", mw_file, "fibration description JSON")->required();
    mw_disk_cmd->callback([&]() {
        FibrationDescription f = load_fibration(mw_file, BaseSurface::disk);
        auto v = validate(f);
        if (!v.empty()) {
            doc["error"] = violations_json(v);
            code = 2;
            return;
        }
        MWReport r = mw_report_disk(f);
        doc["mw"] = group_to_json(r.mw);
        doc["mw_boundary"] = group_to_json(r.mw_boundary);
        doc["mw_relative"] = group_to_json(r.mw_relative);
        doc["restriction_image"] = group_to_json(r.restriction_image);
        doc["mw_relative_note"] = "rank certified; reported torsion-free";
    });

    auto* mw_sphere_cmd = mw->add_subcommand("sphere", "MW group and lattice label over the sphere");
    mw_sphere_cmd->add_option("file", mw_file, "fibration description JSON")->required();
    mw_sphere_cmd->callback([&]() {
        FibrationDescription f = load_fibration(mw_file, BaseSurface::sphere);
        auto v = validate(f);
        if (f.base == BaseSurface::sphere && !v.empty()) {
            doc["error"] = violations_json(v);
            code = 2;
            return;
        }
        SphereMW s = mw_sphere(f);
        doc["group"] = group_to_json(s.group);
        doc["lattice_label"] = s.lattice_label;
        doc["genus"] = f.genus();
    });

    auto* mw_glue_cmd = mw->add_subcommand("glue", "fiber connected sum of two sphere descriptions");
    mw_glue_cmd->add_option("file", mw_file, "first sphere description JSON")->required();
    mw_glue_cmd->add_option("file2", glue_file2, "second sphere description JSON")->required();
    mw_glue_cmd->callback([&]() {
        FibrationDescription a = load_fibration(mw_file, BaseSurface::sphere);
        FibrationDescription b = load_fibration(glue_file2, BaseSurface::sphere);
        FibrationDescription glued = fiber_connected_sum(a, b);
        SphereMW s = mw_sphere(glued);
        doc["base"] = "sphere";
        doc["cycles"] = cycles_to_json(glued.cycles);
        doc["genus"] = glued.genus();
        doc["group"] = group_to_json(s.group);
        doc["lattice_label"] = s.lattice_label;
    });

    // lattice
    auto* lat = app.add_subcommand("lattice", "lattice constructions and invariants");
    lat->require_subcommand(1);
    std::string lat_expr, lat_file, e_flag;
    long roots_norm = -2;

    auto* lat_make = lat->add_subcommand("make", "build a lattice from a construction expression");
    lat_make->add_option("expr", lat_expr, "e.g. \"Lambda(2)\" or \"2E8(-1) + 2U\"")->required();
    lat_make->callback([&]() {
        Lattice l = make_standard(lat_expr);
        doc = lattice_to_json(l);
        doc["even"] = is_even(l);
        Signature s = signature(l);
        json sig;
        sig["positive"] = s.positive;
        sig["negative"] = s.negative;
        doc["signature"] = sig;
        doc["determinant"] = int_to_json(l.gram.determinant());
    });

    auto* lat_quot = lat->add_subcommand("quotient", "isotropic quotient e-perp / Ze");
    lat_quot->add_option("file", lat_file, "lattice JSON")->required();
    lat_quot->add_option("--e", e_flag, "isotropic vector, comma-separated (default: marked e)");
    lat_quot->callback([&]() {
        Lattice l = lattice_from_json(read_json_file(lat_file));
        LatticeVector e = resolve_e(l, e_flag);
        IsotropicQuotient q = isotropic_quotient(l, e);
        doc["rank"] = q.quotient.rank();
        doc["gram"] = matrix_to_json(q.quotient.gram);
        doc["even"] = is_even(q.quotient);
        std::size_t rr = radical_rank(q.quotient);
        if (rr == 0) {
            Signature s = signature(q.quotient);
            json sig;
            sig["positive"] = s.positive;
            sig["negative"] = s.negative;
            doc["signature"] = sig;
        } else {
            doc["radical_rank"] = rr;
        }
        doc["lift"] = matrix_to_json(q.lift);
        doc["project"] = matrix_to_json(q.project);
    });

    auto* lat_classify = lat->add_subcommand("classify", "canonical label of an even unimodular lattice");
    lat_classify->add_option("file", lat_file, "lattice JSON")->required();
    lat_classify->callback([&]() {
        Lattice l = lattice_from_json(read_json_file(lat_file));
        doc["label"] = classify_even_unimodular_indefinite(l);
    });

    auto* lat_roots = lat->add_subcommand("roots", "vectors of a given norm in a definite lattice");
    lat_roots->add_option("file", lat_file, "lattice JSON")->required();
    lat_roots->add_option("--norm", roots_norm, "self-intersection to enumerate (default -2)");
    lat_roots->callback([&]() {
        Lattice l = lattice_from_json(read_json_file(lat_file));
        auto rts = roots(l, Int(roots_norm));
        doc["norm"] = roots_norm;
        doc["count"] = rts.size();
        json list = json::array();
        for (const auto& r : rts) list.push_back(vector_to_json(r));
        doc["roots"] = list;
    });

    // eichler
    auto* eich = app.add_subcommand("eichler", "Eichler transformations");
    eich->require_subcommand(1);
    std::string eich_file, c_flag, x_flag;
    auto* eich_apply = eich->add_subcommand("apply", "build E(e, c) and optionally apply it");
    eich_apply->add_option("file", eich_file, "lattice JSON")->required();
    eich_apply->add_option("--e", e_flag, "isotropic vector (default: marked e)");
    eich_apply->add_option("--c", c_flag, "vector orthogonal to e, comma-separated")->required();
    eich_apply->add_option("--x", x_flag, "vector to transform");
    eich_apply->callback([&]() {
        Lattice l = lattice_from_json(read_json_file(eich_file));
        LatticeVector e = resolve_e(l, e_flag);
        LatticeVector cv = parse_int_list(c_flag);
        Isometry g = eichler(l, e, cv);
        doc["matrix"] = matrix_to_json(g.matrix);
        doc["fixes_e"] = (mat_vec(g.matrix, e) == e);
        doc["gram_preserved"] = (g.matrix.transpose() * (l.gram * g.matrix) == l.gram);
        if (!x_flag.empty()) {
            LatticeVector x = parse_int_list(x_flag);
            if (x.size() != l.rank()) throw Error("validation", "--x length does not match the rank");
            doc["x"] = vector_to_json(x);
            doc["x_image"] = vector_to_json(mat_vec(g.matrix, x));
        }
    });

    // modpi
    auto* modpi = app.add_subcommand("modpi", "relative mapping class arithmetic");
    modpi->require_subcommand(1);
    std::vector<std::string> word_parts;
    auto* modpi_eval = modpi->add_subcommand("eval", "evaluate a word over F, F', t, t'");
    modpi_eval->add_option("word", word_parts, "word tokens (primes are inverses)")
        ->required()
        ->expected(-1);
    modpi_eval->callback([&]() {
        std::string word = join_words(word_parts);
        ModPiWord w = parse_mapclass_word(word);
        doc["word"] = word;
        json nf;
        nf["m"] = int_to_json(w.m);
        nf["k"] = int_to_json(w.k);
        doc["normal_form"] = nf;
        ModXImage mx = to_mod_x(w);
        json mxj;
        mxj["m"] = int_to_json(mx.m);
        mxj["k"] = mx.k;
        doc["mod_x"] = mxj;
        doc["h2_action"] = matrix_to_json(h2_action(w));
        doc["variation"] = matrix_to_json(variation(w));
    });

    // monodromy
    auto* mono = app.add_subcommand("monodromy", "boundary monodromy and Hurwitz moves");
    mono->require_subcommand(1);
    std::string mono_file;
    unsigned long hur_moves = 0, hur_hits = 1, hur_budget = 200000;

    auto* mono_prod = mono->add_subcommand("product", "total monodromy of a cycle tuple");
    mono_prod->add_option("file", mono_file, "cycle list or fibration JSON")->required();
    mono_prod->callback([&]() {
        CycleTuple t = load_cycles(mono_file);
        SL2Element m = product_monodromy(t);
        doc["matrix"] = matrix_to_json(m);
        doc["trace"] = int_to_json(m.trace());
        doc["classification"] = classification_json(classify_sl2(m));
    });

    auto* mono_classify = mono->add_subcommand("classify", "conjugacy type of the total monodromy");
    mono_classify->add_option("file", mono_file, "cycle list or fibration JSON")->required();
    mono_classify->callback([&]() {
        CycleTuple t = load_cycles(mono_file);
        SL2Element m = product_monodromy(t);
        doc["trace"] = int_to_json(m.trace());
        doc["classification"] = classification_json(classify_sl2(m));
    });

    auto* mono_hur = mono->add_subcommand("hurwitz", "bounded search for adjacent equinodal pairs");
    mono_hur->add_option("file", mono_file, "cycle list or fibration JSON")->required();
    mono_hur->add_option("--moves", hur_moves, "depth bound on Hurwitz moves")->required();
    mono_hur->add_option("--max-hits", hur_hits, "stop after this many witnesses (default 1)");
    mono_hur->add_option("--budget", hur_budget, "node budget for the orbit search (default 200000)");
    mono_hur->callback([&]() {
        CycleTuple t = load_cycles(mono_file);
        EquinodalSearch res = find_equinodal_pairs(t, hur_moves, hur_hits, hur_budget);
        doc["visited"] = res.visited;
        doc["exhausted"] = res.exhausted;
        json hits = json::array();
        for (const auto& h : res.hits) {
            json hj;
            json moves = json::array();
            for (const auto& mv : h.moves) {
                json mj;
                mj["index"] = mv.first;
                mj["direction"] = mv.second == MoveDirection::right ? "right" : "left";
                moves.push_back(mj);
            }
            hj["moves"] = moves;
            hj["pair_index"] = h.pair_index;
            hj["cycle"] = json::array({int_to_json(h.cycle.x), int_to_json(h.cycle.y)});
            hj["tuple"] = cycles_to_json(h.tuple);
            hits.push_back(hj);
        }
        doc["hits"] = hits;
        if (res.hits.empty()) code = 3;
    });

    // unipotent
    auto* uni = app.add_subcommand("unipotent", "unipotent isometries of the model lattices");
    uni->require_subcommand(1);
    std::string uni_lattice;
    std::vector<std::string> uni_word_parts;
    unsigned long uni_bound = 2;
    auto* uni_fix = uni->add_subcommand("fix", "search for a primitive isotropic fixed vector");
    uni_fix->add_option("--lattice", uni_lattice, "construction expression, e.g. Lambda(2)")->required();
    uni_fix->add_option("--word", uni_word_parts, "generator word over E(...) and R(...)")
        ->required()
        ->expected(-1);
    uni_fix->add_option("--bound", uni_bound, "sup-norm bound for the coefficient search (default 2)");
    uni_fix->callback([&]() {
        Lattice l = make_standard(uni_lattice);
        Isometry g = parse_generator_word(l, join_words(uni_word_parts));
        auto cert = is_unipotent(g);
        if (!cert) throw Error("validation", "the word is not unipotent");
        doc["nilpotency_index"] = cert->nilpotency_index;
        doc["fixed_rank"] = cert->fixed_lattice.cols();
        doc["bound"] = uni_bound;
        auto v = find_primitive_isotropic_fixed(l, g, uni_bound);
        if (v) {
            doc["found"] = true;
            doc["vector"] = vector_to_json(*v);
            doc["verified"] = verify_isotropic_fixed(l, g, *v);
        } else {
            doc["found"] = false;
            code = 3;
        }
    });

    // reproduce
    auto* rep = app.add_subcommand("reproduce", "run the acceptance suite");
    rep->callback([&]() {
        auto results = run_acceptance();
        json list = json::array();
        bool all = true;
        for (const auto& r : results) {
            json item;
            item["id"] = r.id;
            item["name"] = r.name;
            item["pass"] = r.pass;
            item["details"] = r.details;
            list.push_back(item);
            all = all && r.pass;
        }
        doc["criteria"] = list;
        doc["all_pass"] = all;
        if (!all) code = 1;
    });

    std::vector<const char*> argv;
    argv.push_back("mwlat");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        json diag;
        json inner;
        inner["kind"] = "usage";
        inner["message"] = e.what();
        diag["error"] = inner;
        out << diag.dump(2) << "\n";
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        json diag;
        json inner;
        inner["kind"] = e.kind;
        inner["message"] = e.what();
        diag["error"] = inner;
        out << diag.dump(2) << "\n";
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        json diag;
        json inner;
        inner["kind"] = "internal";
        inner["message"] = e.what();
        diag["error"] = inner;
        out << diag.dump(2) << "\n";
        err << e.what() << "\n";
        return 2;
    }

    if (code == 2) {
        out << doc.dump(2) << "\n";
        return 2;
    }
    if (pretty) {
        if (doc.contains("criteria") && doc.contains("all_pass"))
            pretty_reproduce(doc, out);
        else
            pretty_print(doc, out, "");
    } else {
        out << doc.dump(2) << "\n";
    }
    return code;
}

} // namespace mwlat::cli
