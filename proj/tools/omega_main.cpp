// Command-line front end: object construction, enumeration commands, and the
// verification suites. Exit codes: 0 success / all checks pass, 1 check
// failure, 2 usage error.

#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "omega/verify.hpp"

using namespace omega;

namespace {

Tree load_tree(const std::string& spec) {
    if (spec == "eta") return eta();
    if (spec.rfind("corolla:", 0) == 0) return corolla(std::stoi(spec.substr(8)));
    if (spec.rfind("linear:", 0) == 0) return linear_tree(std::stoi(spec.substr(7)));
    if (spec.rfind("term:", 0) == 0) return parse_term(spec.substr(5));
    std::ifstream in(spec);
    if (!in) throw TreeError("cannot open tree file or parse spec: " + spec);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return tree_from_json(text);
    // strip trailing whitespace for term files
    size_t last = text.find_last_not_of(" \t\r\n");
    return parse_term(text.substr(first, last - first + 1));
}

std::string subpresheaf_json(const SubPresheaf& x) {
    nlohmann::json j;
    j["ambient"] = x.ambient()->code();
    auto arr = nlohmann::json::array();
    for (const Elem& e : x.all_elems()) {
        const Tree& shape = shape_data(e.shape).tree;
        nlohmann::json labels = nlohmann::json::object();
        for (int i = 0; i < shape.edge_count(); ++i)
            labels[shape.edge_name(i)] = e.labels[i];
        arr.push_back({{"shape", to_term(shape)}, {"data", labels}});
    }
    j["elements"] = arr;
    return j.dump(2);
}

void print_subpresheaf(const SubPresheaf& x, bool as_json) {
    if (as_json) {
        std::cout << subpresheaf_json(x) << "\n";
        return;
    }
    std::cout << x.size() << " nondegenerate elements\n";
    for (const Elem& e : x.all_elems()) {
        const Tree& shape = shape_data(e.shape).tree;
        std::cout << "  " << to_term(shape) << " :";
        for (int i = 0; i < shape.edge_count(); ++i)
            std::cout << " " << shape.edge_name(i) << "->" << e.labels[i];
        std::cout << "\n";
    }
}

SubPresheaf build_object(const std::string& spec) {
    auto split = [](const std::string& s) {
        std::vector<std::string> parts;
        size_t pos = 0;
        while (pos <= s.size()) {
            size_t next = s.find('#', pos);
            if (next == std::string::npos) {
                parts.push_back(s.substr(pos));
                break;
            }
            parts.push_back(s.substr(pos, next - pos));
            pos = next + 1;
        }
        return parts;
    };
    auto parts = split(spec);
    const std::string& kind = parts[0];
    if (kind == "rep" && parts.size() == 2)
        return full_subpresheaf(Ambient::representable(load_tree(parts[1])));
    if (kind == "boundary" && parts.size() == 2) return boundary(load_tree(parts[1]));
    if (kind == "horn" && parts.size() == 3)
        return inner_horn(load_tree(parts[1]), parts[2]);
    if (kind == "segal-core" && parts.size() == 2) return segal_core(load_tree(parts[1]));
    if (kind == "tensor" && parts.size() == 3)
        return full_subpresheaf(Ambient::tensor(load_tree(parts[1]), load_tree(parts[2])));
    if (parts.size() == 1) return full_subpresheaf(Ambient::representable(load_tree(spec)));
    throw TreeError("unrecognised object spec: " + spec);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite combinatorics of the tree category and dendroidal sets"};
    app.require_subcommand(1);

    bool as_json = false, as_dot = false;
    app.add_flag("--json", as_json, "emit JSON");
    app.add_flag("--dot", as_dot, "emit DOT");

    std::string arg_s, arg_t, arg_e, arg_obj, arg_fmt = "term", arg_suite;
    int arg_m = 0, arg_n = 0;
    Bounds bounds;
    int max_degree = -1;

    auto* c_hom = app.add_subcommand("hom", "enumerate morphisms S -> T");
    c_hom->add_option("S", arg_s)->required();
    c_hom->add_option("T", arg_t)->required();

    auto* c_faces = app.add_subcommand("faces", "elementary faces of a tree");
    c_faces->add_option("T", arg_s)->required();

    auto* c_deg = app.add_subcommand("degeneracies", "elementary degeneracies of a tree");
    c_deg->add_option("T", arg_s)->required();

    auto* c_fac = app.add_subcommand("factorize", "degeneracy-iso-face factorisation");
    c_fac->add_option("morphism.json", arg_s)->required();

    auto* c_clo = app.add_subcommand("closure", "cap every leaf with a nullary vertex");
    c_clo->add_option("T", arg_s)->required();

    auto* c_dec = app.add_subcommand("decalage", "add a unary vertex below the root");
    c_dec->add_option("T", arg_s)->required();

    auto* c_bd = app.add_subcommand("boundary", "maximal proper subobject");
    c_bd->add_option("T", arg_s)->required();

    auto* c_horn = app.add_subcommand("horn", "inner horn at an inner edge");
    c_horn->add_option("T", arg_s)->required();
    c_horn->add_option("edge", arg_e)->required();

    auto* c_sc = app.add_subcommand("segal-core", "union of the corolla images");
    c_sc->add_option("T", arg_s)->required();

    auto* c_sv = app.add_subcommand("sieves", "all subobjects of a representable");
    c_sv->add_option("T", arg_s)->required();

    auto* c_sh = app.add_subcommand("shuffles", "percolation schemes of a tensor product");
    c_sh->add_option("S", arg_s)->required();
    c_sh->add_option("T", arg_t)->required();

    auto* c_ss = app.add_subcommand("simplex-shuffles", "lattice-path shuffles of a product of simplices");
    c_ss->add_option("m", arg_m)->required();
    c_ss->add_option("n", arg_n)->required();

    auto* c_asp = app.add_subcommand("aspherical", "asphericity verdict for an object");
    c_asp->add_option("object", arg_obj,
                      "rep#T | boundary#T | horn#T#e | segal-core#T | tensor#S#T | T")
        ->required();
    c_asp->add_option("--max-degree", max_degree);
    c_asp->add_option("--restarts", bounds.restarts);
    c_asp->add_option("--seed", bounds.seed);

    auto* c_ver = app.add_subcommand("verify", "run a verification suite");
    c_ver->add_option("suite", arg_suite)->required();
    c_ver->add_option("--max-vertices", bounds.max_vertices);
    c_ver->add_option("--max-arity", bounds.max_arity);
    c_ver->add_option("--m", bounds.m);
    c_ver->add_option("--n", bounds.n);
    c_ver->add_option("--sum-bound", bounds.sum_bound);
    c_ver->add_option("--shape-bound", bounds.shape_bound);
    c_ver->add_option("--functoriality-vertices", bounds.functoriality_vertices);
    c_ver->add_option("--restarts", bounds.restarts);
    c_ver->add_option("--seed", bounds.seed);
    c_ver->add_flag("--list", [](size_t) {}, "list suites");

    auto* c_emit = app.add_subcommand("emit", "serialize a tree");
    c_emit->add_option("T", arg_s)->required();
    c_emit->add_option("--format", arg_fmt, "json | dot | term");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_hom->parsed()) {
            Tree s = load_tree(arg_s), t = load_tree(arg_t);
            auto fs = hom(s, t);
            if (as_json) {
                auto arr = nlohmann::json::array();
                for (const auto& f : fs) arr.push_back(nlohmann::json::parse(morphism_to_json(f)));
                std::cout << arr.dump(2) << "\n";
            } else {
                std::cout << fs.size() << " morphisms\n";
                for (const auto& f : fs) std::cout << "  " << f.encode() << "\n";
            }
        } else if (c_faces->parsed()) {
            Tree t = load_tree(arg_s);
            for (const Face& f : elementary_faces(t)) {
                const char* kind = f.kind == FaceKind::Inner        ? "inner"
                                   : f.kind == FaceKind::OuterTop   ? "outer-top"
                                   : f.kind == FaceKind::OuterRoot  ? "outer-root"
                                                                    : "corolla-edge";
                std::cout << kind << " " << f.name;
                if (as_json) std::cout << " " << morphism_to_json(f.map);
                std::cout << "\n";
            }
        } else if (c_deg->parsed()) {
            Tree t = load_tree(arg_s);
            for (const Degeneracy& d : elementary_degeneracies(t)) {
                std::cout << "sigma_" << d.edge;
                if (as_json) std::cout << " " << morphism_to_json(d.map);
                std::cout << "\n";
            }
        } else if (c_fac->parsed()) {
            std::ifstream in(arg_s);
            if (!in) throw TreeError("cannot open " + arg_s);
            std::string text((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
            TreeMorphism f = morphism_from_json(text);
            FactorisationTriple tri = factorize(f);
            nlohmann::json j;
            j["degeneracy"] = nlohmann::json::parse(morphism_to_json(tri.degeneracy));
            j["iso"] = nlohmann::json::parse(morphism_to_json(tri.iso));
            j["face"] = nlohmann::json::parse(morphism_to_json(tri.face));
            j["recomposes"] = tri.recomposed() == f;
            nlohmann::json chain = nlohmann::json::array();
            for (const Face& fc : tri.face_chain)
                chain.push_back(std::string(fc.kind == FaceKind::Inner ? "inner:" : "outer:") +
                                fc.name);
            j["face_chain"] = chain;
            j["degeneracies"] = tri.degeneracy_chain.size();
            std::cout << j.dump(2) << "\n";
        } else if (c_clo->parsed()) {
            Tree t = load_tree(arg_s);
            Tree cl = closure_tree(t);
            std::cout << (as_json ? to_json(cl) : as_dot ? to_dot(cl) : to_term(cl)) << "\n";
        } else if (c_dec->parsed()) {
            Tree t = load_tree(arg_s);
            Decalage d = decalage(t);
            std::cout << (as_json ? to_json(d.tree) : as_dot ? to_dot(d.tree) : to_term(d.tree))
                      << "\n";
        } else if (c_bd->parsed()) {
            print_subpresheaf(boundary(load_tree(arg_s)), as_json);
        } else if (c_horn->parsed()) {
            print_subpresheaf(inner_horn(load_tree(arg_s), arg_e), as_json);
        } else if (c_sc->parsed()) {
            print_subpresheaf(segal_core(load_tree(arg_s)), as_json);
        } else if (c_sv->parsed()) {
            auto all = sieves(load_tree(arg_s));
            std::cout << all.size() << " subobjects\n";
            if (as_json)
                for (const auto& s : all) std::cout << subpresheaf_json(s) << "\n";
        } else if (c_sh->parsed()) {
            Tree s = load_tree(arg_s), t = load_tree(arg_t);
            auto shs = shuffles(s, t);
            if (as_dot) {
                for (const auto& sh : shs) std::cout << to_dot(sh.tree);
            } else if (as_json) {
                auto arr = nlohmann::json::array();
                for (const auto& sh : shs) arr.push_back(nlohmann::json::parse(to_json(sh.tree)));
                std::cout << arr.dump(2) << "\n";
            } else {
                std::cout << shs.size() << " percolation schemes\n";
                for (const auto& sh : shs) std::cout << "  " << to_term(sh.tree) << "\n";
            }
        } else if (c_ss->parsed()) {
            auto shs = simplex_shuffles(arg_m, arg_n);
            std::cout << shs.size() << " shuffles\n";
            for (const auto& sh : shs) {
                for (auto [x, y] : sh.points()) std::cout << "(" << x << "," << y << ")";
                std::cout << "\n";
            }
        } else if (c_asp->parsed()) {
            SubPresheaf x = build_object(arg_obj);
            AsphericityOptions opt;
            opt.restarts = bounds.restarts;
            opt.seed = bounds.seed;
            opt.max_degree = max_degree;
            AsphericityVerdict v = asphericity(x, opt);
            std::cout << v.to_json() << "\n";
            return v.kind == AsphericityVerdict::Kind::NotAspherical ? 1 : 0;
        } else if (c_ver->parsed()) {
            if (arg_suite == "list") {
                for (const auto& id : suite_ids()) std::cout << id << "\n";
                return 0;
            }
            auto start = std::chrono::steady_clock::now();
            VerificationReport rep = run_verify(arg_suite, bounds);
            auto end = std::chrono::steady_clock::now();
            std::cout << rep.to_json() << "\n";
            std::cerr << rep.suite << ": " << rep.passed << " passed, " << rep.failed
                      << " failed ("
                      << std::chrono::duration<double>(end - start).count() << " s)\n";
            return rep.ok() ? 0 : 1;
        } else if (c_emit->parsed()) {
            Tree t = load_tree(arg_s);
            if (arg_fmt == "json")
                std::cout << to_json(t) << "\n";
            else if (arg_fmt == "dot")
                std::cout << to_dot(t);
            else if (arg_fmt == "term")
                std::cout << to_term(t) << "\n";
            else
                throw TreeError("unsupported format: " + arg_fmt);
        }
    } catch (const UnknownSuite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const TreeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
