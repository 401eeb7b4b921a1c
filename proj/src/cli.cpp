#include "holonomy/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>

#include "holonomy/coloring.hpp"
#include "holonomy/cubical.hpp"
#include "holonomy/groupoid.hpp"
#include "holonomy/hom.hpp"
#include "holonomy/homology.hpp"
#include "holonomy/io.hpp"

namespace holonomy::cli {

namespace {

using io::json;

struct Report {
    json body;
    std::string summary;
};

void need_inputs(const RunConfig& c, std::size_t n) {
    if (c.inputs.size() != n)
        throw ValidationError("'" + c.command + "' takes " + std::to_string(n) + " input(s), got " +
                              std::to_string(c.inputs.size()));
}

SimplicialComplex simplicial(const Complex& k, const std::string& what) {
    if (auto* s = std::get_if<SimplicialComplex>(&k)) return *s;
    throw ValidationError(what + " must be a simplicial complex");
}

CubicalComplex cubical(const Complex& k, const std::string& what) {
    if (auto* c = std::get_if<CubicalComplex>(&k)) return *c;
    throw ValidationError(what + " must be a cubical complex");
}

RidgeGraph graph_of(const Complex& k) {
    return std::visit([](const auto& c) { return ridge_graph(c); }, k);
}

std::size_t facet_from(const RidgeGraph& g, const std::string& text) {
    return g.facet_at(io::split_labels(text));
}

Report cmd_holonomy(const RunConfig& c) {
    need_inputs(c, 1);
    const RidgeGraph g = graph_of(io::load_complex(c.inputs[0], c.seed));
    const std::size_t base = c.base ? facet_from(g, *c.base) : 0;
    const HolonomyGroup h = holonomy_group(g, base);
    return {io::holonomy_json(g, h), "holonomy group of order " + std::to_string(h.order())};
}

Report cmd_invariant(const RunConfig& c) {
    need_inputs(c, 1);
    const CubicalComplex k = cubical(io::load_complex(c.inputs[0], c.seed), "input");
    const RidgeGraph g = ridge_graph(k);
    const CurvatureReport r = curvature_CC(g);
    json body = io::curvature_json(g, r);
    if (k.cubes().size() <= kSubcomplexZLimit) {
        const auto z = subcomplex_Z(k);
        body["Z_subcomplex"] = z ? json(*z) : json("inf");
    }
    return {body, "I = " + std::to_string(r.invariant) + ", CC = " + r.cc_text()};
}

Report cmd_embed_check(const RunConfig& c) {
    need_inputs(c, 2);
    const CubicalComplex k = cubical(io::load_complex(c.inputs[0], c.seed), "source");
    const CubicalComplex l = cubical(io::load_complex(c.inputs[1], c.seed), "target");
    const EmbedVerdict v = embed_obstruction(k, l);
    const std::string verdict = v.obstructed ? "obstructed" : "inconclusive";
    json body = {{"verdict", verdict},
                 {"source", io::curvature_json(ridge_graph(k), v.source)},
                 {"target", io::curvature_json(ridge_graph(l), v.target)}};
    return {body, "embedding check: " + verdict};
}

json cell_json(const HomComplex& h, std::size_t i) {
    return {{"eta", h.labels_of(i)}, {"dim", h.cells()[i].dim}};
}

Report cmd_hom(const RunConfig& c) {
    need_inputs(c, 2);
    const SimplicialComplex k = simplicial(io::load_complex(c.inputs[0], c.seed), "source");
    const SimplicialComplex l = simplicial(io::load_complex(c.inputs[1], c.seed), "target");
    const HomComplex h = hom_complex(k, l);
    json body = {{"cells", h.size()}, {"dim", h.dim()}, {"f_vector", h.f_vector()}};
    std::string summary = "Hom complex with " + std::to_string(h.size()) + " cells";
    if (c.homology || c.k) {
        const BettiProfile b = betti(h);
        const json bj = io::betti_json(b);
        for (const auto& [key, value] : bj.items()) body[key] = value;
        if (c.k)
            body["homology_connectivity"] = {{"k", *c.k},
                                             {"value", homology_connectivity(b, *c.k)},
                                             {"note", "homology only; the fundamental group is not examined"}};
        summary += ", reduced Betti numbers " + json(b.reduced_betti).dump();
    }
    if (c.cells) {
        json list = json::array();
        for (std::size_t i = 0; i < h.size(); ++i) list.push_back(cell_json(h, i));
        body["cell_list"] = list;
    }
    return {body, summary};
}

Report cmd_transport(const RunConfig& c) {
    need_inputs(c, 2);
    if (!c.path) throw ValidationError("'transport' needs --path");
    const SimplicialComplex k = simplicial(io::load_complex(c.inputs[0], c.seed), "source");
    const SimplicialComplex l = simplicial(io::load_complex(c.inputs[1], c.seed), "target");
    const RidgeGraph g = ridge_graph(k);
    std::vector<std::size_t> path;
    for (const auto& facet : io::split_labels(*c.path, ';')) path.push_back(facet_from(g, facet));
    if (path.empty()) throw ValidationError("empty facet path");
    const HomComplex first = hom_complex(facet_simplex(g, path.front()), l);
    const HomComplex last = path.back() == path.front() ? first : hom_complex(facet_simplex(g, path.back()), l);
    const CellMap m = transport(g, path, last, first);
    const Projectivity p = compose_path(g, path);
    std::size_t fixed = 0;
    for (std::size_t i = 0; i < m.image.size(); ++i) fixed += m.image[i] == i;
    json body = {{"source", g.labels_of(path.front())},
                 {"target", g.labels_of(path.back())},
                 {"projectivity", vertex_map(g, p)},
                 {"cells", last.size()},
                 {"cell_map", m.image},
                 {"fixed_cells", fixed}};
    if (c.homology) {
        const BettiProfile b = betti(last);
        json induced = json::array();
        if (path.front() == path.back())
            for (int q : b.support()) {
                json matrix = json::array();
                for (const auto& row : induced_homology_map(last, first, m, q)) {
                    json r = json::array();
                    for (const auto& x : row) r.push_back(x.get_si());
                    matrix.push_back(r);
                }
                induced.push_back({{"degree", q}, {"matrix", matrix}});
            }
        body["reduced_betti"] = b.reduced_betti;
        body["induced"] = induced;
    }
    return {body, "transport along " + std::to_string(path.size()) + " facets, " + std::to_string(fixed) +
                      " fixed cells"};
}

Report cmd_chi(const RunConfig& c) {
    need_inputs(c, 1);
    const SimplicialComplex k = simplicial(io::load_complex(c.inputs[0], c.seed), "input");
    const ColoringCertificate cert = chi(k);
    json colouring = json::object();
    for (Vertex v = 0; v < k.num_vertices(); ++v) colouring[k.label(v)] = cert.colour[v];
    json body = {{"chi", cert.value},
                 {"colouring", colouring},
                 {"clique", k.labels_of(cert.clique)},
                 {"clique_tight", cert.clique_tight()}};
    return {body, "chromatic number " + std::to_string(cert.value)};
}

Report cmd_phi_check(const RunConfig& c) {
    need_inputs(c, 1);
    if (!c.involution || !c.sigma) throw ValidationError("'phi-check' needs --involution and --sigma");
    const SimplicialComplex k = simplicial(io::load_complex(c.inputs[0], c.seed), "input");
    const VertexMap omega =
        resolve_map(k.vertices(), k.vertices(), io::parse_vertex_map(io::read_file(*c.involution)));
    VertexSet sigma = k.vertex_set(io::split_labels(*c.sigma));
    const PhiVerdict v = is_phi_complex(k, omega, sigma);
    const RidgeGraph g = ridge_graph(k);
    json tau = json::object();
    if (v.tau.size() == sigma.size())
        for (std::size_t i = 0; i < sigma.size(); ++i) tau[k.label(sigma[i])] = k.label(sigma[v.tau[i]]);
    json evidence = json::array();
    for (std::size_t f : v.evidence) evidence.push_back(g.labels_of(f));
    json body = {{"is_phi", v.is_phi},
                 {"sigma", k.labels_of(sigma)},
                 {"tau", tau},
                 {"evidence", evidence},
                 {"reason", v.reason}};
    return {body, v.is_phi ? "Phi-complex" : "not a Phi-complex: " + v.reason};
}

Report cmd_collapse_check(const RunConfig& c) {
    need_inputs(c, 1);
    const SimplicialComplex k = simplicial(io::load_complex(c.inputs[0], c.seed), "input");
    const CollapseResult r = vertex_collapsible(k);
    json seq = json::array();
    for (const auto& s : r.sequence) seq.push_back({{"facet", k.labels_of(s.facet)}, {"vertex", k.label(s.vertex)}});
    return {{{"collapsible", r.collapsible}, {"sequence", seq}},
            r.collapsible ? "vertex collapsible" : "not vertex collapsible"};
}

Report cmd_bubble(const RunConfig& c) {
    need_inputs(c, 2);
    const CubicalComplex k = cubical(io::load_complex(c.inputs[0], c.seed), "input");
    const json spec = io::read_file(c.inputs[1]);
    if (!spec.is_object() || !spec.contains("cubes") || !spec.contains("vertex_map"))
        throw ValidationError("bubble spec needs \"cubes\" and \"vertex_map\"");
    std::vector<std::vector<std::string>> ball;
    for (const auto& cube : spec["cubes"]) {
        std::vector<std::string> labels;
        for (const auto& v : cube) labels.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        ball.push_back(std::move(labels));
    }
    std::map<std::string, unsigned> embed;
    for (const auto& [label, corner] : spec["vertex_map"].items()) {
        if (!corner.is_number_unsigned()) throw ValidationError("bubble corner for " + label + " must be a non-negative integer");
        embed[label] = corner.get<unsigned>();
    }
    const CubicalComplex result = bubble_move(k, ball, embed);
    const int before = invariant_I(k);
    const int after = invariant_I(result);
    json body = {{"I_before", before}, {"I_after", after}, {"complex", io::to_json(result)}};
    return {body, "bubble move: I " + std::to_string(before) + " -> " + std::to_string(after)};
}

const std::map<std::string, std::function<Report(const RunConfig&)>>& table() {
    static const std::map<std::string, std::function<Report(const RunConfig&)>> t = {
        {"holonomy", cmd_holonomy},         {"invariant", cmd_invariant}, {"embed-check", cmd_embed_check},
        {"hom", cmd_hom},                   {"transport", cmd_transport}, {"chi", cmd_chi},
        {"phi-check", cmd_phi_check},       {"collapse-check", cmd_collapse_check},
        {"bubble", cmd_bubble},
    };
    return t;
}

}  // namespace

const std::vector<std::string>& commands() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : table()) v.push_back(name);
        return v;
    }();
    return names;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    int status = kExitOk;
    json body;
    try {
        auto it = table().find(config.command);
        if (it == table().end()) throw ValidationError("unknown command '" + config.command + "'");
        Report r = it->second(config);
        body = std::move(r.body);
        err << r.summary << "\n";
    } catch (const SizeLimitError& e) {
        status = kExitSizeLimit;
        body = {{"error", e.what()}};
        err << "refused: " << e.what() << "\n";
    } catch (const ValidationError& e) {
        status = kExitValidation;
        body = {{"error", e.what()}};
        err << "invalid input: " << e.what() << "\n";
    } catch (const json::exception& e) {
        status = kExitValidation;
        body = {{"error", e.what()}};
        err << "invalid input: " << e.what() << "\n";
    }
    const std::string text = body.dump(2) + "\n";
    if (config.out && status == kExitOk) {
        std::ofstream file(*config.out);
        if (!file) {
            err << "cannot write " << *config.out << "\n";
            return kExitValidation;
        }
        file << text;
    } else {
        out << text;
    }
    return status;
}

}  // namespace holonomy::cli
