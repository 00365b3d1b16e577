#include "mbs/export.hpp"

#include <sstream>

namespace mbs {

using nlohmann::json;

namespace {

const char* edge_kind_name(SpineGraph::EdgeKind kind) {
    switch (kind) {
        case SpineGraph::EdgeKind::BranchLoop: return "branch_loop";
        case SpineGraph::EdgeKind::SectorArc: return "sector_arc";
        case SpineGraph::EdgeKind::HandleLoop: return "handle_loop";
    }
    return "?";
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + '"';
}

}  // namespace

json to_json(const MultibranchedSurface& surface) {
    json branches = json::array();
    for (const auto& b : surface.branches()) branches.push_back(b.value);
    json sectors = json::array();
    for (const auto& s : surface.sectors()) {
        json prebranches = json::array();
        for (const auto& pb : s.prebranches)
            prebranches.push_back({{"branch", pb.branch.value}, {"oriented_degree", pb.oriented_degree}});
        sectors.push_back({{"id", s.id.value},
                           {"genus", s.genus},
                           {"orientable", s.orientable},
                           {"prebranches", std::move(prebranches)}});
    }
    return {{"name", surface.name()}, {"branches", std::move(branches)}, {"sectors", std::move(sectors)}};
}

MultibranchedSurface surface_from_json(const json& j) {
    try {
        std::vector<BranchId> branches;
        for (const auto& b : j.at("branches")) branches.emplace_back(b.get<std::string>());
        std::vector<Sector> sectors;
        for (const auto& s : j.at("sectors")) {
            Sector sector{SectorId(s.at("id").get<std::string>()), s.at("genus").get<int>(),
                          s.value("orientable", true), {}};
            for (const auto& pb : s.at("prebranches"))
                sector.prebranches.push_back(
                    {BranchId(pb.at("branch").get<std::string>()), pb.at("oriented_degree").get<std::int64_t>()});
            sectors.push_back(std::move(sector));
        }
        return validate({std::move(branches), std::move(sectors), j.value("name", std::string())}, false);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::SyntaxError, std::string("malformed surface JSON: ") + e.what());
    }
}

json to_json(const FgAbelianGroup& group) {
    json factors = json::array();
    for (const auto& f : group.invariant_factors()) factors.push_back(f.str());
    return {{"invariant_factors", std::move(factors)},
            {"free_rank", group.free_rank()},
            {"text", group.to_string()}};
}

json to_json(const CircularPermutationSystem& system) {
    json orders = json::array();
    for (const auto& order : system.orders) {
        json o = json::array();
        for (const auto& ref : order) o.push_back({ref.sector, ref.slot});
        orders.push_back(std::move(o));
    }
    return orders;
}

json to_json(const BoundarySurface& boundary) {
    json components = json::array();
    for (const auto& c : boundary.components)
        components.push_back({{"id", c.id}, {"euler_characteristic", c.euler_characteristic}, {"genus", c.genus}});
    json pieces = json::array();
    for (const auto& p : boundary.pieces) {
        json piece = {{"kind", p.kind == BoundaryPiece::Kind::SectorSide ? "sector_side" : "gap_annulus"},
                      {"owner", p.owner},
                      {"euler_characteristic", p.euler_characteristic},
                      {"component", p.component}};
        if (p.kind == BoundaryPiece::Kind::SectorSide)
            piece["side"] = p.side;
        else
            piece["gap"] = p.gap;
        pieces.push_back(std::move(piece));
    }
    json gluings = json::array();
    for (const auto& g : boundary.gluings)
        gluings.push_back({{"prebranch", {g.prebranch.sector, g.prebranch.slot}},
                           {"side", g.side},
                           {"side_piece", g.side_piece},
                           {"gap_piece", g.gap_piece},
                           {"upper", g.upper}});
    return {{"components", std::move(components)},
            {"pieces", std::move(pieces)},
            {"gluings", std::move(gluings)},
            {"total_genus", boundary.total_genus()},
            {"total_euler_characteristic", boundary.total_euler_characteristic()}};
}

json to_json(const DualGraph& graph) {
    json vertices = json::array();
    for (const auto& v : graph.vertices)
        vertices.push_back({{"id", v.id}, {"euler_characteristic", v.euler_characteristic}, {"genus", v.genus}});
    json edges = json::array();
    for (const auto& e : graph.edges)
        edges.push_back({{"sector", e.sector.value}, {"plus", e.plus_component}, {"minus", e.minus_component}});
    return {{"vertices", std::move(vertices)},
            {"edges", std::move(edges)},
            {"components", graph.component_count()},
            {"first_betti_number", graph.first_betti_number()}};
}

json to_json(const SpineGraph& spine) {
    json vertices = json::array();
    for (const auto& v : spine.vertices) vertices.push_back(v.value);
    json edges = json::array();
    for (const auto& e : spine.edges)
        edges.push_back({{"from", e.from}, {"to", e.to}, {"kind", edge_kind_name(e.kind)}, {"tag", e.tag}});
    return {{"vertices", std::move(vertices)},
            {"edges", std::move(edges)},
            {"first_betti_number", spine.first_betti_number()}};
}

json to_json(const MinorCertificate& certificate) {
    json steps = json::array();
    for (const auto& step : certificate.steps)
        steps.push_back({{"kind", std::string(step_kind_name(step.kind))},
                         {"target", step.target},
                         {"result", to_json(step.result)}});
    return {{"source", to_json(certificate.source)}, {"steps", std::move(steps)}};
}

MinorCertificate certificate_from_json(const json& j) {
    MinorCertificate cert;
    try {
        cert.source = surface_from_json(j.at("source"));
        for (const auto& s : j.at("steps")) {
            const auto kind = parse_step_kind(s.at("kind").get<std::string>());
            if (!kind) throw Error(ErrorCode::SyntaxError, "unknown step kind in certificate");
            cert.steps.push_back({*kind, s.at("target").get<std::string>(), surface_from_json(s.at("result"))});
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::SyntaxError, std::string("malformed certificate JSON: ") + e.what());
    }
    return cert;
}

std::string to_dot(const DualGraph& graph) {
    std::ostringstream out;
    out << "graph dual {\n";
    for (const auto& v : graph.vertices)
        out << "  c" << v.id << " [label=\"g=" << v.genus << "\"];\n";
    for (const auto& e : graph.edges)
        out << "  c" << e.plus_component << " -- c" << e.minus_component << " [label=" << quoted(e.sector.value)
            << "];\n";
    out << "}\n";
    return out.str();
}

std::string to_dot(const MultibranchedSurface& surface, const BoundarySurface& boundary) {
    std::ostringstream out;
    out << "graph boundary {\n";
    for (const auto& c : boundary.components) {
        out << "  subgraph cluster_" << c.id << " {\n    label=\"component " << c.id << ", g=" << c.genus
            << "\";\n";
        for (std::size_t p = 0; p < boundary.pieces.size(); ++p) {
            const auto& piece = boundary.pieces[p];
            if (piece.component != c.id) continue;
            std::string label;
            if (piece.kind == BoundaryPiece::Kind::SectorSide)
                label = surface.sectors()[piece.owner].id.value + (piece.side > 0 ? "+" : "-");
            else
                label = surface.branches()[piece.owner].value + "/" + std::to_string(piece.gap);
            out << "    p" << p << " [label=" << quoted(label) << "];\n";
        }
        out << "  }\n";
    }
    for (const auto& g : boundary.gluings)
        out << "  p" << g.side_piece << " -- p" << g.gap_piece << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_dot(const SpineGraph& spine) {
    std::ostringstream out;
    out << "graph spine {\n";
    for (std::size_t v = 0; v < spine.vertices.size(); ++v)
        out << "  v" << v << " [label=" << quoted(spine.vertices[v].value) << "];\n";
    for (const auto& e : spine.edges)
        out << "  v" << e.from << " -- v" << e.to << " [label="
            << quoted(e.tag + " " + edge_kind_name(e.kind)) << "];\n";
    out << "}\n";
    return out.str();
}

}  // namespace mbs
