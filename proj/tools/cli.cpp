#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mbs/mbs.h"

namespace mbs::cli {

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

struct Failure {
    std::string message;
};

void check(mbs_status status) {
    if (status != MBS_OK) throw Failure{std::string(mbs_status_name(status)) + ": " + mbs_last_error()};
}

struct SurfaceDeleter {
    void operator()(mbs_surface* s) const { mbs_surface_free(s); }
};
struct DocumentDeleter {
    void operator()(mbs_document* d) const { mbs_document_free(d); }
};
struct GroupDeleter {
    void operator()(mbs_group* g) const { mbs_group_free(g); }
};
struct HeegaardDeleter {
    void operator()(mbs_heegaard* h) const { mbs_heegaard_free(h); }
};
struct StringDeleter {
    void operator()(char* s) const { mbs_string_free(s); }
};

using Surface = std::unique_ptr<mbs_surface, SurfaceDeleter>;
using Document = std::unique_ptr<mbs_document, DocumentDeleter>;
using Group = std::unique_ptr<mbs_group, GroupDeleter>;
using Heegaard = std::unique_ptr<mbs_heegaard, HeegaardDeleter>;

std::string take(char* s) {
    std::unique_ptr<char, StringDeleter> owned(s);
    return s ? std::string(s) : std::string();
}

template <class F>
std::string text(F&& call) {
    char* out = nullptr;
    check(call(&out));
    return take(out);
}

class Inputs {
public:
    explicit Inputs(std::istream& in) : in_(in) {}

    std::string read(const std::string& path) {
        if (path.empty() || path == "-") {
            if (stdin_used_) throw Failure{"standard input can be read only once"};
            stdin_used_ = true;
            std::ostringstream buf;
            buf << in_.rdbuf();
            return buf.str();
        }
        std::ifstream file(path, std::ios::binary);
        if (!file) throw Failure{"cannot open '" + path + "'"};
        std::ostringstream buf;
        buf << file.rdbuf();
        return buf.str();
    }

    Surface surface(const std::string& path) {
        const auto content = read(path);
        mbs_surface* s = nullptr;
        check(mbs_surface_parse(content.c_str(), &s));
        return Surface(s);
    }

private:
    std::istream& in_;
    bool stdin_used_ = false;
};

std::string group_string(const mbs_group* g) {
    return text([&](char** out) { return mbs_group_to_string(g, out); });
}

int cmd_validate(Inputs& inputs, const std::string& path, std::ostream& out) {
    const auto content = inputs.read(path);
    mbs_document* raw = nullptr;
    check(mbs_document_parse(content.c_str(), &raw));
    Document doc(raw);
    for (std::size_t i = 0; i < mbs_document_size(doc.get()); ++i) {
        mbs_surface* s = nullptr;
        check(mbs_document_get(doc.get(), i, &s));
        Surface surface(s);
        const auto name = text([&](char** o) { return mbs_surface_name(surface.get(), o); });
        out << "VALID " << name << ": " << mbs_surface_branch_count(surface.get()) << " branches, "
            << mbs_surface_sector_count(surface.get()) << " sectors\n";
    }
    return kYes;
}

int cmd_invariants(Inputs& inputs, const std::string& path, std::ostream& out) {
    auto surface = inputs.surface(path);
    auto* s = surface.get();
    int regular = 0, connected = 0;
    std::int64_t chi = 0;
    check(mbs_is_regular(s, &regular));
    check(mbs_is_connected(s, &connected));
    check(mbs_euler_characteristic(s, &chi));
    mbs_group* g = nullptr;
    check(mbs_h1(s, &g));
    Group group(g);

    out << "name: " << text([&](char** o) { return mbs_surface_name(s, o); }) << '\n';
    out << "branches: " << mbs_surface_branch_count(s) << '\n';
    out << "sectors: " << mbs_surface_sector_count(s) << '\n';
    out << "euler characteristic: " << chi << '\n';
    out << "regular: " << (regular ? "yes" : "no") << '\n';
    out << "connected: " << (connected ? "yes" : "no") << '\n';
    for (std::size_t b = 0; b < mbs_surface_branch_count(s); ++b) {
        const auto id = text([&](char** o) { return mbs_surface_branch_id(s, b, o); });
        std::size_t index = 0;
        check(mbs_branch_index(s, id.c_str(), &index));
        out << "branch " << id << ": index " << index << ", degree ";
        std::int64_t degree = 0;
        if (mbs_branch_degree(s, id.c_str(), &degree) == MBS_OK)
            out << degree << '\n';
        else
            out << "mixed\n";
    }
    out << "H1: " << group_string(group.get()) << '\n';
    return kYes;
}

int cmd_s3(Inputs& inputs, const std::string& path, std::ostream& out) {
    auto surface = inputs.surface(path);
    int obstructed = 0;
    mbs_group* g = nullptr;
    check(mbs_s3_obstruction(surface.get(), &obstructed, &g));
    Group group(g);
    if (obstructed) {
        out << "OBSTRUCTED: H1 torsion "
            << text([&](char** o) { return mbs_group_torsion_string(group.get(), o); }) << '\n';
        return kNo;
    }
    out << "INCONCLUSIVE: H1 = " << group_string(group.get()) << " is torsion-free\n";
    return kYes;
}

int cmd_genus_bounds(Inputs& inputs, const std::string& path, std::uint64_t cap, bool flips,
                     std::ostream& out) {
    auto surface = inputs.surface(path);
    auto* s = surface.get();
    std::size_t sectors_bound = 0;
    check(mbs_genus_bound_sectors(s, &sectors_bound));
    mbs_heegaard* h = nullptr;
    check(mbs_genus_bound_heegaard(s, cap, flips ? 1 : 0, &h));
    Heegaard heegaard(h);
    std::uint64_t total = 0;
    check(mbs_permutation_system_count(s, &total));
    const auto bound = mbs_heegaard_bound(h);
    const auto best = std::min<std::int64_t>(bound, static_cast<std::int64_t>(sectors_bound));

    out << "sector bound: " << sectors_bound << '\n';
    out << "heegaard bound: " << bound << '\n';
    out << "best bound: " << best << '\n';
    out << "boundary genus: " << mbs_heegaard_boundary_genus(h) << '\n';
    out << "dual graph betti number: " << mbs_heegaard_dual_betti(h) << '\n';
    if (mbs_heegaard_disconnected_dual(h)) out << "dual graph: disconnected\n";
    out << "permutation systems: " << total << " total, " << mbs_heegaard_evaluated(h) << " evaluated, "
        << (mbs_heegaard_exhaustive(h) ? "exhaustive" : "sampled") << '\n';
    if (flips) out << "rejected flip assignments: " << mbs_heegaard_rejected_flips(h) << '\n';
    out << "witness:\n";
    std::istringstream witness(text([&](char** o) { return mbs_heegaard_witness(h, o); }));
    for (std::string line; std::getline(witness, line);) out << "  " << line << '\n';
    return kYes;
}

int cmd_minors(Inputs& inputs, const std::string& path, std::size_t max, std::ostream& out) {
    auto surface = inputs.surface(path);
    std::size_t count = 0;
    const auto forms = text([&](char** o) { return mbs_all_minors(surface.get(), max, &count, o); });
    out << count << " minors\n" << forms;
    return kYes;
}

int cmd_is_minor(Inputs& inputs, const std::string& a, const std::string& b, std::size_t max,
                 std::ostream& out) {
    auto minor = inputs.surface(a);
    auto host = inputs.surface(b);
    int result = 0;
    check(mbs_is_minor(minor.get(), host.get(), max, &result));
    out << (result ? "MINOR" : "NOT A MINOR") << '\n';
    return result ? kYes : kNo;
}

int cmd_iso(Inputs& inputs, const std::string& a, const std::string& b, std::ostream& out) {
    auto x = inputs.surface(a);
    auto y = inputs.surface(b);
    int result = 0;
    check(mbs_are_isomorphic(x.get(), y.get(), &result));
    out << (result ? "ISOMORPHIC" : "NOT ISOMORPHIC") << '\n';
    return result ? kYes : kNo;
}

int cmd_nminor(Inputs& inputs, const std::string& a, const std::string& b, std::size_t depth,
               std::size_t budget, const std::string& certificate_path, std::ostream& out) {
    auto minor = inputs.surface(a);
    auto host = inputs.surface(b);
    int found = 0;
    char* raw = nullptr;
    check(mbs_neighborhood_minor(minor.get(), host.get(), depth, budget, &found, &raw));
    const auto certificate = take(raw);
    if (!found) {
        out << "NOT FOUND within " << depth << " steps\n";
        return kNo;
    }
    std::int64_t host_bound = 0;
    check(mbs_best_genus_bound(host.get(), 10000, &host_bound));
    const auto steps = nlohmann::json::parse(certificate).at("steps").size();
    out << "NEIGHBORHOOD MINOR: " << steps << " steps\n";
    out << "genus bound: g(minor) <= g(host) <= " << host_bound << '\n';
    if (!certificate_path.empty()) {
        if (certificate_path == "-") {
            out << certificate;
        } else {
            std::ofstream file(certificate_path, std::ios::binary);
            if (!file) throw Failure{"cannot write '" + certificate_path + "'"};
            file << certificate;
        }
    }
    return kYes;
}

int cmd_replay(Inputs& inputs, const std::string& certificate_path, const std::string& target,
               std::ostream& out) {
    const auto certificate = inputs.read(certificate_path);
    auto surface = inputs.surface(target);
    int ok = 0;
    check(mbs_replay_certificate(certificate.c_str(), surface.get(), &ok));
    out << (ok ? "CERTIFICATE VALID" : "CERTIFICATE INVALID") << '\n';
    return ok ? kYes : kNo;
}

int cmd_omega(Inputs& inputs, const std::string& path, std::size_t max, std::ostream& out) {
    auto surface = inputs.surface(path);
    mbs_obstruction_verdict verdict{};
    std::size_t proper = 0;
    char* raw = nullptr;
    check(mbs_omega_candidate(surface.get(), max, &verdict, &proper, &raw));
    const auto note = take(raw);
    switch (verdict) {
        case MBS_OMEGA_CANDIDATE:
            out << "CANDIDATE: " << note << '\n';
            break;
        case MBS_OMEGA_NOT_CANDIDATE:
            out << "NOT A CANDIDATE: " << note << '\n';
            break;
        case MBS_OMEGA_UNKNOWN:
            out << "UNKNOWN: " << note << '\n';
            break;
    }
    out << "proper minors checked: " << proper << '\n';
    return verdict == MBS_OMEGA_CANDIDATE ? kYes : kNo;
}

int cmd_decompose(Inputs& inputs, const std::string& path, std::ostream& out) {
    auto surface = inputs.surface(path);
    mbs_surface* disks = nullptr;
    int* genera = nullptr;
    std::size_t count = 0;
    check(mbs_standard_decomposition(surface.get(), &disks, &genera, &count));
    Surface owned(disks);
    std::unique_ptr<int, void (*)(int*)> owned_genera(genera, mbs_ints_free);
    out << text([&](char** o) { return mbs_surface_serialize(owned.get(), o); });
    out << "# closed surfaces:";
    for (std::size_t i = 0; i < count; ++i) out << " genus " << genera[i] << (i + 1 < count ? "," : "");
    out << '\n';
    return kYes;
}

template <class T>
T parse_number(const std::string& token) {
    T value{};
    std::string_view view(token);
    if (!view.empty() && view.front() == '+') view.remove_prefix(1);
    const auto [end, ec] = std::from_chars(view.data(), view.data() + view.size(), value);
    if (ec != std::errc{} || end != view.data() + view.size()) throw Failure{"'" + token + "' is not an integer"};
    return value;
}

template <class T>
std::vector<T> parse_list(const std::string& csv) {
    std::vector<T> out;
    for (const auto& token : CLI::detail::split(csv, ',')) out.push_back(parse_number<T>(token));
    return out;
}

std::vector<std::size_t> parse_edges(const std::vector<std::string>& edges) {
    std::vector<std::size_t> endpoints;
    for (const auto& e : edges) {
        const auto dash = e.find('-');
        if (dash == std::string::npos) throw Failure{"edge '" + e + "' is not of the form u-v"};
        endpoints.push_back(parse_number<std::size_t>(e.substr(0, dash)));
        endpoints.push_back(parse_number<std::size_t>(e.substr(dash + 1)));
    }
    return endpoints;
}

struct BuildArgs {
    std::vector<std::int64_t> p;
    int genus = 0;
    std::string degrees;
    std::string signs;
    int n = 1;
    std::size_t vertices = 0;
    std::vector<std::string> edges;
};

template <class F>
int emit(F&& build, std::ostream& out) {
    mbs_surface* raw = nullptr;
    check(build(&raw));
    Surface s(raw);
    out << text([&](char** o) { return mbs_surface_serialize(s.get(), o); });
    return kYes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariants, genus bounds and minors of multibranched surfaces", "mbs"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Expand all help");

    Inputs inputs(in);
    std::string file_a, file_b;
    std::uint64_t cap = 10000;
    bool flips = false;
    std::size_t max_results = 100000;
    std::size_t depth = 3;
    std::size_t budget = 200000;
    std::string certificate_path;
    bool dot = false, json = false;
    std::string export_object;
    BuildArgs build;

    auto* validate = app.add_subcommand("validate", "Check structural invariants");
    validate->add_option("file", file_a, "Surface file (default: stdin)");
    auto* invariants = app.add_subcommand("invariants", "Euler characteristic, indices, degrees, H1");
    invariants->add_option("file", file_a);
    auto* s3 = app.add_subcommand("s3", "Torsion obstruction to embedding in the 3-sphere");
    s3->add_option("file", file_a);
    auto* bounds = app.add_subcommand("genus-bounds", "Upper bounds on the minimum Heegaard genus");
    bounds->add_option("file", file_a);
    bounds->add_option("--cap", cap, "Permutation systems to try before sampling");
    bounds->add_flag("--flips", flips, "Also enumerate per-prebranch side flips");
    auto* minors = app.add_subcommand("minors", "List all minors by canonical form");
    minors->add_option("file", file_a);
    minors->add_option("--max", max_results, "Result cap");
    auto* is_minor = app.add_subcommand("is-minor", "Is A a minor of B");
    is_minor->add_option("A", file_a)->required();
    is_minor->add_option("B", file_b)->required();
    is_minor->add_option("--max", max_results, "Result cap");
    auto* iso = app.add_subcommand("iso", "Are A and B isomorphic");
    iso->add_option("A", file_a)->required();
    iso->add_option("B", file_b)->required();
    auto* nminor = app.add_subcommand("nminor", "Search for a neighborhood-minor certificate of A in B");
    nminor->add_option("A", file_a)->required();
    nminor->add_option("B", file_b)->required();
    nminor->add_option("--depth", depth, "Maximum number of steps");
    nminor->add_option("--budget", budget, "Maximum surfaces visited");
    nminor->add_option("--certificate", certificate_path, "Write the certificate JSON here ('-' for stdout)");
    auto* replay = app.add_subcommand("replay", "Check a certificate against a target surface");
    replay->add_option("certificate", certificate_path)->required();
    replay->add_option("target", file_a)->required();
    auto* omega = app.add_subcommand("omega-candidate", "Minimal torsion-obstructed surface test");
    omega->add_option("file", file_a);
    omega->add_option("--max", max_results, "Result cap");
    auto* decompose = app.add_subcommand("decompose", "Standard decomposition into disks and closed surfaces");
    decompose->add_option("file", file_a);
    auto* exporter = app.add_subcommand("export", "Export a derived structure");
    auto* format = exporter->add_option_group("format");
    format->add_flag("--dot", dot, "Graphviz DOT");
    format->add_flag("--json", json, "JSON");
    format->require_option(1);
    exporter->add_option("object", export_object, "dual-graph, boundary, spine or surface")
        ->required()
        ->check(CLI::IsMember({"dual-graph", "boundary", "spine", "surface"}));
    exporter->add_option("file", file_a);

    auto* builder = app.add_subcommand("build", "Print an example family member");
    builder->require_subcommand(1);
    auto* seifert = builder->add_subcommand("seifert", "Disk and annuli with degrees p1,...,pn");
    seifert->add_option("p", build.p)->required()->delimiter(',');
    auto* one = builder->add_subcommand("one-sector", "One sector of genus g on n branches");
    one->add_option("genus", build.genus)->required();
    one->add_option("degrees", build.degrees, "p1,...,pn")->required();
    one->add_option("signs", build.signs, "+1/-1 per degree");
    builder->add_subcommand("pants", "Four pairs of pants on four branches");
    auto* rose = builder->add_subcommand("rose", "Rose with 2n petals times a circle, plus a disk");
    rose->add_option("n", build.n)->required();
    auto* graph = builder->add_subcommand("graph", "Surface of a multigraph");
    graph->add_option("vertices", build.vertices)->required();
    graph->add_option("edges", build.edges, "u-v,u-v,...")->required()->delimiter(',');
    builder->add_subcommand("obstruction", "Annulus wrapping twice at both ends");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kYes;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kYes;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kError;
    }

    try {
        if (*validate) return cmd_validate(inputs, file_a, out);
        if (*invariants) return cmd_invariants(inputs, file_a, out);
        if (*s3) return cmd_s3(inputs, file_a, out);
        if (*bounds) return cmd_genus_bounds(inputs, file_a, cap, flips, out);
        if (*minors) return cmd_minors(inputs, file_a, max_results, out);
        if (*is_minor) return cmd_is_minor(inputs, file_a, file_b, max_results, out);
        if (*iso) return cmd_iso(inputs, file_a, file_b, out);
        if (*nminor) return cmd_nminor(inputs, file_a, file_b, depth, budget, certificate_path, out);
        if (*replay) return cmd_replay(inputs, certificate_path, file_a, out);
        if (*omega) return cmd_omega(inputs, file_a, max_results, out);
        if (*decompose) return cmd_decompose(inputs, file_a, out);
        if (*exporter) {
            auto surface = inputs.surface(file_a);
            const auto object = export_object == "dual-graph" ? MBS_EXPORT_DUAL_GRAPH
                                : export_object == "boundary" ? MBS_EXPORT_BOUNDARY
                                : export_object == "spine"    ? MBS_EXPORT_SPINE
                                                              : MBS_EXPORT_SURFACE;
            out << text([&](char** o) {
                return mbs_export(surface.get(), object, dot ? MBS_FORMAT_DOT : MBS_FORMAT_JSON, o);
            });
            return kYes;
        }
        if (*seifert)
            return emit([&](mbs_surface** s) { return mbs_build_seifert(build.p.data(), build.p.size(), s); },
                        out);
        if (*one) {
            const auto degrees = parse_list<std::int64_t>(build.degrees);
            const auto signs = build.signs.empty() ? std::vector<int>{} : parse_list<int>(build.signs);
            if (!signs.empty() && signs.size() != degrees.size()) throw Failure{"one sign per degree expected"};
            return emit(
                [&](mbs_surface** s) {
                    return mbs_build_one_sector(build.genus, degrees.data(), signs.empty() ? nullptr : signs.data(),
                                                degrees.size(), s);
                },
                out);
        }
        if (builder->got_subcommand("pants")) return emit(mbs_build_pants, out);
        if (*rose) return emit([&](mbs_surface** s) { return mbs_build_rose(build.n, s); }, out);
        if (*graph) {
            const auto endpoints = parse_edges(build.edges);
            return emit(
                [&](mbs_surface** s) {
                    return mbs_build_graph(build.vertices, endpoints.data(), endpoints.size() / 2, s);
                },
                out);
        }
        if (builder->got_subcommand("obstruction")) return emit(mbs_build_obstruction, out);
    } catch (const Failure& f) {
        err << "mbs: " << f.message << '\n';
        return kError;
    }
    err << "mbs: no command\n";
    return kError;
}

}  // namespace mbs::cli
