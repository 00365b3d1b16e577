#include "mbs/mbs.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>

#include "mbs/builders.hpp"
#include "mbs/export.hpp"
#include "mbs/minors.hpp"
#include "mbs/text_format.hpp"

struct mbs_surface {
    mbs::MultibranchedSurface value;
};

struct mbs_document {
    std::vector<mbs::MultibranchedSurface> surfaces;
};

struct mbs_group {
    mbs::FgAbelianGroup value;
};

struct mbs_heegaard {
    mbs::HeegaardBound value;
    mbs::MultibranchedSurface surface;
};

namespace {

thread_local std::string last_message;
thread_local std::size_t last_line = 0;
thread_local std::size_t last_column = 0;

mbs_status fail(mbs_status status, const std::string& message) {
    last_message = message;
    last_line = 0;
    last_column = 0;
    return status;
}

template <class F>
mbs_status guard(F&& body) {
    try {
        body();
        return MBS_OK;
    } catch (const mbs::ParseError& e) {
        auto status = fail(static_cast<mbs_status>(static_cast<int>(e.code()) + 1), e.what());
        last_line = e.line();
        last_column = e.column();
        return status;
    } catch (const mbs::Error& e) {
        return fail(static_cast<mbs_status>(static_cast<int>(e.code()) + 1), e.what());
    } catch (const std::out_of_range& e) {
        return fail(MBS_ERR_OUT_OF_RANGE, e.what());
    } catch (const std::bad_alloc&) {
        return fail(MBS_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(MBS_ERR_INTERNAL, e.what());
    }
}

template <class... P>
bool any_null(P*... p) {
    return ((p == nullptr) || ...);
}

#define MBS_REQUIRE(...) \
    if (any_null(__VA_ARGS__)) return fail(MBS_ERR_NULL_ARGUMENT, "null argument")

char* copy_string(const std::string& s) {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

mbs_surface* wrap(mbs::MultibranchedSurface s) { return new mbs_surface{std::move(s)}; }

std::string witness_text(const mbs::MultibranchedSurface& surface, const mbs::CircularPermutationSystem& system) {
    std::ostringstream out;
    for (std::size_t b = 0; b < system.orders.size(); ++b) {
        out << surface.branches()[b].value << ":";
        for (const auto& ref : system.orders[b])
            out << ' ' << surface.sectors()[ref.sector].id.value << '.' << ref.slot;
        out << '\n';
    }
    return out.str();
}

}  // namespace

extern "C" {

const char* mbs_last_error(void) { return last_message.c_str(); }

void mbs_last_error_position(size_t* line, size_t* column) {
    if (line) *line = last_line;
    if (column) *column = last_column;
}

const char* mbs_status_name(mbs_status status) {
    switch (status) {
        case MBS_OK: return "OK";
        case MBS_ERR_NULL_ARGUMENT: return "NullArgument";
        case MBS_ERR_OUT_OF_RANGE: return "OutOfRange";
        case MBS_ERR_INTERNAL: return "Internal";
        default: break;
    }
    const int code = static_cast<int>(status) - 1;
    if (code < 0 || code > static_cast<int>(mbs::ErrorCode::SemanticError)) return "Unknown";
    return mbs::error_code_name(static_cast<mbs::ErrorCode>(code)).data();
}

void mbs_string_free(char* s) { std::free(s); }
void mbs_ints_free(int* values) { std::free(values); }

mbs_status mbs_document_parse(const char* text, mbs_document** out) {
    MBS_REQUIRE(text, out);
    return guard([&] { *out = new mbs_document{mbs::parse_document(text)}; });
}

size_t mbs_document_size(const mbs_document* doc) { return doc ? doc->surfaces.size() : 0; }

mbs_status mbs_document_get(const mbs_document* doc, size_t index, mbs_surface** out) {
    MBS_REQUIRE(doc, out);
    return guard([&] { *out = wrap(doc->surfaces.at(index)); });
}

void mbs_document_free(mbs_document* doc) { delete doc; }

mbs_status mbs_surface_parse(const char* text, mbs_surface** out) {
    MBS_REQUIRE(text, out);
    return guard([&] { *out = wrap(mbs::parse_surface(text)); });
}

mbs_status mbs_surface_from_json(const char* json, mbs_surface** out) {
    MBS_REQUIRE(json, out);
    return guard([&] {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(json);
        } catch (const nlohmann::json::exception& e) {
            throw mbs::Error(mbs::ErrorCode::SyntaxError, e.what());
        }
        *out = wrap(mbs::surface_from_json(j));
    });
}

mbs_status mbs_surface_serialize(const mbs_surface* s, char** out) {
    MBS_REQUIRE(s, out);
    return guard([&] { *out = copy_string(mbs::serialize(s->value)); });
}

mbs_surface* mbs_surface_clone(const mbs_surface* s) {
    if (!s) return nullptr;
    try {
        return wrap(s->value);
    } catch (...) {
        return nullptr;
    }
}

void mbs_surface_free(mbs_surface* s) { delete s; }

size_t mbs_surface_branch_count(const mbs_surface* s) { return s ? s->value.branch_count() : 0; }
size_t mbs_surface_sector_count(const mbs_surface* s) { return s ? s->value.sector_count() : 0; }

mbs_status mbs_surface_name(const mbs_surface* s, char** out) {
    MBS_REQUIRE(s, out);
    return guard([&] { *out = copy_string(s->value.name()); });
}

mbs_status mbs_surface_branch_id(const mbs_surface* s, size_t index, char** out) {
    MBS_REQUIRE(s, out);
    return guard([&] { *out = copy_string(s->value.branches().at(index).value); });
}

mbs_status mbs_validate(const mbs_surface* s, int prune, mbs_surface** out) {
    MBS_REQUIRE(s);
    return guard([&] {
        auto checked = mbs::validate(s->value, prune != 0);
        if (out) *out = wrap(std::move(checked));
    });
}

mbs_status mbs_is_regular(const mbs_surface* s, int* out) {
    MBS_REQUIRE(s, out);
    return guard([&] { *out = mbs::is_regular(s->value) ? 1 : 0; });
}

mbs_status mbs_is_connected(const mbs_surface* s, int* out) {
    MBS_REQUIRE(s, out);
    return guard([&] { *out = mbs::is_connected(s->value) ? 1 : 0; });
}

mbs_status mbs_euler_characteristic(const mbs_surface* s, int64_t* out) {
    MBS_REQUIRE(s, out);
    return guard([&] { *out = mbs::euler_characteristic(s->value); });
}

mbs_status mbs_branch_index(const mbs_surface* s, const char* branch, size_t* out) {
    MBS_REQUIRE(s, branch, out);
    return guard([&] { *out = mbs::branch_index(s->value, mbs::BranchId(branch)); });
}

mbs_status mbs_branch_degree(const mbs_surface* s, const char* branch, int64_t* out) {
    MBS_REQUIRE(s, branch, out);
    return guard([&] { *out = mbs::branch_degree(s->value, mbs::BranchId(branch)); });
}

mbs_status mbs_h1(const mbs_surface* s, mbs_group** out) {
    MBS_REQUIRE(s, out);
    return guard([&] { *out = new mbs_group{mbs::h1(s->value)}; });
}

size_t mbs_group_free_rank(const mbs_group* g) { return g ? g->value.free_rank() : 0; }
size_t mbs_group_factor_count(const mbs_group* g) { return g ? g->value.invariant_factors().size() : 0; }

mbs_status mbs_group_factor(const mbs_group* g, size_t index, char** out) {
    MBS_REQUIRE(g, out);
    return guard([&] { *out = copy_string(g->value.invariant_factors().at(index).str()); });
}

mbs_status mbs_group_to_string(const mbs_group* g, char** out) {
    MBS_REQUIRE(g, out);
    return guard([&] { *out = copy_string(g->value.to_string()); });
}

mbs_status mbs_group_torsion_string(const mbs_group* g, char** out) {
    MBS_REQUIRE(g, out);
    return guard([&] { *out = copy_string(g->value.torsion_string()); });
}

void mbs_group_free(mbs_group* g) { delete g; }

mbs_status mbs_s3_obstruction(const mbs_surface* s, int* obstructed, mbs_group** homology) {
    MBS_REQUIRE(s, obstructed);
    return guard([&] {
        auto report = mbs::s3_obstruction(s->value);
        *obstructed = report.verdict == mbs::S3Verdict::Obstructed ? 1 : 0;
        if (homology) *homology = new mbs_group{std::move(report.homology)};
    });
}

mbs_status mbs_genus_bound_sectors(const mbs_surface* s, size_t* out) {
    MBS_REQUIRE(s, out);
    return guard([&] { *out = mbs::genus_upper_bound_sectors(s->value); });
}

mbs_status mbs_genus_bound_heegaard(const mbs_surface* s, uint64_t cap, int enumerate_flips,
                                    mbs_heegaard** out) {
    MBS_REQUIRE(s, out);
    return guard([&] {
        *out = new mbs_heegaard{mbs::genus_upper_bound_heegaard(s->value, cap, enumerate_flips != 0), s->value};
    });
}

int64_t mbs_heegaard_bound(const mbs_heegaard* h) { return h ? h->value.bound : 0; }
int mbs_heegaard_exhaustive(const mbs_heegaard* h) { return h && h->value.exhaustive ? 1 : 0; }
int64_t mbs_heegaard_boundary_genus(const mbs_heegaard* h) { return h ? h->value.boundary_genus : 0; }
int64_t mbs_heegaard_dual_betti(const mbs_heegaard* h) { return h ? h->value.dual_betti : 0; }
int mbs_heegaard_disconnected_dual(const mbs_heegaard* h) {
    return h && h->value.disconnected_dual_graph ? 1 : 0;
}
uint64_t mbs_heegaard_evaluated(const mbs_heegaard* h) { return h ? h->value.evaluated : 0; }
uint64_t mbs_heegaard_rejected_flips(const mbs_heegaard* h) { return h ? h->value.rejected_flips : 0; }

mbs_status mbs_heegaard_witness(const mbs_heegaard* h, char** out) {
    MBS_REQUIRE(h, out);
    return guard([&] { *out = copy_string(witness_text(h->surface, h->value.witness)); });
}

void mbs_heegaard_free(mbs_heegaard* h) { delete h; }

mbs_status mbs_best_genus_bound(const mbs_surface* s, uint64_t cap, int64_t* out) {
    MBS_REQUIRE(s, out);
    return guard([&] { *out = mbs::best_genus_upper_bound(s->value, cap); });
}

mbs_status mbs_permutation_system_count(const mbs_surface* s, uint64_t* total) {
    MBS_REQUIRE(s, total);
    return guard([&] { *total = mbs::enumerate_permutation_systems(s->value, 1).total; });
}

mbs_status mbs_export(const mbs_surface* s, mbs_export_object object, mbs_export_format format, char** out) {
    MBS_REQUIRE(s, out);
    if (format != MBS_FORMAT_JSON && format != MBS_FORMAT_DOT)
        return fail(MBS_ERR_INVALID_ARGUMENT, "unknown export format");
    return guard([&] {
        const bool json = format == MBS_FORMAT_JSON;
        const auto& surface = s->value;
        std::string text;
        switch (object) {
            case MBS_EXPORT_SURFACE:
                if (!json) throw mbs::Error(mbs::ErrorCode::InvalidArgument, "surfaces export as JSON only");
                text = mbs::to_json(surface).dump(2);
                break;
            case MBS_EXPORT_SPINE: {
                const auto spine = mbs::spine_graph(surface);
                text = json ? mbs::to_json(spine).dump(2) : mbs::to_dot(spine);
                break;
            }
            case MBS_EXPORT_BOUNDARY: {
                const auto boundary = mbs::boundary_surface(surface, mbs::identity_permutation_system(surface));
                text = json ? mbs::to_json(boundary).dump(2) : mbs::to_dot(surface, boundary);
                break;
            }
            case MBS_EXPORT_DUAL_GRAPH: {
                const auto dual = mbs::dual_graph(surface, mbs::identity_permutation_system(surface));
                text = json ? mbs::to_json(dual).dump(2) : mbs::to_dot(dual);
                break;
            }
            default:
                throw mbs::Error(mbs::ErrorCode::InvalidArgument, "unknown export object");
        }
        if (json) text += '\n';
        *out = copy_string(text);
    });
}

mbs_status mbs_canonical_form(const mbs_surface* s, char** out) {
    MBS_REQUIRE(s, out);
    return guard([&] { *out = copy_string(mbs::canonical_form(s->value).to_string()); });
}

mbs_status mbs_are_isomorphic(const mbs_surface* a, const mbs_surface* b, int* out) {
    MBS_REQUIRE(a, b, out);
    return guard([&] { *out = mbs::are_isomorphic(a->value, b->value) ? 1 : 0; });
}

mbs_status mbs_all_minors(const mbs_surface* s, size_t max_results, size_t* count, char** out) {
    MBS_REQUIRE(s, out);
    return guard([&] {
        const auto minors = mbs::all_minors(s->value, max_results);
        std::string text;
        for (const auto& m : minors) text += m.to_string() + '\n';
        if (count) *count = minors.size();
        *out = copy_string(text);
    });
}

mbs_status mbs_is_minor(const mbs_surface* minor, const mbs_surface* host, size_t max_results, int* out) {
    MBS_REQUIRE(minor, host, out);
    return guard([&] { *out = mbs::is_minor(minor->value, host->value, max_results) ? 1 : 0; });
}

mbs_status mbs_neighborhood_minor(const mbs_surface* minor, const mbs_surface* host, size_t depth,
                                  size_t budget, int* found, char** certificate) {
    MBS_REQUIRE(minor, host, found);
    return guard([&] {
        const auto cert = mbs::neighborhood_minor_certificate(minor->value, host->value, depth, budget);
        *found = cert ? 1 : 0;
        if (certificate) *certificate = cert ? copy_string(mbs::to_json(*cert).dump(2) + '\n') : nullptr;
    });
}

mbs_status mbs_replay_certificate(const char* certificate, const mbs_surface* target, int* ok) {
    MBS_REQUIRE(certificate, target, ok);
    return guard([&] {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(certificate);
        } catch (const nlohmann::json::exception& e) {
            throw mbs::Error(mbs::ErrorCode::SyntaxError, e.what());
        }
        *ok = mbs::replay_certificate(mbs::certificate_from_json(j), target->value) ? 1 : 0;
    });
}

mbs_status mbs_omega_candidate(const mbs_surface* s, size_t max_results, mbs_obstruction_verdict* verdict,
                               size_t* proper_minors, char** note) {
    MBS_REQUIRE(s, verdict);
    return guard([&] {
        const auto report = mbs::obstruction_candidate_s3(s->value, max_results);
        switch (report.verdict) {
            case mbs::ObstructionVerdict::Candidate: *verdict = MBS_OMEGA_CANDIDATE; break;
            case mbs::ObstructionVerdict::NotCandidate: *verdict = MBS_OMEGA_NOT_CANDIDATE; break;
            case mbs::ObstructionVerdict::Unknown: *verdict = MBS_OMEGA_UNKNOWN; break;
        }
        if (proper_minors) *proper_minors = report.proper_minors;
        if (note) *note = copy_string(report.note);
    });
}

mbs_status mbs_standard_decomposition(const mbs_surface* s, mbs_surface** disks, int** closed_genera,
                                      size_t* count) {
    MBS_REQUIRE(s, disks, closed_genera, count);
    return guard([&] {
        auto d = mbs::standard_decomposition(s->value);
        auto* genera = static_cast<int*>(std::malloc(sizeof(int) * (d.closed_genera.size() + 1)));
        if (!genera) throw std::bad_alloc();
        std::copy(d.closed_genera.begin(), d.closed_genera.end(), genera);
        *disks = wrap(std::move(d.disks));
        *closed_genera = genera;
        *count = d.closed_genera.size();
    });
}

mbs_status mbs_remove_sector(const mbs_surface* s, const char* sector, mbs_surface** out) {
    MBS_REQUIRE(s, sector, out);
    return guard([&] { *out = wrap(mbs::remove_sector(s->value, mbs::SectorId(sector))); });
}

mbs_status mbs_contract_annulus(const mbs_surface* s, const char* sector, mbs_surface** out) {
    MBS_REQUIRE(s, sector, out);
    return guard([&] { *out = wrap(mbs::contract_annulus(s->value, mbs::SectorId(sector))); });
}

mbs_status mbs_reduce_degree(const mbs_surface* s, const char* branch, mbs_surface** out) {
    MBS_REQUIRE(s, branch, out);
    return guard([&] { *out = wrap(mbs::reduce_degree(s->value, mbs::BranchId(branch))); });
}

mbs_status mbs_torus_sum(const mbs_surface* s, const char* sector, mbs_surface** out) {
    MBS_REQUIRE(s, sector, out);
    return guard([&] { *out = wrap(mbs::torus_sum(s->value, mbs::SectorId(sector))); });
}

mbs_status mbs_build_seifert(const int64_t* p, size_t n, mbs_surface** out) {
    MBS_REQUIRE(out);
    if (n > 0 && !p) return fail(MBS_ERR_NULL_ARGUMENT, "null argument");
    return guard([&] { *out = wrap(mbs::seifert_example(std::vector<std::int64_t>(p, p + n))); });
}

mbs_status mbs_build_one_sector(int genus, const int64_t* degrees, const int* signs, size_t n,
                                mbs_surface** out) {
    MBS_REQUIRE(out);
    if (n > 0 && !degrees) return fail(MBS_ERR_NULL_ARGUMENT, "null argument");
    return guard([&] {
        std::vector<int> sign_list;
        if (signs) sign_list.assign(signs, signs + n);
        *out = wrap(mbs::one_sector(genus, std::vector<std::int64_t>(degrees, degrees + n), sign_list));
    });
}

mbs_status mbs_build_pants(mbs_surface** out) {
    MBS_REQUIRE(out);
    return guard([&] { *out = wrap(mbs::pants_example()); });
}

mbs_status mbs_build_rose(int n, mbs_surface** out) {
    MBS_REQUIRE(out);
    return guard([&] { *out = wrap(mbs::rose_times_circle(n)); });
}

mbs_status mbs_build_graph(size_t vertices, const size_t* endpoints, size_t edge_count, mbs_surface** out) {
    MBS_REQUIRE(out);
    if (edge_count > 0 && !endpoints) return fail(MBS_ERR_NULL_ARGUMENT, "null argument");
    return guard([&] {
        mbs::Multigraph g{vertices, {}};
        for (size_t e = 0; e < edge_count; ++e) g.edges.emplace_back(endpoints[2 * e], endpoints[2 * e + 1]);
        *out = wrap(mbs::graph_to_mbs(g));
    });
}

mbs_status mbs_build_obstruction(mbs_surface** out) {
    MBS_REQUIRE(out);
    return guard([&] { *out = wrap(mbs::obstruction_example()); });
}

}  // extern "C"
