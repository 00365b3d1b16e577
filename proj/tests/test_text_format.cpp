#include <gtest/gtest.h>

#include "generators.hpp"
#include "mbs/builders.hpp"
#include "mbs/export.hpp"
#include "mbs/minors.hpp"
#include "mbs/text_format.hpp"

using namespace mbs;

namespace {

struct Caught {
    ErrorCode code;
    std::size_t line;
    std::size_t column;
    std::string message;
};

Caught parse_failure(std::string_view text) {
    try {
        parse_document(text);
    } catch (const ParseError& e) {
        return {e.code(), e.line(), e.column(), e.what()};
    }
    ADD_FAILURE() << "parsed without error:\n" << text;
    return {ErrorCode::InternalMismatch, 0, 0, {}};
}

std::vector<MultibranchedSurface> builder_outputs() {
    return {seifert_example({2, 3, 5}), one_sector(1, {2, 2}, {1, -1}), pants_example(), rose_times_circle(2),
            graph_to_mbs({3, {{0, 1}, {1, 2}, {2, 0}, {0, 0}}}), obstruction_example()};
}

}  // namespace

TEST(Parse, SimpleSurface) {
    const auto x = parse_surface(R"(# a disk on a circle
mbs disk
branch l
sector d genus 0
prebranch d l -3   # wraps three times
)");
    EXPECT_EQ(x.name(), "disk");
    ASSERT_EQ(x.sector_count(), 1u);
    EXPECT_EQ(x.sectors()[0].prebranches[0].oriented_degree, -3);
}

TEST(Parse, NonorientableAndPlusSign) {
    const auto x = parse_surface("branch c\nsector m genus 2 nonorientable\nprebranch m c +1\n");
    EXPECT_EQ(x.name(), "unnamed");
    EXPECT_FALSE(x.sectors()[0].orientable);
    EXPECT_EQ(x.sectors()[0].genus, 2);
    EXPECT_EQ(x.sectors()[0].prebranches[0].oriented_degree, 1);
}

TEST(Parse, DocumentWithSeveralSurfaces) {
    const auto all = parse_document("mbs a\nbranch l\nsector d genus 0\nprebranch d l 1\n\n"
                                    "mbs b\nbranch l\nsector d genus 1\nprebranch d l 2\n");
    ASSERT_EQ(all.size(), 2u);
    EXPECT_EQ(all[1].name(), "b");
    EXPECT_EQ(all[1].sectors()[0].genus, 1);
    // identifiers are scoped to their surface
    EXPECT_EQ(parse_document("mbs a\nbranch l\nsector d genus 0\nprebranch d l 1\nmbs b\nbranch l\n"
                             "sector d genus 0\nprebranch d l 1\n")
                  .size(),
              2u);
}

TEST(Parse, ParseSurfaceNeedsExactlyOne) {
    EXPECT_THROW(parse_surface("mbs a\nbranch l\nsector d genus 0\nprebranch d l 1\n"
                               "mbs b\nbranch l\nsector d genus 0\nprebranch d l 1\n"),
                 ParseError);
    EXPECT_THROW(parse_surface("# nothing\n"), ParseError);
}

TEST(Parse, SyntaxErrorsCarryPositions) {
    auto c = parse_failure("branch l\nsector d gen 0\n");
    EXPECT_EQ(c.code, ErrorCode::SyntaxError);
    EXPECT_EQ(c.line, 2u);
    EXPECT_EQ(c.column, 10u);

    c = parse_failure("branch l\n  frobnicate x\n");
    EXPECT_EQ(c.code, ErrorCode::SyntaxError);
    EXPECT_EQ(c.line, 2u);
    EXPECT_EQ(c.column, 3u);

    c = parse_failure("branch l\nsector d genus 0\nprebranch d l two\n");
    EXPECT_EQ(c.code, ErrorCode::SyntaxError);
    EXPECT_EQ(c.line, 3u);
    EXPECT_EQ(c.column, 15u);

    c = parse_failure("branch l-1\n");
    EXPECT_EQ(c.code, ErrorCode::SyntaxError);
    EXPECT_EQ(c.column, 8u);

    c = parse_failure("branch l extra\n");
    EXPECT_EQ(c.code, ErrorCode::SyntaxError);
    EXPECT_EQ(c.column, 10u);
}

TEST(Parse, SemanticErrors) {
    auto c = parse_failure("branch l\nsector d genus 0\nprebranch d l 0\n");
    EXPECT_EQ(c.code, ErrorCode::SemanticError);
    EXPECT_NE(c.message.find("ZeroDegree"), std::string::npos);
    EXPECT_EQ(c.line, 3u);

    c = parse_failure("branch l\nbranch l\n");
    EXPECT_NE(c.message.find("DuplicateIdentifier"), std::string::npos);
    EXPECT_EQ(c.line, 2u);

    c = parse_failure("branch l\nsector d genus 0\nprebranch e l 1\n");
    EXPECT_NE(c.message.find("UnknownSector"), std::string::npos);

    c = parse_failure("branch l\nsector d genus 0\nprebranch d m 1\n");
    EXPECT_NE(c.message.find("UnknownBranch"), std::string::npos);

    c = parse_failure("branch l\nsector d genus -1\n");
    EXPECT_NE(c.message.find("NegativeGenus"), std::string::npos);

    c = parse_failure("branch l\nsector d genus 0\n");
    EXPECT_EQ(c.code, ErrorCode::SemanticError);
    EXPECT_NE(c.message.find("EmptySectorBoundary"), std::string::npos);

    c = parse_failure("branch l\nbranch m\nsector d genus 0\nprebranch d l 1\n");
    EXPECT_NE(c.message.find("IsolatedBranch"), std::string::npos);
}

TEST(RoundTrip, Builders) {
    for (const auto& x : builder_outputs()) {
        SCOPED_TRACE(x.name());
        EXPECT_EQ(parse_surface(serialize(x)), x);
        EXPECT_EQ(surface_from_json(to_json(x)), x);
        EXPECT_EQ(surface_from_json(nlohmann::json::parse(to_json(x).dump())), x);
    }
    const auto all = builder_outputs();
    EXPECT_EQ(parse_document(serialize(all)), all);
}

TEST(RoundTrip, RandomSurfaces) {
    gen::Rng rng(31);
    gen::SurfaceShape shape;
    shape.regular = false;
    shape.orientable = false;
    for (int trial = 0; trial < 200; ++trial) {
        const auto x = gen::surface(rng, shape);
        const auto text = serialize(x);
        EXPECT_EQ(parse_surface(text), x);
        EXPECT_EQ(serialize(parse_surface(text)), text);
        EXPECT_EQ(surface_from_json(to_json(x)), x);
    }
}

TEST(Json, MalformedSurface) {
    try {
        surface_from_json(nlohmann::json{{"branches", {"l"}}});
        FAIL() << "accepted malformed JSON";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
    }
    EXPECT_THROW(surface_from_json(nlohmann::json{{"branches", nlohmann::json::array()},
                                                  {"sectors", {{{"id", "d"}, {"genus", 0}, {"prebranches", {{{"branch", "x"}, {"oriented_degree", 1}}}}}}}}),
                 Error);
}

TEST(Json, CertificateRoundTrip) {
    const auto host = seifert_example({2, 3});
    const auto cert = *neighborhood_minor_certificate(one_sector(0, {1}), host, 4);
    const auto back = certificate_from_json(nlohmann::json::parse(to_json(cert).dump()));
    EXPECT_EQ(back.source, cert.source);
    ASSERT_EQ(back.steps.size(), cert.steps.size());
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        EXPECT_EQ(back.steps[i].kind, cert.steps[i].kind);
        EXPECT_EQ(back.steps[i].target, cert.steps[i].target);
        EXPECT_EQ(back.steps[i].result, cert.steps[i].result);
    }
    EXPECT_TRUE(replay_certificate(back, one_sector(0, {1})));
}

TEST(Dot, MentionsEveryPiece) {
    const auto x = pants_example();
    const auto spine = to_dot(spine_graph(x));
    EXPECT_NE(spine.find("graph"), std::string::npos);
    EXPECT_NE(spine.find("branch_loop"), std::string::npos);
    const auto b = boundary_surface(x, identity_permutation_system(x));
    const auto pieces = to_dot(x, b);
    EXPECT_NE(pieces.find("cluster"), std::string::npos);
    const auto dual = to_dot(dual_graph(x, b));
    EXPECT_NE(dual.find("g="), std::string::npos);
}
